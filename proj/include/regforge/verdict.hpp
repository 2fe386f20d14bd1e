#pragma once

#include <string>

#include "regforge/ball.hpp"

namespace regforge {

enum class VerdictState { holds, fails, undecided };

inline const char* to_string(VerdictState s) {
  switch (s) {
    case VerdictState::holds: return "holds";
    case VerdictState::fails: return "fails";
    case VerdictState::undecided: return "undecided";
  }
  return "?";
}

// Width allowance for claims whose two sides can be exactly equal
// (attained bounds); both enclosures must be this tight before an
// overlap is reported as equality.
inline RealBall equality_gap(long prec) {
  return RealBall::exact_rat(make_rat(Int(1), int_pow(Int(2), 40)), prec);
}

// Three-valued certified comparison outcome with its certificate.
struct Verdict {
  VerdictState state = VerdictState::undecided;
  bool via_overlap = false;  // held as equality within the gap
  RealBall lhs, rhs;
  long precision = 0;
  std::string note;

  bool holds() const { return state == VerdictState::holds; }
  bool failed() const { return state == VerdictState::fails; }
  bool undecided() const { return state == VerdictState::undecided; }
  RealBall margin() const { return rhs - lhs; }

  // Strict certificate for lhs <= rhs: endpoint separation only.
  static Verdict leq(const RealBall& lhs, const RealBall& rhs, long prec) {
    Verdict v;
    v.lhs = lhs;
    v.rhs = rhs;
    v.precision = prec;
    if (lhs.certainly_le(rhs)) v.state = VerdictState::holds;
    else if (rhs.certainly_lt(lhs)) v.state = VerdictState::fails;
    else v.state = VerdictState::undecided;
    return v;
  }

  // lhs <= rhs where equality is attainable: an overlap of two
  // sufficiently tight enclosures is certified as equality.
  static Verdict leq_attained(const RealBall& lhs, const RealBall& rhs, long prec) {
    Verdict v = leq(lhs, rhs, prec);
    if (v.state == VerdictState::undecided) {
      RealBall gap = equality_gap(prec);
      double allowed = gap.mid();
      if (lhs.width() + rhs.width() <= allowed) {
        v.state = VerdictState::holds;
        v.via_overlap = true;
        v.note = "equality within overlap";
      }
    }
    return v;
  }

  // |lhs - rhs| below the gap, i.e. certified equality of two
  // enclosures of the same real number.
  static Verdict eq_within_gap(const RealBall& lhs, const RealBall& rhs, long prec) {
    Verdict v;
    v.lhs = lhs;
    v.rhs = rhs;
    v.precision = prec;
    if (!lhs.overlaps(rhs)) {
      v.state = VerdictState::fails;
      return v;
    }
    RealBall diff = (lhs - rhs).abs();
    if (diff.certainly_le(equality_gap(prec))) {
      v.state = VerdictState::holds;
      v.via_overlap = true;
    } else {
      v.state = VerdictState::undecided;
    }
    return v;
  }
};

// Runs f at doubling precision until it returns a decided verdict or
// the cap is reached.  f may throw Undecided to request escalation.
template <typename F>
Verdict escalate(long start_precision, F&& f) {
  Verdict last;
  for (long p = start_precision; p <= precision_cap(); p *= 2) {
    try {
      last = f(p);
    } catch (const Undecided&) {
      continue;
    }
    if (!last.undecided()) return last;
  }
  if (last.precision == 0) last.note = "undecided at precision cap";
  return last;
}

}  // namespace regforge
