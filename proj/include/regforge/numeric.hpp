#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace regforge {

using Int = mpz_class;
using Rat = mpq_class;

// Base error for invalid inputs (bad cards, violated preconditions).
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when a certified comparison cannot be resolved below the
// precision cap.  Callers that implement escalation catch this.
struct Undecided : std::runtime_error {
  explicit Undecided(const std::string& msg) : std::runtime_error(msg) {}
};

inline long default_precision() { return 128; }

// Hard cap for precision escalation, overridable via environment.
long precision_cap();

// Always-reduced rational with positive denominator.
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw Error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p", "-p" or "p/q" in base 10.
Rat parse_rat(const std::string& s);
std::string rat_to_string(const Rat& q);

Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);
Int int_pow(const Int& base, unsigned e);
Rat rat_pow(const Rat& base, long e);

inline Int num(const Rat& q) { return q.get_num(); }
inline Int den(const Rat& q) { return q.get_den(); }

}  // namespace regforge
