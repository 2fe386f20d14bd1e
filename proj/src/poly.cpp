#include "regforge/poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace regforge {

long precision_cap() {
  static long cap = [] {
    if (const char* env = std::getenv("REG_FORGE_PRECISION_CAP")) {
      long v = std::atol(env);
      if (v >= 64) return v;
    }
    return 8192L;
  }();
  return cap;
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    Int n;
    if (mpz_set_str(n.get_mpz_t(), s.c_str(), 10) != 0)
      throw Error("bad rational literal: " + s);
    return Rat(n);
  }
  Int n, d;
  if (mpz_set_str(n.get_mpz_t(), s.substr(0, slash).c_str(), 10) != 0 ||
      mpz_set_str(d.get_mpz_t(), s.substr(slash + 1).c_str(), 10) != 0)
    throw Error("bad rational literal: " + s);
  return make_rat(n, d);
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int factorial(unsigned n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int binomial(unsigned n, unsigned k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int int_pow(const Int& base, unsigned e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base == 0 && e < 0) throw Error("0 raised to negative power");
  unsigned u = static_cast<unsigned>(e < 0 ? -e : e);
  Rat r = make_rat(int_pow(num(base), u), int_pow(den(base), u));
  if (e < 0) r = Rat(1) / r;
  return r;
}

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::one() { return RatPoly({Rat(1)}); }
RatPoly RatPoly::x() { return RatPoly({Rat(0), Rat(1)}); }
RatPoly RatPoly::constant(const Rat& c) { return RatPoly({c}); }

RatPoly RatPoly::from_ints(const std::vector<long>& coeffs) {
  std::vector<Rat> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return RatPoly(std::move(c));
}

Rat RatPoly::leading() const {
  if (is_zero()) return Rat(0);
  return c_.back();
}

bool RatPoly::is_monic() const { return !is_zero() && c_.back() == 1; }

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (is_zero() || o.is_zero()) return RatPoly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const Rat& s) const {
  std::vector<Rat> r = c_;
  for (auto& v : r) v *= s;
  return RatPoly(std::move(r));
}

std::pair<RatPoly, RatPoly> RatPoly::divrem(const RatPoly& divisor) const {
  if (divisor.is_zero()) throw Error("polynomial division by zero");
  std::vector<Rat> rem = c_;
  int dd = divisor.degree();
  if (degree() < dd) return {RatPoly(), *this};
  std::vector<Rat> quot(degree() - dd + 1, Rat(0));
  Rat lead = divisor.leading();
  for (int i = degree(); i >= dd; --i) {
    Rat f = rem[i] / lead;
    if (f == 0) continue;
    quot[i - dd] = f;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * divisor.c_[j];
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly RatPoly::derivative() const {
  if (degree() <= 0) return RatPoly();
  std::vector<Rat> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return RatPoly(std::move(r));
}

Rat RatPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::pow(unsigned e) const {
  RatPoly r = RatPoly::one();
  RatPoly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rat(1) / leading());
}

RatPoly RatPoly::gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = a.divrem(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RatPoly RatPoly::squarefree_part() const {
  if (degree() <= 0) return *this;
  RatPoly g = gcd(*this, derivative());
  return divrem(g).first.monic();
}

bool RatPoly::is_squarefree() const {
  if (degree() <= 0) return true;
  return gcd(*this, derivative()).degree() == 0;
}

std::vector<Int> RatPoly::primitive_integer_coeffs() const {
  if (is_zero()) return {};
  Int lcm(1);
  for (const auto& q : c_) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den(q).get_mpz_t());
  std::vector<Int> out(c_.size());
  Int content(0);
  for (size_t i = 0; i < c_.size(); ++i) {
    out[i] = num(c_[i]) * (lcm / den(c_[i]));
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[i].get_mpz_t());
  }
  if (content == 0) content = 1;
  if (out.back() < 0) content = -content;
  for (auto& v : out) v /= content;
  return out;
}

RatPoly RatPoly::compose(const RatPoly& q) const {
  RatPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * q + RatPoly::constant(*it);
  return acc;
}

std::string RatPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = c_[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rat a = abs(c);
    if (a != 1 || i == 0) os << rat_to_string(a);
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace regforge
