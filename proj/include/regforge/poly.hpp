#pragma once

#include <string>
#include <vector>

#include "regforge/numeric.hpp"

namespace regforge {

// Univariate polynomial over Q, constant term first.  The zero
// polynomial has an empty coefficient vector; otherwise the leading
// coefficient is nonzero.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);
  static RatPoly zero() { return RatPoly(); }
  static RatPoly one();
  static RatPoly x();
  static RatPoly constant(const Rat& c);
  static RatPoly from_ints(const std::vector<long>& coeffs);

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& operator[](size_t i) const { return c_[i]; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat leading() const;
  bool is_monic() const;

  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly operator*(const Rat& s) const;
  bool operator==(const RatPoly& o) const { return c_ == o.c_; }

  // Quotient and remainder with divisor != 0.
  std::pair<RatPoly, RatPoly> divrem(const RatPoly& divisor) const;
  RatPoly derivative() const;
  Rat eval(const Rat& x) const;
  RatPoly pow(unsigned e) const;
  RatPoly monic() const;

  // Monic gcd via the Euclidean algorithm.
  static RatPoly gcd(RatPoly a, RatPoly b);
  // p / gcd(p, p'), monic.  For p = q^e with q irreducible this is q.
  RatPoly squarefree_part() const;
  bool is_squarefree() const;

  // Clears denominators and divides by content: primitive integer
  // coefficients with positive leading coefficient.
  std::vector<Int> primitive_integer_coeffs() const;

  // Substitution p(q(x)).
  RatPoly compose(const RatPoly& q) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

}  // namespace regforge
