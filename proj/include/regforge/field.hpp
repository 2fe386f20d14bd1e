#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "regforge/matrix.hpp"
#include "regforge/numeric.hpp"
#include "regforge/poly.hpp"

namespace regforge {

class FieldElement;

// An algebraic number field Q(alpha) presented by the monic minimal
// polynomial of its generator.  Elements are rational coordinate
// vectors on the power basis 1, alpha, ..., alpha^(d-1).  The integral
// basis is supplied by the caller (cards) and validated against the
// declared discriminant; it defaults to the power basis, in which case
// no discriminant claims are made.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  struct Options {
    std::string label;
    std::vector<std::vector<Rat>> integral_basis;  // power-basis coords
    std::optional<Int> discriminant;               // signed
    std::optional<std::pair<int, int>> signature;  // (r1, r2)
    int torsion_order = 2;
  };

  static std::shared_ptr<const NumberField> create(const RatPoly& min_poly,
                                                   Options opts);
  static std::shared_ptr<const NumberField> create(const RatPoly& min_poly);
  static std::shared_ptr<const NumberField> rationals();  // Q itself

  const RatPoly& min_poly() const { return min_poly_; }
  int degree() const { return degree_; }
  const std::string& label() const { return label_; }
  int torsion_order() const { return torsion_; }

  bool has_discriminant() const { return has_disc_; }
  const Int& discriminant_signed() const;  // Delta_k
  Int abs_discriminant() const;            // D_k = |Delta_k|

  bool has_signature() const { return has_sig_; }
  std::pair<int, int> declared_signature() const;
  int unit_rank() const;  // r1 + r2 - 1

  // Integral basis as a matrix whose columns are power-basis coords.
  const RatMat& integral_basis() const { return basis_; }
  const RatMat& integral_basis_inv() const { return basis_inv_; }

  // Trace form on the power basis: T[i][j] = Trace(alpha^(i+j)).
  const RatMat& power_trace_form() const { return trace_form_; }
  // Trace form determinant of the declared integral basis (signed).
  Rat integral_trace_form_det() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement generator() const;
  FieldElement element(std::vector<Rat> coords) const;
  FieldElement element_from_poly(const RatPoly& p) const;

  // Reduction of x^k mod min_poly for k in [d, 2d-2].
  const std::vector<std::vector<Rat>>& power_reductions() const { return red_; }

 private:
  NumberField() = default;

  RatPoly min_poly_;
  int degree_ = 0;
  std::string label_;
  int torsion_ = 2;
  bool has_disc_ = false;
  Int disc_;
  bool has_sig_ = false;
  std::pair<int, int> signature_{0, 0};
  RatMat basis_, basis_inv_;
  RatMat trace_form_;
  std::vector<std::vector<Rat>> red_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Exact element of a number field: rational coordinates on the power
// basis of the generator.  Immutable value type.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr field, std::vector<Rat> coords);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rat>& coords() const { return coords_; }
  const Rat& operator[](size_t i) const { return coords_[i]; }
  bool is_zero() const;
  bool is_rational() const;
  Rat rational_value() const;  // requires is_rational()

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator*(const Rat& s) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement inverse() const;
  FieldElement pow(long e) const;
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  // Matrix of multiplication by this element on the power basis;
  // det = Norm_{k/Q}, trace = Trace_{k/Q}.
  RatMat mult_matrix() const;
  Rat norm() const;
  Rat trace() const;

  // Monic minimal polynomial over Q.  Returns x for the zero element.
  RatPoly minimal_polynomial() const;
  // Degree of Q(this) over Q.
  int degree_over_q() const;

  // Coordinates w.r.t. the field's integral basis.
  std::vector<Rat> integral_coords() const;
  bool is_integral() const;

  RatPoly as_poly() const;
  std::string to_expr_string(const std::string& var = "a") const;
  // Parses a rational-coefficient polynomial expression in `var`,
  // e.g. "1+1*a", "-5/4 + 1/4*a^3".  Round-trips with to_expr_string.
  static FieldElement parse(const FieldPtr& field, const std::string& expr,
                            const std::string& var = "a");

 private:
  void check_same_field(const FieldElement& o) const;
  FieldPtr field_;
  std::vector<Rat> coords_;
};

}  // namespace regforge
