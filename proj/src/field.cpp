#include "regforge/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace regforge {

std::shared_ptr<const NumberField> NumberField::create(const RatPoly& min_poly,
                                                       Options opts) {
  if (min_poly.degree() < 1) throw Error("min_poly must have degree >= 1");
  if (!min_poly.is_monic()) throw Error("min_poly must be monic");
  if (!min_poly.is_squarefree()) throw Error("min_poly must be squarefree");

  auto f = std::shared_ptr<NumberField>(new NumberField());
  f->min_poly_ = min_poly;
  f->degree_ = min_poly.degree();
  f->label_ = std::move(opts.label);
  f->torsion_ = opts.torsion_order;
  const int d = f->degree_;

  // x^k mod min_poly for k = d .. 2d-2.
  std::vector<Rat> cur(d);
  for (int j = 0; j < d; ++j) cur[j] = -min_poly[j];  // x^d
  f->red_.push_back(cur);
  for (int k = d + 1; k <= 2 * d - 2; ++k) {
    std::vector<Rat> next(d, Rat(0));
    for (int j = 0; j + 1 < d; ++j) next[j + 1] = cur[j];
    const Rat& top = cur[d - 1];
    if (top != 0)
      for (int j = 0; j < d; ++j) next[j] += top * -min_poly[j];
    cur = std::move(next);
    f->red_.push_back(cur);
  }

  // Trace form on the power basis via powers of the companion matrix.
  RatMat comp(d, d);
  for (int i = 0; i + 1 < d; ++i) comp.at(i + 1, i) = 1;
  for (int i = 0; i < d; ++i) comp.at(i, d - 1) = -min_poly[i];
  RatMat p = RatMat::identity(d);
  std::vector<Rat> power_sums(2 * d - 1);
  for (int k = 0; k <= 2 * d - 2; ++k) {
    power_sums[k] = p.trace();
    if (k < 2 * d - 2) p = p * comp;
  }
  f->trace_form_ = RatMat(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) f->trace_form_.at(i, j) = power_sums[i + j];

  if (opts.integral_basis.empty()) {
    f->basis_ = RatMat::identity(d);
    f->basis_inv_ = RatMat::identity(d);
  } else {
    if (opts.integral_basis.size() != static_cast<size_t>(d))
      throw Error("integral basis must have d vectors");
    f->basis_ = RatMat(d, d);
    for (int j = 0; j < d; ++j) {
      if (opts.integral_basis[j].size() != static_cast<size_t>(d))
        throw Error("integral basis vector has wrong length");
      for (int i = 0; i < d; ++i) f->basis_.at(i, j) = opts.integral_basis[j][i];
    }
    if (f->basis_.rank() != static_cast<size_t>(d))
      throw Error("integral basis is singular");
    f->basis_inv_ = f->basis_.inverse();
  }

  if (opts.discriminant) {
    f->has_disc_ = true;
    f->disc_ = *opts.discriminant;
    Rat det = f->integral_trace_form_det();
    if (det != Rat(f->disc_))
      throw Error("discriminant mismatch: computed " + rat_to_string(det) +
                  ", declared " + f->disc_.get_str());
  }
  if (opts.signature) {
    auto [r1, r2] = *opts.signature;
    if (r1 < 0 || r2 < 0 || r1 + 2 * r2 != d)
      throw Error("signature does not match degree");
    f->has_sig_ = true;
    f->signature_ = {r1, r2};
  }
  return f;
}

std::shared_ptr<const NumberField> NumberField::create(const RatPoly& min_poly) {
  return create(min_poly, Options{});
}

std::shared_ptr<const NumberField> NumberField::rationals() {
  static FieldPtr q = [] {
    Options o;
    o.label = "Q";
    o.discriminant = Int(1);
    o.signature = std::make_pair(1, 0);
    return create(RatPoly::x(), std::move(o));
  }();
  return q;
}

const Int& NumberField::discriminant_signed() const {
  if (!has_disc_) throw Error("field has no declared discriminant");
  return disc_;
}

Int NumberField::abs_discriminant() const {
  Int d = discriminant_signed();
  return d < 0 ? Int(-d) : d;
}

std::pair<int, int> NumberField::declared_signature() const {
  if (!has_sig_) throw Error("field has no declared signature");
  return signature_;
}

int NumberField::unit_rank() const {
  auto [r1, r2] = declared_signature();
  return r1 + r2 - 1;
}

Rat NumberField::integral_trace_form_det() const {
  // det(Trace(w_i w_j)) = B^T * T * B with T the power-basis form.
  RatMat g = basis_.transpose() * trace_form_ * basis_;
  return g.det();
}

FieldElement NumberField::zero() const {
  return FieldElement(shared_from_this(), std::vector<Rat>(degree_, Rat(0)));
}

FieldElement NumberField::one() const {
  std::vector<Rat> c(degree_, Rat(0));
  c[0] = 1;
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement NumberField::generator() const {
  std::vector<Rat> c(degree_, Rat(0));
  if (degree_ >= 2) c[1] = 1;
  // For Q (min poly x) the generator is 0.
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement NumberField::element(std::vector<Rat> coords) const {
  if (coords.size() != static_cast<size_t>(degree_))
    throw Error("element coordinate vector has wrong length");
  return FieldElement(shared_from_this(), std::move(coords));
}

FieldElement NumberField::element_from_poly(const RatPoly& p) const {
  std::vector<Rat> c(degree_, Rat(0));
  RatPoly r = p.divrem(min_poly_).second;
  for (int i = 0; i <= r.degree(); ++i) c[i] = r[i];
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rat> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (!field_) throw Error("element without a field");
  if (coords_.size() != static_cast<size_t>(field_->degree()))
    throw Error("element coordinate vector has wrong length");
}

void FieldElement::check_same_field(const FieldElement& o) const {
  if (field_ == o.field_) return;
  if (!field_ || !o.field_ || !(field_->min_poly() == o.field_->min_poly()))
    throw Error("elements of different fields");
}

bool FieldElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rat& c) { return c == 0; });
}

bool FieldElement::is_rational() const {
  for (size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

Rat FieldElement::rational_value() const {
  if (!is_rational()) throw Error("element is not rational");
  return coords_[0];
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same_field(o);
  std::vector<Rat> c = coords_;
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same_field(o);
  std::vector<Rat> c = coords_;
  for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-() const {
  std::vector<Rat> c = coords_;
  for (auto& v : c) v = -v;
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same_field(o);
  const int d = field_->degree();
  std::vector<Rat> full(2 * d - 1, Rat(0));
  for (int i = 0; i < d; ++i) {
    if (coords_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (o.coords_[j] == 0) continue;
      full[i + j] += coords_[i] * o.coords_[j];
    }
  }
  std::vector<Rat> c(full.begin(), full.begin() + d);
  const auto& red = field_->power_reductions();
  for (int k = d; k <= 2 * d - 2; ++k) {
    if (full[k] == 0) continue;
    const auto& row = red[k - d];
    for (int j = 0; j < d; ++j) c[j] += full[k] * row[j];
  }
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator*(const Rat& s) const {
  std::vector<Rat> c = coords_;
  for (auto& v : c) v *= s;
  return FieldElement(field_, std::move(c));
}

namespace {
// Extended Euclid over Q[x]: returns (g, u) with u*a = g mod m.
std::pair<RatPoly, RatPoly> ext_gcd_mod(const RatPoly& a, const RatPoly& m) {
  RatPoly r0 = m, r1 = a;
  RatPoly u0 = RatPoly::zero(), u1 = RatPoly::one();
  while (!r1.is_zero()) {
    auto [q, r] = r0.divrem(r1);
    RatPoly u2 = u0 - q * u1;
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  return {r0, u0};
}
}  // namespace

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error("division by zero field element");
  auto [g, u] = ext_gcd_mod(as_poly(), field_->min_poly());
  if (g.degree() != 0)
    throw Error("element not invertible (min_poly not irreducible?)");
  return field_->element_from_poly(u * (Rat(1) / g[0]));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  return *this * o.inverse();
}

FieldElement FieldElement::pow(long e) const {
  if (e == 0) return field_->one();
  FieldElement b = e < 0 ? inverse() : *this;
  unsigned long u = static_cast<unsigned long>(e < 0 ? -e : e);
  FieldElement r = field_->one();
  while (u) {
    if (u & 1) r = r * b;
    if (u >>= 1) b = b * b;
  }
  return r;
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (!field_ || !o.field_) return field_ == o.field_ && coords_ == o.coords_;
  if (!(field_->min_poly() == o.field_->min_poly())) return false;
  return coords_ == o.coords_;
}

RatMat FieldElement::mult_matrix() const {
  const int d = field_->degree();
  RatMat m(d, d);
  FieldElement col = *this;
  FieldElement gen = field_->generator();
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) m.at(i, j) = col.coords_[i];
    if (j + 1 < d) col = col * gen;
  }
  return m;
}

Rat FieldElement::norm() const { return mult_matrix().det(); }

Rat FieldElement::trace() const {
  // Trace is linear: pair coordinates with power-basis traces.
  Rat t(0);
  const RatMat& tf = field_->power_trace_form();
  for (int i = 0; i < field_->degree(); ++i) t += coords_[i] * tf.at(0, i);
  return t;
}

RatPoly FieldElement::minimal_polynomial() const {
  RatPoly cp = mult_matrix().charpoly();
  RatPoly mp = cp.squarefree_part().monic();
  int d = field_->degree();
  int m = mp.degree();
  if (m == 0 || d % m != 0 || !(mp.pow(static_cast<unsigned>(d / m)) == cp))
    throw Error("characteristic polynomial is not a perfect power of an irreducible");
  return mp;
}

int FieldElement::degree_over_q() const { return minimal_polynomial().degree(); }

std::vector<Rat> FieldElement::integral_coords() const {
  const RatMat& binv = field_->integral_basis_inv();
  std::vector<Rat> out(coords_.size(), Rat(0));
  for (size_t i = 0; i < coords_.size(); ++i)
    for (size_t j = 0; j < coords_.size(); ++j) out[i] += binv.at(i, j) * coords_[j];
  return out;
}

bool FieldElement::is_integral() const {
  for (const Rat& c : integral_coords())
    if (den(c) != 1) return false;
  return true;
}

RatPoly FieldElement::as_poly() const { return RatPoly(coords_); }

std::string FieldElement::to_expr_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coords_.size(); ++i) {
    const Rat& c = coords_[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rat a = abs(c);
    if (i == 0) {
      os << rat_to_string(a);
    } else {
      os << rat_to_string(a) << "*" << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

FieldElement FieldElement::parse(const FieldPtr& field, const std::string& expr,
                                 const std::string& var) {
  std::vector<Rat> coords(field->degree(), Rat(0));
  size_t pos = 0;
  auto skip_ws = [&] { while (pos < expr.size() && std::isspace(static_cast<unsigned char>(expr[pos]))) ++pos; };
  skip_ws();
  bool first_term = true;
  while (pos < expr.size()) {
    int sign = 1;
    skip_ws();
    if (expr[pos] == '+' || expr[pos] == '-') {
      sign = expr[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first_term) {
      throw Error("expected '+' or '-' in element expression");
    }
    skip_ws();
    // Optional rational literal.
    size_t start = pos;
    while (pos < expr.size() &&
           (std::isdigit(static_cast<unsigned char>(expr[pos])) || expr[pos] == '/'))
      ++pos;
    Rat coeff(1);
    bool have_coeff = pos > start;
    if (have_coeff) coeff = parse_rat(expr.substr(start, pos - start));
    skip_ws();
    if (pos < expr.size() && expr[pos] == '*') {
      ++pos;
      skip_ws();
    }
    size_t power = 0;
    if (expr.compare(pos, var.size(), var) == 0) {
      pos += var.size();
      power = 1;
      skip_ws();
      if (pos < expr.size() && expr[pos] == '^') {
        ++pos;
        skip_ws();
        size_t es = pos;
        while (pos < expr.size() && std::isdigit(static_cast<unsigned char>(expr[pos]))) ++pos;
        if (pos == es) throw Error("expected exponent in element expression");
        power = std::stoul(expr.substr(es, pos - es));
      }
    } else if (!have_coeff) {
      throw Error("expected term in element expression at: " + expr.substr(pos));
    }
    if (power >= coords.size())
      throw Error("exponent exceeds field degree in element expression");
    coords[power] += Rat(sign) * coeff;
    skip_ws();
    first_term = false;
  }
  if (first_term) throw Error("empty element expression");
  return FieldElement(field, std::move(coords));
}

}  // namespace regforge
