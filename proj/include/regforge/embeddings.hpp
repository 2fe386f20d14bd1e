#pragma once

#include <vector>

#include "regforge/ball.hpp"
#include "regforge/field.hpp"
#include "regforge/poly.hpp"

namespace regforge {

// One archimedean place: a certified root of the field's minimal
// polynomial.  Complex places keep the representative with positive
// imaginary part and have local degree 2.
struct Place {
  ComplexBall embedding;
  bool is_real;
  int local_degree;
};

// Certified archimedean data of a number field at a fixed working
// precision.  Root enclosures are pairwise disjoint.
struct PlaceSet {
  FieldPtr field;
  long precision = 0;
  std::vector<Place> places;            // r1 + r2 places
  std::vector<ComplexBall> all_roots;   // all deg(f) roots, conjugate-closed
  int r1 = 0, r2 = 0;
  int archimedean_count() const { return r1 + r2; }
  int unit_rank() const { return r1 + r2 - 1; }
};

// Certified enclosures of all deg(p) roots of a squarefree rational
// polynomial: real roots first (ascending, with exactly real
// enclosures), then complex roots sorted by (re, im).  Enclosures are
// pairwise disjoint and conjugate-closed.  Escalates internally from
// `precision` and throws Undecided at the precision cap.
std::vector<ComplexBall> certified_roots(const RatPoly& p, long precision);

// Builds the archimedean places of a field; validates the declared
// signature when the field carries one.
PlaceSet compute_places(const FieldPtr& field, long precision);

// (r1, r2, unit rank), validated against the card.
struct Signature {
  int r1, r2, unit_rank;
};
Signature signature(const FieldPtr& field, long precision = 0);

// Image of an element under the embedding attached to a place.
ComplexBall embed(const PlaceSet& ps, const FieldElement& a, size_t place_index);

// Weighted logarithmic vector ([k_w:Q_w] * log ||a||_w) over all
// archimedean places, in place order.  Throws Undecided when some
// |sigma(a)| enclosure touches zero at this precision.
std::vector<RealBall> log_vector(const PlaceSet& ps, const FieldElement& a);

// Evaluates a polynomial on a ball via Horner.
ComplexBall eval_poly(const RatPoly& p, const ComplexBall& z, long prec);
RealBall eval_poly(const RatPoly& p, const RealBall& x, long prec);

}  // namespace regforge
