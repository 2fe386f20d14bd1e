#include "regforge/embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>

namespace regforge {

namespace {

RealBall intersect(const RealBall& a, const RealBall& b) {
  Mpfr lo(std::max(a.prec(), b.prec())), hi(lo.prec());
  mpfr_max(lo.get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_min(hi.get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return RealBall::from_endpoints(lo, hi);
}

ComplexBall intersect(const ComplexBall& a, const ComplexBall& b) {
  return ComplexBall(intersect(a.re(), b.re()), intersect(a.im(), b.im()));
}

ComplexBall midpoint_of(const ComplexBall& z) {
  Mpfr rm = z.re().mid_mpfr(), im = z.im().mid_mpfr();
  return ComplexBall(RealBall::from_endpoints(rm, rm), RealBall::from_endpoints(im, im));
}

// Double-precision Durand-Kerner to seed Newton refinement.
std::vector<std::complex<double>> durand_kerner(const RatPoly& p) {
  const int n = p.degree();
  std::vector<std::complex<double>> c(n + 1);
  double lead = p[n].get_d();
  double bound = 1.0;
  for (int i = 0; i <= n; ++i) {
    c[i] = p[i].get_d() / lead;
    if (!std::isfinite(c[i].real()))
      throw Error("polynomial coefficients overflow double precision seeding");
    if (i < n) bound = std::max(bound, std::abs(c[i]));
  }
  bound += 1.0;
  std::vector<std::complex<double>> z(n);
  std::complex<double> seed(0.4, 0.9);
  std::complex<double> cur(1.0, 0.0);
  for (int i = 0; i < n; ++i) {
    cur *= seed;
    z[i] = bound * cur;
  }
  auto eval = [&](std::complex<double> x) {
    std::complex<double> acc(0.0, 0.0);
    for (int i = n; i >= 0; --i) acc = acc * x + c[i];
    return acc;
  };
  for (int iter = 0; iter < 500; ++iter) {
    double moved = 0.0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> denom(1.0, 0.0);
      for (int j = 0; j < n; ++j)
        if (j != i) denom *= (z[i] - z[j]);
      if (denom == std::complex<double>(0.0, 0.0)) {
        z[i] += std::complex<double>(1e-6, 1e-6);
        continue;
      }
      std::complex<double> delta = eval(z[i]) / denom;
      z[i] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-14 * bound) break;
  }
  return z;
}

// Newton polishing with exact-midpoint ball arithmetic.
ComplexBall polish(const RatPoly& p, const RatPoly& dp, ComplexBall z, long prec) {
  int steps = 4;
  for (long b = 64; b < prec; b *= 2) ++steps;
  for (int i = 0; i < steps; ++i) {
    ComplexBall pz = eval_poly(p, z, prec);
    ComplexBall dpz = eval_poly(dp, z, prec);
    if (dpz.contains_zero()) break;
    z = midpoint_of(z - pz / dpz);
  }
  return z;
}

struct Certified {
  ComplexBall ball;
  bool success = false;
};

// Krawczyk test around an approximate root: existence and uniqueness
// of a zero inside the returned enclosure.
Certified certify_complex(const RatPoly& p, const RatPoly& dp, const ComplexBall& approx,
                          long prec) {
  Certified out;
  ComplexBall z = midpoint_of(approx);
  ComplexBall pz = eval_poly(p, z, prec);
  ComplexBall dpz = eval_poly(dp, z, prec);
  if (dpz.contains_zero()) return out;
  ComplexBall c = midpoint_of(ComplexBall(RealBall(1, prec), RealBall(0, prec)) / dpz);
  RealBall res = (c * pz).abs();
  Mpfr rho(prec);
  mpfr_mul_ui(rho.get(), res.hi().get(), 8, MPFR_RNDU);
  Mpfr floorr(prec);
  RealBall zmag = z.abs();
  mpfr_add_ui(floorr.get(), zmag.hi().get(), 1, MPFR_RNDU);
  mpfr_mul_2si(floorr.get(), floorr.get(), -(prec - 6), MPFR_RNDU);
  mpfr_add(rho.get(), rho.get(), floorr.get(), MPFR_RNDU);

  Mpfr nrho(prec);
  mpfr_neg(nrho.get(), rho.get(), MPFR_RNDD);
  RealBall spread = RealBall::from_endpoints(nrho, rho);
  ComplexBall box(spread, spread);
  ComplexBall zone = z + box;

  // One Krawczyk test proves existence and uniqueness in the zone.
  ComplexBall dpz_zone = eval_poly(dp, zone, prec);
  ComplexBall kappa = ComplexBall(RealBall(1, prec), RealBall(0, prec)) - c * dpz_zone;
  if (mpfr_cmp_ui(kappa.abs().hi().get(), 1) >= 0) return out;
  ComplexBall k = z - c * pz + kappa * (zone - z);
  if (!k.strictly_inside(zone)) return out;
  zone = intersect(zone, k);

  // Further intersections only refine; the root stays inside.
  for (int i = 0; i < 2; ++i) {
    ComplexBall zc = midpoint_of(zone);
    ComplexBall pzc = eval_poly(p, zc, prec);
    ComplexBall kap = ComplexBall(RealBall(1, prec), RealBall(0, prec)) - c * eval_poly(dp, zone, prec);
    ComplexBall k2 = zc - c * pzc + kap * (zone - zc);
    if (!zone.overlaps(k2)) break;
    zone = intersect(zone, k2);
  }
  out.ball = zone;
  out.success = true;
  return out;
}

Certified certify_real(const RatPoly& p, const RatPoly& dp, const RealBall& approx,
                       long prec) {
  Certified out;
  Mpfr xm = approx.mid_mpfr();
  RealBall x = RealBall::from_endpoints(xm, xm);
  RealBall px = eval_poly(p, x, prec);
  RealBall dpx = eval_poly(dp, x, prec);
  if (dpx.contains_zero()) return out;
  Mpfr cm = (RealBall(1, prec) / dpx).mid_mpfr();
  RealBall c = RealBall::from_endpoints(cm, cm);
  RealBall res = (c * px).abs();
  Mpfr rho(prec);
  mpfr_mul_ui(rho.get(), res.hi().get(), 8, MPFR_RNDU);
  Mpfr floorr(prec);
  mpfr_add_ui(floorr.get(), x.abs().hi().get(), 1, MPFR_RNDU);
  mpfr_mul_2si(floorr.get(), floorr.get(), -(prec - 6), MPFR_RNDU);
  mpfr_add(rho.get(), rho.get(), floorr.get(), MPFR_RNDU);
  Mpfr nrho(prec);
  mpfr_neg(nrho.get(), rho.get(), MPFR_RNDD);
  RealBall zone = x + RealBall::from_endpoints(nrho, rho);

  RealBall dpzone = eval_poly(dp, zone, prec);
  RealBall kappa = RealBall(1, prec) - c * dpzone;
  if (mpfr_cmp_ui(kappa.abs().hi().get(), 1) >= 0) return out;
  RealBall k = x - c * px + kappa * (zone - x);
  if (!(mpfr_cmp(zone.lo().get(), k.lo().get()) < 0 &&
        mpfr_cmp(k.hi().get(), zone.hi().get()) < 0))
    return out;
  zone = intersect(zone, k);

  for (int i = 0; i < 2; ++i) {
    Mpfr xc = zone.mid_mpfr();
    RealBall xe = RealBall::from_endpoints(xc, xc);
    RealBall pxe = eval_poly(p, xe, prec);
    RealBall kap = RealBall(1, prec) - c * eval_poly(dp, zone, prec);
    RealBall k2 = xe - c * pxe + kap * (zone - xe);
    if (!zone.overlaps(k2)) break;
    zone = intersect(zone, k2);
  }
  out.ball = ComplexBall(zone, RealBall(0, prec));
  out.success = true;
  return out;
}

bool small_enough(const ComplexBall& z, long target_prec) {
  RealBall mag = z.abs();
  Mpfr lim(64);
  mpfr_add_ui(lim.get(), mag.hi().get(), 1, MPFR_RNDU);
  mpfr_mul_2si(lim.get(), lim.get(), -target_prec, MPFR_RNDU);
  Mpfr w(64);
  mpfr_sub(w.get(), z.re().hi().get(), z.re().lo().get(), MPFR_RNDU);
  if (mpfr_cmp(w.get(), lim.get()) > 0) return false;
  mpfr_sub(w.get(), z.im().hi().get(), z.im().lo().get(), MPFR_RNDU);
  return mpfr_cmp(w.get(), lim.get()) <= 0;
}

bool rects_disjoint(const std::vector<ComplexBall>& roots) {
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j)
      if (roots[i].overlaps(roots[j])) return false;
  return true;
}

}  // namespace

ComplexBall eval_poly(const RatPoly& p, const ComplexBall& z, long prec) {
  ComplexBall acc = ComplexBall::exact_rat(Rat(0), prec);
  for (int i = p.degree(); i >= 0; --i)
    acc = acc * z + ComplexBall::exact_rat(p[i], prec);
  return acc;
}

RealBall eval_poly(const RatPoly& p, const RealBall& x, long prec) {
  RealBall acc = RealBall::exact_rat(Rat(0), prec);
  for (int i = p.degree(); i >= 0; --i)
    acc = acc * x + RealBall::exact_rat(p[i], prec);
  return acc;
}

std::vector<ComplexBall> certified_roots(const RatPoly& p, long precision) {
  if (p.degree() < 1) throw Error("certified_roots: constant polynomial");
  if (!p.is_squarefree()) throw Error("certified_roots: polynomial not squarefree");
  if (precision <= 0) precision = default_precision();

  if (p.degree() == 1) {
    Rat root = -p[0] / p[1];
    return {ComplexBall::exact_rat(root, precision)};
  }

  const RatPoly dp = p.derivative();
  std::vector<std::complex<double>> seeds = durand_kerner(p);
  const size_t n = seeds.size();

  for (long w = std::max(precision + 32, 96L); w <= precision_cap() * 2; w *= 2) {
    std::vector<ComplexBall> roots;
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i) {
      ComplexBall z(RealBall::from_double(seeds[i].real(), w),
                    RealBall::from_double(seeds[i].imag(), w));
      z = polish(p, dp, z, w);
      Certified c = certify_complex(p, dp, z, w);
      if (!c.success) { ok = false; break; }
      roots.push_back(c.ball);
    }
    if (!ok) continue;

    // Separate real roots and conjugate-symmetrize the complex ones.
    std::vector<ComplexBall> reals, upper, lower;
    for (const auto& r : roots) {
      if (r.im().contains_zero()) {
        Certified rc = certify_real(p, dp, r.re(), w);
        if (!rc.success) { ok = false; break; }
        reals.push_back(rc.ball);
      } else if (r.im().is_positive()) {
        upper.push_back(r);
      } else {
        lower.push_back(r);
      }
    }
    if (!ok || upper.size() != lower.size()) continue;

    std::vector<ComplexBall> result = reals;
    std::vector<bool> used(lower.size(), false);
    for (const auto& u : upper) {
      ComplexBall cu = u.conj();
      std::optional<size_t> match;
      for (size_t j = 0; j < lower.size(); ++j) {
        if (used[j] || !lower[j].overlaps(cu)) continue;
        if (match) { match.reset(); break; }
        match = j;
      }
      if (!match) { ok = false; break; }
      used[*match] = true;
      ComplexBall tight = intersect(lower[*match], cu);
      result.push_back(tight.conj());  // representative, Im > 0
      result.push_back(tight);
    }
    if (!ok || result.size() != n) continue;

    bool tight_enough = true;
    for (const auto& r : result) tight_enough = tight_enough && small_enough(r, precision);
    if (!tight_enough || !rects_disjoint(result)) continue;

    std::sort(result.begin(), result.end(), [](const ComplexBall& a, const ComplexBall& b) {
      bool ra = a.im().contains_zero(), rb = b.im().contains_zero();
      if (ra != rb) return ra;
      int c = mpfr_cmp(a.re().lo().get(), b.re().lo().get());
      if (c != 0) return c < 0;
      return mpfr_cmp(a.im().lo().get(), b.im().lo().get()) < 0;
    });
    return result;
  }
  throw Undecided("root certification failed below the precision cap");
}

PlaceSet compute_places(const FieldPtr& field, long precision) {
  if (precision <= 0) precision = default_precision();
  PlaceSet ps;
  ps.field = field;
  ps.precision = precision;
  ps.all_roots = certified_roots(field->min_poly(), precision);
  for (const auto& r : ps.all_roots) {
    if (r.im().contains_zero()) {
      ps.places.push_back({r, true, 1});
      ++ps.r1;
    } else if (r.im().is_positive()) {
      ps.places.push_back({r, false, 2});
      ++ps.r2;
    }
  }
  if (field->has_signature()) {
    auto [r1, r2] = field->declared_signature();
    if (r1 != ps.r1 || r2 != ps.r2)
      throw Error("signature mismatch: computed (" + std::to_string(ps.r1) + "," +
                  std::to_string(ps.r2) + "), declared (" + std::to_string(r1) + "," +
                  std::to_string(r2) + ")");
  }
  return ps;
}

Signature signature(const FieldPtr& field, long precision) {
  PlaceSet ps = compute_places(field, precision);
  return {ps.r1, ps.r2, ps.unit_rank()};
}

ComplexBall embed(const PlaceSet& ps, const FieldElement& a, size_t place_index) {
  if (place_index >= ps.places.size()) throw Error("place index out of range");
  if (!(a.field()->min_poly() == ps.field->min_poly()))
    throw Error("element does not belong to the place set's field");
  return eval_poly(a.as_poly(), ps.places[place_index].embedding, ps.precision);
}

std::vector<RealBall> log_vector(const PlaceSet& ps, const FieldElement& a) {
  if (a.is_zero()) throw Error("log vector of zero");
  std::vector<RealBall> out;
  out.reserve(ps.places.size());
  for (size_t i = 0; i < ps.places.size(); ++i) {
    RealBall mag = embed(ps, a, i).abs();
    if (!mag.is_positive())
      throw Undecided("embedding magnitude not separated from zero");
    out.push_back(mag.log() * ps.places[i].local_degree);
  }
  return out;
}

}  // namespace regforge
