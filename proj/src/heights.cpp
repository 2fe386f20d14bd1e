#include "regforge/heights.hpp"

#include <algorithm>

namespace regforge {

namespace {

// Z-lattice spanned by the given integral-basis coordinate vectors,
// scaled by `scale` to clear denominators.  Columns are generators.
IntMat scaled_lattice(const std::vector<std::vector<Rat>>& gens, const Int& scale) {
  size_t d = gens.empty() ? 0 : gens[0].size();
  IntMat m(d, gens.size());
  for (size_t j = 0; j < gens.size(); ++j)
    for (size_t i = 0; i < d; ++i) {
      Rat v = gens[j][i] * Rat(scale);
      if (den(v) != 1) throw Error("internal: lattice scaling failed");
      m.at(i, j) = num(v);
    }
  return m;
}

Int lcm_denominators(const std::vector<std::vector<Rat>>& gens, Int start = Int(1)) {
  Int l = start;
  for (const auto& g : gens)
    for (const auto& q : g) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den(q).get_mpz_t());
  return l;
}

// Integral-basis coordinates of all products v_i * w_j over the field's
// integral basis: the Z-generators of the content ideal.
std::vector<std::vector<Rat>> ideal_generators(const std::vector<FieldElement>& v) {
  const auto& field = v[0].field();
  const int d = field->degree();
  std::vector<FieldElement> basis;
  for (int j = 0; j < d; ++j) {
    std::vector<Rat> c(d);
    for (int i = 0; i < d; ++i) c[i] = field->integral_basis().at(i, j);
    basis.push_back(field->element(std::move(c)));
  }
  std::vector<std::vector<Rat>> gens;
  for (const auto& vi : v) {
    if (vi.is_zero()) continue;
    for (const auto& w : basis) gens.push_back((vi * w).integral_coords());
  }
  return gens;
}

}  // namespace

RealBall weil_height(const FieldElement& a, long prec) {
  if (a.is_zero()) throw Error("weil height of zero");
  RatPoly mp = a.minimal_polynomial();
  const int m = mp.degree();
  std::vector<Int> prim = mp.primitive_integer_coeffs();
  RealBall acc = RealBall::exact_int(prim.back(), prec).log();
  if (m >= 1) {
    RealBall one(1, prec);
    for (const auto& root : certified_roots(mp, prec)) {
      RealBall mag = root.abs().max(one);
      acc = acc + mag.log();
    }
  }
  RealBall h = acc / RealBall(m, prec);
  // h >= 0 exactly; clamp the enclosure's lower endpoint.
  return h.pos_part();
}

Rat content_ideal_norm(const std::vector<FieldElement>& v) {
  if (v.empty()) throw Error("content ideal of empty vector");
  bool all_zero = std::all_of(v.begin(), v.end(),
                              [](const FieldElement& e) { return e.is_zero(); });
  if (all_zero) throw Error("content ideal of zero vector");
  const int d = v[0].field()->degree();
  auto gens = ideal_generators(v);
  Int c = lcm_denominators(gens);
  auto [h, idx] = hnf_with_index(scaled_lattice(gens, c));
  // [O_k : c J] = idx, so N(J) = idx / c^d.
  return make_rat(idx, int_pow(c, static_cast<unsigned>(d)));
}

RealBall arakelov_log_height(const PlaceSet& ps, const std::vector<FieldElement>& v) {
  if (v.empty()) throw Error("arakelov height of empty vector");
  const auto& field = v[0].field();
  const int d = field->degree();
  long prec = ps.precision;
  RealBall arch(0, prec);
  for (size_t w = 0; w < ps.places.size(); ++w) {
    RealBall sq(0, prec);
    for (const auto& vi : v) sq = sq + embed(ps, vi, w).abs_sq();
    if (!sq.is_positive()) throw Undecided("vector norm not separated from zero");
    // (d_w / d) log ||v||_w with ||.||_w the l2 norm.
    arch = arch + sq.log() * ps.places[w].local_degree / RealBall(2 * d, prec);
  }
  Rat nj = content_ideal_norm(v);
  RealBall fin = ball_log_rat(nj, prec) / RealBall(d, prec);
  return arch - fin;
}

RealBall arakelov_log_height(const std::vector<FieldElement>& v, long prec) {
  if (v.empty()) throw Error("arakelov height of empty vector");
  for (long p = prec; p <= precision_cap(); p *= 2) {
    try {
      PlaceSet ps = compute_places(v[0].field(), p);
      return arakelov_log_height(ps, v);
    } catch (const Undecided&) {
      continue;
    }
  }
  throw Undecided("arakelov height undecided at precision cap");
}

FkValue f_k(const std::vector<FieldElement>& v) {
  if (v.empty()) throw Error("F_k of empty vector");
  const auto& field = v[0].field();
  const size_t d = static_cast<size_t>(field->degree());
  if (v.size() != d) throw Error("F_k requires a vector of length d");
  RatMat gram(d, d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = i; j < d; ++j) {
      Rat t = (v[i] * v[j]).trace();
      gram.at(i, j) = t;
      gram.at(j, i) = t;
    }
  Rat det = gram.det();
  if (det == 0) return {Rat(0), true};
  Rat nj = content_ideal_norm(v);
  Rat f = abs(det) / (nj * nj);
  return {f, false};
}

Int module_index(const std::vector<FieldElement>& v) {
  if (v.empty()) throw Error("module index of empty vector");
  const auto& field = v[0].field();
  const size_t d = static_cast<size_t>(field->degree());
  if (v.size() != d) throw Error("module index requires a vector of length d");

  auto jgens = ideal_generators(v);
  std::vector<std::vector<Rat>> mgens;
  for (const auto& vi : v) mgens.push_back(vi.integral_coords());
  Int c = lcm_denominators(jgens, lcm_denominators(mgens));

  auto [hj, idxj] = hnf_with_index(scaled_lattice(jgens, c));
  HnfResult hmr = hnf_general(scaled_lattice(mgens, c));
  if (hmr.rank != d) throw Error("module index of linearly dependent vector");
  const Int& idxm = hmr.index;

  // Route 1: ratio of the two lattice indices inside (1/c) O_k.
  Rat ratio = make_rat(idxm, idxj);
  if (den(ratio) != 1) throw Error("internal: module index is not integral");

  // Route 2: change of basis between the two HNF bases must be an
  // integer matrix whose determinant has the same absolute value.
  RatMat hjq(d, d), hmq(d, d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      hjq.at(i, j) = Rat(hj.at(i, j));
      hmq.at(i, j) = Rat(hmr.hnf.at(i, j));
    }
  RatMat x = hjq.inverse() * hmq;
  IntMat xz(d, d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      if (den(x.at(i, j)) != 1)
        throw Error("internal: module is not contained in its content ideal");
      xz.at(i, j) = num(x.at(i, j));
    }
  Int detx = xz.det();
  if (detx < 0) detx = -detx;
  if (Rat(detx) != abs(ratio))
    throw Error("internal: module index routes disagree");
  return detx;
}

DiscIdentityResult discriminant_identity_check(const std::vector<FieldElement>& v, long prec) {
  DiscIdentityResult out;
  FkValue f = f_k(v);
  if (f.degenerate) throw Error("discriminant identity check on a degenerate vector");
  out.fk = f.value;
  out.index = module_index(v);
  const auto& field = v[0].field();
  Int dk = field->abs_discriminant();
  out.exact_identity = (f.value == Rat(out.index * out.index * dk));

  const int d = field->degree();
  out.hadamard = escalate(prec, [&](long p) {
    PlaceSet ps = compute_places(field, p);
    RealBall lhs = ball_log_rat(f.value, p);
    RealBall rhs = arakelov_log_height(ps, v) * (2 * d);
    return Verdict::leq_attained(lhs, rhs, p);
  });
  return out;
}

Verdict power_height_bound_check(const FieldElement& a, int m_degree, long prec) {
  if (a.is_zero()) throw Error("power height bound of zero");
  if (m_degree < 1) throw Error("power height bound requires M >= 1");
  std::vector<FieldElement> v;
  for (int i = 0; i < m_degree; ++i) v.push_back(a.pow(i));
  return escalate(prec, [&](long p) {
    RealBall lhs = arakelov_log_height(v, p);
    RealBall rhs = ball_log_rat(Rat(m_degree), p) / RealBall(2, p) +
                   weil_height(a, p) * (m_degree - 1);
    return Verdict::leq_attained(lhs, rhs, p);
  });
}

ProductBasisResult product_basis(const std::vector<FieldElement>& gens,
                                 const std::vector<int>& degrees, long prec) {
  if (gens.empty() || gens.size() != degrees.size())
    throw Error("product basis: generators and degrees must match");
  const auto& field = gens[0].field();
  const int d = field->degree();

  long total = 1;
  for (int n : degrees) {
    if (n < 1) throw Error("product basis: degrees must be positive");
    total *= n;
  }
  if (total > d) throw Error("product basis: degrees exceed the field degree");

  ProductBasisResult out;
  std::vector<int> exps(gens.size(), 0);
  for (long idx = 0; idx < total; ++idx) {
    FieldElement m = field->one();
    long rem = idx;
    for (size_t g = 0; g < gens.size(); ++g) {
      int e = static_cast<int>(rem % degrees[g]);
      rem /= degrees[g];
      if (e) m = m * gens[g].pow(e);
    }
    out.monomials.push_back(std::move(m));
  }

  RatMat coords(d, out.monomials.size());
  for (size_t j = 0; j < out.monomials.size(); ++j)
    for (int i = 0; i < d; ++i) coords.at(i, j) = out.monomials[j][i];
  if (coords.rank() != out.monomials.size())
    throw Error("product basis: monomial set is linearly dependent");

  out.factorization = escalate(prec, [&](long p) {
    RealBall lhs = arakelov_log_height(out.monomials, p);
    RealBall rhs(0, p);
    for (size_t g = 0; g < gens.size(); ++g) {
      std::vector<FieldElement> pv;
      for (int e = 0; e < degrees[g]; ++e) pv.push_back(gens[g].pow(e));
      rhs = rhs + arakelov_log_height(pv, p);
    }
    return Verdict::eq_within_gap(lhs, rhs, p);
  });

  out.bound = escalate(prec, [&](long p) {
    RealBall lhs = arakelov_log_height(out.monomials, p);
    RealBall rhs = ball_log_rat(Rat(total), p) / RealBall(2, p);
    for (size_t g = 0; g < gens.size(); ++g)
      rhs = rhs + weil_height(gens[g], p) * (degrees[g] - 1);
    return Verdict::leq_attained(lhs, rhs, p);
  });
  return out;
}

Verdict dhm_check(const FieldElement& a, int m, const Int& subfield_disc, long prec) {
  if (a.is_zero()) throw Error("dhm check of zero");
  if (m < 2) throw Error("dhm check requires degree m >= 2");
  if (subfield_disc <= 0) throw Error("dhm check requires the absolute discriminant");
  Rat ratio = make_rat(subfield_disc, int_pow(Int(m), static_cast<unsigned>(m)));
  if (ratio <= 1) {
    Verdict v;
    v.state = VerdictState::holds;
    v.precision = prec;
    v.note = "vacuous: rhs <= 0";
    v.lhs = RealBall(0, prec);
    v.rhs = RealBall(0, prec);
    return v;
  }
  return escalate(prec, [&](long p) {
    RealBall rhs = ball_log_rat(ratio, p) / RealBall(2 * m * (m - 1), p);
    RealBall lhs = weil_height(a, p);
    Verdict v = Verdict::leq_attained(rhs, lhs, p);
    v.note = "h(a) on the right";
    return v;
  });
}

}  // namespace regforge
