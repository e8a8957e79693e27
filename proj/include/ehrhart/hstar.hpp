#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ehrhart/cone_box.hpp"

namespace ehrhart {

enum class HStarMethod { count, betke_mcmullen, stapledon };

inline std::string to_string(HStarMethod m) {
  switch (m) {
    case HStarMethod::count: return "count";
    case HStarMethod::betke_mcmullen: return "betke_mcmullen";
    case HStarMethod::stapledon: return "stapledon";
  }
  return "?";
}

// h*-polynomial of P for the series representation over (1 - z^q)^{d+1}.
// Representation-dependent: the same polytope has different h* for
// different multiples q of its denominator.
struct HStarResult {
  Int q;
  int d = 0;
  IntPolynomial hstar;
  long s = -1;  // degree of hstar
  HStarMethod method = HStarMethod::count;
};

inline HStarResult make_hstar_result(Int q, int d, IntPolynomial hstar,
                                     HStarMethod method) {
  HStarResult r;
  r.q = std::move(q);
  r.d = d;
  r.s = hstar.degree();
  r.hstar = std::move(hstar);
  r.method = method;
  return r;
}

namespace detail {

inline Int resolve_q(const Polytope& p, const std::optional<Int>& q_override) {
  Int denom = p.denominator();
  if (!q_override) return denom;
  if (*q_override <= 0 || *q_override % denom != 0)
    throw InvalidDenominatorOverride("q override must be a positive multiple of " +
                                     denom.get_str());
  return *q_override;
}

}  // namespace detail

// Lattice-point count of tP with the convention L(0) = 1.
inline Int dilate_count(const Polytope& p, const Int& t, bool interior = false) {
  if (t == 0 && !interior) return 1;
  return p.lattice_point_count(t, interior);
}

// h* from raw counts: h*_j = sum_k (-1)^k C(d+1, k) L(j - kq). The
// reconstructed series is asserted to reproduce all counts up to 2q(d+1).
inline HStarResult hstar_by_counting(const Polytope& p,
                                     std::optional<Int> q_override = std::nullopt) {
  Int q = detail::resolve_q(p, q_override);
  int d = p.dim();
  unsigned long qn = q.get_ui();
  size_t n = qn * (d + 1);
  std::vector<Int> counts(2 * n + 1);
  for (size_t t = 0; t <= 2 * n; ++t) counts[t] = dilate_count(p, Int(t));
  std::vector<Int> h(n, Int(0));
  for (size_t j = 0; j < n; ++j)
    for (int k = 0; k <= d + 1; ++k) {
      long idx = static_cast<long>(j) - k * static_cast<long>(qn);
      if (idx < 0) break;
      Int term = binomial(d + 1, k) * counts[idx];
      h[j] += (k % 2 == 0) ? term : -term;
    }
  IntPolynomial hstar{std::vector<Int>(h)};
  assert(hstar.coeff(0) == 1);
  assert(hstar.nonnegative());
  // series reconstruction: L(t) = sum_{j <= t, j = t mod q} h_j C((t-j)/q + d, d)
  for (size_t t = 0; t <= 2 * n; ++t) {
    Int rec(0);
    for (size_t j = t % qn; j < n && j <= t; j += qn)
      rec += hstar.coeff(j) * binomial((t - j) / qn + d, d);
    assert(rec == counts[t]);
    (void)rec;
  }
  return make_hstar_result(std::move(q), d, std::move(hstar), HStarMethod::count);
}

// Rational Betke-McMullen decomposition: h* = sum over all faces of a
// full triangulation of B(face; z) h(face; z^q).
inline HStarResult hstar_betke_mcmullen(const Polytope& p,
                                        std::optional<Triangulation> t = std::nullopt,
                                        std::optional<Int> q_override = std::nullopt) {
  Int q = detail::resolve_q(p, q_override);
  const Triangulation& tri = t ? *t : (t = placing_triangulation(p), *t);
  if (tri.kind() != TriangulationKind::full)
    throw Error("hstar_betke_mcmullen: full triangulation required");
  unsigned long qn = q.get_ui();
  IntPolynomial hstar;
  for (const auto& face : tri.faces())
    hstar += face_box_polynomial(face, p, q) * tri.h_polynomial(face).inflate(qn);
  int d = p.dim();
  assert(hstar.degree() < static_cast<long>(qn * (d + 1)));
  assert(hstar.coeff(0) == 1);
  return make_hstar_result(std::move(q), d, std::move(hstar),
                           HStarMethod::betke_mcmullen);
}

struct InteriorRay {
  IntVec point;  // a
  Int ell;       // a / ell lies in the interior of P
};

// Stapledon-style decomposition over a boundary triangulation T and an
// interior ray (a, ell):
//   h*(P; z) = (1 - z^q)/(1 - z^ell) sum_{face} (B(face) + B(face')) h(face; z^q)
// The division is exact by construction; a failure signals a bug.
inline HStarResult hstar_stapledon(const Polytope& p,
                                   std::optional<InteriorRay> ray = std::nullopt,
                                   std::optional<Triangulation> t = std::nullopt,
                                   std::optional<Int> q_override = std::nullopt) {
  if (!p.full_dimensional())
    throw DimensionMismatch("hstar_stapledon: polytope must be full-dimensional");
  Int q = detail::resolve_q(p, q_override);
  if (!ray) {
    auto idl = p.smallest_interior_dilate();
    ray = InteriorRay{std::move(idl.witness), std::move(idl.ell)};
  } else {
    if (ray->ell <= 0 || ray->point.size() != static_cast<size_t>(p.ambient_dim()))
      throw RayNotInterior("hstar_stapledon: malformed interior ray");
    RatVec x(ray->point.size());
    for (size_t i = 0; i < x.size(); ++i) x[i] = Rat(ray->point[i]) / Rat(ray->ell);
    if (!p.contains(x, true))
      throw RayNotInterior("hstar_stapledon: a/ell is not interior to P");
  }
  const Triangulation& tri = t ? *t : (t = boundary_triangulation(p), *t);
  if (tri.kind() != TriangulationKind::boundary)
    throw Error("hstar_stapledon: boundary triangulation required");

  IntVec ray_vec = ray->point;
  ray_vec.push_back(ray->ell);
  unsigned long qn = q.get_ui();
  IntPolynomial sum;
  for (const auto& face : tri.faces()) {
    GeneratorSet primed;
    if (face.empty()) {
      primed.ambient_dim = ray_vec.size();
    } else {
      primed = ray_generators(face, p, q);
    }
    primed.generators.push_back(ray_vec);
    IntPolynomial boxes = face_box_polynomial(face, p, q) + box_polynomial(primed);
    sum += boxes * tri.h_polynomial(face).inflate(qn);
  }
  IntPolynomial numer = sum * (IntPolynomial::one() - IntPolynomial::monomial(qn));
  IntPolynomial denom =
      IntPolynomial::one() - IntPolynomial::monomial(ray->ell.get_ui());
  IntPolynomial hstar = numer.divide_exact(denom);
  int d = p.dim();
  assert(hstar.coeff(0) == 1);
  assert(hstar.nonnegative());
  return make_hstar_result(std::move(q), d, std::move(hstar), HStarMethod::stapledon);
}

// Ehrhart quasipolynomial: one degree-d rational constituent per residue
// class of t mod q, interpolated from exact counts.
struct QuasiPolynomial {
  Int period;
  std::vector<RatPolynomial> constituents;  // index = t mod period

  Rat eval(const Int& t) const {
    Int r = t % period;
    if (r < 0) r += period;
    return constituents[r.get_ui()].eval(Rat(t));
  }
};

inline QuasiPolynomial ehrhart_quasipolynomial(const Polytope& p) {
  Int q = p.denominator();
  int d = p.dim();
  unsigned long qn = q.get_ui();
  QuasiPolynomial result;
  result.period = q;
  for (unsigned long r = 0; r < qn; ++r) {
    // Lagrange interpolation through t = r, r+q, ..., r+dq
    std::vector<Rat> ts(d + 1), ys(d + 1);
    for (int j = 0; j <= d; ++j) {
      Int t = Int(r) + Int(j) * q;
      ts[j] = Rat(t);
      ys[j] = Rat(dilate_count(p, t));
    }
    std::vector<Rat> coeffs(d + 1, Rat(0));
    for (int j = 0; j <= d; ++j) {
      std::vector<Rat> basis{Rat(1)};  // polynomial prod_{k != j} (t - t_k)
      Rat denom(1);
      for (int k = 0; k <= d; ++k) {
        if (k == j) continue;
        denom *= ts[j] - ts[k];
        std::vector<Rat> next(basis.size() + 1, Rat(0));
        for (size_t i = 0; i < basis.size(); ++i) {
          next[i + 1] += basis[i];
          next[i] -= ts[k] * basis[i];
        }
        basis = std::move(next);
      }
      Rat w = ys[j] / denom;
      for (size_t i = 0; i < basis.size(); ++i) coeffs[i] += w * basis[i];
    }
    result.constituents.emplace_back(std::move(coeffs));
  }
  // every constituent has degree d with the same leading coefficient vol(P)
  for (const auto& c : result.constituents) {
    assert(c.degree() == d);
    assert(c.coeff(d) == result.constituents[0].coeff(d));
  }
  // samples reproduce: interpolation is exact on its nodes by construction,
  // so spot-check the next period instead
  for (Int t(0); t <= Int(2) * q; ++t)
    assert(result.eval(t) == Rat(dilate_count(p, t)));
  return result;
}

// Unique split hbar* = a(z) + z^ell b(z) with both parts nonnegative and
// palindromic in their windows; ell = q(d+1) - deg h*.
struct AbDecomposition {
  HStarResult h;
  IntPolynomial a;
  IntPolynomial b;
  Int ell;
  IntPolynomial hbar;  // (1 + z + ... + z^{ell-1}) h*
  long f = -1;         // degree of hbar
};

inline AbDecomposition ab_decomposition(const Polytope& p,
                                        std::optional<Int> q_override = std::nullopt) {
  if (!p.full_dimensional())
    throw DimensionMismatch("ab_decomposition: polytope must be full-dimensional");
  AbDecomposition dec;
  dec.h = hstar_by_counting(p, std::move(q_override));
  const IntPolynomial& h = dec.h.hstar;
  long n = static_cast<long>(dec.h.q.get_ui()) * (dec.h.d + 1);
  long s = dec.h.s;
  long ell = n - s;
  dec.ell = ell;
  dec.hbar = IntPolynomial::all_ones(ell) * h;
  dec.f = dec.hbar.degree();

  // prefix sums of h*_j (zero outside [0, s])
  auto prefix = [&](long from, long to) {  // sum of h_j for from <= j <= to
    Int acc(0);
    for (long j = std::max(from, 0L); j <= std::min(to, s); ++j) acc += h.coeff(j);
    return acc;
  };
  std::vector<Int> a(n), b(n - ell);
  for (long i = 0; i < n; ++i) a[i] = prefix(0, i) - prefix(n - i, n - 1);
  for (long i = 0; i < n - ell; ++i) b[i] = prefix(s - i, s) - prefix(0, i);
  dec.a = IntPolynomial(std::move(a));
  dec.b = IntPolynomial(std::move(b));

  assert(dec.a + dec.b * IntPolynomial::monomial(ell) == dec.hbar);
  assert(dec.a.palindromic(n - 1));
  assert(dec.b.palindromic(n - 1 - ell));
  assert(dec.a.nonnegative());
  assert(dec.b.nonnegative());
  auto idl = p.smallest_interior_dilate();
  assert(Int(ell) == idl.ell);

  // secondary route via the boundary-triangulation sums, with the ray at
  // the smallest interior dilate
  if (p.dim() >= 1) {
    Triangulation tri = boundary_triangulation(p);
    IntVec ray_vec = idl.witness;
    ray_vec.push_back(idl.ell);
    unsigned long qn = dec.h.q.get_ui();
    IntPolynomial suma, sumb;
    for (const auto& face : tri.faces()) {
      IntPolynomial hpoly = tri.h_polynomial(face).inflate(qn);
      suma += face_box_polynomial(face, p, dec.h.q) * hpoly;
      GeneratorSet primed;
      if (!face.empty()) primed = ray_generators(face, p, dec.h.q);
      primed.ambient_dim = ray_vec.size();
      primed.generators.push_back(ray_vec);
      sumb += box_polynomial(primed) * hpoly;
    }
    IntPolynomial ones = IntPolynomial::all_ones(qn);
    assert(ones * suma == dec.a);
    assert((ones * sumb).divide_exact(IntPolynomial::monomial(ell)) == dec.b);
  }
  return dec;
}

// Coefficient inequalities on the padded h*-vector (h*_0, ..., h*_{q(d+1)-1}).
struct InequalityViolation {
  int family;  // 1 or 2
  long index;
  Int lhs;
  Int rhs;
};

struct InequalityReport {
  bool passed = true;
  std::vector<InequalityViolation> violations;
};

inline InequalityReport check_inequalities(const HStarResult& h) {
  long n = static_cast<long>(h.q.get_ui()) * (h.d + 1);
  long s = h.s;
  auto sum = [&](long from, long to) {
    Int acc(0);
    for (long j = std::max(from, 0L); j <= std::min(to, n - 1); ++j)
      acc += h.hstar.coeff(j);
    return acc;
  };
  InequalityReport report;
  for (long i = 0; i <= (n - 1) / 2 - 1; ++i) {
    Int lhs = sum(0, i + 1);
    Int rhs = sum(n - 1 - i, n - 1);
    if (lhs < rhs) report.violations.push_back({1, i, lhs, rhs});
  }
  for (long i = 0; i <= n - 1; ++i) {
    Int lhs = sum(s - i, s);
    Int rhs = sum(0, i);
    if (lhs < rhs) report.violations.push_back({2, i, lhs, rhs});
  }
  report.passed = report.violations.empty();
  return report;
}

struct DualityCheck {
  bool is_dual_lattice = false;
  bool b_is_zero = false;
  bool hstar_palindromic = false;
};

// Duality test: the dual of P is a lattice polytope iff
// b = 0 in the a/b-decomposition iff h* is palindromic.
inline DualityCheck palindromic_dual_check(const Polytope& p) {
  RatVec origin(p.ambient_dim(), Rat(0));
  if (!p.contains(origin, true))
    throw OriginNotInterior("palindromic_dual_check: origin is not strictly interior");
  DualityCheck result;
  result.is_dual_lattice = p.dual().is_lattice();
  AbDecomposition dec = ab_decomposition(p);
  result.b_is_zero = dec.b.is_zero();
  result.hstar_palindromic = dec.h.hstar.palindromic(dec.h.s);
  assert(result.is_dual_lattice == result.b_is_zero);
  return result;
}

}  // namespace ehrhart
