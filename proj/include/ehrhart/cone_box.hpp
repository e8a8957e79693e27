#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "ehrhart/normal_form.hpp"
#include "ehrhart/triangulation.hpp"

namespace ehrhart {

// Integral ray generators of a cone in Z^{d+1}, graded by the last
// coordinate (the height u). Generators are linearly independent with
// positive height; for the primed cones the interior ray (a, ell) is
// appended to the face generators.
struct GeneratorSet {
  std::vector<IntVec> generators;
  size_t ambient_dim = 0;  // d + 1

  size_t count() const { return generators.size(); }
  Int height(const IntVec& v) const { return v[ambient_dim - 1]; }
  Int generator_height_sum() const {
    Int s(0);
    for (const auto& g : generators) s += g[ambient_dim - 1];
    return s;
  }
};

// Lattice points of the open parallelepiped box(W) or of the half-open
// fundamental parallelepiped Pi(W).
enum class BoxMode { open, halfopen };

struct ParallelepipedPoints {
  std::vector<IntVec> points;  // sorted lexicographically
  BoxMode mode;
};

// {(q v_1, q), ..., (q v_{m+1}, q)} over the vertices of a face of the
// host polytope; the grading coordinate is appended last.
inline GeneratorSet ray_generators(const Simplex& face, const Polytope& host,
                                   const Int& q) {
  GeneratorSet w;
  w.ambient_dim = host.ambient_dim() + 1;
  for (int id : face.vertex_ids) {
    const RatVec& v = host.vertices().at(id);
    IntVec g(w.ambient_dim);
    for (size_t i = 0; i < v.size(); ++i) {
      Rat c = v[i] * Rat(q);
      if (!is_integral(c))
        throw NonIntegralGenerator(
            "ray_generators: q is not a multiple of the vertex denominator");
      g[i] = num(c);
    }
    g[w.ambient_dim - 1] = q;
    w.generators.push_back(std::move(g));
  }
  return w;
}

namespace detail {

inline IntVec mat_vec(const IntMatrix& m, const IntVec& v) { return m * v; }

}  // namespace detail

// Enumeration by SNF coset representatives in the saturated lattice of
// lin(W): output-sensitive, one point per coset of Z^n / C Z^n where C is
// the generator matrix in saturated-basis coordinates.
inline ParallelepipedPoints box_points(const GeneratorSet& w, BoxMode mode) {
  ParallelepipedPoints out;
  out.mode = mode;
  if (w.generators.empty()) {
    out.points.push_back(IntVec(w.ambient_dim, Int(0)));
    return out;
  }
  size_t n = w.count();
  IntMatrix basis = saturation_basis(w.generators);  // D x n
  IntMatrix c(n, n);
  for (size_t j = 0; j < n; ++j) {
    IntVec coords = lattice_coordinates(basis, w.generators[j]);
    for (size_t i = 0; i < n; ++i) c(i, j) = coords[i];
  }
  SnfResult s = snf(c);
  detail::RatMatrix uinv = detail::inverse(detail::RatMatrix(s.u));
  detail::RatMatrix cmat(c);
  detail::RatMatrix cinv = detail::inverse(cmat);

  IntVec tuple(n, Int(0));
  for (;;) {
    // coset representative y = U^{-1} tuple, reduced into Pi by taking
    // fractional parts of its generator coefficients
    RatVec lambda(n, Rat(0));
    IntVec y(n, Int(0));
    for (size_t i = 0; i < n; ++i) {
      Rat yi(0);
      for (size_t j = 0; j < n; ++j) yi += uinv(i, j) * Rat(tuple[j]);
      assert(is_integral(yi));
      y[i] = num(yi);
    }
    for (size_t i = 0; i < n; ++i) {
      Rat li(0);
      for (size_t j = 0; j < n; ++j) li += cinv(i, j) * Rat(y[j]);
      lambda[i] = li;
    }
    bool keep = true;
    IntVec x = y;
    for (size_t i = 0; i < n; ++i) {
      Int fl = floor_rat(lambda[i]);
      for (size_t j = 0; j < n; ++j) x[j] -= fl * c(j, i);
      if (mode == BoxMode::open && is_integral(lambda[i])) keep = false;
    }
    if (keep) {
      IntVec ambient(w.ambient_dim, Int(0));
      for (size_t r = 0; r < w.ambient_dim; ++r)
        for (size_t j = 0; j < n; ++j) ambient[r] += basis(r, j) * x[j];
      out.points.push_back(std::move(ambient));
    }
    // advance the mixed-radix tuple over the elementary divisors
    size_t k = 0;
    while (k < n) {
      tuple[k] += 1;
      if (tuple[k] < s.s(k, k)) break;
      tuple[k] = 0;
      ++k;
    }
    if (k == n) break;
  }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

// Independent oracle: scan the integer bounding box of the (closed)
// parallelepiped and solve for the generator coefficients exactly.
// Exponential in the ambient dimension; test/verification use only.
inline ParallelepipedPoints box_points_by_scan(const GeneratorSet& w, BoxMode mode) {
  ParallelepipedPoints out;
  out.mode = mode;
  if (w.generators.empty()) {
    out.points.push_back(IntVec(w.ambient_dim, Int(0)));
    return out;
  }
  size_t dim = w.ambient_dim;
  IntVec lo(dim, Int(0)), hi(dim, Int(0));
  for (const auto& g : w.generators)
    for (size_t i = 0; i < dim; ++i) {
      if (g[i] < 0) lo[i] += g[i];
      if (g[i] > 0) hi[i] += g[i];
    }
  detail::RatMatrix a = detail::RatMatrix(IntMatrix::from_columns(w.generators));
  IntVec x = lo;
  for (;;) {
    RatVec lambda;
    RatVec target(dim);
    for (size_t i = 0; i < dim; ++i) target[i] = Rat(x[i]);
    if (detail::solve_linear(a, target, lambda)) {
      RatVec probe(dim, Rat(0));
      for (size_t j = 0; j < w.count(); ++j)
        for (size_t i = 0; i < dim; ++i) probe[i] += lambda[j] * Rat(w.generators[j][i]);
      if (probe == target) {
        bool keep = true;
        for (const Rat& l : lambda) {
          if (mode == BoxMode::open ? (l <= 0 || l >= 1) : (l < 0 || l >= 1)) {
            keep = false;
            break;
          }
        }
        if (keep) out.points.push_back(x);
      }
    }
    size_t k = 0;
    while (k < dim) {
      x[k] += 1;
      if (x[k] <= hi[k]) break;
      x[k] = lo[k];
      ++k;
    }
    if (k == dim) break;
  }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

// B(W; z): generating function of the height over the open-box lattice
// points. Empty generator list encodes the empty face, B(empty) = 1;
// an empty open box gives the zero polynomial.
inline IntPolynomial box_polynomial(const GeneratorSet& w) {
  if (w.generators.empty()) return IntPolynomial::one();
  ParallelepipedPoints pts = box_points(w, BoxMode::open);
  IntPolynomial b;
  for (const auto& p : pts.points) {
    Int h = w.height(p);
    assert(h >= 0);
    b += IntPolynomial::monomial(h.get_ui());
  }
  return b;
}

inline IntPolynomial face_box_polynomial(const Simplex& face, const Polytope& host,
                                         const Int& q) {
  if (face.empty()) return IntPolynomial::one();
  return box_polynomial(ray_generators(face, host, q));
}

// h*-polynomial of one simplex at height q: computed both as the direct
// Pi(W) enumeration and as the face-sum of box polynomials; the two
// routes are asserted equal.
inline IntPolynomial simplex_hstar(const Simplex& face, const Polytope& host,
                                   const Int& q) {
  if (face.empty()) return IntPolynomial::one();
  GeneratorSet w = ray_generators(face, host, q);
  ParallelepipedPoints pi = box_points(w, BoxMode::halfopen);
  IntPolynomial direct;
  for (const auto& p : pi.points) direct += IntPolynomial::monomial(w.height(p).get_ui());

  IntPolynomial face_sum;
  size_t n = face.vertex_ids.size();
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    std::vector<int> ids;
    for (size_t i = 0; i < n; ++i)
      if (mask & (size_t{1} << i)) ids.push_back(face.vertex_ids[i]);
    face_sum += face_box_polynomial(Simplex(std::move(ids)), host, q);
  }
  assert(direct == face_sum);
  return direct;
}

// Unique expression of a cone point over the fan spanned by a boundary
// triangulation and an interior ray (a, ell):
//   v = {v} + sum_{i in I} w_i + sum_i mu_i w_i + mu (a, ell)
struct PointDecomposition {
  IntVec fractional_part;      // {v}
  std::vector<size_t> integer_indices;  // I: generator indices with integral coefficient
  std::vector<Int> mu;         // one per face generator
  Int mu_ray;                  // coefficient of the interior ray
};

inline std::pair<Simplex, PointDecomposition> decompose_point(
    const IntVec& v, const Triangulation& t, const IntVec& ray) {
  const Polytope& host = t.host();
  if (t.kind() != TriangulationKind::boundary)
    throw Error("decompose_point: requires a boundary triangulation");
  size_t dim = host.ambient_dim() + 1;
  if (v.size() != dim || ray.size() != dim)
    throw DimensionMismatch("decompose_point: wrong ambient dimension");
  Int q = t.denominator();
  Int ell = ray[dim - 1];

  auto try_face = [&](const Simplex& face, RatVec& lambda) {
    std::vector<IntVec> cols;
    if (!face.empty())
      cols = ray_generators(face, host, q).generators;
    size_t m1 = cols.size();
    cols.push_back(ray);
    detail::RatMatrix a = detail::RatMatrix(IntMatrix::from_columns(cols));
    RatVec sol;
    if (!detail::solve_linear(a, to_rat_vec(v), sol)) return false;
    RatVec probe(dim, Rat(0));
    for (size_t j = 0; j < cols.size(); ++j)
      for (size_t i = 0; i < dim; ++i) probe[i] += sol[j] * Rat(cols[j][i]);
    if (probe != to_rat_vec(v)) return false;
    for (size_t j = 0; j < m1 + 1; ++j)
      if (sol[j] < 0) return false;
    lambda = sol;
    return true;
  };

  std::vector<Simplex> faces = t.faces_by_dimension();
  const Simplex* found = nullptr;
  RatVec lambda;
  for (const auto& face : faces) {
    RatVec cand;
    if (try_face(face, cand)) {
      found = &face;
      lambda = std::move(cand);
      // uniqueness of the minimal face: no other face of the same
      // dimension may contain v in its primed cone
      for (const auto& other : faces) {
        if (other.dim() != face.dim() || other == face) continue;
        RatVec dummy;
        assert(!try_face(other, dummy));
      }
      break;
    }
  }
  if (found == nullptr)
    throw PointOutsideCone("decompose_point: point is outside cone(P)");

  const Simplex& face = *found;
  size_t m1 = face.vertex_ids.size();
  GeneratorSet w;
  if (!face.empty()) w = ray_generators(face, host, q);
  w.ambient_dim = dim;

  PointDecomposition dec;
  dec.fractional_part.assign(dim, Int(0));
  RatVec frac_acc(dim, Rat(0));
  for (size_t i = 0; i < m1; ++i) {
    if (is_integral(lambda[i])) {
      assert(lambda[i] >= 1);  // minimality of the face
      dec.integer_indices.push_back(i);
      dec.mu.push_back(num(lambda[i]) - 1);
    } else {
      dec.mu.push_back(floor_rat(lambda[i]));
      Rat f = frac_part(lambda[i]);
      for (size_t r = 0; r < dim; ++r) frac_acc[r] += f * Rat(w.generators[i][r]);
    }
  }
  Rat lray = lambda[m1];
  dec.mu_ray = floor_rat(lray);
  Rat fray = frac_part(lray);
  for (size_t r = 0; r < dim; ++r) frac_acc[r] += fray * Rat(ray[r]);
  for (size_t r = 0; r < dim; ++r) {
    assert(is_integral(frac_acc[r]));
    dec.fractional_part[r] = num(frac_acc[r]);
  }

  // reconstruction and the height identity
  IntVec rec = dec.fractional_part;
  for (size_t i = 0; i < m1; ++i) {
    Int coef = dec.mu[i];
    if (std::find(dec.integer_indices.begin(), dec.integer_indices.end(), i) !=
        dec.integer_indices.end())
      coef += 1;
    for (size_t r = 0; r < dim; ++r) rec[r] += coef * w.generators[i][r];
  }
  for (size_t r = 0; r < dim; ++r) rec[r] += dec.mu_ray * ray[r];
  assert(rec == v);
  int dim_omega = static_cast<int>(m1 - dec.integer_indices.size()) - 1;
  Int height = dec.fractional_part[dim - 1] + q * (face.dim() - dim_omega);
  for (const Int& mu : dec.mu) height += q * mu;
  height += dec.mu_ray * ell;
  assert(height == v[dim - 1]);
  (void)height;

  return {face, std::move(dec)};
}

}  // namespace ehrhart
