#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "ehrhart/polynomial.hpp"
#include "ehrhart/polytope.hpp"

namespace ehrhart {

// Face of a triangulation: sorted vertex ids into the host polytope's
// vertex list. The empty simplex (dim -1) is a face of everything.
struct Simplex {
  std::vector<int> vertex_ids;

  Simplex() = default;
  explicit Simplex(std::vector<int> ids) : vertex_ids(std::move(ids)) {
    std::sort(vertex_ids.begin(), vertex_ids.end());
  }

  int dim() const { return static_cast<int>(vertex_ids.size()) - 1; }
  bool empty() const { return vertex_ids.empty(); }

  bool subset_of(const Simplex& other) const {
    return std::includes(other.vertex_ids.begin(), other.vertex_ids.end(),
                         vertex_ids.begin(), vertex_ids.end());
  }

  auto operator<=>(const Simplex&) const = default;
};

enum class TriangulationKind { full, boundary };

// Full or boundary triangulation of a polytope on its own vertex set,
// closed under taking faces and containing the empty face. Since only
// host vertices are used, the triangulation denominator equals the host
// denominator.
class Triangulation {
 public:
  Triangulation(Polytope host, TriangulationKind kind,
                std::vector<Simplex> maximal_cells)
      : host_(std::move(host)), kind_(kind), cells_(std::move(maximal_cells)) {
    std::set<Simplex> closure;
    for (const auto& cell : cells_) {
      size_t n = cell.vertex_ids.size();
      for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
        std::vector<int> ids;
        for (size_t i = 0; i < n; ++i)
          if (mask & (size_t{1} << i)) ids.push_back(cell.vertex_ids[i]);
        closure.insert(Simplex(std::move(ids)));
      }
    }
    closure.insert(Simplex{});
    faces_.assign(closure.begin(), closure.end());
  }

  const Polytope& host() const { return host_; }
  TriangulationKind kind() const { return kind_; }
  const std::vector<Simplex>& maximal_cells() const { return cells_; }
  // all faces, ordered by (dimension, lexicographic vertex ids)
  std::vector<Simplex> faces_by_dimension() const {
    std::vector<Simplex> out = faces_;
    std::stable_sort(out.begin(), out.end(), [](const Simplex& a, const Simplex& b) {
      if (a.dim() != b.dim()) return a.dim() < b.dim();
      return a.vertex_ids < b.vertex_ids;
    });
    return out;
  }
  const std::vector<Simplex>& faces() const { return faces_; }

  bool has_face(const Simplex& s) const {
    return std::binary_search(faces_.begin(), faces_.end(), s);
  }

  Int denominator() const { return host_.denominator(); }

  // h_T(face; z) = sum over cofaces Phi of z^{dim Phi - dim face} (1-z)^{D - dim Phi},
  // with D = dim(P) for a full triangulation and dim(P) - 1 for a boundary one.
  IntPolynomial h_polynomial(const Simplex& face) const {
    if (!has_face(face))
      throw FaceNotInTriangulation("h_polynomial: face is not in the triangulation");
    int top = host_.dim() - (kind_ == TriangulationKind::boundary ? 1 : 0);
    IntPolynomial result;
    IntPolynomial one_minus_z({Int(1), Int(-1)});
    for (const auto& phi : faces_) {
      if (!face.subset_of(phi)) continue;
      IntPolynomial term = IntPolynomial::monomial(phi.dim() - face.dim());
      for (int e = 0; e < top - phi.dim(); ++e) term = term * one_minus_z;
      result += term;
    }
    return result;
  }

 private:
  Polytope host_;
  TriangulationKind kind_;
  std::vector<Simplex> cells_;
  std::vector<Simplex> faces_;  // sorted (operator<=>), used for lookup
};

// Regular triangulation of P built by inserting vertices in the given
// order (default: vertex list order) and coning visible facets.
inline Triangulation placing_triangulation(const Polytope& p,
                                           std::vector<int> order = {}) {
  if (p.dim() < 0) throw EmptyInput("placing_triangulation: empty polytope");
  if (order.empty())
    for (size_t i = 0; i < p.vertices().size(); ++i) order.push_back(static_cast<int>(i));
  detail::PlacingHull hull(p.vertices(), order);
  std::vector<Simplex> cells;
  for (const auto& c : hull.cells()) cells.push_back(Simplex(c));
  return Triangulation(p, TriangulationKind::full, std::move(cells));
}

// Boundary triangulation: each facet of P is triangulated by the placing
// rule restricted to its incident vertices (in vertex list order).
inline Triangulation boundary_triangulation(const Polytope& p) {
  if (!p.full_dimensional() || p.dim() < 1)
    throw DimensionMismatch(
        "boundary_triangulation: polytope must be full-dimensional of dimension >= 1");
  std::vector<Simplex> cells;
  for (const auto& f : p.facets()) {
    std::vector<int> ids = p.facet_vertex_ids(f);
    std::vector<RatVec> pts;
    for (int i : ids) pts.push_back(p.vertices()[i]);
    std::vector<int> order(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) order[i] = static_cast<int>(i);
    detail::PlacingHull facet_hull(pts, order);
    assert(facet_hull.dim() == p.dim() - 1);
    for (const auto& c : facet_hull.cells()) {
      std::vector<int> global;
      for (int local : c) global.push_back(ids[local]);
      cells.push_back(Simplex(std::move(global)));
    }
  }
  return Triangulation(p, TriangulationKind::boundary, std::move(cells));
}

}  // namespace ehrhart
