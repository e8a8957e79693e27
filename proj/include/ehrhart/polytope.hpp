#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ehrhart/placing.hpp"

namespace ehrhart {

// Facet inequality normal . x <= offset in canonical primitive-integer
// form: integer entries with gcd(|normal entries|, |offset|) = 1.
struct FacetInequality {
  IntVec normal;
  Int offset;

  bool operator==(const FacetInequality& o) const {
    return normal == o.normal && offset == o.offset;
  }
  bool operator<(const FacetInequality& o) const {
    if (normal != o.normal)
      return std::lexicographical_compare(normal.begin(), normal.end(),
                                          o.normal.begin(), o.normal.end());
    return offset < o.offset;
  }
};

// Affine-hull equation normal . x = offset, same canonical form, first
// nonzero normal entry positive.
using HullEquation = FacetInequality;

namespace detail {

inline FacetInequality canonicalize_hyperplane(const RatVec& normal, const Rat& offset,
                                               bool sign_normalize) {
  Int mult(1);
  for (const Rat& c : normal) mult = lcm(mult, den(c));
  mult = lcm(mult, den(offset));
  IntVec n(normal.size());
  Int g(0);
  for (size_t i = 0; i < normal.size(); ++i) {
    n[i] = num(normal[i] * Rat(mult));
    g = gcd(g, n[i]);
  }
  Int b = num(offset * Rat(mult));
  g = gcd(g, b);
  if (g > 1) {
    for (auto& c : n) c /= g;
    b /= g;
  }
  if (sign_normalize) {
    for (const Int& c : n) {
      if (c == 0) continue;
      if (c < 0) {
        for (auto& e : n) e = -e;
        b = -b;
      }
      break;
    }
  }
  return FacetInequality{std::move(n), std::move(b)};
}

inline Int dot_iv(const IntVec& a, const IntVec& b) {
  Int s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat dot_ir(const IntVec& a, const RatVec& b) {
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

inline Int scan_limit_from_env() {
  const char* v = std::getenv("EHRHART_MAX_SCAN");
  if (v == nullptr || *v == '\0') return Int(100000000);
  return Int(v);
}

}  // namespace detail

// Rational polytope in vertex representation with derived facets (and,
// below full dimension, the affine-hull equations).
class Polytope {
 public:
  static Polytope from_vertices(const std::vector<RatVec>& points,
                                std::string name = "") {
    if (points.empty()) throw EmptyInput("from_vertices: no points");
    size_t d = points[0].size();
    for (const auto& p : points)
      if (p.size() != d)
        throw DimensionMismatch("from_vertices: mixed ambient dimensions");
    std::vector<RatVec> pts;
    for (const auto& p : points)
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);

    Polytope poly;
    poly.name_ = std::move(name);
    poly.ambient_dim_ = static_cast<int>(d);

    std::vector<int> order(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) order[i] = static_cast<int>(i);
    detail::PlacingHull hull(pts, order);
    poly.dim_ = hull.dim();

    if (poly.dim_ == 0) {
      poly.vertices_.push_back(pts[0]);
      for (size_t i = 0; i < d; ++i) {
        RatVec e(d, Rat(0));
        e[i] = 1;
        poly.equations_.push_back(detail::canonicalize_hyperplane(e, pts[0][i], true));
      }
      return poly;
    }

    // pullback map from local hull coordinates to ambient inequalities:
    // y = (D^T D)^{-1} D^T (x - p0) for x in the affine hull
    const RatVec& p0 = pts[hull.base_index()];
    std::vector<RatVec> dirs;
    for (int f : hull.frame()) {
      RatVec dv(d);
      for (size_t i = 0; i < d; ++i) dv[i] = pts[f][i] - p0[i];
      dirs.push_back(std::move(dv));
    }
    int k = poly.dim_;
    detail::RatMatrix dmat = detail::RatMatrix::from_columns(dirs);  // d x k
    detail::RatMatrix gram(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        Rat s(0);
        for (size_t r = 0; r < d; ++r) s += dmat(r, i) * dmat(r, j);
        gram(i, j) = s;
      }
    detail::RatMatrix ginv = detail::inverse(gram);

    std::set<FacetInequality> facet_set;
    for (const auto& bf : hull.boundary()) {
      // n_amb = D (D^T D)^{-1} n_loc
      RatVec tmp(k, Rat(0));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) tmp[i] += ginv(i, j) * bf.normal[j];
      RatVec n_amb(d, Rat(0));
      for (size_t r = 0; r < d; ++r)
        for (int i = 0; i < k; ++i) n_amb[r] += dmat(r, i) * tmp[i];
      Rat off = bf.offset;
      for (size_t r = 0; r < d; ++r) off += n_amb[r] * p0[r];
      facet_set.insert(detail::canonicalize_hyperplane(n_amb, off, false));
    }
    poly.facets_.assign(facet_set.begin(), facet_set.end());

    if (k < static_cast<int>(d)) {
      detail::RatMatrix dirrows(k, d);
      for (int i = 0; i < k; ++i)
        for (size_t j = 0; j < d; ++j) dirrows(i, j) = dirs[i][j];
      for (const RatVec& e : detail::null_space(dirrows)) {
        Rat off(0);
        for (size_t i = 0; i < d; ++i) off += e[i] * p0[i];
        poly.equations_.push_back(detail::canonicalize_hyperplane(e, off, true));
      }
    }

    // a point is extreme iff its active facet normals span the hull's
    // direction space (rank = dim)
    for (const auto& p : pts) {
      std::vector<RatVec> active;
      for (const auto& f : poly.facets_)
        if (detail::dot_ir(f.normal, p) == Rat(f.offset)) active.push_back(to_rat_vec(f.normal));
      if (active.empty()) continue;
      detail::RatMatrix am(active.size(), d);
      for (size_t i = 0; i < active.size(); ++i)
        for (size_t j = 0; j < d; ++j) am(i, j) = active[i][j];
      if (static_cast<int>(am.rank()) == k) poly.vertices_.push_back(p);
    }
    return poly;
  }

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return dim_; }
  bool full_dimensional() const { return dim_ == ambient_dim_; }
  const std::vector<RatVec>& vertices() const { return vertices_; }
  const std::vector<FacetInequality>& facets() const { return facets_; }
  const std::vector<HullEquation>& equations() const { return equations_; }
  const std::string& name() const { return name_; }

  // lcm of all vertex coordinate denominators; 1 iff lattice polytope
  Int denominator() const {
    Int q(1);
    for (const auto& v : vertices_)
      for (const auto& c : v) q = lcm(q, den(c));
    return q;
  }

  bool contains(const RatVec& x, bool strict = false) const {
    if (x.size() != static_cast<size_t>(ambient_dim_))
      throw DimensionMismatch("contains: point has wrong ambient dimension");
    if (strict && !full_dimensional()) return false;
    if (dim_ == 0) return x == vertices_[0];
    for (const auto& e : equations_)
      if (detail::dot_ir(e.normal, x) != Rat(e.offset)) return false;
    for (const auto& f : facets_) {
      Rat lhs = detail::dot_ir(f.normal, x);
      if (strict ? lhs >= Rat(f.offset) : lhs > Rat(f.offset)) return false;
    }
    return true;
  }

  Polytope dilate(const Int& t) const {
    std::vector<RatVec> pts;
    for (const auto& v : vertices_) {
      RatVec w(v.size());
      for (size_t i = 0; i < v.size(); ++i) w[i] = v[i] * Rat(t);
      pts.push_back(std::move(w));
    }
    return from_vertices(pts);
  }

  // |tP cap Z^d| (or |tP-interior cap Z^d|) by exact bounding-box scan;
  // the scan is the counting oracle and shares no code with the
  // decomposition engines.
  Int lattice_point_count(const Int& t, bool interior = false,
                          const Int& scan_limit = detail::scan_limit_from_env()) const {
    assert(t >= 0);
    if (t == 0) return interior ? Int(dim_ == 0 && ambient_dim_ == 0 ? 1 : 0) : Int(1);
    if (interior && !full_dimensional()) return 0;
    IntVec lo, hi;
    bounding_box(t, lo, hi, scan_limit);
    IntVec x(ambient_dim_);
    Int total(0);
    count_rec(t, interior, 0, lo, hi, x, total);
    return total;
  }

  // {y : y . x <= 1 for all x in P}; requires a full-dimensional P with
  // the origin strictly interior, and then dual(dual(P)) = P
  Polytope dual() const {
    RatVec origin(ambient_dim_, Rat(0));
    if (!contains(origin, true))
      throw OriginNotInterior("dual: origin is not strictly interior");
    std::vector<RatVec> verts;
    for (const auto& f : facets_) {
      assert(f.offset > 0);
      RatVec v(ambient_dim_);
      for (int i = 0; i < ambient_dim_; ++i) v[i] = Rat(f.normal[i]) / Rat(f.offset);
      verts.push_back(std::move(v));
    }
    return from_vertices(verts);
  }

  bool is_lattice() const {
    for (const auto& v : vertices_)
      for (const auto& c : v)
        if (!is_integral(c)) return false;
    return true;
  }

  struct InteriorDilate {
    Int ell;          // smallest dilate with an interior lattice point
    IntVec witness;   // lexicographically smallest such point
  };

  // terminates with ell <= q(d+1)
  InteriorDilate smallest_interior_dilate(
      const Int& scan_limit = detail::scan_limit_from_env()) const {
    if (!full_dimensional())
      throw DimensionMismatch("smallest_interior_dilate: polytope not full-dimensional");
    for (Int ell(1);; ++ell) {
      std::optional<IntVec> w = lex_min_interior_point(ell, scan_limit);
      if (w) return InteriorDilate{ell, *w};
    }
  }

  // L if P is L-reflexive (lattice, origin interior, primitive vertices,
  // all facet local indices equal), otherwise empty
  std::optional<Int> reflexive_index() const {
    if (!is_lattice() || !full_dimensional()) return std::nullopt;
    RatVec origin(ambient_dim_, Rat(0));
    if (!contains(origin, true)) return std::nullopt;
    for (const auto& v : vertices_) {
      Int g(0);
      for (const auto& c : v) g = gcd(g, num(c));
      if (g != 1) return std::nullopt;
    }
    std::optional<Int> index;
    for (const auto& f : facets_) {
      Int g(0);
      for (const auto& c : f.normal) g = gcd(g, c);
      if (f.offset % g != 0) return std::nullopt;  // non-integral local index
      Int local = f.offset / g;
      if (index && *index != local) return std::nullopt;
      index = local;
    }
    return index;
  }

  // vertex ids (into vertices()) lying on a facet
  std::vector<int> facet_vertex_ids(const FacetInequality& f) const {
    std::vector<int> ids;
    for (size_t i = 0; i < vertices_.size(); ++i)
      if (detail::dot_ir(f.normal, vertices_[i]) == Rat(f.offset))
        ids.push_back(static_cast<int>(i));
    return ids;
  }

 private:
  void bounding_box(const Int& t, IntVec& lo, IntVec& hi, const Int& scan_limit) const {
    lo.assign(ambient_dim_, Int(0));
    hi.assign(ambient_dim_, Int(0));
    Int volume(1);
    for (int i = 0; i < ambient_dim_; ++i) {
      Rat mn = vertices_[0][i], mx = vertices_[0][i];
      for (const auto& v : vertices_) {
        mn = std::min(mn, v[i]);
        mx = std::max(mx, v[i]);
      }
      lo[i] = ceil_rat(mn * Rat(t));
      hi[i] = floor_rat(mx * Rat(t));
      if (hi[i] < lo[i]) {
        volume = 0;
        break;
      }
      volume *= hi[i] - lo[i] + 1;
    }
    if (volume > scan_limit)
      throw ScanLimitExceeded("bounding-box scan of " + volume.get_str() +
                              " candidate points exceeds the cap of " +
                              scan_limit.get_str());
  }

  // x in tP iff normal . x <= t * offset for every facet (plus the hull
  // equations scaled the same way)
  bool last_coordinate_range(const Int& t, bool strict, const IntVec& x, const Int& lo0,
                             const Int& hi0, Int& lo, Int& hi) const {
    lo = lo0;
    hi = hi0;
    int last = ambient_dim_ - 1;
    for (const auto& f : facets_) {
      Int partial(0);
      for (int i = 0; i < last; ++i) partial += f.normal[i] * x[i];
      Int rhs = t * f.offset - partial;
      const Int& a = f.normal[last];
      if (a == 0) {
        if (strict ? rhs <= 0 : rhs < 0) return false;
      } else if (a > 0) {
        Int bound = floor_div(rhs, a);
        if (strict && rhs % a == 0) bound -= 1;
        hi = std::min(hi, bound);
      } else {
        Int bound = -floor_div(rhs, -a);  // ceil(rhs / a)
        if (strict && rhs % a == 0) bound += 1;
        lo = std::max(lo, bound);
      }
      if (hi < lo) return false;
    }
    return true;
  }

  void count_rec(const Int& t, bool interior, int coord, const IntVec& lo,
                 const IntVec& hi, IntVec& x, Int& total) const {
    if (!full_dimensional()) {
      // lower-dimensional: plain scan with membership tests
      if (coord == ambient_dim_) {
        RatVec p(ambient_dim_);
        for (int i = 0; i < ambient_dim_; ++i) p[i] = Rat(x[i]) / Rat(t);
        if (contains(p, false)) total += 1;
        return;
      }
      for (Int v = lo[coord]; v <= hi[coord]; ++v) {
        x[coord] = v;
        count_rec(t, interior, coord + 1, lo, hi, x, total);
      }
      return;
    }
    if (coord == ambient_dim_ - 1) {
      Int a, b;
      if (last_coordinate_range(t, interior, x, lo[coord], hi[coord], a, b) && b >= a)
        total += b - a + 1;
      return;
    }
    for (Int v = lo[coord]; v <= hi[coord]; ++v) {
      x[coord] = v;
      count_rec(t, interior, coord + 1, lo, hi, x, total);
    }
  }

  std::optional<IntVec> lex_min_interior_point(const Int& t, const Int& scan_limit) const {
    IntVec lo, hi;
    bounding_box(t, lo, hi, scan_limit);
    for (int i = 0; i < ambient_dim_; ++i)
      if (hi[i] < lo[i]) return std::nullopt;
    IntVec x(ambient_dim_);
    if (lex_rec(t, 0, lo, hi, x)) return x;
    return std::nullopt;
  }

  bool lex_rec(const Int& t, int coord, const IntVec& lo, const IntVec& hi,
               IntVec& x) const {
    if (coord == ambient_dim_ - 1) {
      Int a, b;
      if (last_coordinate_range(t, true, x, lo[coord], hi[coord], a, b) && b >= a) {
        x[coord] = a;
        return true;
      }
      return false;
    }
    for (Int v = lo[coord]; v <= hi[coord]; ++v) {
      x[coord] = v;
      if (lex_rec(t, coord + 1, lo, hi, x)) return true;
    }
    return false;
  }

  int ambient_dim_ = 0;
  int dim_ = -1;
  std::string name_;
  std::vector<RatVec> vertices_;
  std::vector<FacetInequality> facets_;
  std::vector<HullEquation> equations_;
};

// The L-reflexive hexagon family P_L (odd L), or its rational dual P*_L.
inline Polytope hexagon_family(const Int& index, bool dual_polytope = false) {
  if (index < 1) throw Error("hexagon_family: index must be a positive odd integer");
  if (index % 2 == 0)
    throw EvenIndex("no L-reflexive polygon of even index");
  std::vector<RatVec> verts;
  auto push_pm = [&verts](const Rat& a, const Rat& b) {
    verts.push_back({a, b});
    verts.push_back({-a, -b});
  };
  if (dual_polytope) {
    Rat l{index};
    push_pm(Rat(1) / l, Rat(0));
    push_pm(Rat(2) / l, Rat(-1));
    push_pm(Rat(1) / l, Rat(-1));
  } else {
    push_pm(Rat(0), Rat(1));
    push_pm(Rat(index), Rat(2));
    push_pm(Rat(index), Rat(1));
  }
  std::string name = (dual_polytope ? "P*_" : "P_") + index.get_str();
  return Polytope::from_vertices(verts, name);
}

}  // namespace ehrhart
