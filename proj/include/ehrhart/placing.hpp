#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "ehrhart/int_matrix.hpp"

namespace ehrhart::detail {

// Beneath-beyond insertion over exact rational points. Produces the placing
// triangulation of the hull (maximal cells) and a simplicial decomposition
// of its boundary, all in terms of indices into the input point list.
//
// Points already inside the current hull at insertion time are skipped;
// points extending the affine span raise the dimension by coning.
class PlacingHull {
 public:
  struct Facet {
    std::vector<int> verts;  // sorted, size = dim
    RatVec normal;           // local coordinates; inside is normal . y <= offset
    Rat offset;
  };

  // points: ambient rational coordinates; order: insertion order (indices)
  PlacingHull(const std::vector<RatVec>& points, const std::vector<int>& order)
      : pts_(points) {
    for (int idx : order) insert(idx);
  }

  int dim() const { return dim_; }
  const std::vector<std::vector<int>>& cells() const { return cells_; }
  const std::vector<Facet>& boundary() const { return facets_; }
  const std::vector<int>& inserted() const { return inserted_; }

  // affine frame of the hull: base point index and direction-spanning indices
  int base_index() const { return base_; }
  const std::vector<int>& frame() const { return frame_; }

  // local coordinates (length dim) of an ambient point in the hull's frame;
  // returns false if the point is outside the affine span
  bool local_coords(const RatVec& p, RatVec& y) const {
    if (frame_.empty()) {
      y.clear();
      return p == pts_[base_];
    }
    std::vector<RatVec> dirs;
    for (int f : frame_) dirs.push_back(diff(pts_[f], pts_[base_]));
    return solve_linear(RatMatrix::from_columns(dirs), diff(p, pts_[base_]), y) &&
           check_span(dirs, diff(p, pts_[base_]), y);
  }

 private:
  static RatVec diff(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
  }

  static bool check_span(const std::vector<RatVec>& dirs, const RatVec& target,
                         const RatVec& y) {
    RatVec acc(target.size(), Rat(0));
    for (size_t j = 0; j < dirs.size(); ++j)
      for (size_t i = 0; i < acc.size(); ++i) acc[i] += y[j] * dirs[j][i];
    return acc == target;
  }

  void insert(int idx) {
    if (inserted_.empty()) {
      base_ = idx;
      inserted_.push_back(idx);
      cells_.push_back({idx});
      facets_.push_back(Facet{{}, {}, Rat(0)});  // the empty facet of a point
      return;
    }
    if (std::any_of(inserted_.begin(), inserted_.end(),
                    [&](int i) { return pts_[i] == pts_[idx]; }))
      return;  // duplicate coordinates
    RatVec y;
    if (!local_coords(pts_[idx], y)) {
      raise_dimension(idx);
      return;
    }
    local_[idx] = y;
    // visibility: strictly beyond the facet hyperplane
    std::vector<char> visible(facets_.size(), 0);
    bool outside = false;
    for (size_t f = 0; f < facets_.size(); ++f) {
      if (dot(facets_[f].normal, y) > facets_[f].offset) {
        visible[f] = 1;
        outside = true;
      }
    }
    inserted_.push_back(idx);
    if (!outside) return;  // inside (or on the boundary of) the current hull
    // new cells: cone the point over each visible facet
    for (size_t f = 0; f < facets_.size(); ++f) {
      if (!visible[f]) continue;
      std::vector<int> cell = facets_[f].verts;
      cell.push_back(idx);
      std::sort(cell.begin(), cell.end());
      cells_.push_back(std::move(cell));
    }
    // horizon ridges: shared by exactly one visible and one invisible facet
    std::map<std::vector<int>, std::pair<int, int>> ridge_count;  // (vis, invis)
    for (size_t f = 0; f < facets_.size(); ++f) {
      for (size_t drop = 0; drop < facets_[f].verts.size(); ++drop) {
        std::vector<int> ridge = facets_[f].verts;
        ridge.erase(ridge.begin() + drop);
        auto& c = ridge_count[ridge];
        (visible[f] ? c.first : c.second)++;
      }
      if (facets_[f].verts.empty()) {  // dim 1: ridges are the empty set
        auto& c = ridge_count[{}];
        (visible[f] ? c.first : c.second)++;
      }
    }
    std::vector<Facet> kept;
    for (size_t f = 0; f < facets_.size(); ++f)
      if (!visible[f]) kept.push_back(std::move(facets_[f]));
    facets_ = std::move(kept);
    for (const auto& [ridge, c] : ridge_count) {
      if (!(c.first >= 1 && c.second >= 1)) continue;
      std::vector<int> verts = ridge;
      verts.push_back(idx);
      std::sort(verts.begin(), verts.end());
      facets_.push_back(make_facet(std::move(verts)));
    }
  }

  void raise_dimension(int idx) {
    frame_.push_back(idx);
    ++dim_;
    // cone: every old cell gains the new vertex; old cells become boundary
    std::vector<std::vector<int>> old_cells = std::move(cells_);
    cells_.clear();
    std::vector<Facet> new_facets;
    for (const auto& c : old_cells) {
      std::vector<int> cell = c;
      cell.push_back(idx);
      std::sort(cell.begin(), cell.end());
      cells_.push_back(std::move(cell));
      if (dim_ >= 1) new_facets.push_back(Facet{c, {}, Rat(0)});
    }
    for (const auto& f : facets_) {
      std::vector<int> verts = f.verts;
      verts.push_back(idx);
      std::sort(verts.begin(), verts.end());
      new_facets.push_back(Facet{std::move(verts), {}, Rat(0)});
    }
    facets_ = std::move(new_facets);
    inserted_.push_back(idx);
    // local coordinates change with the frame: recompute everything
    local_.clear();
    for (int i : inserted_) {
      RatVec y;
      bool ok = local_coords(pts_[i], y);
      assert(ok);
      (void)ok;
      local_[i] = y;
    }
    interior_ref_.assign(dim_, Rat(0));
    RatVec yb = local_[base_];
    for (size_t j = 0; j < static_cast<size_t>(dim_); ++j) interior_ref_[j] += yb[j];
    for (int fidx : frame_)
      for (size_t j = 0; j < static_cast<size_t>(dim_); ++j)
        interior_ref_[j] += local_[fidx][j];
    for (auto& c : interior_ref_) c /= Rat(dim_ + 1);
    for (auto& f : facets_) f = make_facet(std::move(f.verts));
  }

  Facet make_facet(std::vector<int> verts) {
    assert(static_cast<int>(verts.size()) == dim_);
    // null space of the (dim-1) x dim difference matrix gives the normal
    RatMatrix a(verts.size() - 1, dim_);
    const RatVec& y0 = local_.at(verts[0]);
    for (size_t i = 1; i < verts.size(); ++i)
      for (int j = 0; j < dim_; ++j) a(i - 1, j) = local_.at(verts[i])[j] - y0[j];
    std::vector<RatVec> ns = null_space(a);
    assert(ns.size() == 1);
    RatVec n = ns[0];
    Rat off = dot(n, y0);
    if (dot(n, interior_ref_) > off) {
      for (auto& c : n) c = -c;
      off = -off;
    }
    assert(dot(n, interior_ref_) < off);
    return Facet{std::move(verts), std::move(n), std::move(off)};
  }

  static Rat dot(const RatVec& a, const RatVec& b) {
    Rat s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  }

  const std::vector<RatVec>& pts_;
  int dim_ = 0;
  int base_ = -1;
  std::vector<int> frame_;     // indices whose differences to base span the hull
  std::vector<int> inserted_;  // processed, deduplicated
  std::map<int, RatVec> local_;
  RatVec interior_ref_;  // a point in the hull's relative interior
  std::vector<std::vector<int>> cells_;
  std::vector<Facet> facets_;
};

}  // namespace ehrhart::detail
