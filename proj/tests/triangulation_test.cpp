#include <catch2/catch_amalgamated.hpp>

#include "ehrhart/triangulation.hpp"

using namespace ehrhart;

namespace {

Polytope make(const std::vector<std::vector<std::string>>& rows) {
  std::vector<RatVec> pts;
  for (const auto& row : rows) {
    RatVec v;
    for (const auto& s : row) v.push_back(parse_rational(s));
    pts.push_back(std::move(v));
  }
  return Polytope::from_vertices(pts);
}

// exact volume partition check: cell volumes sum to the host volume,
// via the determinant of the difference matrix
Rat simplex_volume(const Polytope& p, const Simplex& s) {
  int d = s.dim();
  detail::RatMatrix m(d, d);
  const RatVec& v0 = p.vertices()[s.vertex_ids[0]];
  for (int j = 1; j <= d; ++j)
    for (int i = 0; i < d; ++i)
      m(i, j - 1) = p.vertices()[s.vertex_ids[j]][i] - v0[i];
  Rat det = detail::determinant(m);
  if (det < 0) det = -det;
  Int f(1);
  for (int i = 2; i <= d; ++i) f *= i;
  return det / Rat(f);
}

}  // namespace

TEST_CASE("placing triangulation of a segment") {
  Polytope p = make({{"1/3"}, {"2/3"}});
  Triangulation t = placing_triangulation(p);
  CHECK(t.kind() == TriangulationKind::full);
  CHECK(t.maximal_cells().size() == 1);
  CHECK(t.faces().size() == 4);  // empty, two vertices, one edge
  CHECK(t.denominator() == 3);
  CHECK(t.has_face(Simplex{}));
  CHECK(t.has_face(Simplex({0, 1})));
  CHECK_FALSE(t.has_face(Simplex({0, 2})));

  // h-polynomials: D = 1; empty face gets (1-z) + 2z + ... : 1 + z over cofaces
  CHECK(t.h_polynomial(Simplex{}).to_string() == "1");
  CHECK(t.h_polynomial(Simplex({0})).to_string() == "1");
  CHECK(t.h_polynomial(Simplex({0, 1})).to_string() == "1");
  CHECK_THROWS_AS(t.h_polynomial(Simplex({5})), FaceNotInTriangulation);
}

TEST_CASE("placing triangulation of the square") {
  Polytope p = make({{"1", "1"}, {"-1", "1"}, {"-1", "-1"}, {"1", "-1"}});
  Triangulation t = placing_triangulation(p);
  CHECK(t.maximal_cells().size() == 2);
  for (const auto& c : t.maximal_cells()) CHECK(c.dim() == 2);
  Rat vol(0);
  for (const auto& c : t.maximal_cells()) vol += simplex_volume(p, c);
  CHECK(vol == Rat(4));
  // h(empty,1) = number of maximal cells
  CHECK(t.h_polynomial(Simplex{}).eval_at_one() == 2);
}

TEST_CASE("boundary triangulation of the square") {
  Polytope p = make({{"1", "1"}, {"-1", "1"}, {"-1", "-1"}, {"1", "-1"}});
  Triangulation t = boundary_triangulation(p);
  CHECK(t.kind() == TriangulationKind::boundary);
  CHECK(t.maximal_cells().size() == 4);  // four edges
  // faces: empty + 4 vertices + 4 edges
  CHECK(t.faces().size() == 9);
  // D = 1: h(empty) = sum over cells z + vertices z^0(1-z) ... = 1 + 2z + z^2?
  // f-vector (4 vertices, 4 edges): h = (1-z)^2 + 4 z^0... compute: the
  // boundary of a square is a 4-cycle, h-vector (1, 2, 1)
  CHECK(t.h_polynomial(Simplex{}).to_string() == "1 + 2z + z^2");
  CHECK(t.h_polynomial(Simplex({0})).to_string() == "1 + z");
  CHECK(t.h_polynomial(Simplex({0, 1})).to_string() == "1");
  CHECK(t.h_polynomial(Simplex{}).eval_at_one() == 4);
}

TEST_CASE("boundary triangulation of the hexagon") {
  Polytope p = hexagon_family(Int(3), true);
  Triangulation t = boundary_triangulation(p);
  CHECK(t.maximal_cells().size() == 6);
  CHECK(t.faces().size() == 13);  // empty + 6 + 6
  CHECK(t.h_polynomial(Simplex{}).to_string() == "1 + 4z + z^2");
  for (const auto& f : t.faces()) {
    if (f.dim() == 0) CHECK(t.h_polynomial(f).to_string() == "1 + z");
    if (f.dim() == 1) CHECK(t.h_polynomial(f).to_string() == "1");
  }
}

TEST_CASE("face closure and ordering") {
  Polytope p = make({{"0", "0"}, {"2", "0"}, {"0", "2"}});
  Triangulation t = placing_triangulation(p);
  auto faces = t.faces_by_dimension();
  CHECK(faces.front().dim() == -1);
  for (size_t i = 1; i < faces.size(); ++i) CHECK(faces[i - 1].dim() <= faces[i].dim());
  // every subset of every face is present
  for (const auto& f : t.faces())
    for (size_t mask = 0; mask < (size_t{1} << f.vertex_ids.size()); ++mask) {
      std::vector<int> ids;
      for (size_t i = 0; i < f.vertex_ids.size(); ++i)
        if (mask & (size_t{1} << i)) ids.push_back(f.vertex_ids[i]);
      CHECK(t.has_face(Simplex(std::move(ids))));
    }
}

TEST_CASE("placing triangulation volume partition in 3d") {
  Polytope cube = make({{"0", "0", "0"}, {"1", "0", "0"}, {"0", "1", "0"},
                        {"0", "0", "1"}, {"1", "1", "0"}, {"1", "0", "1"},
                        {"0", "1", "1"}, {"1", "1", "1"}});
  Triangulation t = placing_triangulation(cube);
  Rat vol(0);
  for (const auto& c : t.maximal_cells()) {
    CHECK(c.dim() == 3);
    vol += simplex_volume(cube, c);
  }
  CHECK(vol == Rat(1));

  Triangulation bt = boundary_triangulation(cube);
  CHECK(bt.maximal_cells().size() == 12);  // 6 square facets, 2 triangles each
  // h(empty) of a simplicial 2-sphere with 8 vertices and 12 facets
  IntPolynomial h = bt.h_polynomial(Simplex{});
  CHECK(h.eval_at_one() == 12);
  CHECK(h.coeff(0) == 1);
  // Dehn-Sommerville: palindromic in window 3
  CHECK(h.palindromic(3));
}

TEST_CASE("insertion order changes cells but not coverage") {
  Polytope p = make({{"1", "1"}, {"-1", "1"}, {"-1", "-1"}, {"1", "-1"}});
  Triangulation t1 = placing_triangulation(p, {0, 1, 2, 3});
  Triangulation t2 = placing_triangulation(p, {2, 3, 0, 1});
  Rat v1(0), v2(0);
  for (const auto& c : t1.maximal_cells()) v1 += simplex_volume(p, c);
  for (const auto& c : t2.maximal_cells()) v2 += simplex_volume(p, c);
  CHECK(v1 == v2);
  CHECK(t1.h_polynomial(Simplex{}) == t2.h_polynomial(Simplex{}));
}

TEST_CASE("boundary triangulation rejects lower-dimensional hosts") {
  Polytope p = make({{"0", "0"}, {"2", "2"}});
  CHECK_THROWS_AS(boundary_triangulation(p), DimensionMismatch);
}
