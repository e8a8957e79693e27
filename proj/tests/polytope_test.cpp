#include <catch2/catch_amalgamated.hpp>

#include "ehrhart/polytope.hpp"

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

}  // namespace

TEST_CASE("segment [1/3, 2/3]") {
  Polytope p = make({{"1/3"}, {"2/3"}});
  CHECK(p.dim() == 1);
  CHECK(p.ambient_dim() == 1);
  CHECK(p.full_dimensional());
  CHECK(p.denominator() == 3);
  CHECK(p.vertices().size() == 2);
  CHECK_FALSE(p.is_lattice());
  CHECK(p.contains({Rat(1, 2)}));
  CHECK(p.contains({Rat(1, 3)}));
  CHECK_FALSE(p.contains({Rat(1, 3)}, true));
  CHECK_FALSE(p.contains({Rat(1, 4)}));
  // counts: t in 0..6 -> 1,0,1,2,1,2,3
  Int expected[] = {1, 0, 1, 2, 1, 2, 3};
  for (int t = 0; t <= 6; ++t) CHECK(p.lattice_point_count(Int(t)) == expected[t]);
  CHECK(p.lattice_point_count(Int(3), true) == 0);  // interior of [1,2] = (1,2)
  CHECK(p.lattice_point_count(Int(6), true) == 1);
  auto idl = p.smallest_interior_dilate();
  CHECK(idl.ell == 2);  // 2P = [2/3, 4/3] contains 1 in its interior
  CHECK(idl.witness == IntVec{Int(1)});
}

TEST_CASE("unit square scaled by 2") {
  Polytope p = make({{"1", "1"}, {"-1", "1"}, {"-1", "-1"}, {"1", "-1"}});
  CHECK(p.dim() == 2);
  CHECK(p.denominator() == 1);
  CHECK(p.is_lattice());
  CHECK(p.facets().size() == 4);
  CHECK(p.vertices().size() == 4);
  CHECK(p.lattice_point_count(Int(1)) == 9);
  CHECK(p.lattice_point_count(Int(2)) == 25);
  CHECK(p.lattice_point_count(Int(1), true) == 1);
  CHECK(p.lattice_point_count(Int(2), true) == 9);
  CHECK(p.reflexive_index().value_or(Int(-1)) == 1);
  Polytope d = p.dual();
  CHECK(d.vertices().size() == 4);  // the cross-polytope conv{(±1,0),(0,±1)}
  CHECK(d.is_lattice());
  CHECK(d.lattice_point_count(Int(1)) == 5);
}

TEST_CASE("non-extreme input points are dropped") {
  Polytope p = make({{"0", "0"}, {"2", "0"}, {"0", "2"}, {"1", "1"}, {"1", "0"}});
  CHECK(p.vertices().size() == 3);  // (1,1) is on an edge, (1,0) inside an edge
  CHECK(p.dim() == 2);
  CHECK(p.lattice_point_count(Int(1)) == 6);
}

TEST_CASE("duplicated points are deduplicated") {
  Polytope p = make({{"0"}, {"1"}, {"0"}, {"1"}});
  CHECK(p.vertices().size() == 2);
  CHECK(p.lattice_point_count(Int(5)) == 6);
}

TEST_CASE("single point polytope") {
  Polytope p = make({{"1/2", "3"}});
  CHECK(p.dim() == 0);
  CHECK(p.denominator() == 2);
  CHECK(p.contains({Rat(1, 2), Rat(3)}));
  CHECK_FALSE(p.contains({Rat(1, 2), Rat(2)}));
  CHECK(p.lattice_point_count(Int(1)) == 0);
  CHECK(p.lattice_point_count(Int(2)) == 1);  // 2P = {(1,6)}
  CHECK(p.lattice_point_count(Int(2), true) == 0);
}

TEST_CASE("lower-dimensional polytope in the plane") {
  // diagonal segment from (0,0) to (2,2)
  Polytope p = make({{"0", "0"}, {"2", "2"}});
  CHECK(p.dim() == 1);
  CHECK(p.ambient_dim() == 2);
  CHECK_FALSE(p.full_dimensional());
  CHECK(p.equations().size() == 1);
  CHECK(p.contains({Rat(1), Rat(1)}));
  CHECK_FALSE(p.contains({Rat(1), Rat(0)}));
  CHECK_FALSE(p.contains({Rat(1), Rat(1)}, true));  // strict needs full dim
  CHECK(p.lattice_point_count(Int(1)) == 3);
  CHECK(p.lattice_point_count(Int(3)) == 7);
  CHECK(p.lattice_point_count(Int(1), true) == 0);
  CHECK_THROWS_AS(p.smallest_interior_dilate(), DimensionMismatch);
}

TEST_CASE("triangle with rational vertex") {
  Polytope p = make({{"0", "0"}, {"1", "0"}, {"0", "1/2"}});
  CHECK(p.denominator() == 2);
  CHECK(p.dim() == 2);
  CHECK(p.facets().size() == 3);
  CHECK(p.lattice_point_count(Int(1)) == 2);
  CHECK(p.lattice_point_count(Int(2)) == 4);
  CHECK(p.lattice_point_count(Int(4)) == 9);
}

TEST_CASE("3-dimensional cube and simplex") {
  Polytope cube = make({{"0", "0", "0"}, {"1", "0", "0"}, {"0", "1", "0"},
                        {"0", "0", "1"}, {"1", "1", "0"}, {"1", "0", "1"},
                        {"0", "1", "1"}, {"1", "1", "1"}});
  CHECK(cube.dim() == 3);
  CHECK(cube.facets().size() == 6);
  CHECK(cube.lattice_point_count(Int(2)) == 27);
  CHECK(cube.lattice_point_count(Int(2), true) == 1);

  Polytope simplex = make({{"0", "0", "0"}, {"1", "0", "0"}, {"0", "1", "0"},
                           {"0", "0", "1"}});
  CHECK(simplex.dim() == 3);
  CHECK(simplex.lattice_point_count(Int(1)) == 4);
  CHECK(simplex.lattice_point_count(Int(2)) == 10);
  CHECK(simplex.lattice_point_count(Int(3)) == 20);
}

TEST_CASE("facet invariants") {
  Polytope p = make({{"1/3", "0"}, {"-1/3", "0"}, {"0", "1/2"}, {"0", "-1/2"}});
  CHECK(p.facets().size() == 4);
  for (const auto& f : p.facets()) {
    // canonical form: integer entries with overall gcd 1
    Int g = f.offset;
    for (const auto& c : f.normal) g = gcd(g, c);
    CHECK(abs(g) == 1);
    // every vertex satisfies the inequality; >= dim vertices support each facet
    int active = 0;
    for (const auto& v : p.vertices()) {
      Rat lhs = detail::dot_ir(f.normal, v);
      CHECK(lhs <= Rat(f.offset));
      if (lhs == Rat(f.offset)) ++active;
    }
    CHECK(active >= p.dim());
  }
}

TEST_CASE("dual of dual returns the original") {
  Polytope p = make({{"1/3", "0"}, {"-1/3", "0"}, {"0", "1/2"}, {"0", "-1/2"}});
  Polytope dd = p.dual().dual();
  auto sorted = [](std::vector<RatVec> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(sorted(dd.vertices()) == sorted(p.vertices()));
}

TEST_CASE("dual requires interior origin") {
  Polytope p = make({{"0", "0"}, {"1", "0"}, {"0", "1"}});
  CHECK_THROWS_AS(p.dual(), OriginNotInterior);
}

TEST_CASE("reflexivity of higher index") {
  // P_L from the hexagon family is L-reflexive for odd L
  for (long l : {1L, 3L, 5L}) {
    Polytope p = hexagon_family(Int(l));
    auto index = p.reflexive_index();
    REQUIRE(index.has_value());
    CHECK(*index == l);
  }
  CHECK_THROWS_AS(hexagon_family(Int(2)), EvenIndex);
  CHECK_THROWS_AS(hexagon_family(Int(0)), Error);

  // the standard simplex is not reflexive (origin not interior)
  Polytope s = make({{"0", "0"}, {"1", "0"}, {"0", "1"}});
  CHECK_FALSE(s.reflexive_index().has_value());
  // 2 * square has non-primitive vertices
  Polytope sq2 = make({{"2", "2"}, {"-2", "2"}, {"-2", "-2"}, {"2", "-2"}});
  CHECK_FALSE(sq2.reflexive_index().has_value());
  // rational polytopes are never L-reflexive
  CHECK_FALSE(hexagon_family(Int(3), true).reflexive_index().has_value());
}

TEST_CASE("hexagon family geometry") {
  Polytope p = hexagon_family(Int(3));
  CHECK(p.name() == "P_3");
  CHECK(p.vertices().size() == 6);
  CHECK(p.denominator() == 1);
  Polytope d = hexagon_family(Int(3), true);
  CHECK(d.name() == "P*_3");
  CHECK(d.denominator() == 3);
  // P*_L is the dual of P_L
  auto sorted = [](std::vector<RatVec> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(sorted(p.dual().vertices()) == sorted(d.vertices()));
}

TEST_CASE("scan cap raises") {
  Polytope p = make({{"100", "100"}, {"-100", "100"}, {"-100", "-100"}, {"100", "-100"}});
  CHECK_THROWS_AS(p.lattice_point_count(Int(1000), false, Int(1000)), ScanLimitExceeded);
}

TEST_CASE("malformed vertex input") {
  CHECK_THROWS_AS(Polytope::from_vertices({}), EmptyInput);
  CHECK_THROWS_AS(make({{"1", "2"}, {"1"}}), DimensionMismatch);
}

TEST_CASE("dilate scales vertices") {
  Polytope p = make({{"1/3"}, {"2/3"}});
  Polytope q = p.dilate(Int(3));
  CHECK(q.is_lattice());
  CHECK(q.lattice_point_count(Int(1)) == p.lattice_point_count(Int(3)));
}
