#include <catch2/catch_amalgamated.hpp>

#include "ehrhart/hstar.hpp"

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

std::vector<IntPolynomial> all_engines(const Polytope& p) {
  return {hstar_by_counting(p).hstar, hstar_betke_mcmullen(p).hstar,
          hstar_stapledon(p).hstar};
}

}  // namespace

TEST_CASE("segment [1/3, 2/3] by all engines") {
  Polytope p = make({{"1/3"}, {"2/3"}});
  for (const auto& h : all_engines(p)) CHECK(h.to_string() == "1 + z^2 + z^4");
  HStarResult r = hstar_by_counting(p);
  CHECK(r.q == 3);
  CHECK(r.d == 1);
  CHECK(r.s == 4);
}

TEST_CASE("segment with an explicit interior ray") {
  Polytope p = make({{"1/3"}, {"2/3"}});
  InteriorRay ray{{Int(2)}, Int(4)};  // 2/4 = 1/2 interior
  CHECK(hstar_stapledon(p, ray).hstar.to_string() == "1 + z^2 + z^4");
  InteriorRay bad{{Int(2)}, Int(6)};  // 1/3 is a vertex, not interior
  CHECK_THROWS_AS(hstar_stapledon(p, bad), RayNotInterior);
  InteriorRay neg{{Int(1)}, Int(-2)};
  CHECK_THROWS_AS(hstar_stapledon(p, neg), RayNotInterior);
}

TEST_CASE("lattice goldens") {
  Polytope sq = make({{"1", "1"}, {"-1", "1"}, {"-1", "-1"}, {"1", "-1"}});
  for (const auto& h : all_engines(sq)) CHECK(h.to_string() == "1 + 6z + z^2");

  Polytope tri = make({{"0", "0"}, {"2", "0"}, {"0", "2"}});
  for (const auto& h : all_engines(tri)) CHECK(h.to_string() == "1 + 3z");

  Polytope simplex = make({{"0", "0", "0"}, {"1", "0", "0"}, {"0", "1", "0"},
                           {"0", "0", "1"}});
  for (const auto& h : all_engines(simplex)) CHECK(h.to_string() == "1");
}

TEST_CASE("rational cross-polytope") {
  Polytope p = make({{"1/3", "0"}, {"-1/3", "0"}, {"0", "1/2"}, {"0", "-1/2"}});
  IntPolynomial expect({Int(1), Int(1), Int(3), Int(5), Int(7), Int(11), Int(12),
                        Int(16), Int(16), Int(16), Int(16), Int(12), Int(11), Int(7),
                        Int(5), Int(3), Int(1), Int(1)});
  for (const auto& h : all_engines(p)) CHECK(h == expect);
  CHECK(hstar_by_counting(p).q == 6);
}

TEST_CASE("denominator override") {
  Polytope p = make({{"0"}, {"1"}});
  CHECK(hstar_by_counting(p).hstar.to_string() == "1");
  // at q = 2 the same segment has hstar (1 - z^2)^2 / (1 - z)^2 ... = (1+z)^2? no:
  // Ehr = 1/(1-z)^2 = (1+z)^2 / (1-z^2)^2
  CHECK(hstar_by_counting(p, Int(2)).hstar.to_string() == "1 + 2z + z^2");
  CHECK(hstar_betke_mcmullen(p, std::nullopt, Int(2)).hstar.to_string() ==
        "1 + 2z + z^2");
  CHECK(hstar_stapledon(p, std::nullopt, std::nullopt, Int(2)).hstar.to_string() ==
        "1 + 2z + z^2");
  CHECK_THROWS_AS(hstar_by_counting(make({{"1/3"}, {"2/3"}}), Int(2)),
                  InvalidDenominatorOverride);
  CHECK_THROWS_AS(hstar_by_counting(p, Int(0)), InvalidDenominatorOverride);
}

TEST_CASE("stapledon requires full dimension") {
  Polytope p = make({{"0", "0"}, {"2", "2"}});
  CHECK_THROWS_AS(hstar_stapledon(p), DimensionMismatch);
  // counting and Betke-McMullen still work
  CHECK(hstar_by_counting(p).hstar.to_string() == "1 + z");
  CHECK(hstar_betke_mcmullen(p).hstar.to_string() == "1 + z");
}

TEST_CASE("quasipolynomial of the segment") {
  Polytope p = make({{"1/3"}, {"2/3"}});
  QuasiPolynomial qp = ehrhart_quasipolynomial(p);
  CHECK(qp.period == 3);
  REQUIRE(qp.constituents.size() == 3);
  for (const auto& c : qp.constituents) {
    CHECK(c.degree() == 1);
    CHECK(c.coeff(1) == Rat(1, 3));  // leading coefficient = vol(P)
  }
  for (long t = 0; t <= 12; ++t)
    CHECK(qp.eval(Int(t)) == Rat(dilate_count(p, Int(t))));
}

TEST_CASE("quasipolynomial of a lattice polygon is a polynomial") {
  Polytope sq = make({{"1", "1"}, {"-1", "1"}, {"-1", "-1"}, {"1", "-1"}});
  QuasiPolynomial qp = ehrhart_quasipolynomial(sq);
  CHECK(qp.period == 1);
  // L(t) = (2t+1)^2
  CHECK(qp.constituents[0].coeff(0) == 1);
  CHECK(qp.constituents[0].coeff(1) == 4);
  CHECK(qp.constituents[0].coeff(2) == 4);
}

TEST_CASE("ab decomposition of the lattice triangle") {
  Polytope tri = make({{"0", "0"}, {"2", "0"}, {"0", "2"}});
  AbDecomposition dec = ab_decomposition(tri);
  CHECK(dec.h.hstar.to_string() == "1 + 3z");
  CHECK(dec.ell == 2);
  CHECK(dec.hbar.to_string() == "1 + 4z + 3z^2");
  CHECK(dec.a.to_string() == "1 + 4z + z^2");
  CHECK(dec.b.to_string() == "2");
  CHECK(dec.f == 2);
}

TEST_CASE("ab decomposition of the segment") {
  Polytope p = make({{"1/3"}, {"2/3"}});
  AbDecomposition dec = ab_decomposition(p);
  // s = 4, n = q(d+1) = 6, ell = 2
  CHECK(dec.ell == 2);
  CHECK(dec.hbar.to_string() == "1 + z + z^2 + z^3 + z^4 + z^5");
  CHECK(dec.a + dec.b * IntPolynomial::monomial(2) == dec.hbar);
  CHECK(dec.a.palindromic(5));
  CHECK(dec.b.palindromic(3));
  CHECK(dec.a.nonnegative());
  CHECK(dec.b.nonnegative());
}

TEST_CASE("ab with q override keeps ell") {
  Polytope p = make({{"1/3"}, {"2/3"}});
  AbDecomposition dec = ab_decomposition(p, Int(6));
  CHECK(dec.ell == 2);
  CHECK(dec.a + dec.b * IntPolynomial::monomial(2) == dec.hbar);
}

TEST_CASE("palindromic hstar has b = 0") {
  Polytope p = hexagon_family(Int(3), true);
  AbDecomposition dec = ab_decomposition(p);
  CHECK(dec.b.is_zero());
  CHECK(dec.a == dec.h.hstar);
  CHECK(dec.ell == 1);
}

TEST_CASE("coefficient inequalities on real polytopes") {
  for (const Polytope& p :
       {make({{"1/3"}, {"2/3"}}), hexagon_family(Int(5), true),
        make({{"1", "1"}, {"-1", "1"}, {"-1", "-1"}, {"1", "-1"}})}) {
    InequalityReport r = check_inequalities(hstar_by_counting(p));
    CHECK(r.passed);
    CHECK(r.violations.empty());
  }
}

TEST_CASE("coefficient inequalities flag an artificial violation") {
  // (1, 0, 0, 0, 0, 2) pretends to be an hstar with q=2, d=2, s=5:
  // family 1 at i=0 reads h0 + h1 >= h5, i.e. 1 >= 2, false
  HStarResult fake;
  fake.q = 2;
  fake.d = 2;
  fake.hstar = IntPolynomial({Int(1), Int(0), Int(0), Int(0), Int(0), Int(2)});
  fake.s = 5;
  InequalityReport r = check_inequalities(fake);
  CHECK_FALSE(r.passed);
  REQUIRE_FALSE(r.violations.empty());
  CHECK(r.violations[0].family == 1);
  CHECK(r.violations[0].index == 0);
  CHECK(r.violations[0].lhs == 1);
  CHECK(r.violations[0].rhs == 2);
}

TEST_CASE("duality check in both directions") {
  DualityCheck yes = palindromic_dual_check(hexagon_family(Int(3), true));
  CHECK(yes.is_dual_lattice);
  CHECK(yes.b_is_zero);
  CHECK(yes.hstar_palindromic);

  // segment [-1/3, 2/3]: dual is [-3/2, 3], not a lattice polytope
  DualityCheck no = palindromic_dual_check(make({{"-1/3"}, {"2/3"}}));
  CHECK_FALSE(no.is_dual_lattice);
  CHECK_FALSE(no.b_is_zero);
  CHECK_FALSE(no.hstar_palindromic);

  CHECK_THROWS_AS(palindromic_dual_check(make({{"1/3"}, {"2/3"}})),
                  OriginNotInterior);
}

TEST_CASE("monotonicity anchor") {
  // [0,1] inside [-1,1] at q = 3: coefficient-wise hstar monotonicity
  Polytope small = make({{"0"}, {"1"}});
  Polytope big = make({{"-1"}, {"1"}});
  IntPolynomial hs = hstar_by_counting(small, Int(3)).hstar;
  IntPolynomial hb = hstar_by_counting(big, Int(3)).hstar;
  // [0,1] at q=3: hstar = (1 + z + z^2)^2
  CHECK(hs.to_string() == "1 + 2z + 3z^2 + 2z^3 + z^4");
  for (long i = 0; i <= hb.degree(); ++i) CHECK(hs.coeff(i) <= hb.coeff(i));
}

TEST_CASE("reciprocity on interior counts") {
  // L_int(t) = (-1)^d L(-t): check against the quasipolynomial constituents
  for (const Polytope& p :
       {make({{"1/3"}, {"2/3"}}), make({{"1", "1"}, {"-1", "1"}, {"-1", "-1"}, {"1", "-1"}}),
        hexagon_family(Int(3), true)}) {
    QuasiPolynomial qp = ehrhart_quasipolynomial(p);
    int d = p.dim();
    for (long t = 1; t <= 8; ++t) {
      Rat lhs(p.lattice_point_count(Int(t), true));
      Rat rhs = qp.eval(Int(-t));
      if (d % 2 == 1) rhs = -rhs;
      CHECK(lhs == rhs);
    }
  }
}
