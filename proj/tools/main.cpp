// Command-line front end: parse polytope files, dispatch computations,
// emit text/JSON results, run the verification suite.
//
// Exit codes: 0 success, 1 malformed input, 2 unmet mathematical
// precondition, 3 engine disagreement, 4 scan cap exceeded.

#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "ehrhart/ehrhart.hpp"
#include "ehrhart/io.hpp"

namespace {

using namespace ehrhart;
using nlohmann::json;

struct Options {
  std::string input;
  std::string method = "all";
  std::string format = "text";
  std::optional<long> q_override;
  std::optional<std::string> ray;
  std::optional<unsigned long> seed;
  long t = 1;
  bool interior = false;
  long index = 1;
  bool dual_flag = false;
};

std::optional<Int> q_of(const Options& o) {
  if (!o.q_override) return std::nullopt;
  return Int(*o.q_override);
}

InteriorRay parse_ray(const std::string& spec, int d) {
  auto semi = spec.find(';');
  if (semi == std::string::npos)
    throw ParseError("ray must be \"a1,...,ad;ell\"");
  InteriorRay ray;
  std::string coords = spec.substr(0, semi);
  size_t pos = 0;
  while (pos <= coords.size()) {
    size_t comma = coords.find(',', pos);
    std::string tok = coords.substr(pos, comma == std::string::npos ? std::string::npos
                                                                    : comma - pos);
    ray.point.push_back(parse_integer(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  ray.ell = parse_integer(spec.substr(semi + 1));
  if (static_cast<int>(ray.point.size()) != d)
    throw ParseError("ray has wrong dimension");
  if (ray.ell <= 0) throw ParseError("ray height must be positive");
  return ray;
}

std::vector<int> insertion_order(const Polytope& p, const Options& o) {
  std::vector<int> order(p.vertices().size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  if (o.seed) {
    std::mt19937_64 rng(*o.seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  return order;
}

Polytope load_polytope(const Options& o) {
  return io::polytope_from_json(io::load_json_file(o.input));
}

std::vector<HStarResult> compute_hstars(const Polytope& p, const Options& o) {
  std::vector<HStarResult> out;
  bool all = o.method == "all";
  if (all || o.method == "count") out.push_back(hstar_by_counting(p, q_of(o)));
  if (all || o.method == "bm")
    out.push_back(hstar_betke_mcmullen(p, placing_triangulation(p, insertion_order(p, o)),
                                       q_of(o)));
  if (all || o.method == "stapledon") {
    std::optional<InteriorRay> ray;
    if (o.ray) ray = parse_ray(*o.ray, p.ambient_dim());
    out.push_back(hstar_stapledon(p, ray, std::nullopt, q_of(o)));
  }
  if (out.empty()) throw ParseError("unknown method: " + o.method);
  return out;
}

int cmd_hstar(const Options& o) {
  Polytope p = load_polytope(o);
  std::vector<HStarResult> results = compute_hstars(p, o);
  for (size_t i = 1; i < results.size(); ++i)
    if (!(results[i].hstar == results[0].hstar)) {
      std::cerr << "engine disagreement: " << to_string(results[0].method) << " gives "
                << results[0].hstar.to_string() << " but " << to_string(results[i].method)
                << " gives " << results[i].hstar.to_string() << "\n";
      return 3;
    }
  const HStarResult& h = results.back();
  if (o.format == "json") {
    AbDecomposition dec = ab_decomposition(p, q_of(o));
    std::cout << io::result_document(h, dec, check_inequalities(h)).dump(2) << "\n";
  } else {
    for (const auto& r : results)
      std::cout << to_string(r.method) << ": h*(P;z) = " << r.hstar.to_string() << "\n";
    std::cout << "q = " << h.q << ", d = " << h.d << ", s = " << h.s << "\n";
  }
  return 0;
}

int cmd_ab(const Options& o) {
  Polytope p = load_polytope(o);
  AbDecomposition dec = ab_decomposition(p, q_of(o));
  if (o.format == "json") {
    std::cout << io::result_document(dec.h, dec, check_inequalities(dec.h)).dump(2)
              << "\n";
  } else {
    std::cout << "h*   = " << dec.h.hstar.to_string() << "\n"
              << "hbar = " << dec.hbar.to_string() << "\n"
              << "a    = " << dec.a.to_string() << "\n"
              << "b    = " << dec.b.to_string() << "\n"
              << "ell  = " << dec.ell << "\n";
  }
  return 0;
}

int cmd_ineq(const Options& o) {
  Polytope p = load_polytope(o);
  HStarResult h = hstar_by_counting(p, q_of(o));
  InequalityReport report = check_inequalities(h);
  if (o.format == "json") {
    std::cout << io::report_to_json(report).dump(2) << "\n";
  } else {
    std::cout << (report.passed ? "all inequalities hold" : "violations found") << "\n";
    for (const auto& v : report.violations)
      std::cout << "family " << v.family << " index " << v.index << ": " << v.lhs
                << " < " << v.rhs << "\n";
  }
  return 0;
}

int cmd_dual(const Options& o) {
  Polytope p = load_polytope(o);
  DualityCheck check = palindromic_dual_check(p);
  json doc{{"dual", io::polytope_to_json(p.dual())},
           {"is_dual_lattice", check.is_dual_lattice},
           {"b_is_zero", check.b_is_zero},
           {"hstar_palindromic", check.hstar_palindromic}};
  if (o.format == "json")
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << "dual lattice: " << (check.is_dual_lattice ? "yes" : "no")
              << ", b = 0: " << (check.b_is_zero ? "yes" : "no")
              << ", h* palindromic: " << (check.hstar_palindromic ? "yes" : "no") << "\n";
  return 0;
}

int cmd_reflexive(const Options& o) {
  Polytope p = load_polytope(o);
  auto index = p.reflexive_index();
  if (index)
    std::cout << "L-reflexive with L = " << *index << "\n";
  else
    std::cout << "not L-reflexive for any L\n";
  return 0;
}

int cmd_count(const Options& o) {
  Polytope p = load_polytope(o);
  if (o.t < 0) throw ParseError("dilation factor must be nonnegative");
  std::cout << p.lattice_point_count(Int(o.t), o.interior) << "\n";
  return 0;
}

int cmd_quasi(const Options& o) {
  Polytope p = load_polytope(o);
  QuasiPolynomial qp = ehrhart_quasipolynomial(p);
  if (o.format == "json") {
    json constituents = json::array();
    for (const auto& c : qp.constituents) {
      json coeffs = json::array();
      for (const auto& r : c.coeffs()) coeffs.push_back(to_string(r));
      constituents.push_back(std::move(coeffs));
    }
    std::cout << json{{"period", qp.period.get_si()}, {"constituents", constituents}}.dump(2)
              << "\n";
  } else {
    std::cout << "period " << qp.period << "\n";
    for (size_t r = 0; r < qp.constituents.size(); ++r)
      std::cout << "t = " << r << " (mod " << qp.period
                << "): L(t) = " << qp.constituents[r].to_string() << "\n";
  }
  return 0;
}

int cmd_boxpoly(const Options& o) {
  GeneratorSet w = io::generators_from_json(io::load_json_file(o.input));
  for (const auto& g : w.generators)
    if (g.back() <= 0) throw Error("generators must have positive last coordinate");
  std::cout << box_polynomial(w).to_string() << "\n";
  return 0;
}

int cmd_hexagon(const Options& o) {
  Polytope p = hexagon_family(Int(o.index), o.dual_flag);
  std::cout << io::polytope_to_json(p).dump(2) << "\n";
  return 0;
}

bool report_check(const std::string& name, bool ok) {
  std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
  return ok;
}

// Verification battery for one polytope: cross-method equality, box
// symmetries, coefficient inequalities, a/b-decomposition invariants.
int cmd_check(const Options& o) {
  Polytope p = load_polytope(o);
  bool ok = true;

  HStarResult hc = hstar_by_counting(p, q_of(o));
  HStarResult hb = hstar_betke_mcmullen(p, std::nullopt, q_of(o));
  ok &= report_check("cross-method h* equality (count vs betke-mcmullen)",
                     hc.hstar == hb.hstar);
  if (p.full_dimensional()) {
    HStarResult hs = hstar_stapledon(p, std::nullopt, std::nullopt, q_of(o));
    ok &= report_check("cross-method h* equality (count vs stapledon)",
                       hc.hstar == hs.hstar);

    Triangulation tri = boundary_triangulation(p);
    auto idl = p.smallest_interior_dilate();
    IntVec ray = idl.witness;
    ray.push_back(idl.ell);
    bool sym = true;
    unsigned long qn = hc.q.get_ui();
    for (const auto& face : tri.faces()) {
      IntPolynomial box = face_box_polynomial(face, p, hc.q);
      sym &= box.is_zero() || box.palindromic(qn * (face.dim() + 1));
      GeneratorSet primed;
      if (!face.empty()) primed = ray_generators(face, p, hc.q);
      primed.ambient_dim = ray.size();
      primed.generators.push_back(ray);
      IntPolynomial boxp = box_polynomial(primed);
      sym &= boxp.is_zero() ||
             boxp.palindromic(qn * (face.dim() + 1) + idl.ell.get_ui());
    }
    ok &= report_check("box polynomial symmetries on the boundary triangulation", sym);

    AbDecomposition dec = ab_decomposition(p, q_of(o));
    long n = static_cast<long>(dec.h.q.get_ui()) * (dec.h.d + 1);
    bool ab_ok = dec.a + dec.b * IntPolynomial::monomial(dec.ell.get_ui()) == dec.hbar &&
                 dec.a.palindromic(n - 1) &&
                 dec.b.palindromic(n - 1 - dec.ell.get_si()) && dec.a.nonnegative() &&
                 dec.b.nonnegative();
    ok &= report_check("a/b-decomposition invariants", ab_ok);
  }
  ok &= report_check("coefficient inequalities", check_inequalities(hc).passed);
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Ehrhart h*-polynomial decompositions for rational polytopes"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* cmd, bool with_file = true) {
    if (with_file) cmd->add_option("input", o.input, "polytope JSON file")->required();
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--q", o.q_override, "denominator override (multiple of q)");
    cmd->add_option("--seed", o.seed, "seeded random triangulation insertion order");
  };

  auto* hstar_cmd = app.add_subcommand("hstar", "h*-polynomial by one or all engines");
  add_common(hstar_cmd);
  hstar_cmd->add_option("--method", o.method, "count | bm | stapledon | all")
      ->check(CLI::IsMember({"count", "bm", "stapledon", "all"}));
  hstar_cmd->add_option("--ray", o.ray, "interior ray \"a1,...,ad;ell\"");

  auto* ab_cmd = app.add_subcommand("ab", "a/b-decomposition of hbar*");
  add_common(ab_cmd);
  auto* ineq_cmd = app.add_subcommand("ineq", "h*-coefficient inequality report");
  add_common(ineq_cmd);
  auto* dual_cmd = app.add_subcommand("dual", "dual polytope and palindromicity checks");
  add_common(dual_cmd);
  auto* reflexive_cmd = app.add_subcommand("reflexive", "L-reflexivity test");
  add_common(reflexive_cmd);
  auto* count_cmd = app.add_subcommand("count", "lattice points of a dilate");
  add_common(count_cmd);
  count_cmd->add_option("--t", o.t, "dilation factor")->required();
  count_cmd->add_flag("--interior", o.interior, "count interior points");
  auto* quasi_cmd = app.add_subcommand("quasi", "Ehrhart quasipolynomial");
  add_common(quasi_cmd);
  auto* boxpoly_cmd = app.add_subcommand("boxpoly", "box polynomial of a generator set");
  boxpoly_cmd->add_option("input", o.input, "generator JSON file")->required();
  auto* hexagon_cmd = app.add_subcommand("hexagon", "L-reflexive hexagon family");
  hexagon_cmd->add_option("--index", o.index, "odd index L")->required();
  hexagon_cmd->add_flag("--dual", o.dual_flag, "emit the rational dual P*_L");
  hexagon_cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  auto* check_cmd = app.add_subcommand("check", "verification battery on one polytope");
  add_common(check_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (hstar_cmd->parsed()) return cmd_hstar(o);
    if (ab_cmd->parsed()) return cmd_ab(o);
    if (ineq_cmd->parsed()) return cmd_ineq(o);
    if (dual_cmd->parsed()) return cmd_dual(o);
    if (reflexive_cmd->parsed()) return cmd_reflexive(o);
    if (count_cmd->parsed()) return cmd_count(o);
    if (quasi_cmd->parsed()) return cmd_quasi(o);
    if (boxpoly_cmd->parsed()) return cmd_boxpoly(o);
    if (hexagon_cmd->parsed()) return cmd_hexagon(o);
    if (check_cmd->parsed()) return cmd_check(o);
  } catch (const ehrhart::ScanLimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const ehrhart::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ehrhart::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
