// Command-line front end: build modules, run the bimodule and quantum-matrix
// computations, and run the acceptance battery.
//
// Exit codes: 0 all checks pass, 1 a verification failed, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "qcoord/acceptance/acceptance.hpp"
#include "qcoord/bimodule/bimodule.hpp"
#include "qcoord/coeff/gauss.hpp"
#include "qcoord/coeff/text.hpp"
#include "qcoord/oq/oq.hpp"
#include "qcoord/qmatrix/qmatrix.hpp"
#include "qcoord/uq/modules.hpp"
#include "qcoord/weights.hpp"

using namespace qcoord;
using json = nlohmann::json;
using Eigen::Index;

namespace {

constexpr int kOk = 0, kFailed = 1, kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_ell(int ell) {
  if (ell < 3 || ell % 2 == 0) throw UsageError("--ell must be an odd integer >= 3");
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---- gauss ----------------------------------------------------------------

int cmd_gauss_binom(int n, int k, bool at_one, int ell) {
  if (k < 0 || k > n) throw UsageError("gauss binom needs 0 <= k <= n");
  const LaurentPoly b = gauss_binom(n, k);
  if (at_one) std::cout << to_string(b.at_one()) << "\n";
  else if (ell > 0) std::cout << to_string(specialize(b, ell)) << "\n";
  else std::cout << to_string(b) << "\n";
  return kOk;
}

int cmd_gauss_int(int n, int ell) {
  const LaurentPoly x = gauss_int(n);
  if (ell > 0) std::cout << to_string(specialize(x, ell)) << "\n";
  else std::cout << to_string(x) << "\n";
  return kOk;
}

// ---- module ---------------------------------------------------------------

const uq::Rep& lookup_module(const std::string& kind, int n, int ell) {
  if (kind == "weyl") return uq::weyl_module(n, ell);
  if (kind == "dual-weyl") return uq::dual_weyl_module(n, ell);
  if (kind == "simple") return uq::simple_module(n, ell);
  if (kind == "tilting") return uq::tilting_module(n, ell);
  throw UsageError("unknown module kind " + kind + " (weyl, dual-weyl, simple, tilting)");
}

json matrix_json(const Mat& m, int ell) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j), ell));
    rows.push_back(row);
  }
  return rows;
}

json module_json(const std::string& kind, int n, int ell) {
  const uq::Rep& m = lookup_module(kind, n, ell);
  json j;
  j["kind"] = kind;
  j["n"] = n;
  j["ell"] = ell;
  j["label"] = m.label();
  j["dim"] = m.dim();
  j["weights"] = m.weights();
  json ch = json::array();
  const LaurentPoly character = uq::character(m);
  for (const auto& [w, c] : character.terms()) ch.push_back({w, c.get_num().get_si()});
  j["character"] = ch;
  json mats;
  for (int k = 1; k <= m.stored_powers(); ++k) {
    mats["E(" + std::to_string(k) + ")"] = matrix_json(m.e(k), ell);
    mats["F(" + std::to_string(k) + ")"] = matrix_json(m.f(k), ell);
  }
  j["matrices"] = mats;
  return j;
}

// Memo of module reports under $QCOORD_CACHE_DIR.
json cached_module_json(const std::string& kind, int n, int ell) {
  const char* dir = std::getenv("QCOORD_CACHE_DIR");
  if (!dir || !*dir) return module_json(kind, n, ell);
  namespace fs = std::filesystem;
  const fs::path path = fs::path(dir) / (kind + "-" + std::to_string(n) + "-ell" + std::to_string(ell) + ".json");
  if (fs::exists(path)) {
    std::ifstream in(path);
    return json::parse(in);
  }
  json j = module_json(kind, n, ell);
  fs::create_directories(path.parent_path());
  std::ofstream(path) << j.dump();
  return j;
}

std::string character_name(const std::string& kind, int n, int ell) {
  if (kind != "tilting") return "";
  std::string s = "ch V_" + std::to_string(n);
  if (auto p = weights::sl2_prime(n, ell)) s += " + ch V_" + std::to_string(*p);
  return s;
}

int cmd_module(const std::string& kind, int n, int ell, bool as_json) {
  check_ell(ell);
  if (n < 0) throw UsageError("module index must be >= 0");
  if (as_json) {
    print(cached_module_json(kind, n, ell));
    return kOk;
  }
  const uq::Rep& m = lookup_module(kind, n, ell);
  std::cout << m.label() << " (ell=" << ell << "): dim " << m.dim();
  if (m.dim() == 1 && m.weights()[0] == 0) std::cout << " (trivial)";
  std::cout << "\nweights:";
  for (int w : m.weights()) std::cout << " " << w;
  std::cout << "\ncharacter: " << to_string(uq::character(m), 'z') << "\n";
  if (kind == "tilting") {
    LaurentPoly expected = uq::weyl_character(n);
    if (auto p = weights::sl2_prime(n, ell)) expected += uq::weyl_character(*p);
    const bool ok = expected == uq::character(m);
    std::cout << "ch = " << character_name(kind, n, ell) << ": " << (ok ? "yes" : "NO") << "\n";
    return ok ? kOk : kFailed;
  }
  return kOk;
}

int cmd_decompose(int a, int b, int ell, bool as_json) {
  check_ell(ell);
  uq::Rep m = uq::tensor(uq::tilting_module(a, ell), uq::tilting_module(b, ell));
  std::vector<int> summands;
  while (m.dim() > 0) {
    int top = m.weights()[0];
    for (int w : m.weights()) top = std::max(top, w);
    const auto peel = uq::peel_summand(m, uq::tilting_module(top, ell));
    if (!peel.found) {
      std::cerr << "T_" << top << " does not split off the remaining tensor factor\n";
      return kFailed;
    }
    summands.push_back(top);
    m = peel.complement;
  }
  if (as_json) {
    print(json{{"ell", ell}, {"left", a}, {"right", b}, {"summands", summands}});
  } else {
    std::cout << "T_" << a << " (x) T_" << b << " =";
    for (std::size_t k = 0; k < summands.size(); ++k) std::cout << (k ? " + " : " ") << "T_" << summands[k];
    std::cout << "\n";
  }
  return kOk;
}

// ---- weights --------------------------------------------------------------

int cmd_weights_sequence(int n, int ell, int count) {
  check_ell(ell);
  print(json(weights::sl2_sequence(n, ell, count)));
  return kOk;
}

int cmd_weights_orbit(const std::vector<int>& w, int ell, int bound) {
  check_ell(ell);
  const auto orbit = weights::orbit_dominant(weights::Weight(w), ell, bound);
  json j = json::array();
  for (const auto& m : orbit.members) j.push_back(m.coords);
  print(j);
  return kOk;
}

// ---- oq -------------------------------------------------------------------

int cmd_oq_normal(const std::string& expr, int ell, bool as_json) {
  check_ell(ell);
  if (expr.empty()) throw UsageError("--expr is required");
  const oq::Element x = oq::parse_element(expr, ell);
  if (as_json) print(oq::to_json(x, ell));
  else std::cout << oq::to_string(x, ell) << "\n";
  return kOk;
}

int cmd_oq_evaluate(const std::string& expr, const std::string& u, int ell) {
  check_ell(ell);
  if (expr.empty() || u.empty()) throw UsageError("--expr and --u are required");
  const oq::Element x = oq::parse_element(expr, ell);
  std::cout << to_string(oq::evaluate(x, uq::parse_algebra_element(u, ell), ell)) << "\n";
  return kOk;
}

// ---- filtration -----------------------------------------------------------

json layers_json(const std::vector<bimodule::BiLayer>& layers) {
  json out = json::array();
  for (const auto& l : layers) {
    json comp = json::array();
    for (const auto& [lab, mult] : l.composition)
      comp.push_back({{"left", lab.first}, {"right", lab.second}, {"mult", mult}});
    out.push_back({{"dim", l.dim}, {"simples", comp}});
  }
  return out;
}

int cmd_filtration(int ell, int block, int depth, bool as_json) {
  check_ell(ell);
  if (block < 0 || block > ell - 2) throw UsageError("--block must lie in 0..ell-2");
  if (depth < 1) throw UsageError("--depth must be >= 1");
  bool ok = true;
  json j;
  j["ell"] = ell;
  j["block"] = block;
  const auto report = bimodule::lambda_block(block, depth, ell);
  j["sequence"] = report.sequence;
  json pdims = json::array();
  for (const auto& p : bimodule::build_P(block, depth, ell)) pdims.push_back(p.dim());
  j["P_dims"] = pdims;
  auto isos = [&](const std::vector<bimodule::QuotientCheck>& qs) {
    json out = json::array();
    for (const auto& q : qs) {
      out.push_back({{"i", q.i}, {"target", q.target}, {"certified", q.certified}});
      ok = ok && q.certified;
    }
    return out;
  };
  j["quotient_isos"] = isos(bimodule::filtration_quotients(block, depth, ell));
  j["decreasing_quotient_isos"] = isos(bimodule::decreasing_Q(block, depth, ell));
  j["loewy"] = {{"layers", layers_json(report.loewy.radical_layers)},
                {"socle_layers", layers_json(report.loewy.socle_layers)},
                {"rigid", report.loewy.rigid},
                {"indecomposable", report.loewy.indecomposable}};
  json checks = json::array();
  for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"status", bimodule::to_string(c.status)}});
  j["checks"] = checks;
  ok = ok && report.passed();
  j["status"] = ok ? "pass" : "fail";
  if (as_json) {
    print(j);
  } else {
    std::cout << "block " << block << " at ell=" << ell << ", sequence";
    for (int n : report.sequence) std::cout << " " << n;
    std::cout << "\nP dims: " << pdims.dump() << "\n";
    for (const auto& q : j["quotient_isos"])
      std::cout << "P^" << q["i"].get<int>() << "/P^" << q["i"].get<int>() - 1 << " = "
                << q["target"].get<std::string>() << ": " << (q["certified"].get<bool>() ? "certified" : "FAILED")
                << "\n";
    for (const auto& q : j["decreasing_quotient_isos"])
      std::cout << "Q^" << q["i"].get<int>() - 1 << "/Q^" << q["i"].get<int>() << " = "
                << q["target"].get<std::string>() << ": " << (q["certified"].get<bool>() ? "certified" : "FAILED")
                << "\n";
    for (const auto& c : report.checks) std::cout << bimodule::to_string(c.status) << "  " << c.name << "\n";
    std::cout << (ok ? "pass" : "FAIL") << "\n";
  }
  return ok ? kOk : kFailed;
}

// ---- cocommutative --------------------------------------------------------

int cmd_cocommutative(int ell, int degree, bool as_json) {
  check_ell(ell);
  if (degree < 0) throw UsageError("--degree must be >= 0");
  const auto basis = oq::cocommutative_basis(degree, ell);
  const oq::Element s = oq::Element::generator('a') + oq::Element::generator('d');
  std::vector<oq::Element> powers{oq::Element::one()};
  for (int k = 1; k <= degree; ++k) powers.push_back(oq::multiply(powers.back(), s, ell));
  const bool equal = oq::same_span(oq::span_of(basis), oq::span_of(powers));
  const bool ok = equal && static_cast<int>(basis.size()) == degree + 1;
  if (as_json) {
    json b = json::array();
    for (const auto& x : basis) b.push_back(oq::to_json(x, ell));
    print(json{{"ell", ell}, {"degree", degree}, {"dim", basis.size()}, {"equals_powers_of_trace", equal}, {"basis", b}});
  } else {
    std::cout << "dim " << basis.size() << "\n";
    for (const auto& x : basis) std::cout << "  " << oq::to_string(x, ell) << "\n";
    std::cout << "equals span{(a+d)^k : k <= " << degree << "}: " << (equal ? "yes" : "NO") << "\n";
  }
  return ok ? kOk : kFailed;
}

// ---- qmatrix --------------------------------------------------------------

int cmd_qmatrix_reduce(int n, const std::string& expr, bool confluence, int samples, unsigned seed, int degree,
                       bool as_json) {
  if (n < 1) throw UsageError("--n must be >= 1");
  if (!confluence) {
    if (expr.empty()) throw UsageError("--expr is required");
    const auto x = qmatrix::parse(expr, n);
    if (as_json) print(qmatrix::to_json(x));
    else std::cout << qmatrix::to_string(x) << "\n";
    return kOk;
  }
  std::mt19937 rng(seed);
  const auto monos = qmatrix::xi_monomials(n, degree);
  auto random_element = [&] {
    qmatrix::QMatElement x(n);
    const int terms = 1 + static_cast<int>(rng() % 2);
    for (int t = 0; t < terms; ++t)
      x.add_term(monos[rng() % monos.size()],
                 LaurentPoly::monomial(static_cast<int>(rng() % 3) - 1, static_cast<long>(rng() % 5) - 2));
    return x;
  };
  for (int k = 0; k < samples; ++k) {
    const auto x = random_element(), y = random_element(), z = random_element();
    const auto left = qmatrix::multiply(qmatrix::multiply(x, y), z);
    const auto right = qmatrix::multiply(x, qmatrix::multiply(y, z));
    if (!(left == right) || !qmatrix::supported_on_xi(left)) {
      std::cout << "fail: " << qmatrix::to_string(x) << " | " << qmatrix::to_string(y) << " | "
                << qmatrix::to_string(z) << "\n";
      return kFailed;
    }
  }
  std::cout << "pass: " << samples << " triples, n=" << n << ", seed " << seed << "\n";
  return kOk;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(bool full, int criterion, unsigned seed, bool as_json) {
  if (!full && criterion == 0) throw UsageError("verify needs --full-suite or --criterion");
  std::vector<int> ids;
  if (criterion) {
    if (criterion < 1 || criterion > acceptance::kCriteria) throw UsageError("--criterion must lie in 1..11");
    ids.push_back(criterion);
  } else {
    for (int k = 1; k <= acceptance::kCriteria; ++k) ids.push_back(k);
  }
  bool ok = true;
  json out = json::array();
  for (int id : ids) {
    const auto r = acceptance::run_criterion(id, seed);
    ok = ok && r.passed;
    if (as_json)
      out.push_back({{"criterion", r.id}, {"name", r.name}, {"status", r.passed ? "pass" : "fail"},
                     {"detail", r.detail}, {"seconds", r.seconds}});
    else
      std::cout << acceptance::format(r) << std::endl;
  }
  if (as_json) print(out);
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with U_q(sl2) modules and the function algebra O_q at roots of unity"};
  app.require_subcommand(1);
  std::function<int()> run;

  int ell = 3, n = 0, k = 0, depth = 2, block = 0, degree = 4, samples = 300, count = 4, bound = 20, criterion = 0;
  int left = 0, right = 0;
  unsigned seed = acceptance::kDefaultSeed;
  bool at_one = false, as_json = false, confluence = false, full = false;
  std::string kind, expr, u;
  std::vector<int> weight;
  int ell_opt = 0;

  auto* gauss = app.add_subcommand("gauss", "Gaussian integers and binomials");
  gauss->require_subcommand(1);
  auto* binom = gauss->add_subcommand("binom", "[n; k] at generic v, at v=1 or at q");
  binom->add_option("n", n)->required();
  binom->add_option("k", k)->required();
  binom->add_flag("--at-one", at_one, "specialize at v = 1");
  binom->add_option("--ell", ell_opt, "specialize at a primitive ell-th root of unity");
  binom->callback([&] { run = [&] { return cmd_gauss_binom(n, k, at_one, ell_opt); }; });
  auto* gint = gauss->add_subcommand("int", "[n]");
  gint->add_option("n", n)->required();
  gint->add_option("--ell", ell_opt, "specialize at a primitive ell-th root of unity");
  gint->callback([&] { run = [&] { return cmd_gauss_int(n, ell_opt); }; });

  auto* module = app.add_subcommand("module", "Build V_n, V_n^*, L_n or T_n and print weights and character");
  module->add_option("kind", kind, "weyl | dual-weyl | simple | tilting")->required();
  module->add_option("n", n)->required();
  module->add_option("--ell", ell);
  module->add_flag("--json", as_json);
  module->callback([&] { run = [&] { return cmd_module(kind, n, ell, as_json); }; });

  auto* decompose = app.add_subcommand("decompose", "Split T_a (x) T_b into indecomposable tilting modules");
  decompose->add_option("a", left)->required();
  decompose->add_option("b", right)->required();
  decompose->add_option("--ell", ell);
  decompose->add_flag("--json", as_json);
  decompose->callback([&] { run = [&] { return cmd_decompose(left, right, ell, as_json); }; });

  auto* wts = app.add_subcommand("weights", "Linkage orbits and sequences (JSON)");
  wts->require_subcommand(1);
  auto* seq = wts->add_subcommand("sequence", "n = n_1 < n_2 < ... in the block of n (rank 1)");
  seq->add_option("--block", n)->required();
  seq->add_option("--ell", ell);
  seq->add_option("--count", count);
  seq->callback([&] { run = [&] { return cmd_weights_sequence(n, ell, count); }; });
  auto* orbit = wts->add_subcommand("orbit", "dominant members of a dot orbit");
  orbit->add_option("--weight", weight, "fundamental-weight coordinates")->required();
  orbit->add_option("--ell", ell);
  orbit->add_option("--bound", bound);
  orbit->callback([&] { run = [&] { return cmd_weights_orbit(weight, ell, bound); }; });

  auto* oqcmd = app.add_subcommand("oq", "Normal forms and evaluation in O_q");
  oqcmd->require_subcommand(1);
  auto* mult = oqcmd->add_subcommand("multiply", "normal form of an expression in a, b, c, d");
  mult->add_option("--expr", expr)->required();
  mult->add_option("--ell", ell);
  mult->add_flag("--json", as_json);
  mult->callback([&] { run = [&] { return cmd_oq_normal(expr, ell, as_json); }; });
  auto* eval = oqcmd->add_subcommand("evaluate", "<f, u> for f in O_q and u in U_q");
  eval->add_option("--expr", expr)->required();
  eval->add_option("--u", u)->required();
  eval->add_option("--ell", ell);
  eval->callback([&] { run = [&] { return cmd_oq_evaluate(expr, u, ell); }; });

  for (const char* name : {"filtration", "filtration-report"}) {
    auto* filt = app.add_subcommand(name, "Bimodule filtrations and Loewy layers of a block of O_q");
    filt->add_option("--ell", ell);
    filt->add_option("--block", block);
    filt->add_option("--depth", depth);
    filt->add_flag("--json", as_json);
    filt->callback([&] { run = [&] { return cmd_filtration(ell, block, depth, as_json); }; });
  }

  auto* coco = app.add_subcommand("cocommutative", "Cocommutative elements of degree <= D");
  coco->add_option("--ell", ell);
  coco->add_option("--degree", degree);
  coco->add_flag("--json", as_json);
  coco->callback([&] { run = [&] { return cmd_cocommutative(ell, degree, as_json); }; });

  auto* qm = app.add_subcommand("qmatrix-reduce", "Normal forms in O(SL_n) at generic v");
  qm->add_option("--n", n)->required();
  qm->add_option("--expr", expr);
  qm->add_flag("--confluence", confluence, "check (xy)z = x(yz) on random triples");
  qm->add_option("--samples", samples);
  qm->add_option("--seed", seed);
  qm->add_option("--degree", degree, "maximal degree of random factors")->default_val(3);
  qm->add_flag("--json", as_json);
  qm->callback([&] { run = [&] { return cmd_qmatrix_reduce(n, expr, confluence, samples, seed, degree, as_json); }; });

  auto* verify = app.add_subcommand("verify", "Run the acceptance battery");
  verify->add_flag("--full-suite", full, "all eleven criteria");
  verify->add_option("--criterion", criterion, "a single criterion 1..11");
  verify->add_option("--seed", seed);
  verify->add_flag("--json", as_json);
  verify->callback([&] { run = [&] { return cmd_verify(full, criterion, seed, as_json); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  try {
    return run();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
}
