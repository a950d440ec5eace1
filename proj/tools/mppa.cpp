#include "mppa/builtins.hpp"
#include "mppa/error.hpp"
#include "mppa/preproj.hpp"
#include "mppa/report.hpp"
#include "mppa/repvar.hpp"
#include "mppa/witnesses.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace mppa;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string x; std::getline(ss, x, sep);)
    if (!x.empty()) out.push_back(x);
  return out;
}

std::map<std::string, Rational> parse_q(const std::vector<std::string>& items) {
  std::map<std::string, Rational> q;
  for (const auto& it : items) {
    auto eq = it.find('=');
    if (eq == std::string::npos) throw ValidationError("--q expects vertex=rational, got '" + it + "'");
    q[it.substr(0, eq)] = parse_rational(it.substr(eq + 1));
  }
  return q;
}

struct AlgebraArgs {
  std::string algebra;
  std::string quiver;
  std::string param_q = "1";
  std::string var = "x";
};

void add_algebra_opts(CLI::App* cmd, AlgebraArgs& a, bool required) {
  auto* o = cmd->add_option("--algebra", a.algebra,
                            "built-in algebra: laurent, laurent_pair, kI, a2loc, groupoid_C, pushout, quiver_loc");
  if (required) o->required();
  cmd->add_option("--quiver", a.quiver, "quiver JSON file (for quiver_loc)");
  cmd->add_option("--param-q", a.param_q, "q for the pushout algebra");
  cmd->add_option("--var", a.var, "variable name for laurent");
}

AlgebraPtr resolve_algebra(const AlgebraArgs& a) {
  if (a.algebra.empty() || a.algebra == "quiver_loc") {
    if (a.quiver.empty()) throw ValidationError("need --algebra or --quiver");
    return quiver_loc(load_quiver_file(a.quiver).quiver);
  }
  return builtin(a.algebra, {{"q", a.param_q}, {"x", a.var}});
}

int cmd_verify(const std::vector<std::string>& suites_in, int truncation, const std::string& format, bool timing,
               int trials, std::uint64_t seed, bool no_oracle, bool flip, bool unnormalized) {
  std::vector<std::string> suites;
  for (const auto& s : suites_in)
    for (const auto& x : split(s, ',')) suites.push_back(x);
  if (suites.empty()) suites.push_back("all");
  for (const auto& s : suites)
    if (!is_suite(s)) {
      std::cerr << "unknown suite '" << s << "'; known:";
      for (const auto& n : suite_names()) std::cerr << " " << n;
      std::cerr << "\n";
      return kUsage;
    }
  RunOptions ro;
  ro.suite.truncation = truncation;
  ro.oracle_trials = trials;
  ro.seed = seed;
  ro.oracle = !no_oracle;
  ro.conventions.flip_connes_sign = flip;
  ro.conventions.normalized = !unnormalized;
  SuiteReport rep = run_suite(suites, ro);
  std::cout << format_report(rep, {suites, truncation, no_oracle ? 0 : trials, seed}, {format == "json", timing});
  return rep.all_pass() ? kPass : kFail;
}

int cmd_nf(const AlgebraArgs& a, const std::vector<std::string>& exprs, const std::string& format) {
  auto alg = resolve_algebra(a);
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& e : exprs) {
    const std::string nf = alg->print(alg->parse(e));
    if (format == "json")
      j.push_back({{"expr", e}, {"nf", nf}});
    else
      std::cout << nf << "\n";
  }
  if (format == "json") std::cout << j.dump(2) << "\n";
  return kPass;
}

int cmd_build_upsilon(const std::string& path, const std::vector<std::string>& qs, const std::string& out) {
  QuiverFile f = load_quiver_file(path);
  auto q = f.q;
  for (const auto& [v, c] : parse_q(qs)) q[v] = c;
  DGAlgebra dg = build_upsilon(f.quiver, q, f.order);
  const std::string text = upsilon_json(dg);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(out);
    if (!os) throw ValidationError("cannot write " + out);
    os << text;
  }
  return kPass;
}

int cmd_moment(const std::string& path, const std::string& vertex, bool inverse, const std::string& format) {
  QuiverFile f = load_quiver_file(path);
  MomentMap mm = moment_map(f.quiver, f.order);
  if (!vertex.empty() && !mm.mu.count(vertex)) throw ValidationError("unknown vertex '" + vertex + "'");
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [v, e] : mm.mu) {
    if (!vertex.empty() && v != vertex) continue;
    const std::string s = mm.alg->print(e), si = mm.alg->print(mm.mu_inv.at(v));
    if (format == "json") {
      j[v] = {{"mu", s}, {"mu_inv", si}};
    } else {
      std::cout << "mu_" << v << " = " << s << "\n";
      if (inverse) std::cout << "mu_" << v << "^-1 = " << si << "\n";
    }
  }
  if (format == "json") std::cout << j.dump(2) << "\n";
  return kPass;
}

int cmd_oracle(const AlgebraArgs& a, const std::string& dims_text, int trials, std::uint64_t seed,
               const std::vector<std::string>& exprs) {
  if (exprs.size() != 2) throw ValidationError("oracle needs exactly two --expr");
  auto alg = resolve_algebra(a);
  std::optional<Dims> dims;
  if (!dims_text.empty()) {
    Dims d;
    for (const auto& x : split(dims_text, ',')) d.push_back(std::stoi(x));
    if (static_cast<int>(d.size()) != alg->num_vertices())
      throw ValidationError("--dims needs one entry per vertex (" + std::to_string(alg->num_vertices()) + ")");
    dims = d;
  }
  auto ea = alg->parse_expr(exprs[0]), eb = alg->parse_expr(exprs[1]);
  OracleVerdict v = oracle_equals(*alg, *ea, *eb, trials, seed, dims);
  if (v.distinct) {
    std::cout << "distinct: " << v.counterexample << "\n";
    return kFail;
  }
  std::cout << "probably-equal(" << v.trials << ")\n";
  return kPass;
}

int cmd_critical_pairs(const AlgebraArgs& a, int depth) {
  auto alg = resolve_algebra(a);
  bool all = true;
  auto pairs = alg->critical_pairs(depth);
  for (const auto& p : pairs) {
    all = all && p.joinable;
    std::cout << (p.joinable ? "joinable  " : "NOT JOINABLE  ") << alg->print_word(p.overlap) << " : "
              << alg->rules().at(p.rule_a).text << " / " << alg->rules().at(p.rule_b).text << " -> "
              << alg->print(p.left) << " | " << alg->print(p.right) << "\n";
  }
  std::cout << pairs.size() << " critical pairs, " << (all ? "all joinable" : "some not joinable") << " at depth "
            << depth << "\n";
  return all ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mppa: exact verification of multiplicative preprojective chain-level identities"};
  app.require_subcommand(1);

  std::vector<std::string> suites;
  int truncation = 5, trials = 20, depth = 12;
  std::uint64_t seed = 7;
  std::string format = "text", quiver, out, vertex, dims;
  bool timing = false, no_oracle = false, flip = false, unnorm = false, inverse = false;
  std::vector<std::string> exprs, qs;
  AlgebraArgs alg;

  auto* verify = app.add_subcommand("verify", "run identity suites");
  verify->add_option("--suite", suites, "suite names (repeatable or comma separated)");
  verify->add_option("--truncation", truncation, "u-truncation of the mixed cycle")->check(CLI::Range(0, 12));
  verify->add_option("--trials", trials, "oracle trials per identity")->check(CLI::Range(0, 1000));
  verify->add_option("--seed", seed, "oracle seed");
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--timing", timing, "include elapsed times (output no longer byte-stable)");
  verify->add_flag("--no-oracle", no_oracle, "exact checks only");
  verify->add_flag("--flip-connes-sign", flip, "negative control: use (-1)^{(n+1)i} in B");
  verify->add_flag("--unnormalized", unnorm, "negative control: keep degenerate chains");

  auto* nf = app.add_subcommand("nf", "print normal forms");
  add_algebra_opts(nf, alg, false);
  nf->add_option("--expr", exprs, "expression")->required();
  nf->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* up = app.add_subcommand("build-upsilon", "emit the dg algebra for a quiver");
  up->add_option("--quiver", quiver, "quiver JSON file")->required();
  up->add_option("--q", qs, "override q: vertex=rational (repeatable)");
  up->add_option("--out", out, "output file (default stdout)");

  auto* mom = app.add_subcommand("moment", "print the multiplicative moment map");
  mom->add_option("--quiver", quiver, "quiver JSON file")->required();
  mom->add_option("--vertex", vertex, "only this vertex");
  mom->add_flag("--inverse", inverse, "also print the inverse");
  mom->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* orc = app.add_subcommand("oracle", "compare two expressions at random matrix representations");
  add_algebra_opts(orc, alg, false);
  orc->add_option("--dims", dims, "dimension vector, comma separated, in vertex order");
  orc->add_option("--trials", trials)->check(CLI::Range(1, 100000));
  orc->add_option("--seed", seed);
  orc->add_option("--expr", exprs, "two expressions")->required();

  auto* cp = app.add_subcommand("critical-pairs", "check confluence of the rewriting rules");
  add_algebra_opts(cp, alg, false);
  cp->add_option("--depth", depth)->check(CLI::Range(1, 100));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    if (*verify) return cmd_verify(suites, truncation, format, timing, trials, seed, no_oracle, flip, unnorm);
    if (*nf) return cmd_nf(alg, exprs, format);
    if (*up) return cmd_build_upsilon(quiver, qs, out);
    if (*mom) return cmd_moment(quiver, vertex, inverse, format);
    if (*orc) return cmd_oracle(alg, dims, trials, seed, exprs);
    if (*cp) return cmd_critical_pairs(alg, depth);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
