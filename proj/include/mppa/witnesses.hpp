#pragma once

#include "mppa/chain.hpp"
#include "mppa/identity.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mppa {

struct AlphaPair {
  ChainExprPtr alpha;        // ½[(x^-1⊗x)^{⊗n} - (x⊗x^-1)^{⊗n}]
  ChainExprPtr alpha_tilde;  // 2·alpha
};

// x must be a generator with an inverse generator (or itself one).
AlphaPair alpha_n(const AlgebraPtr& alg, const std::string& x, int n);
// Same with x and its inverse given as expressions.
AlphaPair alpha_expr(const AlgebraPtr& alg, const std::string& x, const std::string& xinv, int n);
// The inverse generator of x, or a ValidationError.
std::string inverse_of(const Algebra& alg, const std::string& x);

// c_k = k!·α_{k+1} for k = 0..N.
MixedChain alpha_mixed(const ChainComplex& cx, const std::string& x, int N);

// y^-1⊗x^-1⊗xy - y⊗y^-1x^-1⊗x, over laurent_pair or the groupoid C.
ChainExprPtr beta1_cospan(const AlgebraPtr& alg);
// Homotopy between μ1(α̃1) + μ2(α̃1) and 0 in a2_loc.
ChainExprPtr beta1_a2(const AlgebraPtr& a2);

struct SuiteOptions {
  int truncation = 5;
  // Test quivers and q vectors used by the fusion/upsilon suites are fixed.
};

std::vector<std::string> suite_names();  // "all" first
bool is_suite(const std::string& name);
// Identities of the named suites in registry order, without duplicates.
std::vector<Identity> build_suites(const std::vector<std::string>& names, const SuiteOptions& opts = {});

struct IdentityOutcome {
  std::string id;
  std::string suite;
  std::string statement;
  CheckResult exact;
  CheckResult oracle;
  double seconds = 0;
  bool pass() const { return exact.pass && oracle.pass; }
};

struct RunOptions {
  SuiteOptions suite;
  ChainConventions conventions;
  int oracle_trials = 20;
  std::uint64_t seed = 7;
  bool oracle = true;
};

struct SuiteReport {
  std::vector<IdentityOutcome> outcomes;
  bool all_pass() const;
};

SuiteReport run_identities(const std::vector<Identity>& ids, const RunOptions& opts);
SuiteReport run_suite(const std::vector<std::string>& names, const RunOptions& opts = {});

}  // namespace mppa
