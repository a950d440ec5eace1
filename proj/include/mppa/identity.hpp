#pragma once

#include "mppa/bimodule.hpp"
#include "mppa/chain.hpp"
#include "mppa/repvar.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace mppa {

struct ChainExpr;
using ChainExprPtr = std::shared_ptr<const ChainExpr>;

// Unevaluated chain expression over one algebra; Push switches to the
// morphism's source for its argument.
struct ChainExpr {
  enum class Kind { Tensor, Sum, Boundary, Connes, Unit, Push };
  Kind kind = Kind::Sum;
  std::vector<ExprPtr> slots;
  std::vector<ChainExprPtr> args;
  std::vector<Rational> coeffs;
  MorphismPtr morphism;
  int degree = 0;  // only meaningful for an empty Sum
};

namespace cexpr {
ChainExprPtr tensor(std::vector<ExprPtr> slots);
ChainExprPtr tensor(const Algebra& alg, const std::vector<std::string>& slots);
ChainExprPtr zero(int degree);
ChainExprPtr sum(std::vector<std::pair<Rational, ChainExprPtr>> terms);
ChainExprPtr add(ChainExprPtr a, ChainExprPtr b);
ChainExprPtr sub(ChainExprPtr a, ChainExprPtr b);
ChainExprPtr scale(const Rational& c, ChainExprPtr a);
ChainExprPtr b(ChainExprPtr a);
ChainExprPtr B(ChainExprPtr a);
ChainExprPtr unit(ChainExprPtr a);
ChainExprPtr push(MorphismPtr m, ChainExprPtr a);
}  // namespace cexpr

Chain eval_chain(const ChainComplex& cx, const ChainExpr& e);

// Matrix oracle for chains. A formal chain is a list of coefficients times
// labelled blocks, one per slot; the functional pairs slot i against a
// random matrix W_{i,label} (traceless on diagonal labels for i >= 1, so
// degenerate chains pair to zero).
class ChainOracle {
 public:
  struct Term {
    Rational c;
    std::vector<std::pair<BlockKey, Matrix>> slots;
  };
  using Formal = std::vector<Term>;

  ChainOracle(const Evaluator& ev, std::uint64_t seed, ChainConventions conv = {})
      : ev_(ev), seed_(seed), conv_(conv) {}

  Formal eval(const ChainExpr& e) const;
  Rational functional(const Formal& x) const;

 private:
  const Matrix& weight(std::size_t slot, const BlockKey& k) const;

  const Evaluator& ev_;
  std::uint64_t seed_;
  ChainConventions conv_;
  mutable std::map<std::pair<std::size_t, BlockKey>, Matrix> weights_;
};

struct CheckResult {
  bool pass = true;
  bool probabilistic = false;
  std::string detail;
};

// One equation lhs == rhs in an algebra, a chain complex or a bimodule.
struct Equation {
  enum class Kind { Element, Chain, Bimodule };
  Kind kind = Kind::Element;
  std::string label;
  AlgebraPtr alg;
  ExprPtr a, b;
  ChainExprPtr ca, cb;
  ModulePtr module;
  BimoduleExprPtr ba, bb;
};

Equation element_equation(AlgebraPtr alg, ExprPtr a, ExprPtr b, std::string label = "");
Equation element_equation(AlgebraPtr alg, const std::string& a, const std::string& b, std::string label = "");
Equation chain_equation(AlgebraPtr alg, ChainExprPtr a, ChainExprPtr b, std::string label = "");
Equation bimodule_equation(ModulePtr m, BimoduleExprPtr a, BimoduleExprPtr b, std::string label = "");

struct Identity {
  std::string id;
  std::string suite;
  std::string statement;
  std::vector<Equation> equations;
  // Additional exact-only assertions (non-vanishing, well-definedness, searches).
  std::function<CheckResult(const ChainConventions&)> extra;
  // Replaces the equation-based oracle when set.
  std::function<CheckResult(int trials, std::uint64_t seed)> oracle;
};

CheckResult check_exact(const Equation& eq, const ChainConventions& conv);
CheckResult check_exact(const Identity& id, const ChainConventions& conv);
CheckResult check_oracle(const Equation& eq, int trials, std::uint64_t seed);
// Passes vacuously (detail "n/a") when the identity has neither equations nor an oracle.
CheckResult check_oracle(const Identity& id, int trials, std::uint64_t seed);

}  // namespace mppa
