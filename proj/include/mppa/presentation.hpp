#pragma once

#include "mppa/element.hpp"
#include "mppa/expression.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mppa {

// How the matrix oracle assigns a matrix to a generator.
enum class RecipeKind { Free, InverseOf, DefinedAs };

struct Generator {
  std::string name;
  std::string src;
  std::string tgt;
  int degree = 0;
  RecipeKind recipe = RecipeKind::Free;
  std::string recipe_expr;  // InverseOf / DefinedAs: expression in earlier generators
};

struct RuleSpec {
  std::string lhs;  // generator names joined by '*'
  std::string rhs;  // expression in the grammar
};

struct MacroSpec {
  std::string name;
  std::string expr;
};

struct InvertibleSpec {
  std::string expr;
  std::string inverse;
};

// Finitely presented algebra over R = ⊕_v k e_v.
struct Presentation {
  std::string name;
  std::vector<std::string> vertices;
  std::vector<Generator> generators;
  std::vector<RuleSpec> rules;
  std::vector<MacroSpec> macros;
  std::vector<InvertibleSpec> invertibles;
};

struct Rule {
  Word lhs;
  Element rhs;
  ExprPtr rhs_expr;
  std::string text;
};

struct CriticalPair {
  int rule_a = -1;
  int rule_b = -1;
  Word overlap;
  Element left;   // reduct after rewriting with rule_a first
  Element right;  // reduct after rewriting with rule_b first
  bool joinable = false;
};

struct RewriteOptions {
  long step_budget = 1000000;
  int certify_depth = 12;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

class Algebra {
 public:
  explicit Algebra(Presentation p, RewriteOptions opts = {});

  const Presentation& presentation() const { return pres_; }
  const std::string& name() const { return pres_.name; }
  int num_vertices() const { return static_cast<int>(pres_.vertices.size()); }
  int num_generators() const { return static_cast<int>(pres_.generators.size()); }
  const std::string& vertex_name(int v) const { return pres_.vertices.at(v); }
  const Generator& generator(int g) const { return pres_.generators.at(g); }
  int gen_src(int g) const { return gen_src_.at(g); }
  int gen_tgt(int g) const { return gen_tgt_.at(g); }
  int vertex_index(const std::string& v) const;     // -1 if absent
  int generator_index(const std::string& g) const;  // -1 if absent
  int macro_index(const std::string& m) const;      // -1 if absent
  const std::vector<Rule>& rules() const { return rules_; }
  const ExprPtr& macro_expr(int m) const { return macro_exprs_.at(m); }
  const Element& macro_value(int m) const { return macro_values_.at(m); }
  const std::string& macro_name(int m) const { return pres_.macros.at(m).name; }
  int num_macros() const { return static_cast<int>(pres_.macros.size()); }
  const ExprPtr& recipe_expr(int g) const { return recipe_exprs_.at(g); }

  // Word level.
  int degree(const Word& w) const;
  std::optional<Word> concat(const Word& a, const Word& b) const;
  Word make_word(const std::vector<int>& letters) const;  // throws if not composable
  bool is_normal(const Word& w) const;

  // Elements.
  Element idempotent(int v) const;
  Element one() const;
  Element scalar(const Rational& c) const;
  Element gen(int g) const;
  Element gen(const std::string& name) const;
  Element mul(const Element& a, const Element& b) const;
  Element mul_free(const Element& a, const Element& b) const;  // concatenation, no rewriting
  Element nf(const Element& a) const;
  // Leftmost rewriting limited to `rounds` passes; reports whether a fixpoint was reached.
  Element nf_rounds(const Element& a, int rounds, bool* reduced) const;
  Element rewrite_once_at(const Word& w, int rule, std::size_t pos) const;
  std::optional<Element> inverse(const Element& a) const;
  // Restriction e_v a e_w.
  Element block(const Element& a, int tgt, int src) const;

  // Grammar.
  ExprPtr parse_expr(const std::string& text) const;
  Element parse(const std::string& text) const { return eval(*parse_expr(text)); }
  Element eval(const Expr& e) const;
  std::string print(const Element& a) const;
  std::string print_word(const Word& w) const;

  // Confluence.
  std::vector<CriticalPair> critical_pairs(int depth) const;
  bool certified() const { return certified_; }

 private:
  Element eval_impl(const Expr& e, bool normalize) const;
  bool match_at(const Word& w, std::size_t pos, const Word& lhs) const;
  int find_rule_at(const Word& w, std::size_t pos) const;

  Presentation pres_;
  RewriteOptions opts_;
  std::vector<int> gen_src_, gen_tgt_;
  std::vector<Rule> rules_;
  std::vector<std::vector<int>> rules_by_first_;
  std::vector<ExprPtr> recipe_exprs_;
  std::vector<ExprPtr> macro_exprs_;
  std::vector<Element> macro_values_;
  std::vector<std::pair<Element, Element>> inverse_table_;
  bool certified_ = false;
};

AlgebraPtr make_algebra(Presentation p, RewriteOptions opts = {});

}  // namespace mppa
