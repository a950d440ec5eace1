#pragma once

#include "mppa/presentation.hpp"
#include "mppa/repvar.hpp"

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

namespace mppa {

// A free generator of a bimodule over A. A term p ⊗ [m] ⊗ q needs
// src(p) == left and tgt(q) == right.
struct Marker {
  std::string name;
  int left = 0;
  int right = 0;
  int degree = 0;
};

struct FreeBimodule {
  std::string name;
  AlgebraPtr alg;
  std::vector<Marker> markers;
  // Per generator of alg: marker that receives ι(g), or -1.
  std::vector<int> iota_marker;

  int marker_index(const std::string& name) const;  // -1 if absent
};

using ModulePtr = std::shared_ptr<const FreeBimodule>;

ModulePtr make_module(std::string name, AlgebraPtr alg, std::vector<Marker> markers);
// A ⊗_R kĒ ⊗_R A ⊕ A ⊗_R A: one marker m_<g> per Free-recipe generator of
// degree 0 (or the listed ones), plus units U_<v>.
ModulePtr omega_module(std::string name, AlgebraPtr alg, const std::vector<std::string>& gens = {});

using BimoduleKey = std::tuple<Word, int, Word>;

struct BimoduleElement {
  std::map<BimoduleKey, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const Word& p, int marker, const Word& q, const Rational& c);
  BimoduleElement& operator+=(const BimoduleElement& o);
  BimoduleElement& operator-=(const BimoduleElement& o);
  BimoduleElement& operator*=(const Rational& c);
  bool operator==(const BimoduleElement& o) const { return terms == o.terms; }
};

BimoduleElement operator+(BimoduleElement a, const BimoduleElement& b);
BimoduleElement operator-(BimoduleElement a, const BimoduleElement& b);
BimoduleElement operator*(const Rational& c, BimoduleElement a);

class BimoduleMap;
using BimoduleMapPtr = std::shared_ptr<const BimoduleMap>;

struct BimoduleExpr;
using BimoduleExprPtr = std::shared_ptr<const BimoduleExpr>;

// Unevaluated bimodule expression, interpreted exactly (rewriting) or by
// the matrix oracle.
struct BimoduleExpr {
  enum class Kind { Leaf, Sum, LeftMul, RightMul, Apply, Iota };
  Kind kind = Kind::Leaf;
  int marker = -1;
  ExprPtr left, right;  // Leaf: p, q; LeftMul: left; RightMul: right; Iota: left
  std::vector<BimoduleExprPtr> args;
  std::vector<Rational> coeffs;
  BimoduleMapPtr map;
};

namespace bexpr {
BimoduleExprPtr leaf(ExprPtr p, int marker, ExprPtr q);
BimoduleExprPtr leaf(const Algebra& alg, const std::string& p, int marker, const std::string& q);
BimoduleExprPtr zero();
BimoduleExprPtr sum(std::vector<std::pair<Rational, BimoduleExprPtr>> terms);
BimoduleExprPtr add(BimoduleExprPtr a, BimoduleExprPtr b);
BimoduleExprPtr sub(BimoduleExprPtr a, BimoduleExprPtr b);
BimoduleExprPtr scale(const Rational& c, BimoduleExprPtr a);
BimoduleExprPtr lmul(ExprPtr a, BimoduleExprPtr x);
BimoduleExprPtr rmul(BimoduleExprPtr x, ExprPtr b);
// a*x - x*a
BimoduleExprPtr commutator(ExprPtr a, BimoduleExprPtr x);
BimoduleExprPtr apply(BimoduleMapPtr f, BimoduleExprPtr x);
BimoduleExprPtr iota(ExprPtr a);
BimoduleExprPtr element(const BimoduleElement& x);
}  // namespace bexpr

// Exact interpretation.
BimoduleElement eval_bimodule(const FreeBimodule& m, const BimoduleExpr& e);
BimoduleElement bimodule_leaf(const FreeBimodule& m, const Element& p, int marker, const Element& q);
BimoduleElement left_mul(const Algebra& alg, const Element& a, const BimoduleElement& x);
BimoduleElement right_mul(const Algebra& alg, const BimoduleElement& x, const Element& b);
// The derivation A -> module with ι(g) = [m_g] on edge generators.
BimoduleElement iota(const FreeBimodule& m, const Element& a);
std::string print_bimodule(const FreeBimodule& m, const BimoduleElement& x);

// A^e-linear map between free bimodules, given on markers.
class BimoduleMap {
 public:
  BimoduleMap(std::string name, ModulePtr source, ModulePtr target, std::vector<BimoduleExprPtr> images,
              int degree = 0);

  const std::string& name() const { return name_; }
  const FreeBimodule& source() const { return *source_; }
  const FreeBimodule& target() const { return *target_; }
  const ModulePtr& source_ptr() const { return source_; }
  const ModulePtr& target_ptr() const { return target_; }
  int degree() const { return degree_; }
  const BimoduleExprPtr& image_expr(int marker) const { return exprs_.at(marker); }
  const BimoduleElement& image(int marker) const { return images_.at(marker); }
  BimoduleElement apply(const BimoduleElement& x) const;

 private:
  std::string name_;
  ModulePtr source_, target_;
  std::vector<BimoduleExprPtr> exprs_;
  std::vector<BimoduleElement> images_;
  int degree_ = 0;
};

BimoduleMapPtr make_map(std::string name, ModulePtr source, ModulePtr target,
                        const std::map<std::string, BimoduleExprPtr>& images, int degree = 0);
BimoduleMapPtr compose(const BimoduleMapPtr& g, const BimoduleMapPtr& f, std::string name = "");

// Identification of the dual of a free module with another free module:
// marker i of the original goes to (marker, sign) with left/right swapped.
struct DualMarkers {
  ModulePtr dual;
  std::vector<std::pair<int, int>> of;  // per original marker
};

// φ: F -> G gives φ∨: G∨ -> F∨. A term c·p[g']q in φ(g) contributes
// c·s(g)·s(g')·q[D g]p to φ∨(D g').
BimoduleMapPtr dualize(const BimoduleMap& phi, const DualMarkers& dsrc, const DualMarkers& dtgt, std::string name);

// Matrix oracle. Terms carry labelled blocks for p and q; the functional
// sends p[g]q to tr(F_{g,tgt p} P) tr(G_{g,src q} Q) with random F, G.
class BimoduleOracle {
 public:
  BimoduleOracle(const Evaluator& ev, std::uint64_t seed) : ev_(ev), seed_(seed) {}

  struct Term {
    Rational c;
    int marker;
    BlockKey pk;
    Matrix p;
    BlockKey qk;
    Matrix q;
  };
  using Formal = std::vector<Term>;

  Formal eval(const FreeBimodule& m, const BimoduleExpr& e) const;
  Rational functional(const FreeBimodule& m, const Formal& x) const;

 private:
  Formal iota(const FreeBimodule& m, const Expr& a) const;
  const std::vector<Formal>& images(const BimoduleMap& f) const;
  const Matrix& weight(int side, const FreeBimodule& m, int marker, int vertex) const;

  const Evaluator& ev_;
  std::uint64_t seed_;
  mutable std::map<const BimoduleMap*, std::vector<Formal>> cache_;
  mutable std::map<std::tuple<int, const FreeBimodule*, int, int>, Matrix> weights_;
};

}  // namespace mppa
