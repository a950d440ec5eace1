#pragma once

#include "mppa/element.hpp"

#include <memory>
#include <utility>
#include <vector>

namespace mppa {

class Morphism;

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Unevaluated algebra expression. Interpreted exactly by Algebra::eval and,
// independently of the rewriting rules, by the matrix oracle.
struct Expr {
  enum class Kind { Scalar, Idempotent, Generator, Macro, Sum, Product, Inverse, Apply };
  Kind kind = Kind::Scalar;
  Rational scalar;               // Scalar: scalar * 1
  int index = -1;                // vertex, generator or macro index
  std::vector<ExprPtr> args;
  std::vector<Rational> coeffs;  // Sum: one coefficient per arg
  std::shared_ptr<const Morphism> morphism;  // Apply: args[0] lives in the source algebra
};

namespace expr {
ExprPtr scalar(const Rational& c);
ExprPtr idempotent(int v);
ExprPtr generator(int g);
ExprPtr macro(int m);
ExprPtr sum(std::vector<std::pair<Rational, ExprPtr>> terms);
ExprPtr product(std::vector<ExprPtr> factors);
ExprPtr inverse(ExprPtr a);
ExprPtr apply(std::shared_ptr<const Morphism> m, ExprPtr a);

ExprPtr add(ExprPtr a, ExprPtr b);
ExprPtr sub(ExprPtr a, ExprPtr b);
ExprPtr neg(ExprPtr a);
ExprPtr scale(const Rational& c, ExprPtr a);
ExprPtr mul(ExprPtr a, ExprPtr b);

// Literal transcription of words and elements (no rewriting implied).
ExprPtr word(const Word& w);
ExprPtr element(const Element& e);
}  // namespace expr

}  // namespace mppa
