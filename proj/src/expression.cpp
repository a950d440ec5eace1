#include "mppa/expression.hpp"

namespace mppa::expr {

static std::shared_ptr<Expr> make(Expr::Kind k) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  return e;
}

ExprPtr scalar(const Rational& c) {
  auto e = make(Expr::Kind::Scalar);
  e->scalar = c;
  return e;
}

ExprPtr idempotent(int v) {
  auto e = make(Expr::Kind::Idempotent);
  e->index = v;
  return e;
}

ExprPtr generator(int g) {
  auto e = make(Expr::Kind::Generator);
  e->index = g;
  return e;
}

ExprPtr macro(int m) {
  auto e = make(Expr::Kind::Macro);
  e->index = m;
  return e;
}

ExprPtr sum(std::vector<std::pair<Rational, ExprPtr>> terms) {
  auto e = make(Expr::Kind::Sum);
  for (auto& [c, a] : terms) {
    e->coeffs.push_back(c);
    e->args.push_back(std::move(a));
  }
  return e;
}

ExprPtr product(std::vector<ExprPtr> factors) {
  if (factors.size() == 1) return factors.front();
  auto e = make(Expr::Kind::Product);
  e->args = std::move(factors);
  return e;
}

ExprPtr inverse(ExprPtr a) {
  auto e = make(Expr::Kind::Inverse);
  e->args.push_back(std::move(a));
  return e;
}

ExprPtr apply(std::shared_ptr<const Morphism> m, ExprPtr a) {
  auto e = make(Expr::Kind::Apply);
  e->morphism = std::move(m);
  e->args.push_back(std::move(a));
  return e;
}

ExprPtr add(ExprPtr a, ExprPtr b) { return sum({{1, std::move(a)}, {1, std::move(b)}}); }
ExprPtr sub(ExprPtr a, ExprPtr b) { return sum({{1, std::move(a)}, {-1, std::move(b)}}); }
ExprPtr neg(ExprPtr a) { return sum({{-1, std::move(a)}}); }
ExprPtr scale(const Rational& c, ExprPtr a) { return sum({{c, std::move(a)}}); }
ExprPtr mul(ExprPtr a, ExprPtr b) { return product({std::move(a), std::move(b)}); }

ExprPtr word(const Word& w) {
  if (w.letters.empty()) return idempotent(w.tgt);
  std::vector<ExprPtr> f;
  for (int g : w.letters) f.push_back(generator(g));
  return product(std::move(f));
}

ExprPtr element(const Element& el) {
  std::vector<std::pair<Rational, ExprPtr>> t;
  for (const auto& [w, c] : el.terms) t.emplace_back(c, word(w));
  return sum(std::move(t));
}

}  // namespace mppa::expr
