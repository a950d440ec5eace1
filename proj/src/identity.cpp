#include "mppa/identity.hpp"

#include "mppa/error.hpp"

namespace mppa {

namespace cexpr {

namespace {
std::shared_ptr<ChainExpr> node(ChainExpr::Kind k) {
  auto n = std::make_shared<ChainExpr>();
  n->kind = k;
  return n;
}

ChainExprPtr unary(ChainExpr::Kind k, ChainExprPtr a) {
  auto n = node(k);
  n->args.push_back(std::move(a));
  return n;
}
}  // namespace

ChainExprPtr tensor(std::vector<ExprPtr> slots) {
  auto n = node(ChainExpr::Kind::Tensor);
  n->degree = static_cast<int>(slots.size()) - 1;
  n->slots = std::move(slots);
  return n;
}

ChainExprPtr tensor(const Algebra& alg, const std::vector<std::string>& slots) {
  std::vector<ExprPtr> s;
  for (const auto& t : slots) s.push_back(alg.parse_expr(t));
  return tensor(std::move(s));
}

ChainExprPtr zero(int degree) {
  auto n = node(ChainExpr::Kind::Sum);
  n->degree = degree;
  return n;
}

ChainExprPtr sum(std::vector<std::pair<Rational, ChainExprPtr>> terms) {
  auto n = node(ChainExpr::Kind::Sum);
  for (auto& [c, e] : terms) {
    n->coeffs.push_back(c);
    n->args.push_back(std::move(e));
  }
  return n;
}

ChainExprPtr add(ChainExprPtr a, ChainExprPtr b) { return sum({{1, std::move(a)}, {1, std::move(b)}}); }
ChainExprPtr sub(ChainExprPtr a, ChainExprPtr b) { return sum({{1, std::move(a)}, {-1, std::move(b)}}); }
ChainExprPtr scale(const Rational& c, ChainExprPtr a) { return sum({{c, std::move(a)}}); }
ChainExprPtr b(ChainExprPtr a) { return unary(ChainExpr::Kind::Boundary, std::move(a)); }
ChainExprPtr B(ChainExprPtr a) { return unary(ChainExpr::Kind::Connes, std::move(a)); }
ChainExprPtr unit(ChainExprPtr a) { return unary(ChainExpr::Kind::Unit, std::move(a)); }

ChainExprPtr push(MorphismPtr m, ChainExprPtr a) {
  auto n = node(ChainExpr::Kind::Push);
  n->morphism = std::move(m);
  n->args.push_back(std::move(a));
  return n;
}

}  // namespace cexpr

Chain eval_chain(const ChainComplex& cx, const ChainExpr& e) {
  const Algebra& alg = cx.algebra();
  switch (e.kind) {
    case ChainExpr::Kind::Tensor: {
      std::vector<Element> slots;
      for (const auto& s : e.slots) slots.push_back(alg.eval(*s));
      return cx.tensor(slots);
    }
    case ChainExpr::Kind::Sum: {
      Chain r = cx.zero(e.degree);
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        Chain a = eval_chain(cx, *e.args[i]);
        if (i == 0) r.degree = a.degree;
        r += e.coeffs[i] * a;
      }
      return r;
    }
    case ChainExpr::Kind::Boundary:
      return cx.b(eval_chain(cx, *e.args.front()));
    case ChainExpr::Kind::Connes:
      return cx.B(eval_chain(cx, *e.args.front()));
    case ChainExpr::Kind::Unit:
      return cx.prepend_unit(eval_chain(cx, *e.args.front()));
    case ChainExpr::Kind::Push: {
      const Morphism& m = *e.morphism;
      if (&m.target() != &alg) throw Error("push: morphism '" + m.name() + "' does not land in " + alg.name());
      ChainComplex src(m.source_ptr(), cx.conventions());
      return ChainComplex::push(eval_chain(src, *e.args.front()), m, cx);
    }
  }
  throw Error("unreachable chain expression kind");
}

namespace {

using Formal = ChainOracle::Formal;

void append(Formal& a, const Formal& b, const Rational& c) {
  for (const auto& t : b) {
    a.push_back(t);
    a.back().c *= c;
  }
}

}  // namespace

Formal ChainOracle::eval(const ChainExpr& e) const {
  switch (e.kind) {
    case ChainExpr::Kind::Tensor: {
      std::vector<BlockMatrix> vals;
      for (const auto& s : e.slots) vals.push_back(ev_.eval(*s));
      Formal r;
      Term cur{1, {}};
      auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == vals.size()) {
          if (cur.slots.back().first.second == cur.slots.front().first.first) r.push_back(cur);
          return;
        }
        for (const auto& [k, m] : vals[i]) {
          if (i > 0 && cur.slots.back().first.second != k.first) continue;
          cur.slots.emplace_back(k, m);
          self(self, i + 1);
          cur.slots.pop_back();
        }
      };
      rec(rec, 0);
      return r;
    }
    case ChainExpr::Kind::Sum: {
      Formal r;
      for (std::size_t i = 0; i < e.args.size(); ++i) append(r, eval(*e.args[i]), e.coeffs[i]);
      return r;
    }
    case ChainExpr::Kind::Boundary: {
      Formal r;
      for (const auto& t : eval(*e.args.front())) {
        const std::size_t n = t.slots.size() - 1;
        if (n == 0) continue;
        for (std::size_t i = 0; i < n; ++i) {
          Term nt{(i % 2 == 0) ? t.c : Rational(-t.c), {}};
          for (std::size_t j = 0; j < i; ++j) nt.slots.push_back(t.slots[j]);
          const auto& [ka, ma] = t.slots[i];
          const auto& [kb, mb] = t.slots[i + 1];
          nt.slots.emplace_back(BlockKey{ka.first, kb.second}, ma * mb);
          for (std::size_t j = i + 2; j <= n; ++j) nt.slots.push_back(t.slots[j]);
          r.push_back(std::move(nt));
        }
        Term nt{(n % 2 == 0) ? t.c : Rational(-t.c), {}};
        const auto& [ka, ma] = t.slots[n];
        const auto& [kb, mb] = t.slots[0];
        nt.slots.emplace_back(BlockKey{ka.first, kb.second}, ma * mb);
        for (std::size_t j = 1; j < n; ++j) nt.slots.push_back(t.slots[j]);
        r.push_back(std::move(nt));
      }
      return r;
    }
    case ChainExpr::Kind::Connes: {
      Formal r;
      for (const auto& t : eval(*e.args.front())) {
        const std::size_t n = t.slots.size() - 1;
        for (std::size_t i = 0; i <= n; ++i) {
          const std::size_t ex = conv_.flip_connes_sign ? (n + 1) * i : n * i;
          Term nt{ex % 2 == 0 ? t.c : Rational(-t.c), {}};
          const int v = t.slots[i].first.first;
          nt.slots.emplace_back(BlockKey{v, v}, Matrix::identity(ev_.dim(v)));
          for (std::size_t j = i; j <= n; ++j) nt.slots.push_back(t.slots[j]);
          for (std::size_t j = 0; j < i; ++j) nt.slots.push_back(t.slots[j]);
          r.push_back(std::move(nt));
        }
      }
      return r;
    }
    case ChainExpr::Kind::Unit: {
      Formal r = eval(*e.args.front());
      for (auto& t : r) {
        const int v = t.slots.front().first.first;
        t.slots.insert(t.slots.begin(), {BlockKey{v, v}, Matrix::identity(ev_.dim(v))});
      }
      return r;
    }
    case ChainExpr::Kind::Push: {
      const Morphism& m = *e.morphism;
      ChainOracle sub(ev_.pull_back(m), seed_, conv_);
      Formal r = sub.eval(*e.args.front());
      for (auto& t : r)
        for (auto& [k, mat] : t.slots) k = {m.map_vertex(k.first), m.map_vertex(k.second)};
      return r;
    }
  }
  throw Error("unreachable chain expression kind");
}

const Matrix& ChainOracle::weight(std::size_t slot, const BlockKey& k) const {
  auto key = std::make_pair(slot, k);
  auto it = weights_.find(key);
  if (it != weights_.end()) return it->second;
  std::uint64_t stream = (static_cast<std::uint64_t>(slot) << 40) ^ (static_cast<std::uint64_t>(k.first) << 20) ^
                         static_cast<std::uint64_t>(k.second);
  Matrix w = random_matrix(ev_.dim(k.second), ev_.dim(k.first), derive_seed(seed_, stream));
  if (slot > 0 && k.first == k.second) {
    const int d = w.rows();
    Rational t = 0;
    for (int i = 0; i + 1 < d; ++i) t += w.at(i, i);
    w.at(d - 1, d - 1) = -t;
  }
  return weights_.emplace(key, std::move(w)).first->second;
}

Rational ChainOracle::functional(const Formal& x) const {
  Rational total = 0;
  for (const auto& t : x) {
    Rational v = t.c;
    for (std::size_t i = 0; i < t.slots.size() && v != 0; ++i) v *= (weight(i, t.slots[i].first) * t.slots[i].second).trace();
    total += v;
  }
  return total;
}

Equation element_equation(AlgebraPtr alg, ExprPtr a, ExprPtr b, std::string label) {
  Equation e;
  e.kind = Equation::Kind::Element;
  e.alg = std::move(alg);
  e.a = std::move(a);
  e.b = std::move(b);
  e.label = std::move(label);
  return e;
}

Equation element_equation(AlgebraPtr alg, const std::string& a, const std::string& b, std::string label) {
  ExprPtr ea = alg->parse_expr(a), eb = alg->parse_expr(b);
  return element_equation(std::move(alg), ea, eb, std::move(label));
}

Equation chain_equation(AlgebraPtr alg, ChainExprPtr a, ChainExprPtr b, std::string label) {
  Equation e;
  e.kind = Equation::Kind::Chain;
  e.alg = std::move(alg);
  e.ca = std::move(a);
  e.cb = std::move(b);
  e.label = std::move(label);
  return e;
}

Equation bimodule_equation(ModulePtr m, BimoduleExprPtr a, BimoduleExprPtr b, std::string label) {
  Equation e;
  e.kind = Equation::Kind::Bimodule;
  e.alg = m->alg;
  e.module = std::move(m);
  e.ba = std::move(a);
  e.bb = std::move(b);
  e.label = std::move(label);
  return e;
}

namespace {

std::string prefixed(const Equation& eq, const std::string& s) { return eq.label.empty() ? s : eq.label + ": " + s; }

}  // namespace

CheckResult check_exact(const Equation& eq, const ChainConventions& conv) {
  CheckResult r;
  const Algebra& alg = *eq.alg;
  switch (eq.kind) {
    case Equation::Kind::Element: {
      Element a = alg.eval(*eq.a), b = alg.eval(*eq.b);
      if (alg.certified()) {
        r.pass = a == b;
      } else {
        auto v = equals(alg, a, b);
        r.pass = v.equal;
        r.probabilistic = v.probabilistic;
      }
      if (!r.pass) r.detail = prefixed(eq, "lhs - rhs = " + alg.print(alg.nf(a - b)));
      break;
    }
    case Equation::Kind::Chain: {
      ChainComplex cx(eq.alg, conv);
      Chain d = eval_chain(cx, *eq.ca) - eval_chain(cx, *eq.cb);
      r.pass = d.is_zero();
      if (!r.pass) r.detail = prefixed(eq, "lhs - rhs = " + cx.print(d));
      break;
    }
    case Equation::Kind::Bimodule: {
      BimoduleElement d = eval_bimodule(*eq.module, *eq.ba) - eval_bimodule(*eq.module, *eq.bb);
      r.pass = d.is_zero();
      if (!r.pass) r.detail = prefixed(eq, "lhs - rhs = " + print_bimodule(*eq.module, d));
      break;
    }
  }
  return r;
}

CheckResult check_exact(const Identity& id, const ChainConventions& conv) {
  CheckResult out;
  for (const auto& eq : id.equations) {
    CheckResult r = check_exact(eq, conv);
    out.probabilistic = out.probabilistic || r.probabilistic;
    if (!r.pass) return r;
  }
  if (id.extra) {
    CheckResult r = id.extra(conv);
    r.probabilistic = r.probabilistic || out.probabilistic;
    return r;
  }
  return out;
}

CheckResult check_oracle(const Equation& eq, int trials, std::uint64_t seed) {
  const Algebra& alg = *eq.alg;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t ts = derive_seed(seed, static_cast<std::uint64_t>(t));
    const Dims dims = eq.kind == Equation::Kind::Element ? cycling_dims(alg, t) : uniform_dims(alg, 2 + t % 2);
    bool same = false;
    try {
      Evaluator ev(alg, random_rep(alg, dims, ts));
      switch (eq.kind) {
        case Equation::Kind::Element:
          same = block_equal(ev.eval(*eq.a), ev.eval(*eq.b));
          break;
        case Equation::Kind::Chain: {
          ChainOracle o(ev, derive_seed(ts, 1));
          same = o.functional(o.eval(*eq.ca)) == o.functional(o.eval(*eq.cb));
          break;
        }
        case Equation::Kind::Bimodule: {
          BimoduleOracle o(ev, derive_seed(ts, 2));
          same = o.functional(*eq.module, o.eval(*eq.module, *eq.ba)) ==
                 o.functional(*eq.module, o.eval(*eq.module, *eq.bb));
          break;
        }
      }
    } catch (const Error& e) {
      return {false, false, prefixed(eq, "trial " + std::to_string(t) + ": " + e.what())};
    }
    if (!same)
      return {false, false,
              prefixed(eq, "separated at trial " + std::to_string(t) + ", dimension " + std::to_string(dims.front()))};
  }
  return {true, false, ""};
}

CheckResult check_oracle(const Identity& id, int trials, std::uint64_t seed) {
  if (id.oracle) return id.oracle(trials, seed);
  if (id.equations.empty()) return {true, false, "n/a"};
  for (std::size_t i = 0; i < id.equations.size(); ++i) {
    CheckResult r = check_oracle(id.equations[i], trials, derive_seed(seed, 1000 + i));
    if (!r.pass) return r;
  }
  return {true, false, ""};
}

}  // namespace mppa
