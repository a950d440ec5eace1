#include "mppa/bimodule.hpp"

#include "mppa/error.hpp"

#include <algorithm>

namespace mppa {

int FreeBimodule::marker_index(const std::string& n) const {
  for (std::size_t i = 0; i < markers.size(); ++i)
    if (markers[i].name == n) return static_cast<int>(i);
  return -1;
}

ModulePtr make_module(std::string name, AlgebraPtr alg, std::vector<Marker> markers) {
  auto m = std::make_shared<FreeBimodule>();
  m->name = std::move(name);
  m->iota_marker.assign(static_cast<std::size_t>(alg->num_generators()), -1);
  m->alg = std::move(alg);
  m->markers = std::move(markers);
  return m;
}

ModulePtr omega_module(std::string name, AlgebraPtr alg, const std::vector<std::string>& gens) {
  std::vector<Marker> markers;
  std::vector<int> iota(static_cast<std::size_t>(alg->num_generators()), -1);
  for (int g = 0; g < alg->num_generators(); ++g) {
    const auto& gen = alg->generator(g);
    bool wanted = gens.empty() ? (gen.recipe == RecipeKind::Free && gen.degree == 0)
                               : std::find(gens.begin(), gens.end(), gen.name) != gens.end();
    if (!wanted) continue;
    iota[g] = static_cast<int>(markers.size());
    markers.push_back({"m_" + gen.name, alg->gen_tgt(g), alg->gen_src(g), 1});
  }
  for (int v = 0; v < alg->num_vertices(); ++v) markers.push_back({"U_" + alg->vertex_name(v), v, v, 0});
  auto m = std::make_shared<FreeBimodule>();
  m->name = std::move(name);
  m->alg = std::move(alg);
  m->markers = std::move(markers);
  m->iota_marker = std::move(iota);
  return m;
}

void BimoduleElement::add(const Word& p, int marker, const Word& q, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(BimoduleKey{p, marker, q}, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

BimoduleElement& BimoduleElement::operator+=(const BimoduleElement& o) {
  for (const auto& [k, c] : o.terms) add(std::get<0>(k), std::get<1>(k), std::get<2>(k), c);
  return *this;
}

BimoduleElement& BimoduleElement::operator-=(const BimoduleElement& o) {
  for (const auto& [k, c] : o.terms) add(std::get<0>(k), std::get<1>(k), std::get<2>(k), -c);
  return *this;
}

BimoduleElement& BimoduleElement::operator*=(const Rational& c) {
  if (c == 0) terms.clear();
  for (auto& [k, v] : terms) v *= c;
  return *this;
}

BimoduleElement operator+(BimoduleElement a, const BimoduleElement& b) { return a += b; }
BimoduleElement operator-(BimoduleElement a, const BimoduleElement& b) { return a -= b; }
BimoduleElement operator*(const Rational& c, BimoduleElement a) { return a *= c; }

namespace bexpr {

namespace {
std::shared_ptr<BimoduleExpr> node(BimoduleExpr::Kind k) {
  auto n = std::make_shared<BimoduleExpr>();
  n->kind = k;
  return n;
}
}  // namespace

BimoduleExprPtr leaf(ExprPtr p, int marker, ExprPtr q) {
  auto n = node(BimoduleExpr::Kind::Leaf);
  n->left = std::move(p);
  n->right = std::move(q);
  n->marker = marker;
  return n;
}

BimoduleExprPtr leaf(const Algebra& alg, const std::string& p, int marker, const std::string& q) {
  return leaf(alg.parse_expr(p), marker, alg.parse_expr(q));
}

BimoduleExprPtr zero() { return node(BimoduleExpr::Kind::Sum); }

BimoduleExprPtr sum(std::vector<std::pair<Rational, BimoduleExprPtr>> terms) {
  auto n = node(BimoduleExpr::Kind::Sum);
  for (auto& [c, e] : terms) {
    n->coeffs.push_back(c);
    n->args.push_back(std::move(e));
  }
  return n;
}

BimoduleExprPtr add(BimoduleExprPtr a, BimoduleExprPtr b) { return sum({{1, std::move(a)}, {1, std::move(b)}}); }
BimoduleExprPtr sub(BimoduleExprPtr a, BimoduleExprPtr b) { return sum({{1, std::move(a)}, {-1, std::move(b)}}); }
BimoduleExprPtr scale(const Rational& c, BimoduleExprPtr a) { return sum({{c, std::move(a)}}); }

BimoduleExprPtr lmul(ExprPtr a, BimoduleExprPtr x) {
  auto n = node(BimoduleExpr::Kind::LeftMul);
  n->left = std::move(a);
  n->args.push_back(std::move(x));
  return n;
}

BimoduleExprPtr rmul(BimoduleExprPtr x, ExprPtr b) {
  auto n = node(BimoduleExpr::Kind::RightMul);
  n->right = std::move(b);
  n->args.push_back(std::move(x));
  return n;
}

BimoduleExprPtr commutator(ExprPtr a, BimoduleExprPtr x) { return sub(lmul(a, x), rmul(x, a)); }

BimoduleExprPtr apply(BimoduleMapPtr f, BimoduleExprPtr x) {
  auto n = node(BimoduleExpr::Kind::Apply);
  n->map = std::move(f);
  n->args.push_back(std::move(x));
  return n;
}

BimoduleExprPtr iota(ExprPtr a) {
  auto n = node(BimoduleExpr::Kind::Iota);
  n->left = std::move(a);
  return n;
}

BimoduleExprPtr element(const BimoduleElement& x) {
  std::vector<std::pair<Rational, BimoduleExprPtr>> terms;
  for (const auto& [k, c] : x.terms)
    terms.emplace_back(c, leaf(expr::word(std::get<0>(k)), std::get<1>(k), expr::word(std::get<2>(k))));
  return sum(std::move(terms));
}

}  // namespace bexpr

BimoduleElement bimodule_leaf(const FreeBimodule& m, const Element& p, int marker, const Element& q) {
  const Marker& mk = m.markers.at(static_cast<std::size_t>(marker));
  BimoduleElement r;
  for (const auto& [wp, cp] : p.terms) {
    if (wp.src != mk.left) continue;
    for (const auto& [wq, cq] : q.terms)
      if (wq.tgt == mk.right) r.add(wp, marker, wq, cp * cq);
  }
  return r;
}

BimoduleElement left_mul(const Algebra& alg, const Element& a, const BimoduleElement& x) {
  BimoduleElement r;
  for (const auto& [k, c] : x.terms) {
    Element prod = alg.mul(a, Element(std::get<0>(k)));
    for (const auto& [w, pc] : prod.terms) r.add(w, std::get<1>(k), std::get<2>(k), c * pc);
  }
  return r;
}

BimoduleElement right_mul(const Algebra& alg, const BimoduleElement& x, const Element& b) {
  BimoduleElement r;
  for (const auto& [k, c] : x.terms) {
    Element prod = alg.mul(Element(std::get<2>(k)), b);
    for (const auto& [w, pc] : prod.terms) r.add(std::get<0>(k), std::get<1>(k), w, c * pc);
  }
  return r;
}

namespace {

BimoduleElement iota_generator(const FreeBimodule& m, int g);

BimoduleElement iota_word(const FreeBimodule& m, const Word& w) {
  const Algebra& alg = *m.alg;
  BimoduleElement r;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    std::vector<int> pre(w.letters.begin(), w.letters.begin() + static_cast<long>(i));
    std::vector<int> post(w.letters.begin() + static_cast<long>(i) + 1, w.letters.end());
    const int g = w.letters[i];
    Element p = pre.empty() ? alg.idempotent(w.tgt) : Element(alg.make_word(pre));
    Element q = post.empty() ? alg.idempotent(w.src) : Element(alg.make_word(post));
    r += right_mul(alg, left_mul(alg, p, iota_generator(m, g)), q);
  }
  return r;
}

BimoduleElement iota_generator(const FreeBimodule& m, int g) {
  const Algebra& alg = *m.alg;
  const Generator& gen = alg.generator(g);
  if (m.iota_marker.at(static_cast<std::size_t>(g)) >= 0) {
    Word et = idempotent_word(alg.gen_tgt(g)), es = idempotent_word(alg.gen_src(g));
    BimoduleElement r;
    r.add(et, m.iota_marker[static_cast<std::size_t>(g)], es, 1);
    return r;
  }
  switch (gen.recipe) {
    case RecipeKind::InverseOf: {
      // ι(g) = -g ι(r) g when g = r^{-1}
      Element ge = alg.gen(g);
      return -1 * right_mul(alg, left_mul(alg, ge, iota(m, alg.eval(*alg.recipe_expr(g)))), ge);
    }
    case RecipeKind::DefinedAs:
      return iota(m, alg.eval(*alg.recipe_expr(g)));
    case RecipeKind::Free:
      break;
  }
  throw Error("iota: generator '" + gen.name + "' has no marker in " + m.name);
}

}  // namespace

BimoduleElement iota(const FreeBimodule& m, const Element& a) {
  BimoduleElement r;
  for (const auto& [w, c] : m.alg->nf(a).terms) r += c * iota_word(m, w);
  return r;
}

BimoduleElement eval_bimodule(const FreeBimodule& m, const BimoduleExpr& e) {
  const Algebra& alg = *m.alg;
  switch (e.kind) {
    case BimoduleExpr::Kind::Leaf:
      return bimodule_leaf(m, alg.eval(*e.left), e.marker, alg.eval(*e.right));
    case BimoduleExpr::Kind::Sum: {
      BimoduleElement r;
      for (std::size_t i = 0; i < e.args.size(); ++i) r += e.coeffs[i] * eval_bimodule(m, *e.args[i]);
      return r;
    }
    case BimoduleExpr::Kind::LeftMul:
      return left_mul(alg, alg.eval(*e.left), eval_bimodule(m, *e.args.front()));
    case BimoduleExpr::Kind::RightMul:
      return right_mul(alg, eval_bimodule(m, *e.args.front()), alg.eval(*e.right));
    case BimoduleExpr::Kind::Apply: {
      if (&e.map->target() != &m) throw Error("bimodule map '" + e.map->name() + "' lands in another module");
      return e.map->apply(eval_bimodule(e.map->source(), *e.args.front()));
    }
    case BimoduleExpr::Kind::Iota:
      return iota(m, alg.eval(*e.left));
  }
  throw Error("unreachable bimodule expression kind");
}

std::string print_bimodule(const FreeBimodule& m, const BimoduleElement& x) {
  if (x.is_zero()) return "0";
  const Algebra& alg = *m.alg;
  std::string s;
  bool first = true;
  for (const auto& [k, c] : x.terms) {
    const auto& [p, g, q] = k;
    if (first)
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (abs(c) != 1) s += to_string(abs(c)) + "*";
    if (!p.is_idempotent()) s += alg.print_word(p) + "*";
    s += "[" + m.markers[static_cast<std::size_t>(g)].name + "]";
    if (!q.is_idempotent()) s += "*" + alg.print_word(q);
    first = false;
  }
  return s;
}

BimoduleMap::BimoduleMap(std::string name, ModulePtr source, ModulePtr target, std::vector<BimoduleExprPtr> images,
                         int degree)
    : name_(std::move(name)),
      source_(std::move(source)),
      target_(std::move(target)),
      exprs_(std::move(images)),
      degree_(degree) {
  if (source_->alg != target_->alg) throw ValidationError("bimodule map '" + name_ + "': modules over different algebras");
  if (exprs_.size() != source_->markers.size())
    throw ValidationError("bimodule map '" + name_ + "': one image per marker is required");
  for (std::size_t i = 0; i < exprs_.size(); ++i) {
    const Marker& mk = source_->markers[i];
    BimoduleElement im = eval_bimodule(*target_, *exprs_[i]);
    for (const auto& [k, c] : im.terms) {
      const auto& [p, g, q] = k;
      const Marker& tk = target_->markers[static_cast<std::size_t>(g)];
      if (p.tgt != mk.left || q.src != mk.right)
        throw ValidationError("bimodule map '" + name_ + "': image of " + mk.name + " has wrong endpoints");
      if (tk.degree != mk.degree + degree_)
        throw ValidationError("bimodule map '" + name_ + "': image of " + mk.name + " has wrong degree");
    }
    images_.push_back(std::move(im));
  }
}

BimoduleElement BimoduleMap::apply(const BimoduleElement& x) const {
  const Algebra& alg = *source_->alg;
  BimoduleElement r;
  for (const auto& [k, c] : x.terms) {
    const auto& [p, g, q] = k;
    r += c * right_mul(alg, left_mul(alg, Element(p), images_.at(static_cast<std::size_t>(g))), Element(q));
  }
  return r;
}

BimoduleMapPtr make_map(std::string name, ModulePtr source, ModulePtr target,
                        const std::map<std::string, BimoduleExprPtr>& images, int degree) {
  std::vector<BimoduleExprPtr> ims(source->markers.size(), bexpr::zero());
  for (const auto& [n, e] : images) {
    int i = source->marker_index(n);
    if (i < 0) throw ValidationError("bimodule map '" + name + "': unknown marker '" + n + "'");
    ims[static_cast<std::size_t>(i)] = e;
  }
  return std::make_shared<const BimoduleMap>(std::move(name), std::move(source), std::move(target), std::move(ims),
                                             degree);
}

BimoduleMapPtr compose(const BimoduleMapPtr& g, const BimoduleMapPtr& f, std::string name) {
  if (&f->target() != &g->source()) throw ValidationError("compose: maps are not composable");
  std::vector<BimoduleExprPtr> ims;
  for (std::size_t i = 0; i < f->source().markers.size(); ++i) ims.push_back(bexpr::apply(g, f->image_expr(static_cast<int>(i))));
  if (name.empty()) name = g->name() + "∘" + f->name();
  return std::make_shared<const BimoduleMap>(std::move(name), f->source_ptr(), g->target_ptr(), std::move(ims),
                                             f->degree() + g->degree());
}

BimoduleMapPtr dualize(const BimoduleMap& phi, const DualMarkers& dsrc, const DualMarkers& dtgt, std::string name) {
  // phi: F -> G; result: D(G) -> D(F)
  const FreeBimodule& dg = *dtgt.dual;
  std::vector<BimoduleElement> ims(dg.markers.size());
  for (std::size_t g = 0; g < phi.source().markers.size(); ++g) {
    auto [dgm, sg] = dsrc.of.at(g);
    for (const auto& [k, c] : phi.image(static_cast<int>(g)).terms) {
      const auto& [p, gp, q] = k;
      auto [dgp, sgp] = dtgt.of.at(static_cast<std::size_t>(gp));
      ims.at(static_cast<std::size_t>(dgp)).add(q, dgm, p, c * sg * sgp);
    }
  }
  std::vector<BimoduleExprPtr> exprs;
  for (const auto& im : ims) exprs.push_back(bexpr::element(im));
  return std::make_shared<const BimoduleMap>(std::move(name), dtgt.dual, dsrc.dual, std::move(exprs), phi.degree());
}

// Matrix oracle.

const Matrix& BimoduleOracle::weight(int side, const FreeBimodule& m, int marker, int vertex) const {
  auto key = std::make_tuple(side * 1000003 + marker, &m, vertex, 0);
  auto it = weights_.find(key);
  if (it != weights_.end()) return it->second;
  const Marker& mk = m.markers.at(static_cast<std::size_t>(marker));
  std::uint64_t stream = (static_cast<std::uint64_t>(side) << 48) ^ (static_cast<std::uint64_t>(marker) << 24) ^
                         static_cast<std::uint64_t>(vertex);
  Matrix w = side == 0 ? random_matrix(ev_.dim(mk.left), ev_.dim(vertex), derive_seed(seed_, stream))
                       : random_matrix(ev_.dim(vertex), ev_.dim(mk.right), derive_seed(seed_, stream));
  return weights_.emplace(key, std::move(w)).first->second;
}

Rational BimoduleOracle::functional(const FreeBimodule& m, const Formal& x) const {
  Rational total = 0;
  for (const auto& t : x)
    total += t.c * (weight(0, m, t.marker, t.pk.first) * t.p).trace() * (weight(1, m, t.marker, t.qk.second) * t.q).trace();
  return total;
}

namespace {

using Formal = BimoduleOracle::Formal;

Formal lmul_formal(const BlockMatrix& a, const Formal& x) {
  Formal r;
  for (const auto& t : x)
    for (const auto& [k, m] : a)
      if (k.second == t.pk.first) r.push_back({t.c, t.marker, {k.first, t.pk.second}, m * t.p, t.qk, t.q});
  return r;
}

Formal rmul_formal(const Formal& x, const BlockMatrix& b) {
  Formal r;
  for (const auto& t : x)
    for (const auto& [k, m] : b)
      if (k.first == t.qk.second) r.push_back({t.c, t.marker, t.pk, t.p, {t.qk.first, k.second}, t.q * m});
  return r;
}

void append(Formal& a, const Formal& b, const Rational& c) {
  for (const auto& t : b) {
    a.push_back(t);
    a.back().c *= c;
  }
}

}  // namespace

Formal BimoduleOracle::iota(const FreeBimodule& m, const Expr& a) const {
  const Algebra& alg = *m.alg;
  switch (a.kind) {
    case Expr::Kind::Scalar:
    case Expr::Kind::Idempotent:
      return {};
    case Expr::Kind::Generator: {
      const int g = a.index;
      const int mk = m.iota_marker.at(static_cast<std::size_t>(g));
      if (mk >= 0) {
        const int t = alg.gen_tgt(g), s = alg.gen_src(g);
        return {{1, mk, {t, t}, Matrix::identity(ev_.dim(t)), {s, s}, Matrix::identity(ev_.dim(s))}};
      }
      const Generator& gen = alg.generator(g);
      if (gen.recipe == RecipeKind::InverseOf) {
        BlockMatrix G = ev_.eval(a);
        Formal r = rmul_formal(lmul_formal(G, iota(m, *alg.recipe_expr(g))), G);
        for (auto& t : r) t.c = -t.c;
        return r;
      }
      if (gen.recipe == RecipeKind::DefinedAs) return iota(m, *alg.recipe_expr(g));
      throw Error("iota: generator '" + gen.name + "' has no marker in " + m.name);
    }
    case Expr::Kind::Macro:
      return iota(m, *alg.macro_expr(a.index));
    case Expr::Kind::Sum: {
      Formal r;
      for (std::size_t i = 0; i < a.args.size(); ++i) append(r, iota(m, *a.args[i]), a.coeffs[i]);
      return r;
    }
    case Expr::Kind::Product: {
      Formal r;
      const std::size_t n = a.args.size();
      std::vector<BlockMatrix> vals;
      for (const auto& f : a.args) vals.push_back(ev_.eval(*f));
      for (std::size_t i = 0; i < n; ++i) {
        Formal d = iota(m, *a.args[i]);
        for (std::size_t j = i; j-- > 0;) d = lmul_formal(vals[j], d);
        for (std::size_t j = i + 1; j < n; ++j) d = rmul_formal(d, vals[j]);
        append(r, d, 1);
      }
      return r;
    }
    case Expr::Kind::Inverse: {
      BlockMatrix inv = ev_.eval(a);
      Formal r = rmul_formal(lmul_formal(inv, iota(m, *a.args.front())), inv);
      for (auto& t : r) t.c = -t.c;
      return r;
    }
    case Expr::Kind::Apply:
      break;
  }
  throw Error("iota: morphism images are not supported by the oracle");
}

const std::vector<Formal>& BimoduleOracle::images(const BimoduleMap& f) const {
  auto it = cache_.find(&f);
  if (it != cache_.end()) return it->second;
  std::vector<Formal> ims;
  for (std::size_t i = 0; i < f.source().markers.size(); ++i) ims.push_back(eval(f.target(), *f.image_expr(static_cast<int>(i))));
  return cache_.emplace(&f, std::move(ims)).first->second;
}

Formal BimoduleOracle::eval(const FreeBimodule& m, const BimoduleExpr& e) const {
  switch (e.kind) {
    case BimoduleExpr::Kind::Leaf: {
      const Marker& mk = m.markers.at(static_cast<std::size_t>(e.marker));
      BlockMatrix P = ev_.eval(*e.left), Q = ev_.eval(*e.right);
      Formal r;
      for (const auto& [pk, pm] : P) {
        if (pk.second != mk.left) continue;
        for (const auto& [qk, qm] : Q)
          if (qk.first == mk.right) r.push_back({1, e.marker, pk, pm, qk, qm});
      }
      return r;
    }
    case BimoduleExpr::Kind::Sum: {
      Formal r;
      for (std::size_t i = 0; i < e.args.size(); ++i) append(r, eval(m, *e.args[i]), e.coeffs[i]);
      return r;
    }
    case BimoduleExpr::Kind::LeftMul:
      return lmul_formal(ev_.eval(*e.left), eval(m, *e.args.front()));
    case BimoduleExpr::Kind::RightMul:
      return rmul_formal(eval(m, *e.args.front()), ev_.eval(*e.right));
    case BimoduleExpr::Kind::Apply: {
      const BimoduleMap& f = *e.map;
      Formal x = eval(f.source(), *e.args.front());
      const auto& ims = images(f);
      Formal r;
      for (const auto& t : x) {
        BlockMatrix P{{t.pk, t.p}}, Q{{t.qk, t.q}};
        append(r, rmul_formal(lmul_formal(P, ims.at(static_cast<std::size_t>(t.marker))), Q), t.c);
      }
      return r;
    }
    case BimoduleExpr::Kind::Iota:
      return iota(m, *e.left);
  }
  throw Error("unreachable bimodule expression kind");
}

}  // namespace mppa
