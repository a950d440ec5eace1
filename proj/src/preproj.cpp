#include "mppa/preproj.hpp"

#include "mppa/builtins.hpp"
#include "mppa/error.hpp"

#include <json.hpp>

#include <algorithm>

namespace mppa {

namespace {

std::vector<std::string> vertex_order(const Quiver& q, const FusionOrder& ord) {
  return ord.vertex_order.empty() ? q.vertices : ord.vertex_order;
}

const std::vector<std::string>& listed(const std::map<std::string, std::vector<std::string>>& m, const std::string& v) {
  static const std::vector<std::string> none;
  auto it = m.find(v);
  return it == m.end() ? none : it->second;
}

}  // namespace

MomentMap moment_map(const AlgebraPtr& loc, const Quiver& q, const FusionOrder& ord) {
  check_fusion_order(q, ord);
  MomentMap mm;
  mm.alg = loc;
  mm.order = ord;
  const Algebra& alg = *loc;
  for (const auto& v : vertex_order(q, ord)) {
    std::vector<ExprPtr> f, finv;
    for (const auto& e : listed(ord.incoming, v)) f.push_back(alg.parse_expr(loc_b_name(e)));
    for (const auto& e : listed(ord.outgoing, v)) f.push_back(alg.parse_expr(loc_inverse_name(e)));
    const auto& out = listed(ord.outgoing, v);
    const auto& in = listed(ord.incoming, v);
    for (auto it = out.rbegin(); it != out.rend(); ++it) finv.push_back(alg.parse_expr(loc_a_name(*it)));
    for (auto it = in.rbegin(); it != in.rend(); ++it) finv.push_back(alg.parse_expr(loc_binv_name(*it)));
    const int vi = alg.vertex_index(v);
    mm.mu_expr[v] = f.empty() ? expr::idempotent(vi) : expr::product(f);
    mm.mu_inv_expr[v] = finv.empty() ? expr::idempotent(vi) : expr::product(finv);
    mm.mu[v] = alg.eval(*mm.mu_expr[v]);
    mm.mu_inv[v] = alg.eval(*mm.mu_inv_expr[v]);
  }
  return mm;
}

MomentMap moment_map(const Quiver& q, const FusionOrder& ord) { return moment_map(quiver_loc(q), q, ord); }

MorphismPtr moment_morphism(const MomentMap& mm) {
  const Algebra& alg = *mm.alg;
  Presentation p;
  p.name = "moment_source";
  for (int v = 0; v < alg.num_vertices(); ++v) {
    const std::string& n = alg.vertex_name(v);
    p.vertices.push_back(n);
  }
  for (const auto& [v, e] : mm.mu) {
    p.generators.push_back({"z_" + v, v, v, 0, RecipeKind::Free, ""});
    p.generators.push_back({"zinv_" + v, v, v, 0, RecipeKind::InverseOf, "z_" + v});
    p.rules.push_back({"z_" + v + "*zinv_" + v, "id(" + v + ")"});
    p.rules.push_back({"zinv_" + v + "*z_" + v, "id(" + v + ")"});
  }
  auto src = make_algebra(p);
  std::vector<int> vm;
  for (int v = 0; v < src->num_vertices(); ++v) vm.push_back(alg.vertex_index(src->vertex_name(v)));
  std::vector<Element> ims;
  std::vector<ExprPtr> exprs;
  for (const auto& [v, e] : mm.mu) {
    ims.push_back(e);
    exprs.push_back(mm.mu_expr.at(v));
    ims.push_back(mm.mu_inv.at(v));
    exprs.push_back(mm.mu_inv_expr.at(v));
  }
  return std::make_shared<const Morphism>("mu", src, mm.alg, vm, ims, exprs);
}

FusionResult fusion_build(const AlgebraPtr& loc, const Quiver& q, const FusionOrder& ord) {
  check_fusion_order(q, ord);
  FusionResult r;
  const Quiver sep = separated(q);
  auto sepalg = make_algebra(quiver_loc_presentation(sep, "quiver_loc_sep"));

  std::map<std::string, std::string> vmap, gimg;
  for (const auto& e : q.edges) {
    vmap[separated_source_vertex(e.id)] = e.src;
    vmap[separated_target_vertex(e.id)] = e.tgt;
    gimg[e.id] = e.id;
    gimg[star_name(e.id)] = star_name(e.id);
    gimg[loc_inverse_name(e.id)] = loc_inverse_name(e.id);
  }
  auto glue = Morphism::make("glue", sepalg, loc, vmap, gimg);
  r.morphisms.push_back(glue);

  // Per-edge A_2 moment maps on the separated quiver.
  std::map<std::string, MorphismPtr> sx, sy;
  for (const auto& e : q.edges) {
    const std::string x = "x_" + e.id, y = "y_" + e.id;
    sx[e.id] = Morphism::make("sep_" + x, laurent(x), sepalg, {{"o", separated_source_vertex(e.id)}},
                              {{x, loc_inverse_name(e.id)}, {x + "inv", loc_a_name(e.id)}});
    sy[e.id] = Morphism::make("sep_" + y, laurent(y), sepalg, {{"o", separated_target_vertex(e.id)}},
                              {{y, loc_b_name(e.id)}, {y + "inv", loc_binv_name(e.id)}});
    r.morphisms.push_back(sx[e.id]);
    r.morphisms.push_back(sy[e.id]);
  }

  const Algebra& alg = *loc;
  for (const auto& v : vertex_order(q, ord)) {
    std::vector<std::string> vars;
    std::vector<MorphismPtr> parts;
    for (const auto& e : listed(ord.incoming, v)) {
      vars.push_back("y_" + e);
      parts.push_back(sy.at(e));
    }
    for (const auto& e : listed(ord.outgoing, v)) {
      vars.push_back("x_" + e);
      parts.push_back(sx.at(e));
    }
    if (vars.empty()) {
      r.mu[v] = alg.idempotent(alg.vertex_index(v));
      continue;
    }
    // Iterated binary fusion w_k -> w_k w_{k+1}.
    auto wname = [](std::size_t i) { return "w" + std::to_string(i + 1); };
    std::vector<std::string> ws{wname(0)};
    AlgebraPtr cur = free_group_algebra(ws);
    MorphismPtr total;
    for (std::size_t k = 1; k < vars.size(); ++k) {
      std::vector<std::string> next = ws;
      next.push_back(wname(k));
      AlgebraPtr nxt = free_group_algebra(next);
      std::map<std::string, std::string> im;
      for (const auto& w : ws) {
        im[w] = w;
        im[w + "inv"] = w + "inv";
      }
      const std::string last = ws.back(), fresh = wname(k);
      im[last] = last + "*" + fresh;
      im[last + "inv"] = fresh + "inv*" + last + "inv";
      auto step = Morphism::make("fuse_" + v + "_" + std::to_string(k), cur, nxt, {{"o", "o"}}, im);
      r.morphisms.push_back(step);
      total = total ? compose(step, total) : step;
      ws = next;
      cur = nxt;
    }
    AlgebraPtr cv = free_group_algebra(vars);
    std::map<std::string, std::string> ren;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      ren[ws[i]] = vars[i];
      ren[ws[i] + "inv"] = vars[i] + "inv";
    }
    auto rename = Morphism::make("label_" + v, cur, cv, {{"o", "o"}}, ren);
    r.morphisms.push_back(rename);
    total = total ? compose(rename, total) : rename;

    // C_v -> loc through the separated quiver and the gluing functor.
    std::vector<Element> ims;
    for (int g = 0; g < cv->num_generators(); ++g) {
      const std::string& gn = cv->generator(g).name;
      const bool inv = gn.size() > 3 && gn.compare(gn.size() - 3, 3, "inv") == 0;
      const std::string base = inv ? gn.substr(0, gn.size() - 3) : gn;
      const std::size_t idx = static_cast<std::size_t>(std::find(vars.begin(), vars.end(), base) - vars.begin());
      const Morphism& part = *parts.at(idx);
      ims.push_back(glue->apply(part.image(part.source().generator_index(gn))));
    }
    auto phi = make_morphism("glue_" + v, cv, loc, {alg.vertex_index(v)}, ims);
    r.morphisms.push_back(phi);
    auto full = compose(phi, total);
    r.mu[v] = full->image(0);
  }
  return r;
}

Element cbs_relation(const AlgebraPtr& loc, const Quiver& q, const std::map<std::string, Rational>& qv,
                     const FusionOrder& ord) {
  check_fusion_order(q, ord);
  const Algebra& alg = *loc;
  Element prod = alg.one();
  for (const auto& v : vertex_order(q, ord)) {
    for (const auto& e : listed(ord.incoming, v)) prod = alg.mul(prod, alg.parse("1 + " + e + "*" + star_name(e)));
    for (const auto& e : listed(ord.outgoing, v)) {
      const Edge* ed = q.edge(e);
      prod = alg.mul(prod, alg.parse("1 - id(" + ed->src + ") + " + loc_inverse_name(e)));
    }
  }
  for (const auto& v : q.vertices) {
    auto it = qv.find(v);
    prod -= (it == qv.end() ? Rational(1) : it->second) * alg.idempotent(alg.vertex_index(v));
  }
  return alg.nf(prod);
}

Element DGAlgebra::d(const Element& a) const {
  Element r;
  for (const auto& [w, c] : a.terms) {
    int sign_deg = 0;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
      const int g = w.letters[i];
      const Element& dg = d_gen.at(static_cast<std::size_t>(g));
      if (!dg.is_zero()) {
        std::vector<int> pre(w.letters.begin(), w.letters.begin() + static_cast<long>(i));
        std::vector<int> post(w.letters.begin() + static_cast<long>(i) + 1, w.letters.end());
        Element p = pre.empty() ? alg->idempotent(w.tgt) : Element(alg->make_word(pre));
        Element s = post.empty() ? alg->idempotent(w.src) : Element(alg->make_word(post));
        const Rational sign = (sign_deg % 2 == 0) ? 1 : -1;
        r += (sign * c) * alg->mul(alg->mul(p, dg), s);
      }
      sign_deg += alg->generator(g).degree;
    }
  }
  return r;
}

DGAlgebra build_upsilon(const Quiver& q, const std::map<std::string, Rational>& qv, const FusionOrder& ord) {
  require_valid(q);
  check_fusion_order(q, ord);
  for (const auto& [v, c] : qv) {
    if (q.vertex_index(v) < 0) throw ValidationError("q given for unknown vertex '" + v + "'");
    if (c == 0) throw ValidationError("q_" + v + " must be nonzero");
  }
  Presentation p = quiver_loc_presentation(q, "Upsilon");
  for (const auto& v : q.vertices) p.generators.push_back({"zprime_" + v, v, v, -1, RecipeKind::Free, ""});
  DGAlgebra dg;
  dg.alg = make_algebra(p);
  dg.quiver = q;
  dg.order = ord;
  for (const auto& v : q.vertices) {
    auto it = qv.find(v);
    dg.q[v] = it == qv.end() ? Rational(1) : it->second;
  }
  MomentMap mm = moment_map(dg.alg, q, ord);
  dg.d_gen.assign(static_cast<std::size_t>(dg.alg->num_generators()), Element());
  for (const auto& v : q.vertices) {
    const int g = dg.alg->generator_index(dg.zprime(v));
    dg.d_gen[static_cast<std::size_t>(g)] =
        mm.mu.at(v) - dg.q.at(v) * dg.alg->idempotent(dg.alg->vertex_index(v));
  }
  return dg;
}

std::string upsilon_json(const DGAlgebra& dg) {
  const Algebra& alg = *dg.alg;
  nlohmann::ordered_json j;
  j["algebra"] = alg.name();
  j["vertices"] = dg.quiver.vertices;
  nlohmann::ordered_json qj = nlohmann::ordered_json::object();
  for (const auto& v : dg.quiver.vertices) qj[v] = to_string(dg.q.at(v));
  j["q"] = qj;
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (int g = 0; g < alg.num_generators(); ++g) {
    const auto& gen = alg.generator(g);
    gens.push_back({{"name", gen.name}, {"src", gen.src}, {"tgt", gen.tgt}, {"degree", gen.degree}});
  }
  j["generators"] = gens;
  nlohmann::ordered_json rules = nlohmann::ordered_json::array();
  for (const auto& r : alg.presentation().rules) rules.push_back({{"lhs", r.lhs}, {"rhs", r.rhs}});
  j["rules"] = rules;
  nlohmann::ordered_json d = nlohmann::ordered_json::object();
  for (int g = 0; g < alg.num_generators(); ++g)
    if (!dg.d_gen[static_cast<std::size_t>(g)].is_zero())
      d[alg.generator(g).name] = alg.print(dg.d_gen[static_cast<std::size_t>(g)]);
  j["differential"] = d;
  return j.dump(2) + "\n";
}

namespace {

// Incremental row reduction over sparse rows keyed by the largest word.
class SparseSpan {
 public:
  bool reduce(Element& v) const {
    while (!v.is_zero()) {
      const auto& [w, c] = *v.terms.rbegin();
      auto it = rows_.find(w);
      if (it == rows_.end()) return false;
      const Rational f = c / it->second.terms.rbegin()->second;
      v -= f * it->second;
    }
    return true;
  }
  void insert(Element v) {
    if (reduce(v)) return;
    Word lead = v.terms.rbegin()->first;
    rows_.emplace(lead, std::move(v));
  }

 private:
  std::map<Word, Element> rows_;
};

std::vector<std::vector<Word>> words_by_length(const Algebra& alg, int max_len) {
  std::vector<std::vector<Word>> out(static_cast<std::size_t>(max_len) + 1);
  for (int v = 0; v < alg.num_vertices(); ++v) out[0].push_back(idempotent_word(v));
  for (int len = 1; len <= max_len; ++len) {
    for (const auto& w : out[static_cast<std::size_t>(len) - 1]) {
      for (int g = 0; g < alg.num_generators(); ++g) {
        if (alg.generator(g).degree != 0 || alg.generator(g).recipe == RecipeKind::DefinedAs) continue;
        auto c = alg.concat(w, Word{alg.gen_tgt(g), alg.gen_src(g), {g}});
        if (c && alg.is_normal(*c)) out[static_cast<std::size_t>(len)].push_back(*c);
      }
    }
  }
  return out;
}

// Is target in the two-sided ideal generated by gens (multipliers of total length <= bound)?
bool in_ideal(const Algebra& alg, const Element& target, const std::vector<Element>& gens, int bound,
              const std::vector<std::vector<Word>>& words) {
  constexpr std::size_t kCandidateCap = 6000;
  SparseSpan span;
  std::size_t count = 0;
  for (int total = 0; total <= bound; ++total) {
    for (int lu = 0; lu <= total; ++lu) {
      const int lv = total - lu;
      for (const auto& u : words[static_cast<std::size_t>(lu)])
        for (const auto& v : words[static_cast<std::size_t>(lv)])
          for (const auto& g : gens) {
            Element cand = alg.mul(alg.mul(Element(u), g), Element(v));
            if (cand.is_zero()) continue;
            span.insert(std::move(cand));
            if (++count > kCandidateCap) {
              Element t = target;
              return span.reduce(t);
            }
          }
    }
    Element t = target;
    if (span.reduce(t)) return true;
  }
  return false;
}

}  // namespace

H0Report h0_check(const DGAlgebra& dg, const std::map<std::string, Rational>& relation_q, int bound) {
  const Algebra& alg = *dg.alg;
  Element rel = cbs_relation(dg.alg, dg.quiver, relation_q, dg.order);
  std::vector<Element> blocks, dz;
  bool coincide = true;
  for (const auto& v : dg.quiver.vertices) {
    const int vi = alg.vertex_index(v);
    Element b = alg.block(rel, vi, vi);
    Element z = dg.d_gen.at(static_cast<std::size_t>(alg.generator_index(dg.zprime(v))));
    if (!(b == z)) coincide = false;
    blocks.push_back(b);
    dz.push_back(z);
  }
  Element off = rel;
  for (const auto& b : blocks) off -= b;
  if (!off.is_zero()) {
    coincide = false;
    blocks.push_back(off);
  }
  if (coincide) return {H0Status::Coincide, "relation blocks equal d(zprime_v)"};

  const auto words = words_by_length(alg, bound);
  for (std::size_t i = 0; i < dz.size(); ++i)
    if (!in_ideal(alg, dz[i], blocks, bound, words))
      return {H0Status::Uncertified, "d(zprime_" + dg.quiver.vertices[i] + ") not reached by the relation ideal"};
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (!in_ideal(alg, blocks[i], dz, bound, words))
      return {H0Status::Uncertified, "relation block " + std::to_string(i) + " not reached by the d(zprime) ideal"};
  return {H0Status::Certified, "mutual ideal membership found"};
}

Rational det_product(const MomentMap& mm, const Evaluator& ev) {
  Rational p = 1;
  for (const auto& [v, e] : mm.mu_expr) {
    const int vi = mm.alg->vertex_index(v);
    BlockMatrix m = ev.eval(*e);
    auto it = m.find({vi, vi});
    p *= it == m.end() ? Rational(0) : it->second.det();
  }
  return p;
}

}  // namespace mppa
