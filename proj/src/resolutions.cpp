#include "mppa/resolutions.hpp"

#include "mppa/builtins.hpp"
#include "mppa/error.hpp"

#include <algorithm>

namespace mppa {

BimoduleExprPtr marker_leaf(const FreeBimodule& m, int marker) {
  const Marker& mk = m.markers.at(static_cast<std::size_t>(marker));
  return bexpr::leaf(expr::idempotent(mk.left), marker, expr::idempotent(mk.right));
}

BimoduleExprPtr marker_leaf(const FreeBimodule& m, const std::string& marker) {
  int i = m.marker_index(marker);
  if (i < 0) throw Error("unknown marker '" + marker + "' in " + m.name);
  return marker_leaf(m, i);
}

std::vector<Equation> chain_map_equations(const BimoduleMapPtr& f, const BimoduleComplex& src,
                                          const BimoduleComplex& tgt, const Rational& sign) {
  std::vector<Equation> out;
  const FreeBimodule& s = *src.module;
  for (std::size_t i = 0; i < s.markers.size(); ++i) {
    auto x = marker_leaf(s, static_cast<int>(i));
    out.push_back(bimodule_equation(tgt.module, bexpr::apply(tgt.d, bexpr::apply(f, x)),
                                    bexpr::scale(sign, bexpr::apply(f, bexpr::apply(src.d, x))),
                                    s.markers[i].name));
  }
  return out;
}

std::vector<Equation> map_equality_equations(const BimoduleMapPtr& g, const BimoduleMapPtr& h,
                                             const std::vector<std::string>& markers) {
  std::vector<Equation> out;
  const FreeBimodule& s = g->source();
  for (std::size_t i = 0; i < s.markers.size(); ++i) {
    const std::string& n = s.markers[i].name;
    if (!markers.empty() && std::find(markers.begin(), markers.end(), n) == markers.end()) continue;
    auto x = marker_leaf(s, static_cast<int>(i));
    out.push_back(bimodule_equation(g->target_ptr(), bexpr::apply(g, x), bexpr::apply(h, x), n));
  }
  return out;
}

namespace {

std::shared_ptr<FreeBimodule> module(std::string name, const AlgebraPtr& alg, std::vector<Marker> markers) {
  auto m = std::make_shared<FreeBimodule>();
  m->name = std::move(name);
  m->alg = alg;
  m->markers = std::move(markers);
  m->iota_marker.assign(static_cast<std::size_t>(alg->num_generators()), -1);
  return m;
}

int inverse_generator(const Algebra& alg, int g) {
  for (int h = 0; h < alg.num_generators(); ++h) {
    const auto& e = alg.recipe_expr(h);
    if (alg.generator(h).recipe == RecipeKind::InverseOf && e && e->kind == Expr::Kind::Generator && e->index == g)
      return h;
  }
  return -1;
}

// α·U_{src α} - U_{tgt α}·α on the marker attached to α.
BimoduleMapPtr omega_differential(const std::string& name, const ModulePtr& P,
                                  const std::map<int, int>& marker_of_gen) {
  const Algebra& alg = *P->alg;
  std::vector<BimoduleExprPtr> ims(P->markers.size(), bexpr::zero());
  for (const auto& [g, mk] : marker_of_gen) {
    const int s = alg.gen_src(g), t = alg.gen_tgt(g);
    const int us = P->marker_index("U_" + alg.vertex_name(s));
    const int ut = P->marker_index("U_" + alg.vertex_name(t));
    ims[static_cast<std::size_t>(mk)] = bexpr::sub(bexpr::leaf(expr::generator(g), us, expr::idempotent(s)),
                                                   bexpr::leaf(expr::idempotent(t), ut, expr::generator(g)));
  }
  return std::make_shared<const BimoduleMap>(name, P, P, std::move(ims), -1);
}

}  // namespace

SmallResolution small_resolution(const AlgebraPtr& alg) {
  SmallResolution r;
  r.alg = alg;
  std::vector<int> gens;
  for (int g = 0; g < alg->num_generators(); ++g)
    if (alg->generator(g).recipe == RecipeKind::Free && inverse_generator(*alg, g) >= 0) gens.push_back(g);
  if (gens.empty()) throw Error("small resolution: " + alg->name() + " has no invertible generators");
  for (int g : gens)
    if (inverse_generator(*alg, g) < 0) throw Error("small resolution: unsupported presentation " + alg->name());

  std::vector<Marker> rm, dm;
  for (int g : gens) {
    r.gens.push_back(alg->generator(g).name);
    rm.push_back({"r1_" + alg->generator(g).name, alg->gen_tgt(g), alg->gen_src(g), 1});
  }
  for (int v = 0; v < alg->num_vertices(); ++v) rm.push_back({"U_" + alg->vertex_name(v), v, v, 0});
  auto R = module("R", alg, rm);
  std::map<int, int> marker_of_gen;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    R->iota_marker[static_cast<std::size_t>(gens[i])] = static_cast<int>(i);
    marker_of_gen[gens[i]] = static_cast<int>(i);
  }
  r.R = {R, omega_differential("d", R, marker_of_gen)};

  for (int v = 0; v < alg->num_vertices(); ++v) dm.push_back({"rd1_" + alg->vertex_name(v), v, v, 1});
  for (int g : gens) dm.push_back({"rd0_" + alg->generator(g).name, alg->gen_src(g), alg->gen_tgt(g), 0});
  auto Rd = module("Rdual", alg, dm);
  r.dual.dual = Rd;
  const int nv = alg->num_vertices();
  for (std::size_t i = 0; i < gens.size(); ++i) r.dual.of.push_back({nv + static_cast<int>(i), -1});
  for (int v = 0; v < nv; ++v) r.dual.of.push_back({v, 1});
  r.Rdual = {Rd, dualize(*r.R.d, r.dual, r.dual, "d_dual")};

  if (gens.size() == 1 && nv == 1) {
    const int g = gens.front(), gi = inverse_generator(*alg, g);
    auto e = expr::idempotent(0);
    r.phi = make_map("phi", Rd, R,
                     {{"rd1_" + alg->vertex_name(0), bexpr::leaf(expr::generator(gi), 0, e)},
                      {"rd0_" + alg->generator(g).name, bexpr::leaf(expr::generator(gi), 1, e)}});
    r.psi = make_map("psi", R, Rd,
                     {{"r1_" + alg->generator(g).name, bexpr::leaf(expr::generator(g), 0, e)},
                      {"U_" + alg->vertex_name(0), bexpr::leaf(expr::generator(g), 1, e)}});
  }
  return r;
}

namespace {

Rational scalar_value(const Element& a) {
  Rational s = 0;
  for (const auto& [w, c] : a.terms) {
    if (!w.is_idempotent()) throw Error("fiber: element does not evaluate to a scalar");
    s += c;
  }
  return s;
}

// Matrix of -⊗_{A^e} k^e applied to the image of one marker, as marker -> scalar.
std::map<int, Rational> fiber_row(const Morphism& ev, const BimoduleElement& x) {
  std::map<int, Rational> row;
  for (const auto& [k, c] : x.terms) {
    const auto& [p, g, q] = k;
    row[g] += c * scalar_value(ev.apply_word(p)) * scalar_value(ev.apply_word(q));
  }
  std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
  return row;
}

}  // namespace

FiberScalars eval_fiber(const SmallResolution& r, const Rational& q) {
  if (!r.phi) throw Error("eval fiber needs a one-generator resolution");
  auto ev = eval_morphism(r.alg, q);
  FiberScalars out;
  auto deg1 = fiber_row(*ev, r.phi->image(0));
  auto deg0 = fiber_row(*ev, r.phi->image(1));
  out.degree1 = deg1.size() == 1 && deg1.count(0) ? deg1[0] : Rational(0);
  out.degree0 = deg0.size() == 1 && deg0.count(1) ? deg0[1] : Rational(0);
  if (deg1.size() != 1) out.degree1 = 0;
  if (deg0.size() != 1) out.degree0 = 0;
  out.differentials_vanish = true;
  for (const auto* c : {&r.R, &r.Rdual})
    for (std::size_t i = 0; i < c->module->markers.size(); ++i)
      if (!fiber_row(*ev, c->d->image(static_cast<int>(i))).empty()) out.differentials_vanish = false;
  return out;
}

bool ae_action_compatible(const AlgebraPtr& alg, const std::vector<std::string>& elements, bool opposite) {
  auto M = module("AxA", alg, {{"U", 0, 0, 0}});
  std::vector<Element> els;
  for (const auto& s : elements) els.push_back(alg->parse(s));
  BimoduleElement m;
  m.add(idempotent_word(0), 0, idempotent_word(0), 1);
  auto act = [&](const Element& a, const Element& b, const BimoduleElement& x) {
    return right_mul(*alg, left_mul(*alg, a, x), b);
  };
  for (const auto& a : els)
    for (const auto& b : els)
      for (const auto& a2 : els)
        for (const auto& b2 : els) {
          Element pa = alg->mul(a, a2);
          Element pb = opposite ? alg->mul(b2, b) : alg->mul(b, b2);
          if (!(act(pa, pb, m) == act(a, b, act(a2, b2, m)))) return false;
        }
  return true;
}

A2Maps build_a2_maps(const AlgebraPtr& a2) {
  A2Maps r;
  r.alg = a2;
  const Algebra& alg = *a2;
  const int v1 = alg.vertex_index("1"), v2 = alg.vertex_index("2");
  if (v1 < 0 || v2 < 0 || alg.generator_index("e") < 0 || alg.macro_index("a2inv") < 0)
    throw Error("A_2 maps need the a2_loc presentation");
  auto P = [&](const std::string& s) { return alg.parse_expr(s); };

  auto K = module("K", a2, {{"k1_1", v1, v1, 1}, {"k1_2", v2, v2, 1}, {"k0_1", v1, v1, 0}, {"k0_2", v2, v2, 0}});
  auto Kd = module("Kdual", a2, {{"kd1_1", v1, v1, 1}, {"kd1_2", v2, v2, 1}, {"kd0_1", v1, v1, 0}, {"kd0_2", v2, v2, 0}});
  r.K = K;
  r.Kd = Kd;
  ModulePtr Pm = omega_module("P", a2);
  r.P = Pm;
  const int ge = alg.generator_index("e"), gs = alg.generator_index("estar");
  const int me = Pm->marker_index("m_e"), ms = Pm->marker_index("m_estar");
  auto Pd = module("Pdual", a2,
                   {{"u_1", v1, v1, 1}, {"u_2", v2, v2, 1}, {"n_e", v2, v1, 0}, {"n_estar", v1, v2, 0}});
  r.Pd = Pd;

  auto k01 = marker_leaf(*K, "k0_1"), k02 = marker_leaf(*K, "k0_2");
  r.cK = {K, make_map("dK", K, K,
                      {{"k1_1", bexpr::commutator(P("a1inv"), k01)},
                       {"k1_2", bexpr::scale(-1, bexpr::commutator(P("a2"), k02))}},
                      -1)};
  r.dK_literal = make_map("dK_literal", K, K,
                          {{"k1_1", bexpr::commutator(P("a1inv"), k01)}, {"k1_2", bexpr::commutator(P("a2"), k02)}}, -1);
  r.cP = {Pm, omega_differential("dP", Pm, {{ge, me}, {gs, ms}})};

  r.dualK.dual = Kd;
  r.dualK.of = {{2, -1}, {3, -1}, {0, 1}, {1, 1}};
  r.dualP.dual = Pd;
  for (const auto& mk : Pm->markers) {
    if (mk.name == "m_e") r.dualP.of.push_back({Pd->marker_index("n_estar"), -1});
    else if (mk.name == "m_estar") r.dualP.of.push_back({Pd->marker_index("n_e"), -1});
    else r.dualP.of.push_back({Pd->marker_index("u_" + mk.name.substr(2)), 1});
  }
  r.cKd = {Kd, dualize(*r.cK.d, r.dualK, r.dualK, "dKdual")};
  r.cPd = {Pd, dualize(*r.cP.d, r.dualP, r.dualP, "dPdual")};

  r.umap = make_map("f_tau", K, Pm,
                    {{"k1_1", bexpr::iota(P("a1inv"))},
                     {"k1_2", bexpr::iota(P("a2"))},
                     {"k0_1", marker_leaf(*Pm, "U_1")},
                     {"k0_2", bexpr::scale(-1, marker_leaf(*Pm, "U_2"))}});
  r.udual = dualize(*r.umap, r.dualK, r.dualP, "f_tau_dual");
  r.m = make_map("m", Kd, K,
                 {{"kd1_1", bexpr::commutator(P("a1"), marker_leaf(*K, "k1_1"))},
                  {"kd1_2", bexpr::commutator(P("a2inv"), marker_leaf(*K, "k1_2"))},
                  {"kd0_1", bexpr::commutator(P("a1"), k01)},
                  {"kd0_2", bexpr::commutator(P("a2inv"), k02)}});
  auto e1 = expr::idempotent(v1), e2 = expr::idempotent(v2);
  r.h = make_map("h", Pd, Pm,
                 {{"n_e", bexpr::sub(bexpr::leaf(P("a2inv"), me, e1), bexpr::leaf(e2, me, P("a1inv")))},
                  {"n_estar", bexpr::sub(bexpr::leaf(e1, ms, P("a2inv")), bexpr::leaf(P("a1inv"), ms, e2))}},
                 1);
  return r;
}

}  // namespace mppa
