#include "mppa/witnesses.hpp"

#include "mppa/builtins.hpp"
#include "mppa/error.hpp"
#include "mppa/preproj.hpp"
#include "mppa/resolutions.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace mppa {

std::string inverse_of(const Algebra& alg, const std::string& x) {
  const int g = alg.generator_index(x);
  if (g < 0) throw ValidationError("unknown generator '" + x + "' in " + alg.name());
  const Generator& gen = alg.generator(g);
  if (gen.recipe == RecipeKind::InverseOf && alg.generator_index(gen.recipe_expr) >= 0) return gen.recipe_expr;
  for (int h = 0; h < alg.num_generators(); ++h) {
    const Generator& o = alg.generator(h);
    if (o.recipe == RecipeKind::InverseOf && o.recipe_expr == x) return o.name;
  }
  throw ValidationError("generator '" + x + "' is not invertible in " + alg.name());
}

AlphaPair alpha_expr(const AlgebraPtr& alg, const std::string& x, const std::string& xinv, int n) {
  if (n < 1) throw ValidationError("alpha_n needs n >= 1");
  std::vector<std::string> s1, s2;
  for (int i = 0; i < n; ++i) {
    s1.insert(s1.end(), {xinv, x});
    s2.insert(s2.end(), {x, xinv});
  }
  auto d = cexpr::sub(cexpr::tensor(*alg, s1), cexpr::tensor(*alg, s2));
  return {cexpr::scale(Rational(1, 2), d), d};
}

AlphaPair alpha_n(const AlgebraPtr& alg, const std::string& x, int n) {
  return alpha_expr(alg, x, inverse_of(*alg, x), n);
}

MixedChain alpha_mixed(const ChainComplex& cx, const std::string& x, int N) {
  MixedChain m;
  Rational fact = 1;
  for (int k = 0; k <= N; ++k) {
    if (k > 0) fact *= k;
    m.coeffs.push_back(fact * eval_chain(cx, *alpha_n(cx.algebra_ptr(), x, k + 1).alpha));
  }
  return m;
}

ChainExprPtr beta1_cospan(const AlgebraPtr& alg) {
  return cexpr::sub(cexpr::tensor(*alg, {"yinv", "xinv", "x*y"}), cexpr::tensor(*alg, {"y", "yinv*xinv", "x"}));
}

ChainExprPtr beta1_a2(const AlgebraPtr& a2) {
  const Algebra& A = *a2;
  return cexpr::sum({{1, cexpr::tensor(A, {"estar", "e", "a1inv"})},
                     {1, cexpr::tensor(A, {"a1inv", "estar", "e"})},
                     {-1, cexpr::tensor(A, {"estar", "a2inv", "e"})},
                     {-1, cexpr::tensor(A, {"a2inv", "e", "estar"})},
                     {1, cexpr::B(cexpr::tensor(A, {"estar", "e*a1inv"}))}});
}

namespace {

using Extra = std::function<CheckResult(const ChainConventions&)>;

Identity make(std::string id, std::string suite, std::string statement, std::vector<Equation> eqs,
              Extra extra = nullptr) {
  Identity r;
  r.id = std::move(id);
  r.suite = std::move(suite);
  r.statement = std::move(statement);
  r.equations = std::move(eqs);
  r.extra = std::move(extra);
  return r;
}

CheckResult fail(std::string detail) { return {false, false, std::move(detail)}; }

ChainExprPtr T(const Algebra& A, std::vector<std::string> s) { return cexpr::tensor(A, s); }

// ---- laurent ----

std::vector<Identity> laurent_suite() {
  std::vector<Identity> out;
  auto L = laurent();
  auto a1 = alpha_n(L, "x", 1);
  out.push_back(make("laurent.alpha1.cycle", "laurent", "b(α̃1) = 0 in k[x^±1]",
                     {chain_equation(L, cexpr::b(a1.alpha_tilde), cexpr::zero(0))}));
  for (int n = 1; n <= 3; ++n) {
    auto a = alpha_n(L, "x", n);
    out.push_back(make("laurent.alpha" + std::to_string(n) + ".connes", "laurent",
                       "B(α̃" + std::to_string(n) + ") = " + std::to_string(2 * n) + "(1⊗α̃" + std::to_string(n) + ")",
                       {chain_equation(L, cexpr::B(a.alpha_tilde), cexpr::scale(2 * n, cexpr::unit(a.alpha_tilde)))}));
  }
  for (int n = 2; n <= 3; ++n) {
    auto a = alpha_n(L, "x", n), p = alpha_n(L, "x", n - 1);
    out.push_back(make("laurent.alpha" + std::to_string(n) + ".boundary", "laurent",
                       "b(α̃" + std::to_string(n) + ") = 2(1⊗α̃" + std::to_string(n - 1) + ")",
                       {chain_equation(L, cexpr::b(a.alpha_tilde), cexpr::scale(2, cexpr::unit(p.alpha_tilde))),
                        chain_equation(L, cexpr::b(a.alpha), cexpr::scale(2, cexpr::unit(p.alpha)))}));
  }
  {
    std::vector<Equation> eqs;
    for (const Rational& q : {Rational(3), Rational(-1, 2), Rational(1)}) {
      auto ev = eval_morphism(L, q);
      eqs.push_back(chain_equation(ev->target_ptr(), cexpr::push(ev, a1.alpha_tilde), cexpr::zero(1),
                                   "q = " + to_string(q)));
    }
    out.push_back(make("laurent.alpha1.evaluation_vanishes", "laurent", "push(α̃1, x -> q) = 0 for q in {3, -1/2, 1}",
                       eqs));
  }
  {
    auto inv = inv_morphism(L);
    out.push_back(make("laurent.alpha1.inverse", "laurent", "push(α̃1, x -> x^-1) = -α̃1",
                       {chain_equation(L, cexpr::push(inv, a1.alpha_tilde), cexpr::scale(-1, a1.alpha_tilde))}));
  }
  {
    auto r = rescale_morphism(L, Rational(5, 2));
    out.push_back(make("laurent.alpha1.rescaling", "laurent", "push(x^-1⊗x, x -> (5/2)x) = x^-1⊗x and α̃1 is fixed",
                       {chain_equation(L, cexpr::push(r, T(*L, {"xinv", "x"})), T(*L, {"xinv", "x"})),
                        chain_equation(L, cexpr::push(r, a1.alpha_tilde), a1.alpha_tilde)}));
  }
  out.push_back(make("laurent.morphisms.well_defined", "laurent",
                     "inversion, rescaling by q and evaluation at q respect the rules", {},
                     [L](const ChainConventions&) -> CheckResult {
                       std::vector<MorphismPtr> ms = {inv_morphism(L)};
                       for (const Rational& q : {Rational(5, 2), Rational(-3), Rational(1, 7)}) {
                         ms.push_back(rescale_morphism(L, q));
                         ms.push_back(eval_morphism(L, q));
                       }
                       for (const auto& m : ms) {
                         auto c = m->check();
                         if (!c.ok) return fail(m->name() + " violates " + c.violated);
                       }
                       return {true, false, std::to_string(ms.size()) + " morphisms checked"};
                     }));
  return out;
}

// ---- mixed ----

std::vector<Identity> mixed_suite(const SuiteOptions& o) {
  std::vector<Identity> out;
  auto L = laurent();
  const int N = o.truncation;
  if (N < 0) throw ValidationError("truncation must be >= 0");
  // c_k = k! α_{k+1}; (b - uB)α = 0 means b(c_k) = B(c_{k-1}).
  std::vector<ChainExprPtr> c;
  Rational fact = 1;
  for (int k = 0; k <= N + 1; ++k) {
    if (k > 0) fact *= k;
    c.push_back(cexpr::scale(fact, alpha_n(L, "x", k + 1).alpha));
  }
  std::vector<Equation> eqs;
  eqs.push_back(chain_equation(L, cexpr::b(c[0]), cexpr::zero(0), "u^0"));
  for (int k = 1; k <= N; ++k)
    eqs.push_back(chain_equation(L, cexpr::b(c[static_cast<std::size_t>(k)]),
                                 cexpr::B(c[static_cast<std::size_t>(k) - 1]), "u^" + std::to_string(k)));
  out.push_back(make(
      "mixed.alpha.cycle", "mixed",
      "(b - uB)(Σ k! u^k α_{k+1}) = 0 through u^" + std::to_string(N) + ", remainder " + std::to_string(N) +
          "!·B(α" + std::to_string(N + 1) + ") != 0",
      eqs, [L, N](const ChainConventions& conv) -> CheckResult {
        ChainComplex cx(L, conv);
        MixedChain m = alpha_mixed(cx, "x", N);
        MixedDifferential d = mixed_differential(cx, m);
        for (std::size_t k = 0; k < d.components.size(); ++k)
          if (!d.components[k].is_zero()) return fail("u^" + std::to_string(k) + ": " + cx.print(d.components[k]));
        Rational f = 1;
        for (int k = 2; k <= N; ++k) f *= k;
        Chain expect = f * cx.B(eval_chain(cx, *alpha_n(L, "x", N + 1).alpha));
        if (d.remainder.is_zero()) return fail("remainder vanishes");
        if (!(d.remainder == expect))
          return fail("remainder " + cx.print(d.remainder) + " differs from " + cx.print(expect));
        return {true, false, "remainder at u^" + std::to_string(N + 1) + " has " +
                                 std::to_string(d.remainder.terms.size()) + " terms"};
      }));
  out.push_back(make("mixed.alpha1.alone", "mixed", "α1 alone: b(α1) = 0 and the remainder B(α1) is nonzero", {},
                     [L](const ChainConventions& conv) -> CheckResult {
                       ChainComplex cx(L, conv);
                       MixedDifferential d = mixed_differential(cx, alpha_mixed(cx, "x", 0));
                       if (!d.components.at(0).is_zero()) return fail("b(α1) = " + cx.print(d.components[0]));
                       if (d.remainder.is_zero()) return fail("B(α1) vanishes");
                       return {true, false, "B(α1) = " + cx.print(d.remainder)};
                     }));
  out.push_back(make("mixed.wrong_coefficient.detected", "mixed",
                     "with coefficient 2 instead of 1! at u^1 the u^1 component is nonzero", {},
                     [L](const ChainConventions& conv) -> CheckResult {
                       ChainComplex cx(L, conv);
                       MixedChain m = alpha_mixed(cx, "x", 1);
                       m.coeffs[1] *= 2;
                       MixedDifferential d = mixed_differential(cx, m);
                       if (d.components.at(1).is_zero()) return fail("u^1 component vanishes");
                       return {true, false, "u^1: " + cx.print(d.components[1])};
                     }));
  return out;
}

// ---- interval ----

std::vector<Identity> interval_suite() {
  auto I = interval_kI();
  auto a = alpha_n(I, "x", 1);
  return {make("interval.alpha1.boundary", "interval", "b(α1) = e1 - e2 in kI",
               {chain_equation(I, cexpr::b(a.alpha), T(*I, {"id(1) - id(2)"}))}),
          make("interval.alpha1_tilde.boundary", "interval", "b(α̃1) = 2(e1 - e2) in kI",
               {chain_equation(I, cexpr::b(a.alpha_tilde), cexpr::scale(2, T(*I, {"id(1) - id(2)"})))})};
}

// ---- cospan ----

std::vector<Identity> cospan_suite() {
  std::vector<Identity> out;
  for (auto C : {laurent_pair(), two_object_groupoid_C()}) {
    auto rhs = cexpr::sub(cexpr::sub(alpha_expr(C, "x*y", "yinv*xinv", 1).alpha_tilde, alpha_n(C, "x", 1).alpha_tilde),
                          alpha_n(C, "y", 1).alpha_tilde);
    const bool pair = C->name() == "laurent_pair";
    out.push_back(make(pair ? "cospan.beta1.boundary" : "cospan.beta1.boundary_groupoid", "cospan",
                       std::string("b(β1) = α̃1(xy) - α̃1(x) - α̃1(y) in ") + C->name(),
                       {chain_equation(C, cexpr::b(beta1_cospan(C)), rhs)}));
    auto L = laurent("z");
    auto zxy = z_to_xy_morphism(C);
    out.push_back(make(pair ? "cospan.fusion_image" : "cospan.fusion_image_groupoid", "cospan",
                       std::string("push(α̃1(z), z -> xy) = α̃1(xy) in ") + C->name(),
                       {chain_equation(C, cexpr::push(zxy, alpha_n(L, "z", 1).alpha_tilde),
                                       alpha_expr(C, "x*y", "yinv*xinv", 1).alpha_tilde)}));
  }
  for (const Rational& q : {Rational(1), Rational(3)}) {
    auto P = laurent_pair();
    auto Q = pushout_xy_q(q);
    auto pi = pushout_quotient(P, Q);
    auto s = cexpr::add(alpha_n(P, "x", 1).alpha_tilde, alpha_n(P, "y", 1).alpha_tilde);
    out.push_back(make("cospan.pushout.alpha_sum_vanishes.q" + to_string(q), "cospan",
                       "image of α̃1(x) + α̃1(y) in k<x^±1,y^±1>/(xy = " + to_string(q) + ") is 0",
                       {chain_equation(Q, cexpr::push(pi, s), cexpr::zero(1))}));
  }
  out.push_back(make("cospan.morphisms.well_defined", "cospan",
                     "z -> xy into both targets and the pushout quotients respect the rules", {},
                     [](const ChainConventions&) -> CheckResult {
                       std::vector<MorphismPtr> ms = {z_to_xy_morphism(laurent_pair()),
                                                      z_to_xy_morphism(two_object_groupoid_C())};
                       for (const Rational& q : {Rational(1), Rational(3)})
                         ms.push_back(pushout_quotient(laurent_pair(), pushout_xy_q(q)));
                       for (const auto& m : ms) {
                         auto c = m->check();
                         if (!c.ok) return fail(m->name() + " violates " + c.violated);
                       }
                       return {true, false, ""};
                     }));
  return out;
}

// ---- a2 ----

std::vector<Identity> a2_suite() {
  std::vector<Identity> out;
  auto A = a2_loc();
  auto mu1 = mu1_morphism(A), mu2 = mu2_morphism(A);
  auto a1 = alpha_n(mu1->source_ptr(), "x1", 1).alpha_tilde;
  auto a2 = alpha_n(mu2->source_ptr(), "x2", 1).alpha_tilde;
  out.push_back(make("a2.mu1.alpha1_image", "a2", "μ1(α̃1) = a1⊗a1^-1 - a1^-1⊗a1",
                     {chain_equation(A, cexpr::push(mu1, a1),
                                     cexpr::sub(T(*A, {"a1", "a1inv"}), T(*A, {"a1inv", "a1"})))}));
  out.push_back(make("a2.mu2.alpha1_image", "a2", "μ2(α̃1) = a2^-1⊗a2 - a2⊗a2^-1",
                     {chain_equation(A, cexpr::push(mu2, a2),
                                     cexpr::sub(T(*A, {"a2inv", "a2"}), T(*A, {"a2", "a2inv"})))}));
  auto four = cexpr::sum({{1, T(*A, {"estar*e", "a1inv"})},
                          {-1, T(*A, {"a1inv", "estar*e"})},
                          {1, T(*A, {"a2inv", "e*estar"})},
                          {-1, T(*A, {"e*estar", "a2inv"})}});
  auto normalized = cexpr::add(four, T(*A, {"1", "a1inv - a2inv"}));
  auto pushed = cexpr::add(cexpr::push(mu1, a1), cexpr::push(mu2, a2));
  out.push_back(make("a2.alpha_sum.normalized", "a2",
                     "μ1(α̃1) + μ2(α̃1) = e*e⊗a1^-1 - a1^-1⊗e*e + a2^-1⊗ee* - ee*⊗a2^-1 + 1⊗(a1^-1 - a2^-1)",
                     {chain_equation(A, pushed, normalized)}));
  auto tensor_part = cexpr::sum({{1, T(*A, {"estar", "e", "a1inv"})},
                                 {1, T(*A, {"a1inv", "estar", "e"})},
                                 {-1, T(*A, {"estar", "a2inv", "e"})},
                                 {-1, T(*A, {"a2inv", "e", "estar"})}});
  out.push_back(make("a2.beta1.tensor_part", "a2",
                     "b(e*⊗e⊗a1^-1 + a1^-1⊗e*⊗e - e*⊗a2^-1⊗e - a2^-1⊗e⊗e*) = e*e⊗a1^-1 - a1^-1⊗e*e + "
                     "a2^-1⊗ee* - ee*⊗a2^-1",
                     {chain_equation(A, cexpr::b(tensor_part), four)}));
  auto seed = T(*A, {"estar", "e*a1inv"});
  out.push_back(make("a2.beta1.bB_part", "a2", "1⊗(a1^-1 - a2^-1) = bB(e*⊗e a1^-1) = -Bb(e*⊗e a1^-1)",
                     {chain_equation(A, T(*A, {"1", "a1inv - a2inv"}), cexpr::b(cexpr::B(seed))),
                      chain_equation(A, T(*A, {"1", "a1inv - a2inv"}), cexpr::scale(-1, cexpr::B(cexpr::b(seed))))}));
  out.push_back(make("a2.beta1.boundary", "a2", "b(β1) = μ1(α̃1) + μ2(α̃1) in a2_loc",
                     {chain_equation(A, cexpr::b(beta1_a2(A)), pushed)}));
  // μ = a1^-1 + a2 as a block sum, μ^-1 = a1 + a2^-1.
  const std::string mu = "a1inv + a2", muinv = "a1 + a2inv";
  auto mu_form = cexpr::sum({{1, T(*A, {"estar", "e", mu})},
                             {1, T(*A, {mu, "estar", "e"})},
                             {-1, T(*A, {"estar", muinv, "e"})},
                             {-1, T(*A, {muinv, "e", "estar"})},
                             {1, T(*A, {"1", "estar", "e*(" + mu + ")"})},
                             {-1, T(*A, {"1", "(" + muinv + ")*e", "estar"})}});
  out.push_back(make("a2.beta1.moment_form", "a2", "β1 rewritten with μ = μ1(x1) + μ2(x2) equals β1",
                     {chain_equation(A, mu_form, beta1_a2(A))}));
  out.push_back(make("a2.morphisms.well_defined", "a2", "μ1: x1 -> a1^-1 and μ2: x2 -> a2 respect the rules", {},
                     [mu1, mu2](const ChainConventions&) -> CheckResult {
                       for (const auto& m : {mu1, mu2}) {
                         auto c = m->check();
                         if (!c.ok) return fail(m->name() + " violates " + c.violated);
                       }
                       return {true, false, ""};
                     }));
  return out;
}

// ---- invrels ----

std::vector<Identity> invrels_suite() {
  auto A = a2_loc();
  auto eq = [&](const std::string& a, const std::string& b) { return element_equation(A, a, b, a + " = " + b); };
  auto two_sided = [&](const std::string& x, const std::string& y, const std::string& one) {
    return std::vector<Equation>{eq("(" + x + ")*(" + y + ")", one), eq("(" + y + ")*(" + x + ")", one)};
  };
  std::vector<Identity> out;
  out.push_back(make("invrels.inverse_of_1_plus_estar_e", "invrels", "(1+e* e)^-1 = e2 + a1^-1",
                     two_sided("1 + estar*e", "id(2) + l", "1")));
  {
    auto eqs = two_sided("a2", "id(2) - e*a1inv*estar", "id(2)");
    eqs.push_back(eq("a2inv", "id(2) - e*a1inv*estar"));
    out.push_back(make("invrels.a2inv_formula", "invrels", "a2^-1 = e2 - e a1^-1 e*", eqs));
  }
  {
    auto eqs = two_sided("a1", "id(1) - estar*a2inv*e", "id(1)");
    eqs.push_back(eq("a1inv", "id(1) - estar*a2inv*e"));
    out.push_back(make("invrels.a1inv_formula", "invrels", "a1^-1 = e1 - e* a2^-1 e", eqs));
  }
  out.push_back(make("invrels.inverse_of_1_plus_e_estar", "invrels", "(1+ee*)^-1 = e1 + a2^-1",
                     two_sided("1 + e*estar", "id(1) + a2inv", "1")));
  out.push_back(make("invrels.a2inv_e", "invrels", "a2^-1 e = e a1^-1", {eq("a2inv*e", "e*a1inv")}));
  out.push_back(make("invrels.estar_a2inv", "invrels", "e* a2^-1 = a1^-1 e*", {eq("estar*a2inv", "a1inv*estar")}));
  out.push_back(make("invrels.estar_e_a1inv", "invrels", "e* e a1^-1 = e1 - a1^-1", {eq("estar*e*a1inv", "id(1) - a1inv")}));
  out.push_back(make("invrels.e_estar_a2inv", "invrels", "ee* a2^-1 = e2 - a2^-1", {eq("e*estar*a2inv", "id(2) - a2inv")}));
  return out;
}

// ---- small resolution ----

BimoduleMapPtr identity_map(const ModulePtr& m) {
  std::map<std::string, BimoduleExprPtr> im;
  for (const auto& mk : m->markers) im[mk.name] = marker_leaf(*m, mk.name);
  return make_map("id_" + m->name, m, m, im);
}

std::vector<Identity> small_resolution_suite() {
  std::vector<Identity> out;
  auto L = laurent();
  SmallResolution r = small_resolution(L);
  const FreeBimodule& R = *r.R.module;
  auto x = L->parse_expr("x");
  auto d_expected = bexpr::sub(bexpr::lmul(x, marker_leaf(R, "U_o")), bexpr::rmul(marker_leaf(R, "U_o"), x));
  out.push_back(make("small.laurent.differential", "small-resolution", "d(1⊗1) = x⊗1 - 1⊗x on the degree 1 generator",
                     {bimodule_equation(r.R.module, bexpr::apply(r.R.d, marker_leaf(R, "r1_x")), d_expected)}));
  const FreeBimodule& Rd = *r.Rdual.module;
  auto dd_expected =
      bexpr::sub(bexpr::lmul(x, marker_leaf(Rd, "rd0_x")), bexpr::rmul(marker_leaf(Rd, "rd0_x"), x));
  out.push_back(make("small.laurent.dual_differential", "small-resolution",
                     "the dual complex has the same differential formula",
                     {bimodule_equation(r.Rdual.module, bexpr::apply(r.Rdual.d, marker_leaf(Rd, "rd1_o")),
                                        dd_expected)}));
  {
    auto eqs = chain_map_equations(r.phi, r.Rdual, r.R);
    auto back = chain_map_equations(r.psi, r.R, r.Rdual);
    eqs.insert(eqs.end(), back.begin(), back.end());
    out.push_back(make("small.laurent.iso_chain_map", "small-resolution",
                       "product with x^-1⊗1 is a chain map R∨[1] -> R, and x⊗1 one back", eqs));
  }
  {
    auto eqs = map_equality_equations(compose(r.phi, r.psi), identity_map(r.R.module));
    auto e2 = map_equality_equations(compose(r.psi, r.phi), identity_map(r.Rdual.module));
    eqs.insert(eqs.end(), e2.begin(), e2.end());
    out.push_back(make("small.laurent.iso_inverse", "small-resolution", "(x^-1⊗1)(x⊗1) = 1⊗1 in both directions", eqs));
  }
  out.push_back(make("small.laurent.evaluation_fiber", "small-resolution",
                     "after -⊗_{A^e} k along x -> q the isomorphism is q^-1 in both degrees (10 random q)", {},
                     [r](const ChainConventions&) -> CheckResult {
                       std::mt19937_64 rng(20240607);
                       for (int i = 0; i < 10; ++i) {
                         long num = static_cast<long>(rng() % 19) - 9;
                         if (num == 0) num = 1;
                         const long den = static_cast<long>(rng() % 9) + 1;
                         Rational q(num, den);
                         q.canonicalize();
                         FiberScalars f = eval_fiber(r, q);
                         if (!f.differentials_vanish) return fail("differential survives at q = " + to_string(q));
                         if (f.degree1 != 1 / q || f.degree0 != 1 / q)
                           return fail("q = " + to_string(q) + ": scalars " + to_string(f.degree1) + ", " +
                                       to_string(f.degree0));
                       }
                       return {true, false, "10 values of q"};
                     }));
  {
    auto P = laurent_pair();
    SmallResolution rp = small_resolution(P);
    const FreeBimodule& M = *rp.R.module;
    std::vector<Equation> eqs;
    for (const std::string g : {"x", "y"}) {
      auto ge = P->parse_expr(g);
      eqs.push_back(bimodule_equation(
          rp.R.module, bexpr::apply(rp.R.d, marker_leaf(M, "r1_" + g)),
          bexpr::sub(bexpr::lmul(ge, marker_leaf(M, "U_o")), bexpr::rmul(marker_leaf(M, "U_o"), ge)), g));
    }
    out.push_back(make("small.laurent_pair.differential", "small-resolution",
                       "R of k<x^±1,y^±1> has two degree 1 generators with d = g⊗1 - 1⊗g", eqs,
                       [rp](const ChainConventions&) -> CheckResult {
                         int d1 = 0, d0 = 0;
                         for (const auto& m : rp.R.module->markers) (m.degree == 1 ? d1 : d0)++;
                         if (d1 != 2 || d0 != 1)
                           return fail("shape " + std::to_string(d1) + " + " + std::to_string(d0));
                         return {true, false, ""};
                       }));
  }
  out.push_back(make("small.ae_opposite_product", "small-resolution",
                     "A^e acts on A⊗A with (a⊗b)(a'⊗b') = aa'⊗b'b; the naive product is not an action", {},
                     [](const ChainConventions&) -> CheckResult {
                       auto P = laurent_pair();
                       const std::vector<std::string> el = {"x", "y", "x*y", "yinv + 2*x"};
                       if (!ae_action_compatible(P, el, true)) return fail("opposite product is not compatible");
                       if (ae_action_compatible(P, el, false)) return fail("naive product was not rejected");
                       return {true, false, ""};
                     }));
  return out;
}

// ---- a2 diagrams ----

std::vector<Identity> a2_diagram_suite() {
  std::vector<Identity> out;
  auto A = a2_loc();
  auto M = std::make_shared<A2Maps>(build_a2_maps(A));
  const FreeBimodule& P = *M->P;
  auto E = [&](const std::string& s) { return A->parse_expr(s); };
  auto leaf = [&](const std::string& p, const std::string& m, const std::string& q) {
    return bexpr::leaf(E(p), P.marker_index(m), E(q));
  };
  out.push_back(make("a2.iota.a1inv", "a2-diagrams", "ι(a1^-1) = -a1^-1(1⊗e*⊗e + e*⊗e⊗1)a1^-1",
                     {bimodule_equation(M->P, bexpr::iota(E("a1inv")),
                                        bexpr::sum({{-1, leaf("l", "m_estar", "e*l")},
                                                    {-1, leaf("l*estar", "m_e", "l")}}))}));
  out.push_back(make("a2.iota.e_estar", "a2-diagrams", "ι(ee*) = 1⊗e⊗e* + e⊗e*⊗1",
                     {bimodule_equation(M->P, bexpr::iota(E("e*estar")),
                                        bexpr::add(leaf("id(2)", "m_e", "estar"), leaf("e", "m_estar", "id(2)")))}));
  out.push_back(make("a2.diagram.square", "a2-diagrams", "d' f = τ d on every generator",
                     chain_map_equations(M->umap, M->cK, M->cP)));
  out.push_back(make("a2.diagram.dual_square", "a2-diagrams", "the dual square commutes",
                     chain_map_equations(M->udual, M->cPd, M->cKd)));
  out.push_back(make("a2.diagram.m_chain_map", "a2-diagrams", "the internal product m is a chain map",
                     chain_map_equations(M->m, M->cKd, M->cK)));
  auto fm = compose(M->umap, compose(M->m, M->udual));
  out.push_back(make("a2.diagram.triangle_ii", "a2-diagrams", "h d'∨ = f m τ∨ on the unit generators",
                     map_equality_equations(compose(M->h, M->cPd.d), fm, {"u_1", "u_2"})));
  out.push_back(make("a2.diagram.triangle_iii", "a2-diagrams", "d' h = τ m f∨ on the edge generators",
                     map_equality_equations(compose(M->cP.d, M->h), fm, {"n_e", "n_estar"})));
  out.push_back(make("a2.diagram.dK_sign_needed", "a2-diagrams",
                     "with d_K(k1_2) = [a2, k0_2] instead of -[a2, k0_2] the square fails", {},
                     [M](const ChainConventions& conv) -> CheckResult {
                       auto eqs = chain_map_equations(M->umap, {M->K, M->dK_literal}, M->cP);
                       std::string failing;
                       for (const auto& e : eqs) {
                         CheckResult r = check_exact(e, conv);
                         if (!r.pass) failing += (failing.empty() ? "" : "; ") + r.detail;
                       }
                       if (failing.empty()) return fail("unsigned d_K unexpectedly closes the square");
                       return {true, false, "discrepancy: " + failing};
                     }));
  return out;
}

// ---- fusion and upsilon ----

std::vector<std::pair<std::string, Quiver>> test_quivers() {
  return {{"a2", a2_quiver()}, {"jordan", jordan_quiver()}, {"cycle2", two_cycle_quiver()}, {"star3", star_quiver(3)}};
}

std::vector<Identity> fusion_suite() {
  std::vector<Identity> out;
  for (const auto& [name, q] : test_quivers()) {
    const FusionOrder ord = default_fusion_order(q);
    auto loc = quiver_loc(q);
    auto mm = std::make_shared<MomentMap>(moment_map(loc, q, ord));
    auto fr = std::make_shared<FusionResult>(fusion_build(loc, q, ord));
    std::vector<Equation> same, inv;
    for (const auto& [v, e] : mm->mu) {
      same.push_back(element_equation(loc, mm->mu_expr.at(v), expr::element(fr->mu.at(v)), "vertex " + v));
      const ExprPtr id = expr::idempotent(loc->vertex_index(v));
      inv.push_back(element_equation(loc, expr::mul(mm->mu_expr.at(v), mm->mu_inv_expr.at(v)), id, "vertex " + v));
      inv.push_back(element_equation(loc, expr::mul(mm->mu_inv_expr.at(v), mm->mu_expr.at(v)), id, "vertex " + v));
    }
    const std::string base = "fusion." + name;
    out.push_back(make(base + ".matches_moment_map", "fusion", "fused A2 moment maps equal μ_v at every vertex", same));
    out.push_back(make(base + ".moment_map_invertible", "fusion", "μ_v μ_v^-1 = e_v = μ_v^-1 μ_v", inv));
    out.push_back(make(base + ".morphisms_well_defined", "fusion",
                       "every fusion, gluing and moment morphism respects the rules", {},
                       [mm, fr](const ChainConventions&) -> CheckResult {
                         auto all = fr->morphisms;
                         all.push_back(moment_morphism(*mm));
                         for (const auto& m : all) {
                           auto c = m->check();
                           if (!c.ok) return fail(m->name() + " violates " + c.violated);
                         }
                         return {true, false, std::to_string(all.size()) + " morphisms"};
                       }));
    Identity det = make(base + ".determinant", "fusion", "Π_v det μ_v(ρ) = 1 at random representations", {},
                        [](const ChainConventions&) -> CheckResult { return {true, false, "n/a"}; });
    det.oracle = [mm, loc](int trials, std::uint64_t seed) -> CheckResult {
      for (int t = 0; t < trials; ++t) {
        const std::uint64_t ts = derive_seed(seed, static_cast<std::uint64_t>(t));
        Dims dims;
        for (int v = 0; v < loc->num_vertices(); ++v)
          dims.push_back(1 + static_cast<int>(derive_seed(ts, 100 + static_cast<std::uint64_t>(v)) % 3));
        Evaluator ev(*loc, random_rep(*loc, dims, ts));
        const Rational d = det_product(*mm, ev);
        if (d != 1) return fail("trial " + std::to_string(t) + ": product of determinants " + to_string(d));
      }
      return {true, false, ""};
    };
    out.push_back(det);
  }
  return out;
}

std::vector<Identity> upsilon_suite() {
  std::vector<Identity> out;
  for (const auto& [name, q] : test_quivers()) {
    for (const bool two : {false, true}) {
      std::map<std::string, Rational> qv;
      for (std::size_t i = 0; i < q.vertices.size(); ++i) qv[q.vertices[i]] = (two && i == 0) ? 2 : 1;
      const std::string base = "upsilon." + name + (two ? ".q_2_1" : ".q_1");
      auto dg = std::make_shared<DGAlgebra>(build_upsilon(q, qv, default_fusion_order(q)));
      const Algebra& U = *dg->alg;
      MomentMap mm = moment_map(dg->alg, q, dg->order);
      std::vector<Equation> eqs;
      for (const auto& v : q.vertices) {
        Element dz = dg->d(U.gen(dg->zprime(v)));
        ExprPtr rhs = expr::sub(mm.mu_expr.at(v), expr::scale(qv.at(v), expr::idempotent(U.vertex_index(v))));
        eqs.push_back(element_equation(dg->alg, expr::element(dz), rhs, "vertex " + v));
      }
      out.push_back(make(base + ".differential", "upsilon", "d(z'_v) = μ_v - q_v e_v", eqs));
      out.push_back(make(base + ".dg_axioms", "upsilon",
                         "d has degree +1, kills degree 0 generators, d∘d = 0, d(z'_v) lies in e_v A e_v", {},
                         [dg](const ChainConventions&) -> CheckResult {
                           const Algebra& U = *dg->alg;
                           for (int g = 0; g < U.num_generators(); ++g) {
                             const Generator& gen = U.generator(g);
                             Element x = U.gen(g);
                             Element dx = dg->d(x);
                             if (!dg->d(dx).is_zero()) return fail("d∘d(" + gen.name + ") != 0");
                             if (gen.degree == 0 && !dx.is_zero()) return fail("d(" + gen.name + ") != 0");
                             for (const auto& [w, c] : dx.terms) {
                               if (U.degree(w) != gen.degree + 1) return fail("d(" + gen.name + ") has wrong degree");
                               if (w.src != U.gen_src(g) || w.tgt != U.gen_tgt(g))
                                 return fail("d(" + gen.name + ") leaves its block");
                             }
                           }
                           // Leibniz with sign on a mixed word.
                           for (const auto& v : dg->quiver.vertices) {
                             Element z = U.gen(dg->zprime(v));
                             Element zz = U.mul(z, z);
                             Element lhs = dg->d(zz);
                             Element rhs = U.mul(dg->d(z), z) - U.mul(z, dg->d(z));
                             if (!(lhs == rhs)) return fail("Koszul sign on z'z' at " + v);
                           }
                           return {true, false, ""};
                         }));
      out.push_back(make(base + ".h0", "upsilon",
                         "relation blocks and d(z'_v) generate the same ideal (H0 is the multiplicative "
                         "preprojective algebra)",
                         {}, [dg, qv](const ChainConventions&) -> CheckResult {
                           H0Report r = h0_check(*dg, qv);
                           if (r.status == H0Status::Uncertified) return fail("uncertified: " + r.detail);
                           return {true, false, r.status == H0Status::Coincide ? "coincide" : "certified"};
                         }));
    }
  }
  out.push_back(make("upsilon.jordan.h0_mismatched_q", "upsilon",
                     "with q = 3 in the relation and q = 2 in the differential the ideals are not identified",
                     {}, [](const ChainConventions&) -> CheckResult {
                       Quiver q = jordan_quiver();
                       DGAlgebra dg = build_upsilon(q, {{q.vertices[0], 2}}, default_fusion_order(q));
                       H0Report r = h0_check(dg, {{q.vertices[0], 3}});
                       if (r.status != H0Status::Uncertified) return fail("mismatched q was accepted: " + r.detail);
                       return {true, false, r.detail};
                     }));
  out.push_back(make("upsilon.zero_q_rejected", "upsilon", "q_v = 0 is rejected", {},
                     [](const ChainConventions&) -> CheckResult {
                       Quiver q = a2_quiver();
                       try {
                         build_upsilon(q, {{q.vertices[0], 0}}, default_fusion_order(q));
                       } catch (const ValidationError& e) {
                         return {true, false, e.what()};
                       }
                       return fail("q_v = 0 accepted");
                     }));
  return out;
}

using Builder = std::function<std::vector<Identity>(const SuiteOptions&)>;

const std::vector<std::pair<std::string, Builder>>& registry() {
  static const std::vector<std::pair<std::string, Builder>> r = {
      {"laurent", [](const SuiteOptions&) { return laurent_suite(); }},
      {"mixed", [](const SuiteOptions& o) { return mixed_suite(o); }},
      {"interval", [](const SuiteOptions&) { return interval_suite(); }},
      {"cospan", [](const SuiteOptions&) { return cospan_suite(); }},
      {"a2", [](const SuiteOptions&) { return a2_suite(); }},
      {"invrels", [](const SuiteOptions&) { return invrels_suite(); }},
      {"small-resolution", [](const SuiteOptions&) { return small_resolution_suite(); }},
      {"a2-diagrams", [](const SuiteOptions&) { return a2_diagram_suite(); }},
      {"fusion", [](const SuiteOptions&) { return fusion_suite(); }},
      {"upsilon", [](const SuiteOptions&) { return upsilon_suite(); }},
  };
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> n{"all"};
  for (const auto& [name, b] : registry()) n.push_back(name);
  return n;
}

bool is_suite(const std::string& name) {
  for (const auto& n : suite_names())
    if (n == name) return true;
  return false;
}

std::vector<Identity> build_suites(const std::vector<std::string>& names, const SuiteOptions& opts) {
  std::set<std::string> want;
  for (const auto& n : names) {
    if (!is_suite(n)) throw ValidationError("unknown suite '" + n + "'");
    want.insert(n);
  }
  std::vector<Identity> out;
  for (const auto& [name, build] : registry()) {
    if (!want.count("all") && !want.count(name)) continue;
    auto ids = build(opts);
    out.insert(out.end(), ids.begin(), ids.end());
  }
  return out;
}

bool SuiteReport::all_pass() const {
  for (const auto& o : outcomes)
    if (!o.pass()) return false;
  return true;
}

namespace {
// FNV-1a, so a check's oracle seed does not depend on which suites run.
std::uint64_t id_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
  return h;
}
}  // namespace

SuiteReport run_identities(const std::vector<Identity>& ids, const RunOptions& opts) {
  SuiteReport rep;
  for (const Identity& id : ids) {
    IdentityOutcome o{id.id, id.suite, id.statement, {}, {}, 0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o.exact = check_exact(id, opts.conventions);
    } catch (const std::exception& e) {
      o.exact = fail(std::string("error: ") + e.what());
    }
    if (opts.oracle) {
      try {
        o.oracle = check_oracle(id, opts.oracle_trials, derive_seed(opts.seed, id_hash(id.id)));
      } catch (const std::exception& e) {
        o.oracle = fail(std::string("error: ") + e.what());
      }
    } else {
      o.oracle = {true, false, "skipped"};
    }
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep.outcomes.push_back(std::move(o));
  }
  return rep;
}

SuiteReport run_suite(const std::vector<std::string>& names, const RunOptions& opts) {
  return run_identities(build_suites(names, opts.suite), opts);
}

}  // namespace mppa
