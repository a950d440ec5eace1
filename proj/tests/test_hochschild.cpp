#include "mppa/builtins.hpp"
#include "mppa/chain.hpp"
#include "mppa/error.hpp"
#include "mppa/identity.hpp"
#include "mppa/witnesses.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace mppa;

namespace {

std::vector<AlgebraPtr> algebras() {
  return {laurent(), laurent_pair(), interval_kI(), a2_loc(), two_object_groupoid_C(),
          quiver_loc(jordan_quiver())};
}

Chain renormalize(const ChainComplex& from, const Chain& c, const ChainComplex& to) {
  Chain out = to.zero(c.degree);
  for (const auto& [t, k] : c.terms) {
    std::vector<Element> slots;
    for (const auto& w : t) slots.push_back(Element(w));
    Chain x = to.tensor(slots);
    x *= k;
    out += x;
  }
  (void)from;
  return out;
}

}  // namespace

TEST_CASE("b and B square to zero and anticommute") {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (const auto& alg : algebras()) {
    ChainComplex cx(alg);
    CAPTURE(alg->name());
    for (int i = 0; i < 85; ++i) {
      const int n = i % 5;
      Chain c = testing::random_chain(cx, rng, n);
      CHECK(cx.b(cx.b(c)).is_zero());
      CHECK(cx.B(cx.B(c)).is_zero());
      CHECK((cx.b(cx.B(c)) + cx.B(cx.b(c))).is_zero());
      ++checked;
    }
  }
  CHECK(checked >= 500);
}

TEST_CASE("unnormalized b squares to zero") {
  std::mt19937_64 rng(19);
  for (const auto& alg : {laurent(), a2_loc()}) {
    ChainComplex cx(alg, {false, false});
    for (int i = 0; i < 60; ++i) {
      Chain c = testing::random_chain(cx, rng, 1 + i % 4);
      CHECK(cx.b(cx.b(c)).is_zero());
    }
  }
}

TEST_CASE("b preserves degenerate chains") {
  std::mt19937_64 rng(23);
  for (const auto& alg : {laurent(), interval_kI(), a2_loc()}) {
    ChainComplex un(alg, {false, false}), nm(alg);
    for (int i = 0; i < 80; ++i) {
      Chain c = testing::random_chain(un, rng, 1 + i % 4);
      CHECK(renormalize(un, un.b(c), nm) == nm.b(renormalize(un, c, nm)));
    }
  }
  ChainComplex nm(laurent()), un(laurent(), {false, false});
  CHECK(nm.tensor(std::vector<std::string>{"x", "id(o)"}).is_zero());
  CHECK_FALSE(un.tensor(std::vector<std::string>{"x", "id(o)"}).is_zero());
}

TEST_CASE("pushforward commutes with b and B") {
  std::mt19937_64 rng(29);
  auto L = laurent();
  auto A = a2_loc();
  auto P = laurent_pair();
  auto G = two_object_groupoid_C();
  std::vector<MorphismPtr> ms = {inv_morphism(L),        rescale_morphism(L, Rational(-2, 3)),
                                 mu1_morphism(A),        mu2_morphism(A),
                                 z_to_xy_morphism(P),    z_to_xy_morphism(G),
                                 eval_morphism(L, Rational(5))};
  for (const auto& m : ms) {
    CAPTURE(m->name());
    ChainComplex src(m->source_ptr()), tgt(m->target_ptr());
    for (int i = 0; i < 40; ++i) {
      Chain c = testing::random_chain(src, rng, i % 4);
      CHECK(ChainComplex::push(src.b(c), *m, tgt) == tgt.b(ChainComplex::push(c, *m, tgt)));
      CHECK(ChainComplex::push(src.B(c), *m, tgt) == tgt.B(ChainComplex::push(c, *m, tgt)));
    }
  }
}

TEST_CASE("alpha chains on the Laurent algebra") {
  auto L = laurent();
  ChainComplex cx(L);
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    AlphaPair a = alpha_n(L, "x", n);
    Chain at = eval_chain(cx, *a.alpha_tilde);
    CHECK(at == 2 * eval_chain(cx, *a.alpha));
    CHECK(at.degree == 2 * n - 1);
    CHECK(cx.B(at) == Rational(2 * n) * cx.prepend_unit(at));
    if (n == 1)
      CHECK(cx.b(at).is_zero());
    else
      CHECK(cx.b(at) == 2 * cx.prepend_unit(eval_chain(cx, *alpha_n(L, "x", n - 1).alpha_tilde)));
  }
  CHECK(eval_chain(cx, *alpha_n(L, "x", 1).alpha_tilde) == cx.tensor(std::vector<std::string>{"xinv", "x"}) - cx.tensor(std::vector<std::string>{"x", "xinv"}));
  CHECK_THROWS_AS(alpha_n(a2_loc(), "e", 1), Error);
}

TEST_CASE("flipped Connes sign breaks the Laurent identities") {
  auto L = laurent();
  ChainComplex flip(L, {true, true});
  Chain at = eval_chain(flip, *alpha_n(L, "x", 2).alpha_tilde);
  CHECK(flip.B(at) != Rational(4) * flip.prepend_unit(at));
}

TEST_CASE("alpha on the interval") {
  auto I = interval_kI();
  ChainComplex cx(I);
  Chain a1 = eval_chain(cx, *alpha_n(I, "x", 1).alpha_tilde);
  CHECK(cx.b(a1) == 2 * (cx.tensor(std::vector<std::string>{"id(1)"}) - cx.tensor(std::vector<std::string>{"id(2)"})));
}

TEST_CASE("mixed differential of the truncated alpha cycle") {
  auto L = laurent();
  ChainComplex cx(L);
  for (int N = 0; N <= 4; ++N) {
    MixedChain m = alpha_mixed(cx, "x", N);
    REQUIRE(static_cast<int>(m.coeffs.size()) == N + 1);
    MixedDifferential d = mixed_differential(cx, m);
    for (const auto& c : d.components) CHECK(c.is_zero());
    CHECK(d.remainder == cx.B(m.coeffs.back()));
    CHECK_FALSE(d.remainder.is_zero());
  }
}
