#include "mppa/builtins.hpp"
#include "mppa/error.hpp"
#include "mppa/presentation.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace mppa;

TEST_CASE("multiplication of paths") {
  auto A = a2_loc();
  CHECK(A->print(A->parse("e*estar")) == "e*estar");
  CHECK(A->print(A->parse("id(2)*e")) == "e");
  CHECK(A->parse("id(1)*e").is_zero());
  CHECK(A->parse("e*e").is_zero());
  auto L = laurent();
  CHECK(L->print(L->mul(L->parse("x + xinv"), L->parse("x"))) == "id(o) + x*x");
}

TEST_CASE("normal forms from the inverse relations") {
  auto A = a2_loc();
  CHECK(A->print(A->parse("estar*e*l")) == "id(1) - l");
  CHECK(A->print(A->parse("estar*e")) == "estar*e");
  CHECK(A->print(A->parse("a2inv*e")) == A->print(A->parse("e*a1inv")));
  CHECK(A->print(A->parse("(1 + e*estar)*inv_1_plus_e_estar")) == "id(1) + id(2)");
  auto L = laurent();
  CHECK(L->print(L->parse("x*xinv")) == "id(o)");
  CHECK(L->parse("x") != L->parse("xinv"));
}

TEST_CASE("printer round trip") {
  std::mt19937_64 rng(5);
  for (auto alg : {laurent(), laurent_pair(), interval_kI(), a2_loc(), two_object_groupoid_C()}) {
    for (int i = 0; i < 100; ++i) {
      Element a = alg->nf(testing::random_element(*alg, rng));
      CHECK(alg->parse(alg->print(a)) == a);
    }
  }
  auto A = a2_loc();
  CHECK(A->print(Element()) == "0");
  CHECK(A->print(A->parse("-1/2*e + 3*estar")) == "-1/2*e + 3*estar");
}

TEST_CASE("normal form is idempotent on random elements") {
  std::mt19937_64 rng(1);
  auto Q = quiver_loc(jordan_quiver());
  int n = 0;
  for (auto alg : {laurent(), laurent_pair(), interval_kI(), a2_loc(), two_object_groupoid_C(), Q}) {
    for (int i = 0; i < 100; ++i, ++n) {
      Element a = alg->nf(testing::random_element(*alg, rng, 6));
      CHECK(alg->nf(a) == a);
      for (const auto& [w, c] : a.terms) CHECK(alg->is_normal(w));
    }
  }
  CHECK(n >= 500);
}

TEST_CASE("multiplication respects normal forms") {
  std::mt19937_64 rng(2);
  auto A = a2_loc();
  for (int i = 0; i < 200; ++i) {
    Element a = testing::random_element(*A, rng), b = testing::random_element(*A, rng);
    CHECK(A->mul(A->nf(a), A->nf(b)) == A->nf(A->mul_free(a, b)));
  }
}

TEST_CASE("critical pairs join within depth 12") {
  for (auto alg : {laurent(), laurent_pair(), interval_kI(), a2_loc(), two_object_groupoid_C()}) {
    CAPTURE(alg->name());
    auto pairs = alg->critical_pairs(12);
    for (const auto& p : pairs) CHECK(p.joinable);
    CHECK(alg->certified());
  }
  auto A = a2_loc();
  bool found = false;
  for (const auto& p : A->critical_pairs(12))
    if (A->print_word(p.overlap) == "l*estar*e*l") {
      found = true;
      CHECK(A->print(p.left) == "l - l*l");
    }
  CHECK(found);
  CHECK_FALSE(laurent()->critical_pairs(12).empty());
}

TEST_CASE("built-in presentations") {
  auto I = interval_kI();
  // Basis {e1, e2, x, x^-1}: no normal word of length 2.
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    Element a = I->nf(testing::random_element(*I, rng, 6));
    for (const auto& [w, c] : a.terms) CHECK(w.size() <= 1);
  }
  auto P = pushout_xy_q(1);
  CHECK(P->print(P->parse("x*y")) == "id(o)");
  auto P3 = pushout_xy_q(3);
  CHECK(P3->print(P3->parse("x*y")) == "3*id(o)");
  CHECK(P3->print(P3->parse("yinv*xinv")) == "1/3*id(o)");
  CHECK_THROWS_AS(builtin("nope"), Error);
  CHECK(builtin("a2loc")->name() == "a2_loc");
  CHECK(builtin("kI")->name() == "interval_kI");
}

TEST_CASE("morphism well-definedness") {
  auto A = a2_loc();
  CHECK(mu1_morphism(A)->check().ok);
  CHECK(mu2_morphism(A)->check().ok);
  auto L = laurent();
  CHECK(inv_morphism(L)->check().ok);
  for (const Rational& q : {Rational(2), Rational(-1, 3)}) CHECK(rescale_morphism(L, q)->check().ok);
  auto bad = Morphism::make("bad", laurent(), A, {{"o", "1"}}, {{"x", "estar*e"}, {"xinv", "estar*e"}});
  MorphismCheck c = bad->check();
  CHECK_FALSE(c.ok);
  CHECK(c.violated.find("xinv") != std::string::npos);
}

TEST_CASE("rewrite budget") {
  Presentation p;
  p.name = "loop";
  p.vertices = {"o"};
  p.generators = {{"x", "o", "o", 0, RecipeKind::Free, ""}};
  p.rules = {{"x", "x*x"}};
  CHECK_THROWS_AS(make_algebra(p, RewriteOptions{1000, 4})->parse("x"), BudgetExceeded);
}

TEST_CASE("grammar errors") {
  auto A = a2_loc();
  CHECK_THROWS_AS(A->parse("e*("), ParseError);
  CHECK_THROWS_AS(A->parse("unknown"), Error);
  CHECK(A->print(A->parse("inv(a2)")) == A->print(A->parse("a2inv")));
}
