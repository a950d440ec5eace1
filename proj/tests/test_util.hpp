#pragma once

#include "mppa/chain.hpp"
#include "mppa/presentation.hpp"

#include <random>
#include <vector>

namespace mppa::testing {

inline std::vector<int> degree0_gens(const Algebra& a) {
  std::vector<int> g;
  for (int i = 0; i < a.num_generators(); ++i)
    if (a.generator(i).degree == 0 && a.generator(i).recipe != RecipeKind::DefinedAs) g.push_back(i);
  return g;
}

// Random composable word of at most max_len letters (functional order).
inline Word random_word(const Algebra& a, std::mt19937_64& rng, int max_len) {
  const auto gens = degree0_gens(a);
  const int v = static_cast<int>(rng() % static_cast<unsigned>(a.num_vertices()));
  Word w = idempotent_word(v);
  const int len = static_cast<int>(rng() % static_cast<unsigned>(max_len + 1));
  for (int i = 0; i < len; ++i) {
    std::vector<int> ok;
    for (int g : gens)
      if (a.gen_tgt(g) == w.src) ok.push_back(g);
    if (ok.empty()) break;
    const int g = ok[rng() % ok.size()];
    w.letters.push_back(g);
    w.src = a.gen_src(g);
  }
  return w;
}

// Sum of up to four random words, not normalized.
inline Element random_element(const Algebra& a, std::mt19937_64& rng, int max_len = 5) {
  Element e;
  const int n = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < n; ++i) e.add(random_word(a, rng, max_len), static_cast<long>(rng() % 7) - 3);
  return e;
}

// Closed walk of at least n+1 letters cut into n+1 consecutive slots.
inline Tensor random_tensor(const Algebra& a, std::mt19937_64& rng, int n) {
  const auto gens = degree0_gens(a);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const int start = static_cast<int>(rng() % static_cast<unsigned>(a.num_vertices()));
    std::vector<int> letters;
    int cur = start;
    const int target_len = n + 1 + static_cast<int>(rng() % 3);
    for (int step = 0; step < 24; ++step) {
      std::vector<int> ok;
      for (int g : gens)
        if (a.gen_tgt(g) == cur) ok.push_back(g);
      if (ok.empty()) break;
      const int g = ok[rng() % ok.size()];
      letters.push_back(g);
      cur = a.gen_src(g);
      if (static_cast<int>(letters.size()) >= target_len && cur == start) break;
    }
    if (cur != start || static_cast<int>(letters.size()) < n + 1) continue;
    // n cut points among the interior positions.
    std::vector<int> cuts;
    for (int i = 1; i < static_cast<int>(letters.size()); ++i) cuts.push_back(i);
    std::shuffle(cuts.begin(), cuts.end(), rng);
    cuts.resize(static_cast<std::size_t>(n));
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(static_cast<int>(letters.size()));
    Tensor t;
    int from = 0;
    for (int c : cuts) {
      std::vector<int> piece(letters.begin() + from, letters.begin() + c);
      t.push_back(a.make_word(piece));
      from = c;
    }
    return t;
  }
  return {};
}

inline Chain random_chain(const ChainComplex& cx, std::mt19937_64& rng, int n) {
  Chain c = cx.zero(n);
  const int terms = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < terms; ++i) {
    Tensor t = random_tensor(cx.algebra(), rng, n);
    if (t.empty()) continue;
    std::vector<Element> slots;
    for (const auto& w : t) slots.push_back(Element(w));
    Chain x = cx.tensor(slots);
    x *= Rational(static_cast<long>(rng() % 5) + 1);
    c += x;
  }
  return c;
}

}  // namespace mppa::testing
