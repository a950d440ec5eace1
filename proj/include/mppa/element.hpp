#pragma once

#include "mppa/rational.hpp"

#include <compare>
#include <map>
#include <vector>

namespace mppa {

// A path g_0 g_1 ... g_k of generator indices. Composition is functional:
// the rightmost letter acts first, so src(g_i) == tgt(g_{i+1}), the word's
// source is src(g_k) and its target is tgt(g_0). An empty word is the
// idempotent e_v with src == tgt == v.
struct Word {
  int tgt = 0;
  int src = 0;
  std::vector<int> letters;

  bool is_idempotent() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }

  // Shorter words first, then lexicographic letters, then endpoints.
  std::strong_ordering operator<=>(const Word& o) const {
    if (auto c = letters.size() <=> o.letters.size(); c != 0) return c;
    if (auto c = letters <=> o.letters; c != 0) return c;
    if (auto c = tgt <=> o.tgt; c != 0) return c;
    return src <=> o.src;
  }
  bool operator==(const Word& o) const = default;
};

inline Word idempotent_word(int v) { return Word{v, v, {}}; }

// Finite linear combination of words with nonzero rational coefficients.
// Words need not share endpoints: a general element is a sum of blocks.
struct Element {
  std::map<Word, Rational> terms;

  Element() = default;
  Element(const Word& w, const Rational& c = 1) {
    if (c != 0) terms.emplace(w, c);
  }

  bool is_zero() const { return terms.empty(); }
  void add(const Word& w, const Rational& c);
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Rational& c);

  bool operator==(const Element& o) const { return terms == o.terms; }
};

Element operator+(Element a, const Element& b);
Element operator-(Element a, const Element& b);
Element operator-(Element a);
Element operator*(const Rational& c, Element a);

}  // namespace mppa
