#include "mppa/element.hpp"

namespace mppa {

void Element::add(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [w, c] : o.terms) add(w, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [w, c] : o.terms) add(w, -c);
  return *this;
}

Element& Element::operator*=(const Rational& c) {
  if (c == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [w, v] : terms) v *= c;
  return *this;
}

Element operator+(Element a, const Element& b) { return a += b; }
Element operator-(Element a, const Element& b) { return a -= b; }
Element operator-(Element a) { return a *= Rational(-1); }
Element operator*(const Rational& c, Element a) { return a *= c; }

}  // namespace mppa
