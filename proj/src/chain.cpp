#include "mppa/chain.hpp"

#include "mppa/error.hpp"

namespace mppa {

void Chain::add(const Tensor& t, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(t, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

Chain& Chain::operator+=(const Chain& o) {
  for (const auto& [t, c] : o.terms) add(t, c);
  return *this;
}

Chain& Chain::operator-=(const Chain& o) {
  for (const auto& [t, c] : o.terms) add(t, -c);
  return *this;
}

Chain& Chain::operator*=(const Rational& c) {
  if (c == 0) terms.clear();
  for (auto& [t, v] : terms) v *= c;
  return *this;
}

Chain operator+(Chain a, const Chain& b) { return a += b; }
Chain operator-(Chain a, const Chain& b) { return a -= b; }
Chain operator*(const Rational& c, Chain a) { return a *= c; }

ChainComplex::ChainComplex(AlgebraPtr alg, ChainConventions conv) : alg_(std::move(alg)), conv_(conv) {}

Chain ChainComplex::zero(int degree) const {
  Chain c;
  c.degree = degree;
  return c;
}

bool ChainComplex::admissible(const Tensor& t) const {
  if (t.empty()) return false;
  for (std::size_t i = 0; i + 1 < t.size(); ++i)
    if (t[i].src != t[i + 1].tgt) return false;
  return t.back().src == t.front().tgt;
}

void ChainComplex::add_term(Chain& c, const Tensor& t, const Rational& coeff) const {
  if (!admissible(t)) return;
  if (conv_.normalized)
    for (std::size_t i = 1; i < t.size(); ++i)
      if (t[i].is_idempotent()) return;
  c.add(t, coeff);
}

Chain ChainComplex::tensor(const std::vector<Element>& slots) const {
  if (slots.empty()) throw Error("a chain needs at least one slot");
  Chain out = zero(static_cast<int>(slots.size()) - 1);
  Tensor cur;
  std::vector<Element> nfslots;
  for (const auto& s : slots) nfslots.push_back(alg_->nf(s));
  auto rec = [&](auto&& self, std::size_t i, const Rational& coeff) -> void {
    if (i == nfslots.size()) {
      add_term(out, cur, coeff);
      return;
    }
    for (const auto& [w, c] : nfslots[i].terms) {
      if (i > 0 && cur.back().src != w.tgt) continue;
      cur.push_back(w);
      self(self, i + 1, coeff * c);
      cur.pop_back();
    }
  };
  rec(rec, 0, Rational(1));
  return out;
}

Chain ChainComplex::tensor(const std::vector<std::string>& slots) const {
  std::vector<Element> els;
  for (const auto& s : slots) els.push_back(alg_->parse(s));
  return tensor(els);
}

Chain ChainComplex::b(const Chain& c) const {
  Chain out = zero(c.degree - 1);
  if (c.degree <= 0) {
    out.degree = 0;
    return out;
  }
  const int n = c.degree;
  for (const auto& [t, coeff] : c.terms) {
    for (int i = 0; i < n; ++i) {
      Element prod = alg_->mul(Element(t[i]), Element(t[i + 1]));
      const Rational sign = (i % 2 == 0) ? 1 : -1;
      for (const auto& [w, pc] : prod.terms) {
        Tensor nt;
        nt.reserve(t.size() - 1);
        nt.insert(nt.end(), t.begin(), t.begin() + i);
        nt.push_back(w);
        nt.insert(nt.end(), t.begin() + i + 2, t.end());
        add_term(out, nt, sign * coeff * pc);
      }
    }
    Element prod = alg_->mul(Element(t[n]), Element(t[0]));
    const Rational sign = (n % 2 == 0) ? 1 : -1;
    for (const auto& [w, pc] : prod.terms) {
      Tensor nt;
      nt.push_back(w);
      nt.insert(nt.end(), t.begin() + 1, t.begin() + n);
      add_term(out, nt, sign * coeff * pc);
    }
  }
  return out;
}

Chain ChainComplex::B(const Chain& c) const {
  Chain out = zero(c.degree + 1);
  const int n = c.degree;
  for (const auto& [t, coeff] : c.terms) {
    for (int i = 0; i <= n; ++i) {
      const long e = conv_.flip_connes_sign ? static_cast<long>(n + 1) * i : static_cast<long>(n) * i;
      const Rational sign = (e % 2 == 0) ? 1 : -1;
      Tensor nt;
      nt.reserve(t.size() + 1);
      nt.push_back(idempotent_word(t[i].tgt));
      nt.insert(nt.end(), t.begin() + i, t.end());
      nt.insert(nt.end(), t.begin(), t.begin() + i);
      add_term(out, nt, sign * coeff);
    }
  }
  return out;
}

Chain ChainComplex::prepend_unit(const Chain& c) const {
  Chain out = zero(c.degree + 1);
  for (const auto& [t, coeff] : c.terms) {
    Tensor nt;
    nt.push_back(idempotent_word(t.front().tgt));
    nt.insert(nt.end(), t.begin(), t.end());
    add_term(out, nt, coeff);
  }
  return out;
}

Chain ChainComplex::push(const Chain& c, const Morphism& m, const ChainComplex& target) {
  if (&target.algebra() != &m.target()) throw Error("push: target complex is over another algebra");
  Chain out = target.zero(c.degree);
  for (const auto& [t, coeff] : c.terms) {
    std::vector<Element> slots;
    for (const auto& w : t) slots.push_back(m.apply_word(w));
    out += coeff * target.tensor(slots);
  }
  return out;
}

std::string ChainComplex::print(const Chain& c) const {
  if (c.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [t, coeff] : c.terms) {
    if (first)
      s += coeff < 0 ? "-" : "";
    else
      s += coeff < 0 ? " - " : " + ";
    if (abs(coeff) != 1) s += to_string(abs(coeff)) + " * ";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? " ⊗ " : "") + alg_->print_word(t[i]);
    first = false;
  }
  return s;
}

MixedDifferential mixed_differential(const ChainComplex& cx, const MixedChain& m) {
  MixedDifferential d;
  for (std::size_t k = 0; k < m.coeffs.size(); ++k) {
    Chain comp = cx.b(m.coeffs[k]);
    if (k > 0) comp -= cx.B(m.coeffs[k - 1]);
    d.components.push_back(std::move(comp));
  }
  if (!m.coeffs.empty()) d.remainder = cx.B(m.coeffs.back());
  return d;
}

std::string print_mixed(const ChainComplex& cx, const MixedChain& m) {
  std::string s;
  for (std::size_t k = 0; k < m.coeffs.size(); ++k)
    s += "u^" + std::to_string(k) + ": " + cx.print(m.coeffs[k]) + "\n";
  return s;
}

}  // namespace mppa
