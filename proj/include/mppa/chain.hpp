#pragma once

#include "mppa/morphism.hpp"
#include "mppa/presentation.hpp"

#include <map>
#include <string>
#include <vector>

namespace mppa {

using Tensor = std::vector<Word>;

// Element of C_n(A) = A ⊗_R (A/R)^{⊗n}: slots w_0..w_n with
// src(w_i) == tgt(w_{i+1}) and src(w_n) == tgt(w_0).
struct Chain {
  int degree = 0;
  std::map<Tensor, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const Tensor& t, const Rational& c);
  Chain& operator+=(const Chain& o);
  Chain& operator-=(const Chain& o);
  Chain& operator*=(const Rational& c);
  bool operator==(const Chain& o) const { return terms == o.terms; }
};

Chain operator+(Chain a, const Chain& b);
Chain operator-(Chain a, const Chain& b);
Chain operator*(const Rational& c, Chain a);

// The two deliberately breakable conventions, used by negative controls.
struct ChainConventions {
  bool normalized = true;         // drop terms with an idempotent in a slot >= 1
  bool flip_connes_sign = false;  // use (-1)^{(n+1)i} instead of (-1)^{ni} in B
};

class ChainComplex {
 public:
  explicit ChainComplex(AlgebraPtr alg, ChainConventions conv = {});

  const Algebra& algebra() const { return *alg_; }
  const AlgebraPtr& algebra_ptr() const { return alg_; }
  const ChainConventions& conventions() const { return conv_; }

  Chain zero(int degree) const;
  bool admissible(const Tensor& t) const;
  // Multilinear expansion; non-composable combinations vanish.
  Chain tensor(const std::vector<Element>& slots) const;
  Chain tensor(const std::vector<std::string>& slots) const;
  void add_term(Chain& c, const Tensor& t, const Rational& coeff) const;

  Chain b(const Chain& c) const;
  Chain B(const Chain& c) const;
  Chain prepend_unit(const Chain& c) const;  // 1 ⊗ c
  // Apply m slotwise; `target` must be a complex over m's target algebra.
  static Chain push(const Chain& c, const Morphism& m, const ChainComplex& target);

  std::string print(const Chain& c) const;

 private:
  AlgebraPtr alg_;
  ChainConventions conv_;
};

// Coefficient of u^k is coeffs[k]; u has degree 2 so deg coeffs[k] = deg coeffs[0] + 2k.
struct MixedChain {
  std::vector<Chain> coeffs;
};

struct MixedDifferential {
  std::vector<Chain> components;  // k-th entry: b(c_k) - B(c_{k-1})
  Chain remainder;                // B(c_N); the u^{N+1} coefficient is its negative
};

MixedDifferential mixed_differential(const ChainComplex& cx, const MixedChain& m);
std::string print_mixed(const ChainComplex& cx, const MixedChain& m);

}  // namespace mppa
