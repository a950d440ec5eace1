#pragma once

#include "mppa/matrix.hpp"
#include "mppa/morphism.hpp"
#include "mppa/presentation.hpp"
#include "mppa/quiver.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mppa {

using Dims = std::vector<int>;  // indexed like the algebra's vertices

struct MatrixRep {
  Dims dims;
  std::vector<Matrix> gens;  // X_g has shape dims(tgt g) x dims(src g)
  std::uint64_t seed = 0;
  int attempts = 0;
};

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

// Entries uniform in {-3,...,3}; inverse generators are exact inverses.
// Resamples up to 100 times when a required inverse does not exist.
MatrixRep random_rep(const Algebra& alg, const Dims& dims, std::uint64_t seed);
MatrixRep random_rep(const Algebra& alg, const DimensionVector& dims, std::uint64_t seed);
// Entries uniform in {-3,...,3}, deterministic in seed.
Matrix random_matrix(int rows, int cols, std::uint64_t seed);
Dims uniform_dims(const Algebra& alg, int d);
// Trial t uses dimension 1 + (t mod 3) at every vertex.
Dims cycling_dims(const Algebra& alg, int trial);

// Matrix interpretation of elements and expressions. Never consults the
// rewriting rules: generators go to their matrices and products multiply
// in display order (the rightmost factor acts first).
class Evaluator {
 public:
  Evaluator(const Algebra& alg, MatrixRep rep);

  const Algebra& algebra() const { return *alg_; }
  const MatrixRep& rep() const { return rep_; }
  int dim(int v) const { return rep_.dims.at(v); }

  BlockMatrix eval(const Expr& e) const;
  BlockMatrix eval(const Element& a) const;
  Matrix word(const Word& w) const;
  BlockMatrix identity() const;

  // Evaluator for m's source algebra at the representation ρ∘m.
  const Evaluator& pull_back(const Morphism& m) const;

 private:
  BlockMatrix inverse(const BlockMatrix& a) const;

  const Algebra* alg_;
  MatrixRep rep_;
  mutable std::map<const Morphism*, std::unique_ptr<Evaluator>> pulled_;
};

struct OracleVerdict {
  bool distinct = false;
  int trials = 0;
  std::string counterexample;  // description of the separating representation
};

OracleVerdict oracle_equals(const Algebra& alg, const Element& a, const Element& b, int trials, std::uint64_t seed,
                            const std::optional<Dims>& fixed_dims = std::nullopt);
OracleVerdict oracle_equals(const Algebra& alg, const Expr& a, const Expr& b, int trials, std::uint64_t seed,
                            const std::optional<Dims>& fixed_dims = std::nullopt);

struct EqualityVerdict {
  bool equal = false;
  bool probabilistic = false;
};

// Exact when the presentation is certified confluent, otherwise oracle-based.
EqualityVerdict equals(const Algebra& alg, const Element& a, const Element& b);

}  // namespace mppa
