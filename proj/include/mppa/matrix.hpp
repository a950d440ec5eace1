#pragma once

#include "mppa/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mppa {

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols)) {}
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
  const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i * cols_ + j)]; }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& c);
  bool operator==(const Matrix& o) const = default;

  bool is_zero() const;
  Rational trace() const;
  Rational det() const;
  std::optional<Matrix> inverse() const;
  std::string str() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& c, Matrix a);

// Matrices indexed by (target vertex, source vertex). A block is present when
// the expression structurally reaches it, even if its entries vanish.
using BlockKey = std::pair<int, int>;
using BlockMatrix = std::map<BlockKey, Matrix>;

BlockMatrix block_add(const BlockMatrix& a, const BlockMatrix& b, const Rational& cb = 1);
BlockMatrix block_scale(const Rational& c, const BlockMatrix& a);
BlockMatrix block_mul(const BlockMatrix& a, const BlockMatrix& b);
// Equal as linear maps: missing blocks count as zero.
bool block_equal(const BlockMatrix& a, const BlockMatrix& b);

}  // namespace mppa
