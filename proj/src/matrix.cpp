#include "mppa/matrix.hpp"

#include "mppa/error.hpp"

#include <algorithm>
#include <sstream>

namespace mppa {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch in addition");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch in subtraction");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& c) {
  for (auto& x : a_) x *= c;
  return *this;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

Rational Matrix::trace() const {
  Rational t = 0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
  return t;
}

Rational Matrix::det() const {
  if (rows_ != cols_) throw Error("determinant of a non-square matrix");
  Matrix m = *this;
  Rational d = 1;
  const int n = rows_;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m.at(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(c, j));
      d = -d;
    }
    d *= m.at(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (m.at(r, c) == 0) continue;
      Rational f = m.at(r, c) / m.at(c, c);
      for (int j = c; j < n; ++j) m.at(r, j) -= f * m.at(c, j);
    }
  }
  return d;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const int n = rows_;
  Matrix m = *this, inv = identity(n);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m.at(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != c)
      for (int j = 0; j < n; ++j) {
        std::swap(m.at(p, j), m.at(c, j));
        std::swap(inv.at(p, j), inv.at(c, j));
      }
    Rational piv = m.at(c, c);
    for (int j = 0; j < n; ++j) {
      m.at(c, j) /= piv;
      inv.at(c, j) /= piv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || m.at(r, c) == 0) continue;
      Rational f = m.at(r, c);
      for (int j = 0; j < n; ++j) {
        m.at(r, j) -= f * m.at(c, j);
        inv.at(r, j) -= f * inv.at(c, j);
      }
    }
  }
  return inv;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
  }
  os << "]";
  return os.str();
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(const Rational& c, Matrix a) { return a *= c; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix shape mismatch in product");
  Matrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

BlockMatrix block_add(const BlockMatrix& a, const BlockMatrix& b, const Rational& cb) {
  BlockMatrix r = a;
  for (const auto& [k, m] : b) {
    auto it = r.find(k);
    if (it == r.end())
      r.emplace(k, cb * m);
    else
      it->second += cb * m;
  }
  return r;
}

BlockMatrix block_scale(const Rational& c, const BlockMatrix& a) {
  BlockMatrix r;
  for (const auto& [k, m] : a) r.emplace(k, c * m);
  return r;
}

BlockMatrix block_mul(const BlockMatrix& a, const BlockMatrix& b) {
  BlockMatrix r;
  for (const auto& [ka, ma] : a)
    for (const auto& [kb, mb] : b) {
      if (ka.second != kb.first) continue;
      BlockKey k{ka.first, kb.second};
      auto it = r.find(k);
      if (it == r.end())
        r.emplace(k, ma * mb);
      else
        it->second += ma * mb;
    }
  return r;
}

bool block_equal(const BlockMatrix& a, const BlockMatrix& b) {
  for (const auto& [k, m] : a) {
    auto it = b.find(k);
    if (it == b.end() ? !m.is_zero() : !(it->second == m)) return false;
  }
  for (const auto& [k, m] : b)
    if (!a.count(k) && !m.is_zero()) return false;
  return true;
}

}  // namespace mppa
