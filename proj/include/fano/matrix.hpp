#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fano/error.hpp"
#include "fano/exactnum.hpp"
#include "fano/polynomial.hpp"

namespace fano {

template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, K(0)) {}
  Matrix(std::initializer_list<std::initializer_list<K>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<K>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < m.rows_; ++i) {
      if (rows[i].size() != m.cols_) throw DimensionMismatch("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix column(const std::vector<K>& v) {
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<K> row(std::size_t i) const { return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_}; }
  std::vector<K> col(std::size_t j) const {
    std::vector<K> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  template <class F>
  auto map(F fn) const {
    using R = decltype(fn(std::declval<K>()));
    Matrix<R> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = fn((*this)(i, j));
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const K& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.require_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.require_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Matrix operator*(const K& k, Matrix a) {
    for (auto& x : a.data_) x = k * x;
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::vector<K> apply(const std::vector<K>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
    std::vector<K> out(rows_, K(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  K trace() const {
    require_square("trace");
    K t(0);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  // Reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref_in_place() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && is_zero((*this)(p, c))) ++p;
      if (p == rows_) continue;
      swap_rows(p, r);
      K inv = K(1) / (*this)(r, c);
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = (*this)(r, j) * inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || is_zero((*this)(i, c))) continue;
        K factor = (*this)(i, c);
        for (std::size_t j = c; j < cols_; ++j) (*this)(i, j) -= factor * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix m = *this;
    return m.rref_in_place().size();
  }

  // Basis of the right kernel {v : M v = 0}.
  std::vector<std::vector<K>> nullspace() const {
    Matrix m = *this;
    auto pivots = m.rref_in_place();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<K>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<K> v(cols_, K(0));
      v[free] = K(1);
      for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  K det() const {
    require_square("determinant");
    Matrix m = *this;
    K d(1);
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t p = c;
      while (p < rows_ && is_zero(m(p, c))) ++p;
      if (p == rows_) return K(0);
      if (p != c) {
        m.swap_rows(p, c);
        d = -d;
      }
      d = d * m(c, c);
      K inv = K(1) / m(c, c);
      for (std::size_t i = c + 1; i < rows_; ++i) {
        if (is_zero(m(i, c))) continue;
        K factor = m(i, c) * inv;
        for (std::size_t j = c; j < cols_; ++j) m(i, j) -= factor * m(c, j);
      }
    }
    return d;
  }

  std::optional<Matrix> inverse() const {
    require_square("inverse");
    Matrix aug(rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_ + i) = K(1);
    }
    auto pivots = aug.rref_in_place();
    if (pivots.size() < rows_ || pivots[rows_ - 1] >= cols_) return std::nullopt;
    Matrix inv(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
    return inv;
  }

  static Matrix kronecker(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        for (std::size_t k = 0; k < b.rows_; ++k)
          for (std::size_t l = 0; l < b.cols_; ++l) out(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
    return out;
  }

  static Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_) throw DimensionMismatch("vstack column mismatch");
    Matrix out(a.rows_ + b.rows_, a.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) out(a.rows_ + i, j) = b(i, j);
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      out += i ? ",[" : "[";
      for (std::size_t j = 0; j < cols_; ++j) out += (j ? "," : "") + to_text((*this)(i, j));
      out += "]";
    }
    return out + "]";
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<K> data_;

  void require_square(const char* what) const {
    if (!is_square()) throw DimensionMismatch(std::string(what) + " needs a square matrix");
  }
  void require_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionMismatch("matrix shapes differ");
  }
};

using CycMatrix = Matrix<Cyclotomic>;
using PolyMatrix = Matrix<MultiPoly>;

// Fraction-free elimination over a polynomial ring: quotients are exact.
namespace detail {
inline MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw InvariantViolation("Bareiss step produced an inexact quotient");
  return *q;
}
}  // namespace detail

inline MultiPoly bareiss_det(PolyMatrix m) {
  if (!m.is_square()) throw DimensionMismatch("determinant needs a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return MultiPoly(1);
  MultiPoly prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k).is_zero()) ++p;
    if (p == n) return MultiPoly(0);
    if (p != k) {
      m.swap_rows(p, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = detail::exact_quotient(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
      m(i, k) = MultiPoly(0);
    }
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

// Rank over the fraction field of the polynomial ring.
inline std::size_t bareiss_rank(PolyMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  MultiPoly prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    m.swap_rows(p, r);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m(i, j) = detail::exact_quotient(m(r, c) * m(i, j) - m(i, c) * m(r, j), prev);
      m(i, c) = MultiPoly(0);
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

// p(M x): variable i is replaced by sum_j M(i,j) x_j.
inline MultiPoly substitute_linear(const MultiPoly& p, const CycMatrix& M) {
  const std::size_t n = p.nvars();
  if (!M.is_square() || M.rows() != n) throw DimensionMismatch("substitute_linear: matrix size differs from variable count");
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly form(p.variables());
    for (std::size_t j = 0; j < n; ++j) form += MultiPoly::variable(p.variables(), j).scaled(M(i, j));
    images.push_back(std::move(form));
  }
  return p.compose(images);
}

// p(P t) for the nOld x nNew parametrization P, in the variables newVars.
inline MultiPoly restrict_to_subspace(const MultiPoly& p, const CycMatrix& param, const std::vector<std::string>& newVars) {
  if (param.rows() != p.nvars() || param.cols() != newVars.size())
    throw DimensionMismatch("restrict_to_subspace: parametrization shape mismatch");
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < param.rows(); ++i) {
    MultiPoly form(newVars);
    for (std::size_t j = 0; j < param.cols(); ++j) form += MultiPoly::variable(newVars, j).scaled(param(i, j));
    images.push_back(std::move(form));
  }
  return p.compose(images);
}

inline MultiPoly restrict_to_subspace(const MultiPoly& p, const CycMatrix& param) {
  return restrict_to_subspace(p, param, numbered_variables("t", param.cols()));
}

// Outcome of asking whether p = c q.
struct Proportionality {
  enum class Kind { Scalar, ZeroLeft, BothZero, None };
  Kind kind = Kind::None;
  Cyclotomic scalar;

  bool proportional() const { return kind != Kind::None; }
  std::string to_string() const {
    switch (kind) {
      case Kind::Scalar: return scalar.to_string();
      case Kind::ZeroLeft: return "zero-left";
      case Kind::BothZero: return "both-zero";
      case Kind::None: break;
    }
    return "none";
  }
};

inline Proportionality proportionality(const MultiPoly& p, const MultiPoly& q) {
  if (p.is_zero() && q.is_zero()) return {Proportionality::Kind::BothZero, {}};
  if (p.is_zero()) return {Proportionality::Kind::ZeroLeft, Cyclotomic(0)};
  if (q.is_zero()) return {};
  const auto& [e, qc] = *q.terms().begin();
  Cyclotomic c = p.coefficient(e) / qc;
  if (c.is_zero() || !(p - q.scaled(c)).is_zero()) return {};
  return {Proportionality::Kind::Scalar, c};
}

// Symmetric Gram matrix of a quadratic form: q(v) = v^T G v.
inline CycMatrix gram_matrix(const MultiPoly& q) {
  if (q.total_degree() > 2 || !q.is_homogeneous()) throw InvariantViolation("gram_matrix needs a quadratic form");
  const std::size_t n = q.nvars();
  CycMatrix g(n, n);
  for (const auto& [e, c] : q.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      for (unsigned k = 0; k < e[i]; ++k) idx.push_back(i);
    if (idx[0] == idx[1]) {
      g(idx[0], idx[0]) += c;
    } else {
      Cyclotomic half = c / Cyclotomic(2);
      g(idx[0], idx[1]) += half;
      g(idx[1], idx[0]) += half;
    }
  }
  return g;
}

// Matrix of the linear forms of a list of polynomials (coefficients of x_j).
inline CycMatrix linear_form_matrix(const std::vector<MultiPoly>& forms) {
  if (forms.empty()) return {};
  const std::size_t n = forms[0].nvars();
  CycMatrix m(forms.size(), n);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (forms[i].nvars() != n) throw DimensionMismatch("linear forms over different variables");
    for (std::size_t j = 0; j < n; ++j) {
      typename MultiPoly::Exponents e(n, 0);
      e[j] = 1;
      m(i, j) = forms[i].coefficient(e);
    }
  }
  return m;
}

}  // namespace fano
