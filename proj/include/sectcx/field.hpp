#pragma once

// Dense linear algebra over GF(p).

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sectcx/errors.hpp"

namespace sectcx {

class PrimeField {
 public:
  using Elem = std::uint32_t;

  explicit PrimeField(std::int64_t p = 2) : p_(static_cast<Elem>(p)) {
    if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(p))
      throw DomainError("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }

  Elem modulus() const { return p_; }
  Elem from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  Elem add(Elem a, Elem b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Elem>(s >= p_ ? s - p_ : s);
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : static_cast<Elem>(std::uint64_t{a} + p_ - b); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return static_cast<Elem>(std::uint64_t{a} * b % p_); }
  Elem inv(Elem a) const {
    if (a == 0) throw DomainError("division by zero in GF(" + std::to_string(p_) + ")");
    return pow(a, p_ - 2);
  }
  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  /// Residue shown in (-p/2, p/2].
  std::int64_t signed_value(Elem a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  static bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  Elem p_;
};

using IntMatrix = std::vector<std::vector<std::int64_t>>;

class Matrix {
 public:
  using Elem = PrimeField::Elem;

  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix from_int(const PrimeField& f, const IntMatrix& a, int cols_if_empty = 0) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : cols_if_empty;
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = f.from_int(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Elem& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  Elem operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool is_zero() const {
    for (Elem e : data_)
      if (e) return false;
    return true;
  }
  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::vector<Elem> column(int j) const {
    std::vector<Elem> c(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) c[static_cast<std::size_t>(i)] = (*this)(i, j);
    return c;
  }
  Matrix columns(const std::vector<int>& idx) const {
    Matrix m(rows_, static_cast<int>(idx.size()));
    for (int i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < idx.size(); ++k) m(i, static_cast<int>(k)) = (*this)(i, idx[k]);
    return m;
  }
  Matrix rows_subset(const std::vector<int>& idx) const {
    Matrix m(static_cast<int>(idx.size()), cols_);
    for (std::size_t k = 0; k < idx.size(); ++k)
      for (int j = 0; j < cols_; ++j) m(static_cast<int>(k), j) = (*this)(idx[k], j);
    return m;
  }
  /// [A | B]; row counts must agree (an empty side adopts the other's rows).
  static Matrix hcat(const Matrix& a, const Matrix& b) {
    if (a.cols_ == 0 && a.rows_ != b.rows_) return b;
    if (b.cols_ == 0 && a.rows_ != b.rows_) return a;
    if (a.rows_ != b.rows_) throw DomainError("hcat: row mismatch");
    Matrix m(a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
      for (int j = 0; j < b.cols_; ++j) m(i, a.cols_ + j) = b(i, j);
    }
    return m;
  }
  void append_column(const std::vector<Elem>& c) {
    if (cols_ == 0 && rows_ == 0) rows_ = static_cast<int>(c.size());
    if (static_cast<int>(c.size()) != rows_) throw DomainError("append_column: size mismatch");
    Matrix m = hcat(*this, Matrix(rows_, 1));
    for (int i = 0; i < rows_; ++i) m(i, cols_) = c[static_cast<std::size_t>(i)];
    *this = std::move(m);
  }

  std::vector<std::vector<std::int64_t>> to_signed(const PrimeField& f) const {
    std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out[static_cast<std::size_t>(i)].push_back(f.signed_value((*this)(i, j)));
    return out;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Elem> data_;
};

inline Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    std::ostringstream msg;
    msg << "multiply: shapes " << a.rows() << "x" << a.cols() << " and " << b.rows() << "x" << b.cols();
    throw DomainError(msg.str());
  }
  Matrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      auto aik = a(i, k);
      if (!aik) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(aik, b(k, j)));
    }
  return c;
}

inline std::vector<PrimeField::Elem> apply(const PrimeField& f, const Matrix& a, const std::vector<PrimeField::Elem>& v) {
  if (static_cast<int>(v.size()) != a.cols()) throw DomainError("apply: size mismatch");
  std::vector<PrimeField::Elem> out(static_cast<std::size_t>(a.rows()), 0);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) && v[static_cast<std::size_t>(j)])
        out[static_cast<std::size_t>(i)] = f.add(out[static_cast<std::size_t>(i)], f.mul(a(i, j), v[static_cast<std::size_t>(j)]));
  return out;
}

struct RowEchelon {
  Matrix reduced;           // reduced row echelon form
  std::vector<int> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination; the pivot of each column is the first row at or
/// below the current one holding a nonzero entry.
inline RowEchelon rref(const PrimeField& f, Matrix m) {
  RowEchelon out;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m(i, col)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    auto s = f.inv(m(row, col));
    for (int j = col; j < m.cols(); ++j) m(row, j) = f.mul(m(row, j), s);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || !m(i, col)) continue;
      auto factor = m(i, col);
      for (int j = col; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(row, j)));
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

inline int rank(const PrimeField& f, const Matrix& m) { return static_cast<int>(rref(f, m).pivots.size()); }

/// Columns form a basis of the null space; one vector per free column.
inline Matrix kernel(const PrimeField& f, const Matrix& m) {
  RowEchelon e = rref(f, m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols(); ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
  Matrix k(m.cols(), static_cast<int>(free_cols.size()));
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    int fc = free_cols[t];
    k(fc, static_cast<int>(t)) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      k(e.pivots[r], static_cast<int>(t)) = f.neg(e.reduced(static_cast<int>(r), fc));
  }
  return k;
}

/// Basis of the column space made of the pivot columns of m.
inline Matrix image(const PrimeField& f, const Matrix& m) { return m.columns(rref(f, m).pivots); }

/// X with A X = B, or nullopt when some column of B is outside the image.
inline std::optional<Matrix> solve(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DomainError("solve: row mismatch");
  RowEchelon e = rref(f, Matrix::hcat(a, b));
  const int n = a.cols();
  for (int p : e.pivots)
    if (p >= n) return std::nullopt;
  Matrix x(n, b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    for (int j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.reduced(static_cast<int>(r), n + j);
  return x;
}

/// L with L A = I for A of full column rank.
inline Matrix left_inverse(const PrimeField& f, const Matrix& a) {
  // Row-reducing [A^T | I] exposes independent rows of A; invert that square block.
  Matrix at(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) at(j, i) = a(i, j);
  std::vector<int> rows_used = rref(f, at).pivots;
  if (static_cast<int>(rows_used.size()) != a.cols()) throw DomainError("left_inverse: columns are dependent");
  Matrix square = a.rows_subset(rows_used);
  auto inv = solve(f, square, Matrix::identity(a.cols()));
  Matrix l(a.cols(), a.rows());
  for (int i = 0; i < a.cols(); ++i)
    for (std::size_t k = 0; k < rows_used.size(); ++k) l(i, rows_used[k]) = (*inv)(i, static_cast<int>(k));
  return l;
}

}  // namespace sectcx
