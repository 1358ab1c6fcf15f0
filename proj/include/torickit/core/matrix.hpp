#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "torickit/core/numbers.hpp"

namespace torickit {

/// Dense vector with a dimension fixed at construction.
template <class T>
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t n) : data_(n, T(0)) {}
  Vec(std::initializer_list<T> init) : data_(init) {}
  explicit Vec(std::vector<T> data) : data_(std::move(data)) {}

  std::size_t size() const noexcept { return data_.size(); }
  T& operator[](std::size_t i) { return data_[i]; }
  const T& operator[](std::size_t i) const { return data_[i]; }

  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }
  const std::vector<T>& values() const noexcept { return data_; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return sgn(x) == 0; });
  }

  friend bool operator==(const Vec& a, const Vec& b) { return a.data_ == b.data_; }
  friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }
  // lexicographic
  friend bool operator<(const Vec& a, const Vec& b) { return a.data_ < b.data_; }

  friend Vec operator+(const Vec& a, const Vec& b) {
    check_same(a, b);
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
  }
  friend Vec operator-(const Vec& a, const Vec& b) {
    check_same(a, b);
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
  }
  friend Vec operator-(const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
  }
  friend Vec operator*(const T& s, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
  }

 private:
  static void check_same(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vector sizes differ");
  }
  std::vector<T> data_;
};

using IntVec = Vec<BigInt>;
using RatVec = Vec<BigRat>;

template <class T>
T dot(const Vec<T>& a, const Vec<T>& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot: sizes differ");
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline BigRat dot(const IntVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot: sizes differ");
  BigRat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += BigRat(a[i]) * b[i];
  return s;
}

inline RatVec to_rational(const IntVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = BigRat(v[i]);
  return r;
}

/// Returns nullopt when some entry is not integral.
inline std::optional<IntVec> to_integer(const RatVec& v) {
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_integer(v[i])) return std::nullopt;
    r[i] = v[i].get_num();
  }
  return r;
}

inline IntVec make_int_vec(std::initializer_list<long> xs) {
  std::vector<BigInt> d;
  for (long x : xs) d.emplace_back(x);
  return IntVec(std::move(d));
}

/// Divides v by the gcd of its entries.
inline IntVec primitive(const IntVec& v) {
  BigInt g(0);
  for (const auto& x : v) g = gcd(g, x);
  if (is_zero(g)) throw Error(ErrorKind::ZeroVector, "primitive() of the zero vector");
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

/// Smallest positive integer multiple of a nonzero rational vector.
inline IntVec primitive(const RatVec& v) {
  BigInt den(1);
  for (const auto& x : v) den = lcm(den, x.get_den());
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    BigRat s = v[i] * BigRat(den);
    r[i] = s.get_num();
  }
  return primitive(r);
}

template <class T>
std::string to_string(const Vec<T>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Vec<T>& v) {
  return os << to_string(v);
}

/// Dense row-major matrix with fixed shape.
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Mat(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Mat from_rows(const std::vector<Vec<T>>& rows, std::size_t cols) {
    Mat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error(ErrorKind::DimensionMismatch, "from_rows: ragged");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Mat from_columns(const std::vector<Vec<T>>& columns, std::size_t rows) {
    return from_rows(columns, rows).transposed();
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec<T> row(std::size_t i) const {
    Vec<T> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }
  Vec<T> column(std::size_t j) const {
    Vec<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Mat transposed() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Mat select_rows(const std::vector<std::size_t>& idx) const {
    Mat m(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(idx[i], j);
    return m;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return sgn(x) == 0; });
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }
  friend bool operator<(const Mat& a, const Mat& b) {
    return std::tie(a.rows_, a.cols_, a.data_) < std::tie(b.rows_, b.cols_, b.data_);
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape");
    Mat r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (sgn(aik) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend Vec<T> operator*(const Mat& a, const Vec<T>& v) {
    if (a.cols_ != v.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape");
    Vec<T> r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) r[i] += a(i, j) * v[j];
    return r;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMat = Mat<BigInt>;
using RatMat = Mat<BigRat>;

inline IntMat make_int_mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t c = rows.size() ? rows.begin()->size() : 0;
  IntMat m(rows.size(), c);
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != c) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    std::size_t j = 0;
    for (long x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

inline RatMat to_rational(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = BigRat(m(i, j));
  return r;
}

template <class T>
std::string to_string(const Mat<T>& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += ",";
    s += to_string(m.row(i));
  }
  return s + "]";
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Mat<T>& m) {
  return os << to_string(m);
}

/// Reduced row echelon form over Q; returns the pivot columns.
inline std::vector<std::size_t> rref_in_place(RatMat& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    BigRat inv = 1 / m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      BigRat f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(const RatMat& m) {
  RatMat c = m;
  return rref_in_place(c).size();
}

inline std::size_t rank(const IntMat& m) { return rank(to_rational(m)); }

/// Basis of the right null space {x : m x = 0} over Q.
inline std::vector<RatVec> kernel(const RatMat& m) {
  RatMat r = m;
  auto pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVec v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some solution of m x = b over Q, or nullopt when inconsistent.
inline std::optional<RatVec> solve(const RatMat& m, const RatVec& b) {
  if (b.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "solve: rhs size");
  RatMat aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  RatVec x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return x;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
inline BigInt determinant(const IntMat& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square");
  const std::size_t n = a.rows();
  if (n == 0) return BigInt(1);
  IntMat m = a;
  BigInt prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t p = k + 1;
      while (p < n && is_zero(m(p, k))) ++p;
      if (p == n) return BigInt(0);
      m.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = t / prev;
      }
    prev = m(k, k);
  }
  BigInt d = m(n - 1, n - 1);
  return sign > 0 ? d : BigInt(-d);
}

inline bool is_unimodular(const IntMat& u) {
  if (u.rows() != u.cols()) return false;
  BigInt d = determinant(u);
  return d == 1 || d == -1;
}

/// Inverse of a square rational matrix; nullopt when singular.
inline std::optional<RatMat> inverse(const RatMat& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square");
  RatMat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref_in_place(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  RatMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

}  // namespace torickit
