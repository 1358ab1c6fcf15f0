#pragma once

#include <cstddef>
#include <vector>

#include "torickit/core/matrix.hpp"

namespace torickit {

struct HermiteResult {
  IntMat H;  // row Hermite normal form
  IntMat U;  // unimodular, H = U * M
};

struct SmithResult {
  IntMat S;  // diagonal, d1 | d2 | ... , all >= 0
  IntMat U;  // unimodular row transform
  IntMat V;  // unimodular column transform, S = U * M * V
  std::vector<BigInt> invariant_factors() const {
    std::vector<BigInt> d;
    for (std::size_t i = 0; i < S.rows() && i < S.cols(); ++i) d.push_back(S(i, i));
    return d;
  }
};

namespace detail {

// rows (a, b) <- (s*a + t*b, u*a + v*b)
inline void combine_rows(IntMat& m, std::size_t a, std::size_t b, const BigInt& s, const BigInt& t,
                         const BigInt& u, const BigInt& v) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    BigInt x = m(a, j), y = m(b, j);
    m(a, j) = s * x + t * y;
    m(b, j) = u * x + v * y;
  }
}

inline void add_row_multiple(IntMat& m, std::size_t dst, std::size_t src, const BigInt& f) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}

inline void add_col_multiple(IntMat& m, std::size_t dst, std::size_t src, const BigInt& f) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}

inline void negate_row(IntMat& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace detail

/// Row-style Hermite normal form: echelon, positive pivots, entries above
/// each pivot reduced into [0, pivot).
inline HermiteResult hnf(const IntMat& m) {
  IntMat h = m;
  IntMat u = IntMat::identity(m.rows());
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    for (std::size_t i = r + 1; i < h.rows(); ++i) {
      if (is_zero(h(i, c))) continue;
      BigInt a = h(r, c), b = h(i, c), g, s, t;
      extended_gcd(a, b, g, s, t);
      BigInt p = -b / g, q = a / g;
      detail::combine_rows(h, r, i, s, t, p, q);
      detail::combine_rows(u, r, i, s, t, p, q);
    }
    if (is_zero(h(r, c))) continue;
    if (sgn(h(r, c)) < 0) {
      detail::negate_row(h, r);
      detail::negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      BigInt f = -floor_div(h(i, c), h(r, c));
      if (is_zero(f)) continue;
      detail::add_row_multiple(h, i, r, f);
      detail::add_row_multiple(u, i, r, f);
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

inline bool is_row_hnf(const IntMat& h) {
  std::size_t prev_pivot = 0;
  bool first = true, seen_zero_row = false;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t c = 0;
    while (c < h.cols() && is_zero(h(i, c))) ++c;
    if (c == h.cols()) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;
    if (!first && c <= prev_pivot) return false;
    if (sgn(h(i, c)) <= 0) return false;
    for (std::size_t k = 0; k < i; ++k)
      if (sgn(h(k, c)) < 0 || h(k, c) >= h(i, c)) return false;
    for (std::size_t k = i + 1; k < h.rows(); ++k)
      if (!is_zero(h(k, c))) return false;
    prev_pivot = c;
    first = false;
  }
  return true;
}

/// Smith normal form with transforms, S = U * M * V.
inline SmithResult snf(const IntMat& m) {
  IntMat s = m;
  IntMat u = IntMat::identity(m.rows());
  IntMat v = IntMat::identity(m.cols());
  const std::size_t rows = s.rows(), cols = s.cols();
  const std::size_t diag = rows < cols ? rows : cols;

  for (std::size_t t = 0; t < diag; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      bool found = false;
      std::size_t pi = t, pj = t;
      BigInt best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (is_zero(s(i, j))) continue;
          BigInt a = abs(s(i, j));
          if (!found || a < best) {
            best = a;
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) break;
      s.swap_rows(t, pi);
      u.swap_rows(t, pi);
      s.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (is_zero(s(i, t))) continue;
        BigInt q = s(i, t) / s(t, t);  // truncating
        detail::add_row_multiple(s, i, t, -q);
        detail::add_row_multiple(u, i, t, -q);
        if (!is_zero(s(i, t))) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (is_zero(s(t, j))) continue;
        BigInt q = s(t, j) / s(t, t);
        detail::add_col_multiple(s, j, t, -q);
        detail::add_col_multiple(v, j, t, -q);
        if (!is_zero(s(t, j))) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          BigInt r = s(i, j) % s(t, t);
          if (!is_zero(r)) {
            detail::add_row_multiple(s, t, i, BigInt(1));
            detail::add_row_multiple(u, t, i, BigInt(1));
            divides = false;
            break;
          }
        }
      if (divides) break;
    }
    if (sgn(s(t, t)) < 0) {
      detail::negate_row(s, t);
      detail::negate_row(u, t);
    }
  }
  return {std::move(s), std::move(u), std::move(v)};
}

/// Z-basis of {x : x^T m = 0}, the saturated left kernel, as rows.
inline IntMat left_kernel(const IntMat& m) {
  auto [h, u] = hnf(m);
  std::vector<IntVec> rows;
  for (std::size_t i = 0; i < h.rows(); ++i)
    if (h.row(i).is_zero()) rows.push_back(u.row(i));
  return IntMat::from_rows(rows, m.rows());
}

}  // namespace torickit
