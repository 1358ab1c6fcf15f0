#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "torickit/param_poly.hpp"

namespace torickit {

/// Truncated power series c_0 + c_1 t + ... + c_D t^D (+ O(t^{D+1})).
template <class C>
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order) : coeffs_(order + 1, C(0)) {}
  PowerSeries(std::size_t order, std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1, C(0));
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const C& operator[](std::size_t d) const { return coeffs_.at(d); }
  C& operator[](std::size_t d) { return coeffs_.at(d); }
  const std::vector<C>& coefficients() const noexcept { return coeffs_; }

  PowerSeries truncated(std::size_t order) const {
    std::vector<C> c(coeffs_.begin(), coeffs_.begin() + std::min(order, this->order()) + 1);
    return PowerSeries(order < this->order() ? order : this->order(), std::move(c));
  }

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    std::size_t d = std::min(a.order(), b.order());
    PowerSeries r(d);
    for (std::size_t i = 0; i <= d; ++i) r[i] = a[i] + b[i];
    return r;
  }
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    std::size_t d = std::min(a.order(), b.order());
    PowerSeries r(d);
    for (std::size_t i = 0; i <= d; ++i) r[i] = a[i] - b[i];
    return r;
  }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    std::size_t d = std::min(a.order(), b.order());
    PowerSeries r(d);
    for (std::size_t i = 0; i <= d; ++i) {
      if (is_zero(a[i])) continue;
      for (std::size_t j = 0; i + j <= d; ++j)
        if (!is_zero(b[j])) r[i + j] += a[i] * b[j];
    }
    return r;
  }

  /// Multiplication by t^k, keeping the truncation order.
  PowerSeries shifted(std::size_t k) const {
    PowerSeries r(order());
    for (std::size_t i = 0; i + k <= order(); ++i) r[i + k] = coeffs_[i];
    return r;
  }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// e.g. "1 + 16*t^2 + O(t^3)"; the truncation order is always shown.
  std::string to_string(const std::string& var = "t") const {
    std::string out;
    for (std::size_t d = 0; d <= order(); ++d) {
      if (is_zero(coeffs_[d])) continue;
      std::string c = torickit::to_string(coeffs_[d]);
      bool compound = c.find_first_of("+-", 1) != std::string::npos;
      std::string mono = d == 0 ? "" : (d == 1 ? var : var + "^" + std::to_string(d));
      std::string term;
      if (mono.empty()) term = compound ? "(" + c + ")" : c;
      else if (c == "1") term = mono;
      else if (c == "-1") term = "-" + mono;
      else term = (compound ? "(" + c + ")" : c) + "*" + mono;
      if (out.empty()) out = term;
      else if (term[0] == '-') out += " - " + term.substr(1);
      else out += " + " + term;
    }
    if (out.empty()) out = "0";
    return out + " + O(" + var + "^" + std::to_string(order() + 1) + ")";
  }

 private:
  std::vector<C> coeffs_;
};

using RatSeries = PowerSeries<BigRat>;
using ParamSeries = PowerSeries<ParamPoly>;

inline ParamSeries lift(const RatSeries& s) {
  ParamSeries r(s.order());
  for (std::size_t i = 0; i <= s.order(); ++i) r[i] = ParamPoly(s[i]);
  return r;
}

inline RatSeries specialize(const ParamSeries& s, const Assignment& values) {
  RatSeries r(s.order());
  for (std::size_t i = 0; i <= s.order(); ++i) r[i] = s[i].evaluate(values);
  return r;
}

/// sqrt(1 + u) = sum binom(1/2, n) u^n, truncated at order D.
inline RatSeries sqrt_series(std::size_t order) {
  RatSeries s(order);
  BigRat c(1);
  for (std::size_t n = 0; n <= order; ++n) {
    s[n] = c;
    // binom(1/2, n+1) = binom(1/2, n) * (1/2 - n) / (n + 1)
    c *= (BigRat(1, 2) - BigRat(static_cast<long>(n))) / BigRat(static_cast<long>(n + 1));
  }
  return s;
}

/// g(h(z)) truncated at the given order; h must have zero constant term.
template <class C>
PowerSeries<C> series_substitute(const PowerSeries<C>& g, const PowerSeries<C>& h, std::size_t order) {
  if (!is_zero(h[0]))
    throw Error(ErrorKind::InvalidSubstitution, "substituted series has a nonzero constant term");
  const std::size_t d = std::min(order, h.order());
  PowerSeries<C> hh = h.truncated(d);
  PowerSeries<C> acc(d);
  // Horner; terms of g beyond d cannot contribute because h = O(z)
  for (std::size_t k = std::min(g.order(), d) + 1; k-- > 0;) {
    acc = acc * hh;
    acc[0] += g[k];
  }
  return acc;
}

/// c_d -> d! c_d
template <class C>
PowerSeries<C> regularize(const PowerSeries<C>& s) {
  PowerSeries<C> r(s.order());
  for (std::size_t d = 0; d <= s.order(); ++d) r[d] = s[d] * C(BigRat(factorial(d)));
  return r;
}

struct SeriesComparison {
  bool equal = true;
  std::optional<std::size_t> first_mismatch;
  std::size_t order = 0;

  std::string verdict() const {
    if (equal) return "EQUAL through t^" + std::to_string(order);
    return "MISMATCH at t^" + std::to_string(*first_mismatch);
  }
};

/// Compares coefficients 0..D; both series must be known to order D.
template <class C>
SeriesComparison compare_series(const PowerSeries<C>& a, const PowerSeries<C>& b, std::size_t order) {
  if (a.order() < order || b.order() < order)
    throw Error(ErrorKind::InvalidInput, "series truncated below the comparison order");
  SeriesComparison out;
  out.order = order;
  for (std::size_t d = 0; d <= order; ++d)
    if (a[d] != b[d]) {
      out.equal = false;
      out.first_mismatch = d;
      break;
    }
  return out;
}

}  // namespace torickit
