#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "torickit/core/matrix.hpp"
#include "torickit/polygon.hpp"
#include "torickit/series.hpp"

namespace torickit {

using Exponent = std::vector<long>;

/// Laurent polynomial in n variables with coefficients in C (BigRat or ParamPoly).
template <class C>
class LaurentPolynomial {
 public:
  explicit LaurentPolynomial(std::size_t nvars = 2) : nvars_(nvars) {}

  static LaurentPolynomial constant(std::size_t nvars, const C& c) {
    LaurentPolynomial p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
  }

  std::size_t nvars() const noexcept { return nvars_; }
  const std::map<Exponent, C>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  LaurentPolynomial& add_term(const Exponent& e, const C& c) {
    if (e.size() != nvars_) throw Error(ErrorKind::DimensionMismatch, "exponent has wrong length");
    if (is_zero(c)) return *this;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
    return *this;
  }

  C coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }

  C constant_term() const { return coefficient(Exponent(nvars_, 0)); }

  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }

  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.nvars_ != b.nvars_) throw Error(ErrorKind::DimensionMismatch, "variable counts differ");
    LaurentPolynomial r(a.nvars_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Monomial change of variables x^e -> x^{g e}, g in GL_n(Z).
  LaurentPolynomial transformed(const IntMat& g) const {
    if (g.rows() != nvars_ || g.cols() != nvars_ || !is_unimodular(g))
      throw Error(ErrorKind::InvalidInput, "monomial change of variables must be unimodular");
    LaurentPolynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
      Exponent img(nvars_, 0);
      for (std::size_t i = 0; i < nvars_; ++i)
        for (std::size_t j = 0; j < nvars_; ++j) img[i] += g(i, j).get_si() * e[j];
      r.add_term(img, c);
    }
    return r;
  }

  /// Applies f to every coefficient.
  template <class D, class F>
  LaurentPolynomial<D> map_coefficients(F f) const {
    LaurentPolynomial<D> r(nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, f(c));
    return r;
  }

  std::string to_string(const std::vector<std::string>& vars = {"x", "y", "z", "w"}) const {
    if (terms_.empty()) return "0";
    std::string out;
    // descending exponent order
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string mono;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (!e[i]) continue;
        if (!mono.empty()) mono += "*";
        mono += i < vars.size() ? vars[i] : "x" + std::to_string(i);
        if (e[i] != 1) mono += "^" + (e[i] < 0 ? "(" + std::to_string(e[i]) + ")" : std::to_string(e[i]));
      }
      std::string cs = torickit::to_string(c);
      bool compound = cs.find_first_of("+-", 1) != std::string::npos;
      std::string term;
      if (mono.empty()) term = compound ? "(" + cs + ")" : cs;
      else if (cs == "1") term = mono;
      else if (cs == "-1") term = "-" + mono;
      else term = (compound ? "(" + cs + ")" : cs) + "*" + mono;
      if (out.empty()) out = term;
      else if (term[0] == '-') out += " - " + term.substr(1);
      else out += " + " + term;
    }
    return out;
  }

 private:
  std::size_t nvars_;
  std::map<Exponent, C> terms_;
};

using RatLaurent = LaurentPolynomial<BigRat>;
using ParamLaurent = LaurentPolynomial<ParamPoly>;

inline RatLaurent specialize(const ParamLaurent& f, const Assignment& values) {
  return f.map_coefficients<BigRat>([&](const ParamPoly& c) { return c.evaluate(values); });
}

inline ParamLaurent substitute(const ParamLaurent& f, const std::map<std::string, ParamPoly>& values) {
  return f.map_coefficients<ParamPoly>([&](const ParamPoly& c) { return c.substitute(values); });
}

namespace detail {

// Directions used to discard monomials of f^k that can no longer return to the
// origin within the remaining factors: coordinate axes and pairwise sums/differences.
inline std::vector<std::vector<long>> pruning_directions(std::size_t n) {
  std::vector<std::vector<long>> dirs;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long> d(n, 0);
    d[i] = 1;
    dirs.push_back(d);
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<long> s(n, 0), t(n, 0);
      s[i] = s[j] = 1;
      t[i] = 1;
      t[j] = -1;
      dirs.push_back(s);
      dirs.push_back(t);
    }
  }
  return dirs;
}

}  // namespace detail

/// Classical period: c_k is the constant term of f^k, for k = 0..order.
template <class C>
PowerSeries<C> classical_period(const LaurentPolynomial<C>& f, std::size_t order) {
  PowerSeries<C> out(order);
  out[0] = C(1);
  if (order == 0 || f.size() == 0) return out;

  auto dirs = detail::pruning_directions(f.nvars());
  std::vector<long> lo(dirs.size()), hi(dirs.size());
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
      long v = 0;
      for (std::size_t i = 0; i < e.size(); ++i) v += dirs[k][i] * e[i];
      if (first || v < lo[k]) lo[k] = v;
      if (first || v > hi[k]) hi[k] = v;
      first = false;
    }
  }

  LaurentPolynomial<C> power = LaurentPolynomial<C>::constant(f.nvars(), C(1));
  for (std::size_t k = 1; k <= order; ++k) {
    power = power * f;
    out[k] = power.constant_term();
    if (k == order) break;
    const long remaining = static_cast<long>(order - k);
    LaurentPolynomial<C> kept(f.nvars());
    for (const auto& [e, c] : power.terms()) {
      bool reachable = true;
      for (std::size_t d = 0; d < dirs.size() && reachable; ++d) {
        long v = 0;
        for (std::size_t i = 0; i < e.size(); ++i) v += dirs[d][i] * e[i];
        // -v must lie in the union of [j*lo, j*hi] over j = 1..remaining
        long min_sum = std::min(lo[d], remaining * lo[d]);
        long max_sum = std::max(hi[d], remaining * hi[d]);
        if (-v < min_sum || -v > max_sum) reachable = false;
      }
      if (reachable) kept.add_term(e, c);
    }
    power = std::move(kept);
  }
  return out;
}

/// Laurent polynomial supported on a Fano polygon: vertices get 1, the j-th
/// interior point of an edge of lattice length l gets binomial(l, j), the origin
/// gets 0 and every other interior lattice point gets a fresh parameter named
/// p_<x>_<y> (with 'm' for a minus sign).
inline ParamLaurent edge_binomial_skeleton(const LatticePolygon& p) {
  ParamLaurent f(2);
  std::set<IntVec> on_boundary;
  for (std::size_t e = 0; e < p.size(); ++e) {
    const IntVec& u = p.vertex(e);
    const IntVec& v = p.vertex(e + 1);
    BigInt len = gcd(v[0] - u[0], v[1] - u[1]);
    IntVec step{BigInt((v[0] - u[0]) / len), BigInt((v[1] - u[1]) / len)};
    const unsigned long l = len.get_ui();
    for (unsigned long j = 0; j < l; ++j) {
      IntVec pt = u + BigInt(static_cast<long>(j)) * step;
      on_boundary.insert(pt);
      f.add_term({pt[0].get_si(), pt[1].get_si()}, ParamPoly(BigRat(binomial(l, j))));
    }
  }
  // interior points via the bounding box
  BigInt xmin = p.vertex(0)[0], xmax = xmin, ymin = p.vertex(0)[1], ymax = ymin;
  for (const auto& v : p.vertices()) {
    xmin = std::min(xmin, v[0]);
    xmax = std::max(xmax, v[0]);
    ymin = std::min(ymin, v[1]);
    ymax = std::max(ymax, v[1]);
  }
  auto label = [](long x) { return x < 0 ? "m" + std::to_string(-x) : std::to_string(x); };
  for (long x = xmin.get_si(); x <= xmax.get_si(); ++x)
    for (long y = ymin.get_si(); y <= ymax.get_si(); ++y) {
      IntVec pt = make_int_vec({x, y});
      if (on_boundary.count(pt) || (x == 0 && y == 0)) continue;
      bool inside = true;
      for (std::size_t e = 0; e < p.size() && inside; ++e)
        if (sgn(detail::cross(p.vertex(e), p.vertex(e + 1), pt)) <= 0) inside = false;
      if (inside) f.add_term({x, y}, ParamPoly::variable("p_" + label(x) + "_" + label(y)));
    }
  return f;
}

}  // namespace torickit
