#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "torickit/cox.hpp"

namespace torickit {

struct CyclicFactor {
  BigInt order;
  std::vector<BigInt> weights;  // reduced mod order
};

namespace detail {

inline std::vector<BigInt> reduce_weights(const std::vector<BigInt>& w, const BigInt& d) {
  std::vector<BigInt> out;
  for (const auto& x : w) out.push_back(mod_positive(x, d));
  return out;
}

// Lexicographically least representative of u*w mod d over units u.
inline std::vector<BigInt> unit_canonical(const std::vector<BigInt>& w, const BigInt& d) {
  std::vector<BigInt> best = reduce_weights(w, d);
  for (BigInt u = 2; u < d; ++u) {
    if (gcd(u, d) != 1) continue;
    std::vector<BigInt> cand;
    for (const auto& x : w) cand.push_back(mod_positive(BigInt(u * x), d));
    if (cand < best) best = cand;
  }
  return best;
}

}  // namespace detail

/// Finite abelian group acting diagonally on named chart coordinates, written
/// as a product of cyclic factors 1/d(w_1, ..., w_n).
class AbelianQuotient {
 public:
  AbelianQuotient() = default;
  AbelianQuotient(std::vector<std::string> coordinates, std::vector<CyclicFactor> factors)
      : coords_(std::move(coordinates)) {
    for (auto& f : factors) {
      if (sgn(f.order) <= 0) throw Error(ErrorKind::InvalidInput, "cyclic factor order must be positive");
      if (f.weights.size() != coords_.size())
        throw Error(ErrorKind::DimensionMismatch, "weight vector length differs from coordinate count");
      if (f.order == 1) continue;
      f.weights = detail::reduce_weights(f.weights, f.order);
      factors_.push_back(std::move(f));
    }
  }

  /// 1/r(a_1, ..., a_n) on the given coordinates.
  static AbelianQuotient cyclic(std::vector<std::string> coordinates, long r, std::vector<long> weights) {
    std::vector<BigInt> w(weights.begin(), weights.end());
    return AbelianQuotient(std::move(coordinates), {{BigInt(r), w}});
  }

  const std::vector<std::string>& coordinates() const noexcept { return coords_; }
  const std::vector<CyclicFactor>& factors() const noexcept { return factors_; }
  bool is_trivial() const noexcept { return factors_.empty(); }
  bool is_cyclic() const noexcept { return factors_.size() <= 1; }

  BigInt index() const {
    BigInt n(1);
    for (const auto& f : factors_) n *= f.order;
    return n;
  }

  /// Factors with unit-canonical weights, sorted.
  std::vector<std::pair<BigInt, std::vector<BigInt>>> canonical_factors() const {
    std::vector<std::pair<BigInt, std::vector<BigInt>>> out;
    for (const auto& f : factors_) out.emplace_back(f.order, detail::unit_canonical(f.weights, f.order));
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Same coordinates in the same order, weights equal up to units.
  friend bool equal_labelled(const AbelianQuotient& a, const AbelianQuotient& b) {
    return a.coords_ == b.coords_ && a.canonical_factors() == b.canonical_factors();
  }

  /// Equal up to a permutation of the coordinates and units.
  friend bool equivalent(const AbelianQuotient& a, const AbelianQuotient& b) {
    if (a.coords_.size() != b.coords_.size() || a.factors_.size() != b.factors_.size()) return false;
    const auto target = a.canonical_factors();
    std::vector<std::size_t> perm(b.coords_.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<CyclicFactor> permuted;
      for (const auto& f : b.factors_) {
        CyclicFactor g{f.order, {}};
        for (auto i : perm) g.weights.push_back(f.weights[i]);
        permuted.push_back(std::move(g));
      }
      if (AbelianQuotient(a.coords_, permuted).canonical_factors() == target) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  }

  /// Unit-canonical weights, e.g. "1/12(1,3,4)"; products joined by " x ";
  /// "smooth" when trivial.
  std::string to_string() const {
    if (factors_.empty()) return "smooth";
    std::string out;
    for (const auto& [order, weights] : canonical_factors()) {
      if (!out.empty()) out += " x ";
      out += "1/" + order.get_str() + "(";
      for (std::size_t i = 0; i < weights.size(); ++i) {
        if (i) out += ",";
        out += weights[i].get_str();
      }
      out += ")";
    }
    return out;
  }

  /// Checks that every monomial of p (over the full Cox variable list) has the
  /// same character for each cyclic factor.
  bool is_semi_invariant(const CoxPolynomial& p) const {
    std::vector<std::size_t> idx;
    for (const auto& c : coords_) {
      auto it = std::find(p.variables().begin(), p.variables().end(), c);
      if (it == p.variables().end()) throw Error(ErrorKind::InvalidInput, "coordinate '" + c + "' not in polynomial");
      idx.push_back(static_cast<std::size_t>(it - p.variables().begin()));
    }
    for (const auto& f : factors_) {
      std::optional<BigInt> chi;
      for (const auto& [e, c] : p.terms()) {
        BigInt s(0);
        for (std::size_t k = 0; k < idx.size(); ++k) s += f.weights[k] * e[idx[k]];
        s = mod_positive(s, f.order);
        if (chi && *chi != s) return false;
        chi = s;
      }
    }
    return true;
  }

 private:
  std::vector<std::string> coords_;
  std::vector<CyclicFactor> factors_;
};

/// Quotient C^d / G of the affine chart of a simplicial cone. With B the ray
/// matrix (rays as columns) and U B V = S, the group Z^d / B Z^d is generated
/// by B^{-1} U^{-1} e_k = V e_k / d_k.
inline AbelianQuotient cone_quotient(const CoxPresentation& cox, const std::vector<std::size_t>& cone) {
  IntMat b = cox.fan.cone_matrix(cone);
  auto sm = snf(b);
  std::vector<std::string> coords;
  for (auto i : cone) coords.push_back(cox.variables[i]);
  std::vector<CyclicFactor> factors;
  for (std::size_t k = 0; k < cone.size(); ++k) {
    const BigInt& d = sm.S(k, k);
    if (sgn(d) == 0) throw Error(ErrorKind::NonSimplicial, "cone is not full-dimensional");
    if (d == 1) continue;
    CyclicFactor f{d, {}};
    for (std::size_t j = 0; j < cone.size(); ++j) f.weights.push_back(sm.V(j, k));
    factors.push_back(std::move(f));
  }
  return AbelianQuotient(std::move(coords), std::move(factors));
}

struct ChartReport {
  std::vector<std::size_t> cone;
  std::vector<std::string> coordinates;
  AbelianQuotient quotient;
  CoxPolynomial local_equation;
  ParamPoly constant_term;
  bool has_constant_term = false;
  // chart coordinates occurring as a bare degree-1 monomial with a nonzero
  // parameter-free coefficient
  std::vector<std::string> linear_variables;
  bool quasi_smooth_linear_variable = false;
  bool semi_invariant = false;
};

inline ChartReport chart_report(const CoxPresentation& cox, const CoxPolynomial& family,
                                const std::vector<std::size_t>& cone) {
  ChartReport r;
  r.cone = cone;
  for (auto i : cone) r.coordinates.push_back(cox.variables[i]);
  r.quotient = cone_quotient(cox, cone);
  r.local_equation = family.dehomogenize(cone);
  r.constant_term = r.local_equation.constant_term();
  r.has_constant_term = !r.constant_term.is_zero();
  for (const auto& [e, c] : r.local_equation.terms()) {
    unsigned deg = 0;
    std::size_t which = 0;
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j]) {
        deg += e[j];
        which = j;
      }
    if (deg == 1 && c.is_constant()) r.linear_variables.push_back(cox.variables[which]);
  }
  r.quasi_smooth_linear_variable = !r.linear_variables.empty();
  r.semi_invariant = r.quotient.is_semi_invariant(r.local_equation);
  return r;
}

/// One report per maximal cone, in the fan's cone order.
inline std::vector<ChartReport> chart_analysis(const CoxPresentation& cox, const CoxPolynomial& family) {
  if (family.variables() != cox.variables) throw Error(ErrorKind::InvalidInput, "family uses other variables");
  if (!family.homogeneous_class(cox)) throw Error(ErrorKind::NotHomogeneous, "family is not homogeneous");
  std::vector<ChartReport> out;
  for (const auto& cone : cox.fan.maximal_cones) out.push_back(chart_report(cox, family, cone));
  return out;
}

struct FiberAvoidance {
  bool verified = true;
  std::optional<std::vector<std::string>> witness;  // zero pattern that could not be excluded
  std::string reason;
  std::size_t patterns_checked = 0;
};

/// Checks that no fibre of the family meets {x_F = 0} for the forced set F:
/// every zero pattern S containing F is either unstable, or leaves exactly one
/// monomial of the family alive.
inline FiberAvoidance fiber_avoidance(const CoxPresentation& cox, const CoxPolynomial& family,
                                      const std::vector<std::string>& forced_zero) {
  if (!family.homogeneous_class(cox)) throw Error(ErrorKind::NotHomogeneous, "family is not homogeneous");
  const std::size_t n = cox.size();
  if (n >= 8 * sizeof(unsigned long)) throw Error(ErrorKind::Unsupported, "too many variables");
  unsigned long forced = 0;
  for (const auto& name : forced_zero) forced |= 1UL << cox.index_of(name);

  FiberAvoidance out;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    if ((mask & forced) != forced) continue;
    ++out.patterns_checked;
    if (pattern_is_unstable(cox.irrelevant, mask)) continue;
    std::size_t alive = 0;
    for (const auto& [e, c] : family.terms()) {
      bool off = true;
      for (std::size_t j = 0; j < n && off; ++j)
        if (e[j] && (mask >> j & 1UL)) off = false;
      if (off) ++alive;
    }
    if (alive == 1) continue;
    out.verified = false;
    std::vector<std::string> w;
    for (std::size_t j = 0; j < n; ++j)
      if (mask >> j & 1UL) w.push_back(cox.variables[j]);
    out.witness = w;
    out.reason = alive == 0 ? "semistable stratum lies in every fibre"
                            : std::to_string(alive) + " monomials survive on a semistable stratum";
    return out;
  }
  return out;
}

}  // namespace torickit
