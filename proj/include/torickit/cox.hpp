#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torickit/core/normal_form.hpp"
#include "torickit/fan.hpp"
#include "torickit/param_poly.hpp"
#include "torickit/scaffolding.hpp"

namespace torickit {

/// Exponent vector over the Cox variables (entries >= 0).
using CoxMonomial = std::vector<unsigned>;

/// GIT data of a simplicial toric variety.
struct CoxPresentation {
  std::vector<std::string> variables;
  Fan fan;
  IntMat weights;  // r x n, columns are variable classes
  std::vector<CoxMonomial> irrelevant;

  std::size_t size() const noexcept { return variables.size(); }
  std::size_t class_rank() const noexcept { return weights.rows(); }

  std::size_t index_of(const std::string& name) const {
    auto it = std::find(variables.begin(), variables.end(), name);
    if (it == variables.end()) throw Error(ErrorKind::InvalidInput, "unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - variables.begin());
  }

  IntVec variable_class(std::size_t i) const { return weights.column(i); }

  IntVec class_of(const CoxMonomial& e) const {
    IntVec c(class_rank());
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j])
        for (std::size_t i = 0; i < class_rank(); ++i) c[i] += weights(i, j) * e[j];
    return c;
  }

  IntVec anticanonical_class() const { return class_of(CoxMonomial(size(), 1)); }

  /// Same presentation with the class group basis changed so that the weight
  /// matrix becomes `target` (which must present the same lattice map).
  CoxPresentation with_class_basis(const IntMat& target) const {
    if (target.rows() != weights.rows() || target.cols() != weights.cols())
      throw Error(ErrorKind::DimensionMismatch, "target weight matrix has the wrong shape");
    if (hnf(target).H != hnf(weights).H)
      throw Error(ErrorKind::InvalidInput, "target weight matrix presents a different class group map");
    // G W = target; solve on a set of pivot columns of W
    RatMat w = to_rational(weights);
    RatMat t = w;
    auto pivots = rref_in_place(t);
    RatMat wj(pivots.size(), pivots.size()), tj(target.rows(), pivots.size());
    for (std::size_t i = 0; i < w.rows(); ++i)
      for (std::size_t k = 0; k < pivots.size(); ++k) {
        wj(i, k) = w(i, pivots[k]);
        tj(i, k) = BigRat(target(i, pivots[k]));
      }
    auto inv = inverse(wj);
    if (!inv) throw Error(ErrorKind::InvalidInput, "weight matrix is not of full rank");
    RatMat g = tj * *inv;
    IntMat gi(g.rows(), g.cols());
    for (std::size_t i = 0; i < g.rows(); ++i)
      for (std::size_t j = 0; j < g.cols(); ++j) {
        if (!is_integer(g(i, j))) throw Error(ErrorKind::InvalidInput, "class basis change is not integral");
        gi(i, j) = g(i, j).get_num();
      }
    if (!is_unimodular(gi) || gi * weights != target)
      throw Error(ErrorKind::InvalidInput, "class basis change is not unimodular");
    CoxPresentation out = *this;
    out.weights = target;
    return out;
  }
};

/// Class group via SNF of the ray matrix R (rays as rows): with U R V = S, the
/// rows of U past the rank give the divisor map Z^n -> Cl.
inline CoxPresentation cox_presentation(const Fan& fan, std::vector<std::string> names = {}) {
  const std::size_t n = fan.rays.size();
  const std::size_t d = fan.dim;
  if (names.empty())
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  if (names.size() != n) throw Error(ErrorKind::DimensionMismatch, "need one variable name per ray");

  IntMat r = fan.ray_matrix();
  auto sm = snf(r);
  std::vector<BigInt> torsion;
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(sm.S(i, i)) == 0) throw Error(ErrorKind::InvalidInput, "rays do not span the lattice");
    if (sm.S(i, i) != 1) torsion.push_back(sm.S(i, i));
  }
  if (!torsion.empty()) {
    std::string msg = "class group has torsion with invariant factors";
    for (const auto& t : torsion) msg += " " + t.get_str();
    throw Error(ErrorKind::Torsion, msg);
  }

  CoxPresentation cox;
  cox.variables = std::move(names);
  cox.fan = fan;
  cox.weights = IntMat(n - d, n);
  for (std::size_t i = d; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cox.weights(i - d, j) = sm.U(i, j);
  for (const auto& cone : fan.maximal_cones) {
    CoxMonomial m(n, 1);
    for (auto i : cone) m[i] = 0;
    cox.irrelevant.push_back(m);
  }
  return cox;
}

/// For every subset S of variables (as a bitmask): does every generator
/// involve a variable in S, i.e. does the coordinate subspace {x_S = 0}
/// lie in the vanishing locus of the ideal?
inline bool pattern_is_unstable(const std::vector<CoxMonomial>& gens, unsigned long mask) {
  for (const auto& g : gens) {
    bool hit = false;
    for (std::size_t j = 0; j < g.size() && !hit; ++j)
      if (g[j] && (mask >> j & 1UL)) hit = true;
    if (!hit) return false;
  }
  return true;
}

inline bool unstable_locus_equal(const std::vector<CoxMonomial>& a, const std::vector<CoxMonomial>& b) {
  std::size_t n = 0;
  for (const auto& g : a) n = std::max(n, g.size());
  for (const auto& g : b) n = std::max(n, g.size());
  for (const auto& g : a)
    if (g.size() != n) throw Error(ErrorKind::DimensionMismatch, "generators over different variables");
  for (const auto& g : b)
    if (g.size() != n) throw Error(ErrorKind::DimensionMismatch, "generators over different variables");
  if (n >= 8 * sizeof(unsigned long)) throw Error(ErrorKind::Unsupported, "too many variables");
  for (unsigned long mask = 0; mask < (1UL << n); ++mask)
    if (pattern_is_unstable(a, mask) != pattern_is_unstable(b, mask)) return false;
  return true;
}

/// Generators of a product of ideals each generated by variables.
inline std::vector<CoxMonomial> expand_product_of_variable_ideals(
    const std::vector<std::vector<std::size_t>>& factors, std::size_t nvars) {
  std::vector<CoxMonomial> out{CoxMonomial(nvars, 0)};
  for (const auto& f : factors) {
    std::vector<CoxMonomial> next;
    for (const auto& m : out)
      for (auto v : f) {
        CoxMonomial e = m;
        ++e.at(v);
        next.push_back(e);
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    out = std::move(next);
  }
  return out;
}

/// Polynomial in the Cox variables with parameter-polynomial coefficients.
class CoxPolynomial {
 public:
  CoxPolynomial() = default;
  explicit CoxPolynomial(std::vector<std::string> variables) : vars_(std::move(variables)) {}

  const std::vector<std::string>& variables() const noexcept { return vars_; }
  const std::map<CoxMonomial, ParamPoly>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  CoxPolynomial& add_term(const CoxMonomial& e, const ParamPoly& c) {
    if (e.size() != vars_.size()) throw Error(ErrorKind::DimensionMismatch, "monomial has wrong length");
    if (c.is_zero()) return *this;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
  }

  /// Adds terms parsed from names, e.g. {{"x1",4},{"y1",2}}.
  CoxPolynomial& add_term(const std::map<std::string, unsigned>& powers, const ParamPoly& c) {
    CoxMonomial e(vars_.size(), 0);
    for (const auto& [name, k] : powers) {
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) throw Error(ErrorKind::InvalidInput, "unknown variable '" + name + "'");
      e[it - vars_.begin()] += k;
    }
    return add_term(e, c);
  }

  friend CoxPolynomial operator+(const CoxPolynomial& a, const CoxPolynomial& b) {
    if (a.vars_ != b.vars_) throw Error(ErrorKind::DimensionMismatch, "different variables");
    CoxPolynomial r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }

  friend bool operator==(const CoxPolynomial& a, const CoxPolynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  /// Class of the polynomial if all terms share one; nullopt otherwise.
  std::optional<IntVec> homogeneous_class(const CoxPresentation& cox) const {
    std::optional<IntVec> cls;
    for (const auto& [e, c] : terms_) {
      IntVec k = cox.class_of(e);
      if (cls && *cls != k) return std::nullopt;
      cls = k;
    }
    return cls;
  }

  /// Sets every variable outside `keep` to 1.
  CoxPolynomial dehomogenize(const std::vector<std::size_t>& keep) const {
    CoxPolynomial r(vars_);
    for (const auto& [e, c] : terms_) {
      CoxMonomial f(e.size(), 0);
      for (auto i : keep) f[i] = e[i];
      r.add_term(f, c);
    }
    return r;
  }

  ParamPoly constant_term() const {
    auto it = terms_.find(CoxMonomial(vars_.size(), 0));
    return it == terms_.end() ? ParamPoly(0) : it->second;
  }

  CoxPolynomial specialize(const Assignment& values) const {
    CoxPolynomial r(vars_);
    for (const auto& [e, c] : terms_) r.add_term(e, ParamPoly(torickit::specialize(c, values)));
    return r;
  }

  std::string monomial_string(const CoxMonomial& e) const {
    // ascending exponent, then variable order: z1*z2, y1*y2*x1^2*x2^2
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) idx.push_back(i);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return e[a] < e[b]; });
    std::string s;
    for (auto i : idx) {
      if (!s.empty()) s += "*";
      s += vars_[i];
      if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s;
  }

  /// Parameter-free terms first (by degree, later variables first), then
  /// parameter terms by parameter name.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<CoxMonomial, ParamPoly>> order(terms_.begin(), terms_.end());
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
      bool ca = a.second.is_constant(), cb = b.second.is_constant();
      if (ca != cb) return ca;
      if (!ca) return a.second.params() < b.second.params();
      unsigned da = 0, db = 0;
      for (auto x : a.first) da += x;
      for (auto x : b.first) db += x;
      if (da != db) return da < db;
      return std::lexicographical_compare(b.first.rbegin(), b.first.rend(), a.first.rbegin(), a.first.rend());
    });
    std::string out;
    for (const auto& [e, c] : order) {
      std::string mono = monomial_string(e);
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
  std::vector<std::string> vars_;
  std::map<CoxMonomial, ParamPoly> terms_;
};

struct Hypersurface {
  IntVec h;                      // functional on N-tilde
  std::vector<BigInt> pairings;  // <h, ray> per variable
  CoxPolynomial equation;
};

/// The functional h cutting out theta(N) and the binomial generating the
/// ideal of the embedding in the Cox ring.
inline Hypersurface hypersurface_from_scaffolding(const Scaffolding& s, const CoxPresentation& cox) {
  IntMat theta = s.theta();
  if (cox.fan.dim != theta.rows()) throw Error(ErrorKind::DimensionMismatch, "fan lives in the wrong lattice");
  IntMat ker = left_kernel(theta);
  if (ker.rows() != 1)
    throw Error(ErrorKind::Corank, "theta(N) has corank " + std::to_string(ker.rows()) + ", expected 1");
  IntVec h = primitive(ker.row(0));
  // shape-divisor rays are the unit vectors E_i; they must pair positively
  for (std::size_t i = 0; i < s.shape.divisor_rank(); ++i) {
    if (sgn(h[i]) > 0) break;
    if (sgn(h[i]) < 0) {
      h = -h;
      break;
    }
  }
  Hypersurface out{h, {}, CoxPolynomial(cox.variables)};
  CoxMonomial pos(cox.size(), 0), neg(cox.size(), 0);
  for (std::size_t i = 0; i < cox.size(); ++i) {
    BigInt p = dot(h, cox.fan.rays[i]);
    out.pairings.push_back(p);
    if (sgn(p) > 0) pos[i] = static_cast<unsigned>(p.get_ui());
    if (sgn(p) < 0) neg[i] = static_cast<unsigned>(BigInt(-p).get_ui());
  }
  out.equation.add_term(pos, ParamPoly(1));
  out.equation.add_term(neg, ParamPoly(-1));
  return out;
}

/// A rational functional, positive on every variable class.
inline std::optional<RatVec> positive_class_functional(const CoxPresentation& cox) {
  std::vector<IntVec> cols;
  for (std::size_t j = 0; j < cox.size(); ++j) cols.push_back(cox.variable_class(j));
  if (cox.class_rank() > 3) throw Error(ErrorKind::Unsupported, "class group rank > 3");
  ConeV dual = dual_cone(cols, cox.class_rank());
  // lineality pairs to zero with every class, so only the rays matter
  RatVec l(cox.class_rank());
  for (const auto& r : dual.rays) l = l + to_rational(r);
  for (const auto& c : cols)
    if (sgn(dot(c, l)) <= 0) return std::nullopt;
  return l;
}

/// All monomials of a given class, in lexicographic exponent order.
inline std::vector<CoxMonomial> section_monomials(const CoxPresentation& cox, const IntVec& cls) {
  if (cls.size() != cox.class_rank()) throw Error(ErrorKind::DimensionMismatch, "class has wrong rank");
  auto l = positive_class_functional(cox);
  if (!l) throw Error(ErrorKind::Unbounded, "no functional is positive on all variable classes");
  const BigRat budget = dot(cls, *l);
  std::vector<BigRat> cost;
  for (std::size_t j = 0; j < cox.size(); ++j) cost.push_back(dot(cox.variable_class(j), *l));

  std::vector<CoxMonomial> out;
  if (sgn(budget) < 0) return out;
  CoxMonomial e(cox.size(), 0);
  std::function<void(std::size_t, BigRat)> rec = [&](std::size_t j, BigRat left) {
    if (j == cox.size()) {
      if (sgn(left) == 0 && cox.class_of(e) == cls) out.push_back(e);
      return;
    }
    for (unsigned k = 0;; ++k) {
      BigRat rest = left - cost[j] * k;
      if (sgn(rest) < 0) break;
      e[j] = k;
      rec(j + 1, rest);
    }
    e[j] = 0;
  };
  rec(0, budget);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace torickit
