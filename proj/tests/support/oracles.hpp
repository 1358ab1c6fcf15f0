#pragma once
// Independent reference computations used to check the library. They use
// different algorithms (naive scans, Laplace expansion, Cramer's rule,
// multinomial sums) so that agreement is meaningful.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "torickit/cox.hpp"
#include "torickit/laurent.hpp"

namespace oracle {

using namespace torickit;

using LMat = std::vector<std::vector<long>>;

inline long gcd_list(const std::vector<long>& v) {
  long g = 0;
  for (long x : v) g = std::gcd(g, x);
  return g;
}

inline BigInt det_laplace(const IntMat& m) {
  const std::size_t n = m.rows();
  if (n == 0) return BigInt(1);
  if (n == 1) return m(0, 0);
  BigInt total(0);
  for (std::size_t c = 0; c < n; ++c) {
    IntMat minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != c) minor(i - 1, k++) = m(i, j);
    BigInt term = m(0, c) * det_laplace(minor);
    if (c % 2) total -= term;
    else total += term;
  }
  return total;
}

/// Row-style HNF by repeated Euclidean subtraction on rows (no extended gcd).
inline IntMat hnf_naive(IntMat a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    for (;;) {
      // smallest nonzero |entry| in column c at or below row r
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (sgn(a(i, c)) != 0 && (best == rows || abs(a(i, c)) < abs(a(best, c)))) best = i;
      if (best == rows) break;
      a.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (sgn(a(i, c)) == 0) continue;
        BigInt q = a(i, c) / a(r, c);  // truncating
        for (std::size_t j = 0; j < cols; ++j) a(i, j) -= q * a(r, j);
        if (sgn(a(i, c)) != 0) done = false;
      }
      if (done) break;
    }
    if (r < rows && sgn(a(r, c)) != 0) {
      if (sgn(a(r, c)) < 0)
        for (std::size_t j = 0; j < cols; ++j) a(r, j) = -a(r, j);
      for (std::size_t i = 0; i < r; ++i) {
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) a(i, j) -= q * a(r, j);
      }
      ++r;
    }
  }
  return a;
}

/// Solves a square system by Cramer's rule; nullopt if singular.
inline std::optional<RatVec> cramer(const IntMat& a, const IntVec& b) {
  BigInt d = det_laplace(a);
  if (sgn(d) == 0) return std::nullopt;
  RatVec x(a.rows());
  for (std::size_t k = 0; k < a.cols(); ++k) {
    IntMat ak = a;
    for (std::size_t i = 0; i < a.rows(); ++i) ak(i, k) = b[i];
    x[k] = BigRat(det_laplace(ak), d);
    x[k].canonicalize();
  }
  return x;
}

/// Vertices of {<n_i, x> >= b_i} by all d-subsets and Cramer's rule.
inline std::vector<RatVec> vertices_cramer(const HalfspaceSystem& hs) {
  const std::size_t d = hs.dim();
  std::set<RatVec> out;
  std::vector<std::size_t> idx(d);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t k) {
    if (k == d) {
      IntMat a(d, d);
      IntVec b(d);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) a(i, j) = hs[idx[i]].normal[j];
        b[i] = hs[idx[i]].bound;
      }
      auto x = cramer(a, b);
      if (x && hs.contains(*x)) out.insert(*x);
      return;
    }
    for (std::size_t i = start; i < hs.size(); ++i) {
      idx[k] = i;
      rec(i + 1, k + 1);
    }
  };
  rec(0, 0);
  return {out.begin(), out.end()};
}

/// Integer points by scanning a caller-supplied box [-bound, bound]^d.
inline std::vector<IntVec> integer_points_box(const HalfspaceSystem& hs, long bound) {
  const std::size_t d = hs.dim();
  std::vector<IntVec> out;
  std::vector<long> x(d, -bound);
  for (;;) {
    IntVec v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = x[i];
    if (hs.contains(v)) out.push_back(v);
    std::size_t k = d;
    while (k > 0 && x[k - 1] == bound) x[--k] = -bound;
    if (k == 0) break;
    ++x[k - 1];
  }
  return out;
}

/// Is g a nonnegative combination of at most 3 of `others` (3-space)?
inline bool in_cone_of(const IntVec& g, const std::vector<IntVec>& others) {
  const std::size_t n = others.size();
  auto nonneg = [](const RatVec& x) {
    for (const auto& c : x)
      if (sgn(c) < 0) return false;
    return true;
  };
  for (std::size_t i = 0; i < n; ++i) {
    // parallel
    IntVec p = primitive(others[i]);
    if (p == primitive(g)) return true;
    for (std::size_t j = i + 1; j < n; ++j) {
      // g = a u + b v: test via 2x2 minors against a third coordinate system
      RatMat m(3, 2);
      for (std::size_t r = 0; r < 3; ++r) {
        m(r, 0) = BigRat(others[i][r]);
        m(r, 1) = BigRat(others[j][r]);
      }
      auto x = solve(m, to_rational(g));
      if (x && nonneg(*x)) return true;
      for (std::size_t k = j + 1; k < n; ++k) {
        IntMat a(3, 3);
        for (std::size_t r = 0; r < 3; ++r) {
          a(r, 0) = others[i][r];
          a(r, 1) = others[j][r];
          a(r, 2) = others[k][r];
        }
        auto y = cramer(a, g);
        if (y && nonneg(*y)) return true;
      }
    }
  }
  return false;
}

/// Extreme rays of cone(gens), as primitive vectors, by the Caratheodory test.
inline std::set<IntVec> extreme_rays(const std::vector<IntVec>& gens) {
  std::set<IntVec> prim;
  for (const auto& g : gens) prim.insert(primitive(g));
  std::set<IntVec> out;
  for (const auto& g : prim) {
    std::vector<IntVec> others;
    for (const auto& h : prim)
      if (h != g) others.push_back(h);
    if (!in_cone_of(g, others)) out.insert(g);
  }
  return out;
}

/// Constant term of f^k by summing multinomial terms over compositions of k.
inline BigRat multinomial_constant_term(const RatLaurent& f, unsigned k) {
  std::vector<std::pair<Exponent, BigRat>> terms(f.terms().begin(), f.terms().end());
  const std::size_t m = terms.size();
  const std::size_t n = f.nvars();
  BigRat total(0);
  std::vector<unsigned> parts(m, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == m) {
      parts[i] = left;
      std::vector<long> e(n, 0);
      for (std::size_t t = 0; t < m; ++t)
        for (std::size_t c = 0; c < n; ++c) e[c] += static_cast<long>(parts[t]) * terms[t].first[c];
      for (auto x : e)
        if (x) return;
      BigRat term(factorial(k));
      for (std::size_t t = 0; t < m; ++t) {
        term /= BigRat(factorial(parts[t]));
        BigRat p(1);
        for (unsigned r = 0; r < parts[t]; ++r) p *= terms[t].second;
        term *= p;
      }
      total += term;
      return;
    }
    for (unsigned a = 0; a <= left; ++a) {
      parts[i] = a;
      rec(i + 1, left - a);
    }
  };
  if (m == 0) return k == 0 ? BigRat(1) : BigRat(0);
  rec(0, k);
  return total;
}

/// Area centroid of a convex polygon from the shoelace moments.
inline RatVec centroid_shoelace(const std::vector<RatVec>& v) {
  BigRat a(0), cx(0), cy(0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const RatVec& p = v[i];
    const RatVec& q = v[(i + 1) % v.size()];
    BigRat cross = p[0] * q[1] - q[0] * p[1];
    a += cross;
    cx += (p[0] + q[0]) * cross;
    cy += (p[1] + q[1]) * cross;
  }
  // a is twice the signed area
  return RatVec{cx / (3 * a), cy / (3 * a)};
}

/// Parses "z1*z2 - x1^2 + s1*x1^4 + s2": names that are Cox variables become
/// exponents, anything else is a parameter factor.
inline CoxPolynomial parse_cox(const std::vector<std::string>& vars, const std::string& text) {
  CoxPolynomial p(vars);
  std::istringstream in(text);
  std::string tok;
  int sign = 1;
  while (in >> tok) {
    if (tok == "+") { sign = 1; continue; }
    if (tok == "-") { sign = -1; continue; }
    if (tok[0] == '-') {
      sign = -sign;
      tok = tok.substr(1);
    }
    CoxMonomial e(vars.size(), 0);
    ParamPoly c(sign);
    std::stringstream fs(tok);
    std::string factor;
    while (std::getline(fs, factor, '*')) {
      std::string name = factor;
      unsigned power = 1;
      auto caret = factor.find('^');
      if (caret != std::string::npos) {
        name = factor.substr(0, caret);
        power = static_cast<unsigned>(std::stoul(factor.substr(caret + 1)));
      }
      auto it = std::find(vars.begin(), vars.end(), name);
      if (it != vars.end()) e[it - vars.begin()] += power;
      else if (std::isdigit(static_cast<unsigned char>(name[0]))) c = c * ParamPoly(parse_rational(name));
      else c = c * ParamPoly::variable(name).pow(power);
    }
    p.add_term(e, c);
    sign = 1;
  }
  return p;
}

}  // namespace oracle
