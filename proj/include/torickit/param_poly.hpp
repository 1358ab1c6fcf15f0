#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "torickit/core/numbers.hpp"

namespace torickit {

/// Multivariate polynomial over Q in named parameters.
///
/// Canonical form: the parameter list is the sorted set of names that occur
/// with positive degree; zero coefficients are never stored. Two ParamPolys
/// are equal iff they are the same polynomial.
class ParamPoly {
 public:
  using Monomial = std::vector<unsigned>;

  ParamPoly() = default;
  ParamPoly(const BigRat& c) {  // NOLINT: implicit constant promotion
    if (!torickit::is_zero(c)) terms_.emplace(Monomial{}, c);
  }
  ParamPoly(const BigInt& c) : ParamPoly(BigRat(c)) {}  // NOLINT
  ParamPoly(long c) : ParamPoly(BigRat(c)) {}           // NOLINT
  ParamPoly(int c) : ParamPoly(BigRat(c)) {}            // NOLINT

  static ParamPoly variable(const std::string& name) {
    ParamPoly p;
    p.params_ = {name};
    p.terms_.emplace(Monomial{1}, BigRat(1));
    return p;
  }

  static ParamPoly parse(std::string_view text);

  const std::vector<std::string>& params() const noexcept { return params_; }
  const std::map<Monomial, BigRat>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return params_.empty(); }

  BigRat constant_term() const {
    Monomial zero(params_.size(), 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? BigRat(0) : it->second;
  }

  std::size_t degree() const {
    std::size_t d = 0;
    for (const auto& [m, c] : terms_) {
      std::size_t t = 0;
      for (auto e : m) t += e;
      d = std::max(d, t);
    }
    return d;
  }

  /// Coefficient of a monomial given as name -> exponent.
  BigRat coefficient(const std::map<std::string, unsigned>& mono) const {
    Monomial m(params_.size(), 0);
    for (const auto& [name, e] : mono) {
      if (e == 0) continue;
      auto it = std::find(params_.begin(), params_.end(), name);
      if (it == params_.end()) return BigRat(0);
      m[static_cast<std::size_t>(it - params_.begin())] = e;
    }
    auto it = terms_.find(m);
    return it == terms_.end() ? BigRat(0) : it->second;
  }

  friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
    if (a.params_ == b.params_) {
      ParamPoly r = a;
      for (const auto& [m, c] : b.terms_) r.accumulate(m, c);
      r.normalize();
      return r;
    }
    auto [x, y] = unify(a, b);
    return x + y;
  }
  friend ParamPoly operator-(const ParamPoly& a) {
    ParamPoly r = a;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) { return a + (-b); }

  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_zero() || b.is_zero()) return ParamPoly();
    if (a.params_ != b.params_) {
      if (a.is_constant()) return b.scaled(a.constant_term());
      if (b.is_constant()) return a.scaled(b.constant_term());
      auto [x, y] = unify(a, b);
      return x * y;
    }
    ParamPoly r;
    r.params_ = a.params_;
    Monomial m(a.params_.size());
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
        r.accumulate(m, ca * cb);
      }
    r.normalize();
    return r;
  }

  ParamPoly& operator+=(const ParamPoly& b) { return *this = *this + b; }
  ParamPoly& operator-=(const ParamPoly& b) { return *this = *this - b; }
  ParamPoly& operator*=(const ParamPoly& b) { return *this = *this * b; }

  ParamPoly scaled(const BigRat& s) const {
    if (torickit::is_zero(s)) return ParamPoly();
    ParamPoly r = *this;
    for (auto& [m, c] : r.terms_) c *= s;
    return r;
  }

  ParamPoly pow(unsigned k) const {
    ParamPoly r(1), base = *this;
    while (k) {
      if (k & 1u) r *= base;
      k >>= 1u;
      if (k) base *= base;
    }
    return r;
  }

  friend bool operator==(const ParamPoly& a, const ParamPoly& b) {
    return a.params_ == b.params_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

  /// Replaces parameters by polynomials; names not in the map stay symbolic.
  ParamPoly substitute(const std::map<std::string, ParamPoly>& values) const {
    std::vector<const ParamPoly*> image(params_.size(), nullptr);
    std::vector<ParamPoly> keep(params_.size());
    for (std::size_t i = 0; i < params_.size(); ++i) {
      auto it = values.find(params_[i]);
      if (it != values.end()) {
        image[i] = &it->second;
      } else {
        keep[i] = variable(params_[i]);
        image[i] = &keep[i];
      }
    }
    ParamPoly out;
    for (const auto& [m, c] : terms_) {
      ParamPoly t(c);
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i]) t *= image[i]->pow(m[i]);
      out += t;
    }
    return out;
  }

  /// Full numeric evaluation; every occurring parameter must be assigned.
  BigRat evaluate(const std::map<std::string, BigRat>& values) const {
    std::vector<BigRat> vals(params_.size());
    for (std::size_t i = 0; i < params_.size(); ++i) {
      auto it = values.find(params_[i]);
      if (it == values.end())
        throw Error(ErrorKind::UnassignedParameter, "parameter '" + params_[i] + "' has no value");
      vals[i] = it->second;
    }
    BigRat s(0);
    for (const auto& [m, c] : terms_) {
      BigRat t = c;
      for (std::size_t i = 0; i < m.size(); ++i)
        for (unsigned e = 0; e < m[i]; ++e) t *= vals[i];
      s += t;
    }
    return s;
  }

  /// Graded order: higher total degree first, then lexicographically larger exponent.
  std::vector<std::pair<Monomial, BigRat>> sorted_terms() const {
    std::vector<std::pair<Monomial, BigRat>> v(terms_.begin(), terms_.end());
    auto deg = [](const Monomial& m) {
      unsigned d = 0;
      for (auto e : m) d += e;
      return d;
    };
    std::sort(v.begin(), v.end(), [&](const auto& x, const auto& y) {
      unsigned dx = deg(x.first), dy = deg(y.first);
      if (dx != dy) return dx > dy;
      return x.first > y.first;
    });
    return v;
  }

  std::string monomial_string(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (!s.empty()) s += "*";
      s += params_[i];
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : sorted_terms()) {
      BigRat mag = abs(c);
      std::string mono = monomial_string(m);
      std::string body;
      if (mono.empty()) {
        body = torickit::to_string(mag);
      } else if (mag == 1) {
        body = mono;
      } else {
        body = torickit::to_string(mag) + "*" + mono;
      }
      if (first) {
        out = (sgn(c) < 0 ? "-" : "") + body;
        first = false;
      } else {
        out += (sgn(c) < 0 ? " - " : " + ") + body;
      }
    }
    return out;
  }

 private:
  void accumulate(const Monomial& m, const BigRat& c) {
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) it->second += c;
  }

  // Drops zero coefficients and parameters that no longer occur.
  void normalize() {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = torickit::is_zero(it->second) ? terms_.erase(it) : std::next(it);
    std::vector<bool> used(params_.size(), false);
    for (const auto& [m, c] : terms_)
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i]) used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < params_.size(); ++i)
      if (used[i]) names.push_back(params_[i]);
    std::map<Monomial, BigRat> fresh;
    for (const auto& [m, c] : terms_) {
      Monomial nm;
      for (std::size_t i = 0; i < m.size(); ++i)
        if (used[i]) nm.push_back(m[i]);
      fresh.emplace(std::move(nm), c);
    }
    params_ = std::move(names);
    terms_ = std::move(fresh);
  }

  ParamPoly reindexed(const std::vector<std::string>& names) const {
    std::vector<std::size_t> pos(params_.size());
    for (std::size_t i = 0; i < params_.size(); ++i)
      pos[i] = static_cast<std::size_t>(std::lower_bound(names.begin(), names.end(), params_[i]) -
                                        names.begin());
    ParamPoly r;
    r.params_ = names;
    for (const auto& [m, c] : terms_) {
      Monomial nm(names.size(), 0);
      for (std::size_t i = 0; i < m.size(); ++i) nm[pos[i]] = m[i];
      r.terms_.emplace(std::move(nm), c);
    }
    return r;
  }

  static std::pair<ParamPoly, ParamPoly> unify(const ParamPoly& a, const ParamPoly& b) {
    std::vector<std::string> names;
    std::set_union(a.params_.begin(), a.params_.end(), b.params_.begin(), b.params_.end(),
                   std::back_inserter(names));
    return {a.reindexed(names), b.reindexed(names)};
  }

  std::vector<std::string> params_;
  std::map<Monomial, BigRat> terms_;
};

inline bool is_zero(const ParamPoly& p) { return p.is_zero(); }
inline std::string to_string(const ParamPoly& p) { return p.to_string(); }

using Assignment = std::map<std::string, BigRat>;

inline BigRat specialize(const ParamPoly& p, const Assignment& values) { return p.evaluate(values); }
inline BigRat specialize(const BigRat& x, const Assignment&) { return x; }

namespace detail {

class ParamPolyParser {
 public:
  explicit ParamPolyParser(std::string_view s) : s_(s) {}

  ParamPoly parse() {
    ParamPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::InvalidInput,
                "cannot parse polynomial '" + std::string(s_) + "': " + why + " at offset " +
                    std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  ParamPoly expr() {
    ParamPoly acc = term();
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else return acc;
    }
  }
  ParamPoly term() {
    ParamPoly acc = unary();
    while (eat('*')) acc *= unary();
    return acc;
  }
  ParamPoly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  ParamPoly power() {
    ParamPoly base = atom();
    if (eat('^')) base = base.pow(static_cast<unsigned>(std::stoul(digits())));
    return base;
  }
  ParamPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      ParamPoly inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt num(digits());
      if (eat('/')) {
        BigInt den(digits());
        if (torickit::is_zero(den)) fail("zero denominator");
        BigRat q(num, den);
        q.canonicalize();
        return ParamPoly(q);
      }
      return ParamPoly(BigRat(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      return ParamPoly::variable(std::string(s_.substr(start, pos_ - start)));
    }
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ParamPoly ParamPoly::parse(std::string_view text) {
  return detail::ParamPolyParser(text).parse();
}

}  // namespace torickit
