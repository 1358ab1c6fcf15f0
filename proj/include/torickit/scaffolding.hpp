#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "torickit/core/normal_form.hpp"
#include "torickit/core/polyhedra.hpp"
#include "torickit/fan.hpp"
#include "torickit/polygon.hpp"

namespace torickit {

/// Product of projective spaces P^{n_1} x ... x P^{n_k}, seen as a toric variety
/// whose character lattice is N-bar = Z^{sum n_i}. The divisor sequence
/// N-bar -> Div -> Pic is explicit: on a factor P^n the rays are
/// e_1*, ..., e_n*, -(e_1* + ... + e_n*).
class ShapeVariety {
 public:
  explicit ShapeVariety(std::vector<unsigned> projective_dims) : dims_(std::move(projective_dims)) {
    if (dims_.empty()) throw Error(ErrorKind::InvalidInput, "shape variety needs at least one factor");
    for (auto n : dims_)
      if (n == 0) throw Error(ErrorKind::InvalidInput, "projective factors must have dimension >= 1");
  }

  const std::vector<unsigned>& projective_dims() const noexcept { return dims_; }
  std::size_t picard_rank() const noexcept { return dims_.size(); }
  std::size_t divisor_rank() const {
    std::size_t r = 0;
    for (auto n : dims_) r += n + 1;
    return r;
  }
  std::size_t character_rank() const {
    std::size_t r = 0;
    for (auto n : dims_) r += n;
    return r;
  }

  /// rho*: N-bar -> Div, u -> sum_rho <u, rho> E_rho.
  IntMat ray_map() const {
    IntMat m(divisor_rank(), character_rank());
    std::size_t row = 0, col = 0;
    for (auto n : dims_) {
      for (unsigned j = 0; j < n; ++j) {
        m(row + j, col + j) = 1;
        m(row + n, col + j) = -1;
      }
      row += n + 1;
      col += n;
    }
    return m;
  }

  /// Div -> Pic: degree on each factor.
  IntMat picard_map() const {
    IntMat m(picard_rank(), divisor_rank());
    std::size_t col = 0;
    for (std::size_t f = 0; f < dims_.size(); ++f) {
      for (unsigned j = 0; j <= dims_[f]; ++j) m(f, col + j) = 1;
      col += dims_[f] + 1;
    }
    return m;
  }

  bool is_nef(const IntVec& divisor) const {
    IntVec deg = picard_map() * divisor;
    for (const auto& x : deg)
      if (sgn(x) < 0) return false;
    return true;
  }

  /// Vertices of the moment polytope P_D = {u : <u, rho> >= -a_rho} in N-bar.
  std::vector<IntVec> moment_vertices(const IntVec& divisor) const {
    if (divisor.size() != divisor_rank())
      throw Error(ErrorKind::DimensionMismatch, "divisor has wrong rank");
    if (!is_nef(divisor)) throw Error(ErrorKind::NotNef, "divisor is not nef on the shape");
    // product of one simplex per factor
    std::vector<std::vector<IntVec>> per_factor;
    std::size_t off = 0;
    for (auto n : dims_) {
      BigInt degree(0);
      IntVec base(n);
      for (unsigned j = 0; j <= n; ++j) degree += divisor[off + j];
      for (unsigned j = 0; j < n; ++j) base[j] = -divisor[off + j];
      std::vector<IntVec> verts{base};
      for (unsigned j = 0; j < n; ++j) {
        IntVec v = base;
        v[j] += degree;
        verts.push_back(v);
      }
      std::sort(verts.begin(), verts.end());
      verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
      per_factor.push_back(std::move(verts));
      off += n + 1;
    }
    std::vector<IntVec> out{IntVec(0)};
    for (const auto& vs : per_factor) {
      std::vector<IntVec> next;
      for (const auto& prefix : out)
        for (const auto& v : vs) {
          std::vector<BigInt> cat(prefix.values());
          cat.insert(cat.end(), v.begin(), v.end());
          next.emplace_back(std::move(cat));
        }
      out = std::move(next);
    }
    return out;
  }

 private:
  std::vector<unsigned> dims_;
};

struct Strut {
  std::string name;
  IntVec divisor;  // in Div of the shape
  IntVec chi;      // in N_U
};

/// Shape variety, split N = N-bar + N_U, and struts.
struct Scaffolding {
  ShapeVariety shape{{1}};
  std::size_t n_u_rank = 1;
  std::vector<Strut> struts;
  std::vector<std::string> shape_divisor_names;  // defaults to z1, z2, ...
  std::optional<LatticePolygon> target;

  std::size_t ambient_rank() const { return shape.divisor_rank() + n_u_rank; }
  std::size_t n_rank() const { return shape.character_rank() + n_u_rank; }

  /// Cox variable names: strut names then shape divisor names.
  std::vector<std::string> variable_names() const {
    std::vector<std::string> names;
    for (const auto& s : struts) names.push_back(s.name);
    if (shape_divisor_names.empty()) {
      for (std::size_t i = 0; i < shape.divisor_rank(); ++i) names.push_back("z" + std::to_string(i + 1));
    } else {
      names.insert(names.end(), shape_divisor_names.begin(), shape_divisor_names.end());
    }
    return names;
  }

  void validate() const {
    if (struts.empty()) throw Error(ErrorKind::EmptyScaffolding, "scaffolding has no struts");
    if (!shape_divisor_names.empty() && shape_divisor_names.size() != shape.divisor_rank())
      throw Error(ErrorKind::InvalidInput, "need one name per shape divisor");
    std::set<std::string> seen;
    for (const auto& n : variable_names())
      if (n.empty() || !seen.insert(n).second)
        throw Error(ErrorKind::InvalidInput, "variable names must be unique and nonempty ('" + n + "')");
    for (const auto& s : struts) {
      if (s.divisor.size() != shape.divisor_rank())
        throw Error(ErrorKind::DimensionMismatch, "strut '" + s.name + "' divisor has wrong rank");
      if (s.chi.size() != n_u_rank)
        throw Error(ErrorKind::DimensionMismatch, "strut '" + s.name + "' chi has wrong rank");
      if (!shape.is_nef(s.divisor))
        throw Error(ErrorKind::NotNef, "strut '" + s.name + "' divisor is not nef");
    }
  }

  /// Ray of the strut in N-tilde = Div + N_U: (-D, chi).
  IntVec strut_vector(const Strut& s) const {
    std::vector<BigInt> v;
    for (const auto& x : s.divisor) v.push_back(-x);
    for (const auto& x : s.chi) v.push_back(x);
    return IntVec(std::move(v));
  }

  /// theta = rho* (+) id : N -> N-tilde.
  IntMat theta() const {
    IntMat rho = shape.ray_map();
    IntMat t(ambient_rank(), n_rank());
    for (std::size_t i = 0; i < rho.rows(); ++i)
      for (std::size_t j = 0; j < rho.cols(); ++j) t(i, j) = rho(i, j);
    for (std::size_t k = 0; k < n_u_rank; ++k) t(rho.rows() + k, rho.cols() + k) = 1;
    return t;
  }
};

/// Q_S in M-tilde: <., -D + chi> >= -1 per strut, <., E_i> >= 0 per shape divisor.
inline HalfspaceSystem build_QS(const Scaffolding& s) {
  s.validate();
  HalfspaceSystem hs(s.ambient_rank());
  for (const auto& strut : s.struts) hs.add(s.strut_vector(strut), BigInt(-1));
  for (std::size_t i = 0; i < s.shape.divisor_rank(); ++i) {
    IntVec e(s.ambient_rank());
    e[i] = 1;
    hs.add(e, BigInt(0));
  }
  return hs;
}

/// Lattice points P_D + chi in N = N-bar + N_U for every strut (segment endpoints).
inline std::vector<IntVec> strut_polytope_vertices(const Scaffolding& s) {
  std::vector<IntVec> pts;
  for (const auto& strut : s.struts)
    for (const auto& v : s.shape.moment_vertices(strut.divisor)) {
      std::vector<BigInt> cat(v.values());
      cat.insert(cat.end(), strut.chi.begin(), strut.chi.end());
      pts.emplace_back(std::move(cat));
    }
  return pts;
}

/// conv of the translated moment polytopes, for rank-2 N.
inline std::vector<IntVec> strut_hull(const Scaffolding& s) {
  if (s.n_rank() != 2) throw Error(ErrorKind::Unsupported, "hull check needs rank N = 2");
  return detail::convex_hull_2d(strut_polytope_vertices(s));
}

inline bool hull_matches_target(const Scaffolding& s) {
  if (!s.target) throw Error(ErrorKind::InvalidInput, "scaffolding has no target polygon");
  return strut_hull(s) == s.target->vertices();
}

}  // namespace torickit
