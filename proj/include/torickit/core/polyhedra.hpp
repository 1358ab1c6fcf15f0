#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <vector>

#include "torickit/core/matrix.hpp"

namespace torickit {

/// One inequality <normal, x> >= bound.
struct Halfspace {
  IntVec normal;
  BigInt bound;
};

class HalfspaceSystem {
 public:
  explicit HalfspaceSystem(std::size_t dim) : dim_(dim) {}

  HalfspaceSystem& add(IntVec normal, BigInt bound) {
    if (normal.size() != dim_)
      throw Error(ErrorKind::DimensionMismatch, "halfspace normal has wrong dimension");
    if (normal.is_zero()) throw Error(ErrorKind::ZeroVector, "halfspace normal is zero");
    rows_.push_back({std::move(normal), std::move(bound)});
    return *this;
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return rows_.size(); }
  const std::vector<Halfspace>& rows() const noexcept { return rows_; }
  const Halfspace& operator[](std::size_t i) const { return rows_[i]; }

  bool contains(const RatVec& x) const {
    for (const auto& h : rows_)
      if (dot(h.normal, x) < BigRat(h.bound)) return false;
    return true;
  }
  bool contains(const IntVec& x) const {
    for (const auto& h : rows_)
      if (dot(h.normal, x) < h.bound) return false;
    return true;
  }

  IntMat normal_matrix() const {
    IntMat m(rows_.size(), dim_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (std::size_t j = 0; j < dim_; ++j) m(i, j) = rows_[i].normal[j];
    return m;
  }

 private:
  std::size_t dim_;
  std::vector<Halfspace> rows_;
};

/// A polyhedral cone: the span of `lineality` plus the cone over `rays`.
/// Rays are primitive, deduplicated and sorted lexicographically.
struct ConeV {
  std::size_t dim = 0;
  std::vector<IntVec> rays;
  std::vector<IntVec> lineality;

  bool pointed() const { return lineality.empty(); }
  bool full_dimensional() const {
    if (dim == 0) return true;
    std::vector<IntVec> all = rays;
    all.insert(all.end(), lineality.begin(), lineality.end());
    if (all.empty()) return false;
    return rank(IntMat::from_rows(all, dim)) == dim;
  }

  static ConeV from_rays(std::size_t dim, const std::vector<IntVec>& generators) {
    ConeV c;
    c.dim = dim;
    std::set<IntVec> seen;
    for (const auto& g : generators) {
      if (g.size() != dim) throw Error(ErrorKind::DimensionMismatch, "cone ray has wrong dimension");
      seen.insert(primitive(g));
    }
    c.rays.assign(seen.begin(), seen.end());
    return c;
  }
};

namespace detail {

// Calls f on every k-element subset of {0..n-1} in lexicographic order.
inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(idx);
    if (k == 0) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline std::vector<IntVec> integral_kernel_basis(const RatMat& m) {
  std::vector<IntVec> out;
  for (const auto& v : kernel(m)) out.push_back(primitive(v));
  return out;
}

}  // namespace detail

/// Extreme rays (and lineality) of {x : <n_i, x> >= 0 for all i}.
/// Bounds of the system are ignored; only ambient dimension <= 3 is supported.
inline ConeV dual_cone(const std::vector<IntVec>& normals, std::size_t dim) {
  if (dim > 3) throw Error(ErrorKind::Unsupported, "dual_cone supports ambient dimension <= 3");
  for (const auto& n : normals)
    if (n.size() != dim) throw Error(ErrorKind::DimensionMismatch, "normal has wrong dimension");

  ConeV out;
  out.dim = dim;
  RatMat nmat = to_rational(IntMat::from_rows(normals, dim));
  out.lineality = detail::integral_kernel_basis(nmat);
  std::sort(out.lineality.begin(), out.lineality.end());

  const std::size_t lin = out.lineality.size();
  if (lin == dim) return out;  // no constraints at all
  const std::size_t needed = dim - 1 - lin;

  std::set<IntVec> rays;
  detail::for_each_subset(normals.size(), needed, [&](const std::vector<std::size_t>& subset) {
    std::vector<IntVec> eqs;
    for (auto i : subset) eqs.push_back(normals[i]);
    for (const auto& l : out.lineality) eqs.push_back(l);
    RatMat a = eqs.empty() ? RatMat(0, dim) : to_rational(IntMat::from_rows(eqs, dim));
    auto ker = kernel(a);
    if (ker.size() != 1) return;
    IntVec r = primitive(ker.front());
    for (int sign : {1, -1}) {
      IntVec cand = sign > 0 ? r : IntVec(-r);
      bool ok = std::all_of(normals.begin(), normals.end(),
                            [&](const IntVec& n) { return sgn(dot(n, cand)) >= 0; });
      if (ok) rays.insert(cand);
    }
  });
  out.rays.assign(rays.begin(), rays.end());
  return out;
}

inline ConeV dual_cone(const HalfspaceSystem& hs) {
  std::vector<IntVec> normals;
  for (const auto& h : hs.rows()) normals.push_back(h.normal);
  return dual_cone(normals, hs.dim());
}

/// Dual of a cone given by generators: {x : <r, x> >= 0 for every generator and
/// <l, x> = 0 for every lineality direction}.
inline ConeV dual_cone(const ConeV& cone) {
  std::vector<IntVec> normals = cone.rays;
  for (const auto& l : cone.lineality) {
    normals.push_back(l);
    normals.push_back(-l);
  }
  return dual_cone(normals, cone.dim);
}

/// Exact vertex list of a bounded polyhedron, sorted lexicographically.
/// Throws Unbounded when the recession cone is nontrivial and the system is feasible.
inline std::vector<RatVec> vertices(const HalfspaceSystem& hs) {
  const std::size_t d = hs.dim();
  if (d > 3) throw Error(ErrorKind::Unsupported, "vertices supports ambient dimension <= 3");
  ConeV recession = dual_cone(hs);
  if (!recession.pointed())
    throw Error(ErrorKind::Unbounded, "system has a lineality space (not a polytope)");

  std::set<RatVec> found;
  detail::for_each_subset(hs.size(), d, [&](const std::vector<std::size_t>& subset) {
    RatMat a(d, d);
    RatVec b(d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) a(i, j) = BigRat(hs[subset[i]].normal[j]);
      b[i] = BigRat(hs[subset[i]].bound);
    }
    if (rank(a) < d) return;
    auto x = solve(a, b);
    if (x && hs.contains(*x)) found.insert(*x);
  });
  if (d == 0 && hs.size() == 0) found.insert(RatVec(0));
  if (!found.empty() && !recession.rays.empty())
    throw Error(ErrorKind::Unbounded, "polyhedron is unbounded");
  return {found.begin(), found.end()};
}

using ProgressCallback = std::function<void(std::size_t done, std::size_t total)>;

/// All lattice points of a bounded system, in lexicographic order.
inline std::vector<IntVec> integer_points(const HalfspaceSystem& hs,
                                          const ProgressCallback& progress = {}) {
  const std::size_t d = hs.dim();
  auto verts = vertices(hs);
  if (verts.empty()) return {};
  std::vector<BigInt> lo(d), hi(d);
  for (std::size_t j = 0; j < d; ++j) {
    lo[j] = ceil(verts[0][j]);
    hi[j] = floor(verts[0][j]);
    for (const auto& v : verts) {
      BigInt c = ceil(v[j]), f = floor(v[j]);
      if (c < lo[j]) lo[j] = c;
      if (f > hi[j]) hi[j] = f;
    }
    if (lo[j] > hi[j]) return {};
  }
  std::size_t total = 1;
  for (std::size_t j = 0; j < d; ++j) total *= BigInt(hi[j] - lo[j] + 1).get_ui();

  std::vector<IntVec> points;
  IntVec x(d);
  for (std::size_t j = 0; j < d; ++j) x[j] = lo[j];
  std::size_t done = 0;
  for (;;) {
    if (hs.contains(x)) points.push_back(x);
    ++done;
    if (progress && (done % 4096 == 0 || done == total)) progress(done, total);
    std::size_t j = d;
    while (j > 0) {
      --j;
      if (x[j] < hi[j]) {
        x[j] += 1;
        for (std::size_t k = j + 1; k < d; ++k) x[k] = lo[k];
        break;
      }
      if (j == 0) return points;
    }
    if (d == 0) return points;
  }
}

}  // namespace torickit
