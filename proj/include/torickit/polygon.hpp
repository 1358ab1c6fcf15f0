#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "torickit/core/matrix.hpp"

namespace torickit {

namespace detail {

template <class T>
T cross(const Vec<T>& o, const Vec<T>& a, const Vec<T>& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Strictly convex hull, counterclockwise, starting at the lexicographically least point.
template <class T>
std::vector<Vec<T>> convex_hull_2d(std::vector<Vec<T>> pts) {
  for (const auto& p : pts)
    if (p.size() != 2) throw Error(ErrorKind::DimensionMismatch, "polygon points must be in Z^2");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Vec<T>> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && sgn(cross(hull[k - 2], hull[k - 1], pts[i])) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && sgn(cross(hull[k - 2], hull[k - 1], pts[i - 1])) <= 0) --k;
    hull[k++] = pts[i - 1];
  }
  hull.resize(k - 1);
  return hull;
}

template <class T>
std::vector<Vec<T>> rotate_to_least(std::vector<Vec<T>> v) {
  if (v.empty()) return v;
  auto it = std::min_element(v.begin(), v.end());
  std::rotate(v.begin(), it, v.end());
  return v;
}

}  // namespace detail

/// Lattice polygon in N = Z^2: strictly convex vertices, counterclockwise,
/// lexicographically least vertex first.
class LatticePolygon {
 public:
  /// Builds from points already in strictly convex position (any order).
  static LatticePolygon from_vertices(const std::vector<IntVec>& points) {
    auto hull = detail::convex_hull_2d(points);
    std::vector<IntVec> uniq = points;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    if (hull.size() < 3 || hull.size() != uniq.size() || uniq.size() != points.size())
      throw Error(ErrorKind::NotConvex, "points are not the vertices of a convex polygon");
    LatticePolygon p;
    p.vertices_ = std::move(hull);
    return p;
  }

  const std::vector<IntVec>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const IntVec& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

  friend bool operator==(const LatticePolygon& a, const LatticePolygon& b) {
    return a.vertices_ == b.vertices_;
  }

 private:
  std::vector<IntVec> vertices_;
};

/// Rational polygon (e.g. a polar dual in M_Q), same normalization as LatticePolygon.
class RatPolygon {
 public:
  static RatPolygon from_vertices(const std::vector<RatVec>& points) {
    auto hull = detail::convex_hull_2d(points);
    if (hull.size() < 3 || hull.size() != points.size())
      throw Error(ErrorKind::NotConvex, "points are not the vertices of a convex polygon");
    RatPolygon p;
    p.vertices_ = std::move(hull);
    return p;
  }
  static RatPolygon from_lattice(const LatticePolygon& lp) {
    RatPolygon p;
    for (const auto& v : lp.vertices()) p.vertices_.push_back(to_rational(v));
    return p;
  }

  const std::vector<RatVec>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const RatVec& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

  friend bool operator==(const RatPolygon& a, const RatPolygon& b) {
    return a.vertices_ == b.vertices_;
  }

 private:
  std::vector<RatVec> vertices_;
};

/// Cyclic quotient surface singularity 1/r(1,a). Stored canonically: a is the
/// smaller of a and a^{-1} mod r, so 1/5(1,2) == 1/5(1,3).
class CyclicQuotient2D {
 public:
  CyclicQuotient2D(BigInt r, BigInt a) : r_(std::move(r)) {
    if (sgn(r_) <= 0) throw Error(ErrorKind::InvalidInput, "quotient index must be positive");
    if (r_ == 1) {
      a_ = 0;
      return;
    }
    a_ = mod_positive(a, r_);
    if (gcd(a_, r_) != 1) throw Error(ErrorKind::InvalidInput, "quotient weight not coprime to index");
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), a_.get_mpz_t(), r_.get_mpz_t());
    if (inv < a_) a_ = inv;
  }

  const BigInt& index() const noexcept { return r_; }
  const BigInt& weight() const noexcept { return a_; }
  bool is_smooth() const { return r_ == 1; }

  std::string to_string() const {
    if (is_smooth()) return "smooth";
    return "1/" + r_.get_str() + "(1," + a_.get_str() + ")";
  }

  friend bool operator==(const CyclicQuotient2D& x, const CyclicQuotient2D& y) {
    return x.r_ == y.r_ && x.a_ == y.a_;
  }
  friend bool operator<(const CyclicQuotient2D& x, const CyclicQuotient2D& y) {
    return x.r_ < y.r_ || (x.r_ == y.r_ && x.a_ < y.a_);
  }

 private:
  BigInt r_;
  BigInt a_;
};

struct SingularityRecord {
  std::size_t edge = 0;  // edge from vertex(edge) to vertex(edge + 1)
  CyclicQuotient2D quotient{1, 0};
  BigInt length;  // lattice length
  BigInt height;  // lattice height over the origin
  BigInt t_count;  // floor(length / height)
  BigInt residue;  // length mod height
  bool is_T = false;
  bool is_rigid = false;
  bool is_smooth = false;
};

/// Checks the Fano conditions and returns the normalized polygon.
inline LatticePolygon validate_fano(const std::vector<IntVec>& points) {
  if (points.size() < 3) throw Error(ErrorKind::InvalidInput, "a polygon needs at least 3 vertices");
  for (const auto& p : points) {
    if (p.size() != 2) throw Error(ErrorKind::DimensionMismatch, "vertices must lie in Z^2");
    if (p.is_zero() || primitive(p) != p)
      throw Error(ErrorKind::NonPrimitiveVertex, "vertex " + to_string(p) + " is not primitive");
  }
  LatticePolygon poly = LatticePolygon::from_vertices(points);
  const IntVec origin = make_int_vec({0, 0});
  for (std::size_t i = 0; i < poly.size(); ++i)
    if (sgn(detail::cross(poly.vertex(i), poly.vertex(i + 1), origin)) <= 0)
      throw Error(ErrorKind::OriginNotInterior, "origin is not strictly inside the polygon");
  return poly;
}

/// Primitive outer normal w of an edge and its height h = <w, edge> > 0.
inline std::pair<IntVec, BigInt> edge_normal(const LatticePolygon& p, std::size_t edge) {
  const IntVec& u = p.vertex(edge);
  const IntVec& v = p.vertex(edge + 1);
  IntVec w = primitive(IntVec{BigInt(v[1] - u[1]), BigInt(u[0] - v[0])});
  return {w, dot(w, u)};
}

/// Cone over one edge of the face fan, via a unimodular change of basis sending
/// the first ray to (0,1) and the second to (r, -a).
inline SingularityRecord edge_singularity(const LatticePolygon& p, std::size_t edge) {
  if (edge >= p.size()) throw Error(ErrorKind::InvalidInput, "edge index out of range");
  const IntVec& u = p.vertex(edge);
  const IntVec& v = p.vertex(edge + 1);
  BigInt r = u[0] * v[1] - u[1] * v[0];

  // rows (p1,q1),(p2,q2) with p1*u0+q1*u1 = 0, p2*u0+q2*u1 = 1, det = -1
  BigInt g, s, t;
  extended_gcd(u[0], u[1], g, s, t);
  IntMat basis(2, 2);
  basis(0, 0) = u[1];
  basis(0, 1) = -u[0];
  basis(1, 0) = s;
  basis(1, 1) = t;
  if (determinant(basis) == 1) {
    basis(0, 0) = -basis(0, 0);
    basis(0, 1) = -basis(0, 1);
  }
  IntVec image = basis * v;
  SingularityRecord rec;
  rec.edge = edge;
  rec.quotient = CyclicQuotient2D(r, -image[1]);
  rec.length = gcd(v[0] - u[0], v[1] - u[1]);
  rec.height = edge_normal(p, edge).second;
  rec.t_count = floor_div(rec.length, rec.height);
  rec.residue = rec.length - rec.t_count * rec.height;
  rec.is_smooth = rec.quotient.is_smooth();
  rec.is_rigid = is_zero(rec.t_count);
  rec.is_T = is_zero(rec.residue) && rec.t_count >= 1 && !rec.is_smooth;
  return rec;
}

inline std::vector<SingularityRecord> singularity_report(const LatticePolygon& p) {
  std::vector<SingularityRecord> out;
  for (std::size_t e = 0; e < p.size(); ++e) out.push_back(edge_singularity(p, e));
  return out;
}

/// Sorted multiset of the nontrivial quotient singularities.
inline std::vector<CyclicQuotient2D> singular_points(const std::vector<SingularityRecord>& report) {
  std::vector<CyclicQuotient2D> q;
  for (const auto& r : report)
    if (!r.is_smooth) q.push_back(r.quotient);
  std::sort(q.begin(), q.end());
  return q;
}

// Assumes no local-to-global obstructions, so local counts add up. An edge of
// height 1 is Du Val (A_{m-1}, or smooth when m = 1) and contributes m - 1.
inline BigInt qg_dimension(const LatticePolygon& p) {
  BigInt total(0);
  for (const auto& r : singularity_report(p)) total += r.height == 1 ? BigInt(r.t_count - 1) : r.t_count;
  return total;
}

/// Polar dual {m : <m, u> >= -1 for all u}; the origin must be strictly interior.
inline RatPolygon polar(const RatPolygon& q) {
  std::vector<RatVec> verts;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const RatVec& a = q.vertex(i);
    const RatVec& b = q.vertex(i + 1);
    RatMat m{{a[0], a[1]}, {b[0], b[1]}};
    auto x = solve(m, RatVec{BigRat(-1), BigRat(-1)});
    if (!x || rank(m) < 2)
      throw Error(ErrorKind::OriginNotInterior, "polar needs the origin strictly inside");
    verts.push_back(*x);
  }
  return RatPolygon::from_vertices(verts);
}

inline RatPolygon polar(const LatticePolygon& p) { return polar(RatPolygon::from_lattice(p)); }

/// Twice the Euclidean area (shoelace).
inline BigRat normalized_volume(const RatPolygon& q) {
  BigRat twice(0);
  for (std::size_t i = 0; i < q.size(); ++i) {
    const RatVec& a = q.vertex(i);
    const RatVec& b = q.vertex(i + 1);
    twice += a[0] * b[1] - a[1] * b[0];
  }
  return abs(twice);
}

/// Centroid by fan triangulation from the first vertex.
inline RatVec barycenter(const RatPolygon& q) {
  BigRat total(0);
  RatVec acc(2);
  const RatVec& o = q.vertex(0);
  for (std::size_t i = 1; i + 1 < q.size(); ++i) {
    const RatVec& a = q.vertex(i);
    const RatVec& b = q.vertex(i + 1);
    BigRat w = detail::cross(o, a, b);
    total += w;
    for (std::size_t j = 0; j < 2; ++j) acc[j] += w * (o[j] + a[j] + b[j]) / 3;
  }
  if (is_zero(total)) throw Error(ErrorKind::DegeneratePolygon, "polygon has zero area");
  for (std::size_t j = 0; j < 2; ++j) acc[j] /= total;
  return acc;
}

/// Toric K-polystability: the barycenter of the polar is the origin.
inline bool is_k_polystable(const LatticePolygon& p) { return barycenter(polar(p)).is_zero(); }

struct SymmetryGroup {
  std::vector<IntMat> elements;  // sorted

  std::size_t order() const noexcept { return elements.size(); }
  bool contains(const IntMat& g) const {
    return std::binary_search(elements.begin(), elements.end(), g);
  }
};

inline std::vector<IntVec> transform_points(const IntMat& g, const std::vector<IntVec>& pts) {
  std::vector<IntVec> out;
  for (const auto& p : pts) out.push_back(g * p);
  return out;
}

/// All g in GL_2(Z) with g P = P, found by sending the flag (v0, v1) to every flag.
inline SymmetryGroup lattice_symmetries(const LatticePolygon& p) {
  const std::size_t n = p.size();
  RatMat base{{BigRat(p.vertex(0)[0]), BigRat(p.vertex(1)[0])},
              {BigRat(p.vertex(0)[1]), BigRat(p.vertex(1)[1])}};
  auto base_inv = inverse(base);
  if (!base_inv) throw Error(ErrorKind::DegeneratePolygon, "adjacent vertices are collinear with 0");
  std::vector<IntVec> sorted_vertices = p.vertices();
  std::sort(sorted_vertices.begin(), sorted_vertices.end());

  std::vector<IntMat> found;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j : {(i + 1) % n, (i + n - 1) % n}) {
      RatMat target{{BigRat(p.vertex(i)[0]), BigRat(p.vertex(j)[0])},
                    {BigRat(p.vertex(i)[1]), BigRat(p.vertex(j)[1])}};
      RatMat g = target * *base_inv;
      IntMat gi(2, 2);
      bool integral = true;
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) {
          if (!is_integer(g(a, b))) integral = false;
          gi(a, b) = g(a, b).get_num();
        }
      if (!integral || !is_unimodular(gi)) continue;
      auto img = transform_points(gi, p.vertices());
      std::sort(img.begin(), img.end());
      if (img == sorted_vertices) found.push_back(gi);
    }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return {std::move(found)};
}

/// True when no edge of the polar has a lattice point in its relative interior.
inline bool polar_edges_have_no_interior_lattice_points(const LatticePolygon& p) {
  RatPolygon q = polar(p);
  for (std::size_t i = 0; i < q.size(); ++i) {
    const RatVec& a = q.vertex(i);
    const RatVec& b = q.vertex(i + 1);
    // scan integer x (or y for vertical edges) strictly between the endpoints
    std::size_t axis = a[0] != b[0] ? 0 : 1;
    const RatVec& lo = a[axis] < b[axis] ? a : b;
    const RatVec& hi = a[axis] < b[axis] ? b : a;
    for (BigInt t = floor(lo[axis]) + 1; BigRat(t) < hi[axis]; ++t) {
      BigRat s = (BigRat(t) - lo[axis]) / (hi[axis] - lo[axis]);
      BigRat other = lo[1 - axis] + s * (hi[1 - axis] - lo[1 - axis]);
      if (is_integer(other)) return false;
    }
  }
  return true;
}

}  // namespace torickit
