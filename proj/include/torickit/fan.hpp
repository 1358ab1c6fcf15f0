#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <vector>

#include "torickit/core/polyhedra.hpp"

namespace torickit {

/// Complete simplicial fan: primitive rays and maximal cones as sorted ray-index sets.
struct Fan {
  std::size_t dim = 0;
  std::vector<IntVec> rays;
  std::vector<std::vector<std::size_t>> maximal_cones;
  // index of the inequality each ray came from, when built as a normal fan
  std::vector<std::size_t> source_rows;

  IntMat ray_matrix() const { return IntMat::from_rows(rays, dim); }

  /// Rays of one cone as the columns of a dim x dim matrix.
  IntMat cone_matrix(const std::vector<std::size_t>& cone) const {
    std::vector<IntVec> cols;
    for (auto i : cone) cols.push_back(rays[i]);
    return IntMat::from_columns(cols, dim);
  }

  /// Codimension-one cones shared by two maximal cones: (face, cone a, cone b).
  struct Wall {
    std::vector<std::size_t> face;
    std::size_t cone_a, cone_b;
  };
  std::vector<Wall> walls() const {
    std::vector<Wall> out;
    for (std::size_t a = 0; a < maximal_cones.size(); ++a)
      for (std::size_t b = a + 1; b < maximal_cones.size(); ++b) {
        std::vector<std::size_t> common;
        std::set_intersection(maximal_cones[a].begin(), maximal_cones[a].end(),
                              maximal_cones[b].begin(), maximal_cones[b].end(),
                              std::back_inserter(common));
        if (common.size() + 1 == dim) out.push_back({common, a, b});
      }
    return out;
  }
};

/// Normal fan of a full-dimensional bounded polytope: rays are the primitive
/// inner facet normals, one maximal cone per vertex. Redundant inequalities
/// are dropped.
inline Fan normal_fan(const HalfspaceSystem& hs) {
  const std::size_t d = hs.dim();
  auto verts = vertices(hs);
  if (verts.empty()) throw Error(ErrorKind::InvalidInput, "polytope is empty");

  auto tight = [&](std::size_t row, const RatVec& v) {
    return dot(hs[row].normal, v) == BigRat(hs[row].bound);
  };

  Fan fan;
  fan.dim = d;
  std::vector<std::set<std::size_t>> facet_vertex_sets;
  std::vector<long> ray_of_row(hs.size(), -1);
  for (std::size_t i = 0; i < hs.size(); ++i) {
    std::set<std::size_t> on;
    for (std::size_t k = 0; k < verts.size(); ++k)
      if (tight(i, verts[k])) on.insert(k);
    if (on.empty()) continue;
    // affine rank of the tight vertices must be d - 1
    std::vector<RatVec> diffs;
    const RatVec& base = verts[*on.begin()];
    for (auto k : on) diffs.push_back(verts[k] - base);
    RatMat m(diffs.size(), d);
    for (std::size_t r = 0; r < diffs.size(); ++r)
      for (std::size_t c = 0; c < d; ++c) m(r, c) = diffs[r][c];
    if (rank(m) + 1 != d) continue;
    auto dup = std::find(facet_vertex_sets.begin(), facet_vertex_sets.end(), on);
    if (dup != facet_vertex_sets.end()) {
      ray_of_row[i] = dup - facet_vertex_sets.begin();
      continue;
    }
    ray_of_row[i] = static_cast<long>(fan.rays.size());
    facet_vertex_sets.push_back(on);
    fan.rays.push_back(primitive(hs[i].normal));
    fan.source_rows.push_back(i);
  }
  if (rank(IntMat::from_rows(fan.rays, d)) < d)
    throw Error(ErrorKind::Unbounded, "polytope is not full-dimensional");

  for (std::size_t k = 0; k < verts.size(); ++k) {
    std::vector<std::size_t> cone;
    for (std::size_t r = 0; r < fan.rays.size(); ++r)
      if (facet_vertex_sets[r].count(k)) cone.push_back(r);
    if (cone.size() != d)
      throw Error(ErrorKind::NonSimplicial,
                  "vertex " + to_string(verts[k]) + " lies on " + std::to_string(cone.size()) + " facets");
    fan.maximal_cones.push_back(std::move(cone));
  }
  std::sort(fan.maximal_cones.begin(), fan.maximal_cones.end());
  return fan;
}

}  // namespace torickit
