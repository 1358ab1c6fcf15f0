#pragma once

#include <cstddef>
#include <vector>

#include "torickit/core/polyhedra.hpp"
#include "torickit/cox.hpp"
#include "torickit/series.hpp"

namespace torickit {

/// Torus-invariant curve of a wall, with the degrees of every variable divisor
/// on it and its class in N_1 (coordinates dual to the class-group basis).
struct WallCurve {
  std::vector<std::size_t> wall;  // rays of the codimension-one cone
  std::size_t cone_a = 0, cone_b = 0;
  IntVec relation;  // sum relation_i * ray_i = 0
  IntVec curve_class;
};

struct MoriNef {
  std::vector<WallCurve> walls;
  ConeV mori;
  ConeV nef;
};

inline WallCurve wall_curve(const CoxPresentation& cox, const Fan::Wall& w) {
  const Fan& fan = cox.fan;
  std::vector<std::size_t> support = w.face;
  std::size_t extra_a = 0, extra_b = 0;
  for (auto i : fan.maximal_cones[w.cone_a])
    if (std::find(w.face.begin(), w.face.end(), i) == w.face.end()) extra_a = i;
  for (auto i : fan.maximal_cones[w.cone_b])
    if (std::find(w.face.begin(), w.face.end(), i) == w.face.end()) extra_b = i;
  support.push_back(extra_a);
  support.push_back(extra_b);

  // kernel of the (dim x (dim+1)) matrix with the support rays as columns
  RatMat m(fan.dim, support.size());
  for (std::size_t k = 0; k < support.size(); ++k)
    for (std::size_t i = 0; i < fan.dim; ++i) m(i, k) = BigRat(fan.rays[support[k]][i]);
  auto ker = kernel(m);
  if (ker.size() != 1) throw Error(ErrorKind::RelationSolve, "wall relation is not unique (non-simplicial wall)");
  IntVec coeffs = primitive(ker[0]);
  const std::size_t ia = support.size() - 2, ib = support.size() - 1;
  if (sgn(coeffs[ia]) < 0) coeffs = -coeffs;
  if (sgn(coeffs[ia]) <= 0 || sgn(coeffs[ib]) <= 0)
    throw Error(ErrorKind::RelationSolve, "wall relation has non-positive coefficient on a completing ray");

  WallCurve wc;
  wc.wall = w.face;
  wc.cone_a = w.cone_a;
  wc.cone_b = w.cone_b;
  wc.relation = IntVec(cox.size());
  for (std::size_t k = 0; k < support.size(); ++k) wc.relation[support[k]] = coeffs[k];

  // curve class l with W^T l = relation
  auto l = solve(to_rational(cox.weights.transposed()), to_rational(wc.relation));
  if (!l) throw Error(ErrorKind::RelationSolve, "wall relation is not in the row space of the weights");
  auto li = to_integer(*l);
  wc.curve_class = li ? *li : primitive(*l);
  return wc;
}

/// Mori cone from wall curves; nef cone as its dual.
inline MoriNef mori_and_nef(const CoxPresentation& cox) {
  if (cox.class_rank() > 3) throw Error(ErrorKind::Unsupported, "class group rank > 3");
  MoriNef out;
  std::vector<IntVec> classes;
  for (const auto& w : cox.fan.walls()) {
    out.walls.push_back(wall_curve(cox, w));
    classes.push_back(out.walls.back().curve_class);
  }
  out.mori = ConeV::from_rays(cox.class_rank(), classes);
  out.nef = dual_cone(classes, cox.class_rank());
  return out;
}

/// Summation domain of the quantum period: curve classes pairing nonnegatively
/// with the nef cone and with every variable class.
struct CurveClassCone {
  HalfspaceSystem system{0};
  IntVec degree;  // (-K - X), must be positive on nonzero rays
  ConeV cone;

  bool contains(const IntVec& l) const { return system.contains(l); }
};

inline CurveClassCone lambda_cone(const CoxPresentation& cox, const std::vector<IntVec>& nef_generators,
                                  const IntVec& hypersurface_class) {
  const std::size_t r = cox.class_rank();
  CurveClassCone out;
  out.system = HalfspaceSystem(r);
  for (const auto& g : nef_generators) out.system.add(g, BigInt(0));
  for (std::size_t j = 0; j < cox.size(); ++j) out.system.add(cox.variable_class(j), BigInt(0));
  out.degree = cox.anticanonical_class() - hypersurface_class;
  out.cone = dual_cone(out.system);
  if (!out.cone.lineality.empty())
    throw Error(ErrorKind::Unbounded, "curve class cone contains a line");
  for (const auto& ray : out.cone.rays)
    if (sgn(dot(out.degree, ray)) <= 0)
      throw Error(ErrorKind::Unbounded, "degree functional is not positive on ray " + to_string(ray));
  return out;
}

struct QuantumTerm {
  IntVec l;
  BigInt degree;
  BigRat coefficient;
};

struct QuantumPeriod {
  RatSeries G{0};
  RatSeries regularized{0};
  std::vector<QuantumTerm> terms;  // lexicographic in l
};

/// G = sum over l in Lambda with deg l <= D of (X.l)! / prod_rho (D_rho.l)! t^{deg l}.
inline QuantumPeriod quantum_period(const CoxPresentation& cox, const CurveClassCone& lambda,
                                    const IntVec& hypersurface_class, long order,
                                    const ProgressCallback& progress = {}) {
  if (order < 0) throw Error(ErrorKind::InvalidInput, "truncation order must be nonnegative");
  HalfspaceSystem truncated = lambda.system;
  truncated.add(-lambda.degree, BigInt(-order));

  QuantumPeriod out;
  out.G = RatSeries(static_cast<std::size_t>(order));
  for (const auto& l : integer_points(truncated, progress)) {
    BigInt x = dot(hypersurface_class, l);
    if (sgn(x) < 0) throw Error(ErrorKind::NegativeFactorial, "hypersurface degree negative at " + to_string(l));
    BigRat term(factorial(x.get_ui()));
    for (std::size_t j = 0; j < cox.size(); ++j) {
      BigInt dj = dot(cox.variable_class(j), l);
      if (sgn(dj) < 0) throw Error(ErrorKind::NegativeFactorial, "divisor degree negative at " + to_string(l));
      term /= BigRat(factorial(dj.get_ui()));
    }
    BigInt deg = dot(lambda.degree, l);
    if (sgn(deg) < 0 || deg > order || (sgn(deg) == 0 && !l.is_zero()))
      throw Error(ErrorKind::InvalidInput, "degree functional out of range at " + to_string(l));
    out.G[deg.get_ui()] += term;
    out.terms.push_back({l, deg, term});
  }
  out.regularized = regularize(out.G);
  return out;
}

inline QuantumPeriod quantum_period(const CoxPresentation& cox, const IntVec& hypersurface_class, long order) {
  auto mn = mori_and_nef(cox);
  auto lambda = lambda_cone(cox, mn.nef.rays, hypersurface_class);
  return quantum_period(cox, lambda, hypersurface_class, order);
}

}  // namespace torickit
