#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

using namespace torickit;
using fixtures::v;

TEST(Primitive, DividesByGcd) {
  EXPECT_EQ(primitive(v({2, 4})), v({1, 2}));
  EXPECT_EQ(primitive(v({1, -2})), v({1, -2}));
  EXPECT_EQ(primitive(v({-4, 6, -2})), v({-2, 3, -1}));
  EXPECT_EQ(oracle::gcd_list({-2, 3, -1}), 1);
}

TEST(Primitive, ZeroVectorThrows) {
  try {
    primitive(v({0, 0}));
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroVector);
  }
}

TEST(Hnf, IdentityAndDiagonal) {
  auto h = hnf(IntMat::identity(3));
  EXPECT_EQ(h.H, IntMat::identity(3));
  EXPECT_EQ(h.U, IntMat::identity(3));
  auto d = hnf(make_int_mat({{2, 0}, {0, 3}}));
  EXPECT_EQ(d.H, make_int_mat({{2, 0}, {0, 3}}));
  EXPECT_EQ(d.U, IntMat::identity(2));
}

TEST(Hnf, HexagonWeightsAgreeWithOracle) {
  const IntMat& w = fixtures::expected_weights();
  auto h = hnf(w);
  EXPECT_EQ(h.H, oracle::hnf_naive(w));
  EXPECT_EQ(h.U * w, h.H);
  EXPECT_TRUE(is_row_hnf(h.H));
  EXPECT_EQ(abs(oracle::det_laplace(h.U)), 1);
}

TEST(Snf, Diagonal23) {
  auto s = snf(make_int_mat({{2, 0}, {0, 3}}));
  EXPECT_EQ(s.S, make_int_mat({{1, 0}, {0, 6}}));
}

TEST(Snf, HalfCone) {
  // columns (-1,-1,2), (1,0,0), (0,1,0)
  auto s = snf(make_int_mat({{-1, 1, 0}, {-1, 0, 1}, {2, 0, 0}}));
  EXPECT_EQ(s.invariant_factors(), (std::vector<BigInt>{1, 1, 2}));
}

TEST(Snf, Random4x3) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    IntMat m = props::random_matrix(rng, 4, 3, -9, 9);
    auto s = snf(m);
    EXPECT_EQ(s.U * m * s.V, s.S);
    EXPECT_TRUE(props::is_diagonal_chain(s.S));
  }
}

TEST(DualCone, Orthant) {
  HalfspaceSystem hs(2);
  hs.add(v({1, 0}), BigInt(0)).add(v({0, 1}), BigInt(0));
  auto c = dual_cone(hs);
  EXPECT_EQ(c.rays, (std::vector<IntVec>{v({0, 1}), v({1, 0})}));
  EXPECT_TRUE(c.pointed());
}

TEST(DualCone, HandDualization) {
  HalfspaceSystem hs(2);
  hs.add(v({1, 1}), BigInt(0)).add(v({1, -1}), BigInt(0));
  auto c = dual_cone(hs);
  std::set<IntVec> got(c.rays.begin(), c.rays.end());
  EXPECT_EQ(got, (std::set<IntVec>{v({1, 1}), v({1, -1})}));
}

TEST(DualCone, HalfPlaneHasLineality) {
  HalfspaceSystem hs(2);
  hs.add(v({1, 0}), BigInt(0));
  auto c = dual_cone(hs);
  EXPECT_FALSE(c.pointed());
}

namespace {
HalfspaceSystem unit_square() {
  HalfspaceSystem hs(2);
  hs.add(v({1, 0}), BigInt(0)).add(v({0, 1}), BigInt(0)).add(v({-1, 0}), BigInt(-1)).add(v({0, -1}), BigInt(-1));
  return hs;
}

HalfspaceSystem truncated_lambda(long degree) {
  HalfspaceSystem hs(3);
  for (const auto& r : {v({1, 3, 3}), v({4, 9, 9}), v({5, 9, 15}), v({5, 15, 9}), v({0, 0, 1}), v({0, 1, 0}),
                        v({1, 3, 1}), v({1, 1, 3}), v({1, 0, 6}), v({1, 6, 0})})
    hs.add(r, BigInt(0));
  hs.add(v({-2, -5, -5}), BigInt(-degree));
  return hs;
}
}  // namespace

TEST(Vertices, UnitSquare) { EXPECT_EQ(vertices(unit_square()).size(), 4u); }

TEST(Vertices, HexagonQSHasEightVertices) {
  auto qs = build_QS(fixtures::scaffolding_input().scaffolding);
  auto got = vertices(qs);
  EXPECT_EQ(got.size(), 8u);
  EXPECT_EQ(got, oracle::vertices_cramer(qs));
}

TEST(Vertices, UnboundedThrows) {
  HalfspaceSystem hs(2);
  hs.add(v({1, 0}), BigInt(0)).add(v({0, 1}), BigInt(0));
  try {
    vertices(hs);
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Unbounded);
  }
}

TEST(IntegerPoints, UnitSquare) {
  EXPECT_EQ(integer_points(unit_square()), (std::vector<IntVec>{v({0, 0}), v({0, 1}), v({1, 0}), v({1, 1})}));
}

TEST(IntegerPoints, LambdaDegreeTwo) {
  auto hs = truncated_lambda(2);
  auto pts = integer_points(hs);
  EXPECT_EQ(pts, (std::vector<IntVec>{v({-4, 1, 1}), v({0, 0, 0}), v({1, 0, 0})}));
  EXPECT_EQ(pts, oracle::integer_points_box(hs, 6));
}

TEST(IntegerPoints, Empty) {
  HalfspaceSystem hs(2);
  hs.add(v({1, 0}), BigInt(1)).add(v({-1, 0}), BigInt(0)).add(v({0, 1}), BigInt(0)).add(v({0, -1}), BigInt(0));
  EXPECT_TRUE(integer_points(hs).empty());
}

TEST(Properties, NormalForms) {
  auto o = props::normal_forms(200);
  EXPECT_TRUE(o.ok()) << o.first_failure;
}

TEST(Properties, DualConeInvolution) {
  auto o = props::dual_cone_involution(50);
  EXPECT_TRUE(o.ok()) << o.first_failure;
}

TEST(Properties, LatticePointsAgainstBoxScan) {
  auto o = props::lattice_points(50);
  EXPECT_TRUE(o.ok()) << o.first_failure;
}
