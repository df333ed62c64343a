#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <map>
#include <random>
#include <set>

#include "test_util.hpp"
#include "toricmirror/fixtures.hpp"
#include "toricmirror/toric_data.hpp"

using namespace toricmirror;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<QMonomial> monos(std::initializer_list<std::vector<Int>> rows) {
  std::vector<QMonomial> out;
  for (const auto& r : rows) out.emplace_back(r);
  return out;
}

std::set<RationalPoint> as_set(const std::vector<RationalPoint>& v) { return {v.begin(), v.end()}; }

RationalPoint pt(std::initializer_list<long> xs) {
  RationalPoint p;
  for (auto x : xs) p.emplace_back(x);
  return p;
}

}  // namespace

TEST(BuildToricData, P2Defaults) {
  const ToricFanoData p2 = build_toric_data({{1, 0}, {0, 1}, {-1, -1}});
  EXPECT_EQ(p2.n(), 2u);
  EXPECT_EQ(p2.d(), 3u);
  EXPECT_EQ(p2.l(), 1u);
  EXPECT_EQ(p2.kbasis(), IntMatrix::from_columns({{1, 1, 1}}, 3));
  EXPECT_EQ(p2.lambda_monomials(), monos({{0}, {0}, {1}}));
}

TEST(BuildToricData, P1xP1ExampleOrder) {
  const ToricFanoData d = build_toric_data({{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
  EXPECT_EQ(d.kbasis(), IntMatrix::from_columns({{1, 1, 0, 0}, {0, 0, 1, 1}}, 4));
  // (1,0) and (0,1) carry 1, the opposite rays carry q1 and q2
  EXPECT_EQ(d.lambda_monomials(), monos({{0, 0}, {1, 0}, {0, 0}, {0, 1}}));
}

TEST(BuildToricData, BlP2ReferenceBasis) {
  const ToricFanoData d = build_toric_data({{1, 0}, {0, 1}, {-1, -1}, {0, -1}}, std::nullopt,
                                           IntMatrix::from_columns({{1, 0, 1, -1}, {0, 1, 0, 1}}, 4));
  EXPECT_EQ(d.lambda_monomials(), monos({{0, 0}, {0, 0}, {1, 1}, {0, 1}}));
  EXPECT_EQ(make_fixture("BlP2").lambda_monomials(), d.lambda_monomials());
}

TEST(BuildToricData, BlP2DefaultBasis) {
  const ToricFanoData d = build_toric_data({{1, 0}, {0, 1}, {-1, -1}, {0, -1}});
  EXPECT_EQ(d.kbasis(), IntMatrix::from_columns({{1, 1, 1, 0}, {0, 1, 0, 1}}, 4));
  EXPECT_EQ(d.lambda_monomials(), monos({{0, 0}, {0, 0}, {1, 0}, {0, 1}}));
}

TEST(BuildToricData, BasisFromLambda) {
  // the fixture monomials alone determine the fixture basis
  const ToricFanoData d =
      build_toric_data({{1, 0}, {0, 1}, {-1, -1}, {0, -1}}, monos({{0, 0}, {0, 0}, {1, 1}, {0, 1}}));
  EXPECT_EQ(d.kbasis(), IntMatrix::from_columns({{1, 0, 1, -1}, {0, 1, 0, 1}}, 4));
}

TEST(BuildToricData, InvariantsOnFixtures) {
  for (const auto& name : fixture_names()) {
    const ToricFanoData d = make_fixture(name);
    for (std::size_t a = 0; a < d.l(); ++a) {
      std::vector<Int> k = d.kbasis().column(a);
      EXPECT_TRUE(d.boundary(k).is_zero()) << name;
      QMonomial prod = QMonomial::one(d.l());
      for (std::size_t i = 0; i < d.d(); ++i) prod *= d.lambda_monomial(i).pow(k[i]);
      EXPECT_EQ(prod, QMonomial::generator(d.l(), a)) << name;
    }
  }
}

TEST(BuildToricData, Errors) {
  EXPECT_ERROR_CODE(build_toric_data({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}), ErrorCode::NonSpanningRays);
  EXPECT_ERROR_CODE(build_toric_data({{2, 0}, {0, 1}, {-1, -1}}), ErrorCode::NonPrimitiveRay);
  EXPECT_ERROR_CODE(build_toric_data({{0, 0}, {1, 0}, {0, 1}, {-1, -1}}), ErrorCode::NonPrimitiveRay);
  EXPECT_ERROR_CODE(build_toric_data({{1, 0}, {0, 1}, {-1, -1}}, monos({{1}, {1}, {0}}),
                                     IntMatrix::from_columns({{1, 1, 1}}, 3)),
                    ErrorCode::InconsistentLambda);
  EXPECT_ERROR_CODE(build_toric_data({{1, 0}, {0, 1}, {-1, -1}}, std::nullopt, IntMatrix::from_columns({{1, 1, 0}}, 3)),
                    ErrorCode::BasisNotKernel);
  EXPECT_ERROR_CODE(build_toric_data({{1, 0}, {0, 1}, {-1, -1}}, std::nullopt, IntMatrix::from_columns({{2, 2, 2}}, 3)),
                    ErrorCode::BasisNotKernel);
}

TEST(BuildToricData, NumericLambdaConsistency) {
  // q = e^{-1} from lambda = (0, 0, -1)
  const ToricFanoData d = build_toric_data({{1, 0}, {0, 1}, {-1, -1}}, std::nullopt, std::nullopt,
                                           std::vector<double>{0.0, 0.0, -1.0});
  ASSERT_TRUE(d.lambda_numeric().has_value());
  EXPECT_ERROR_CODE(build_toric_data({{1, 0}, {0, 1}, {-1, -1}}, std::nullopt, std::nullopt,
                                     std::vector<double>{0.0, 0.0}),
                    ErrorCode::InvalidArgument);
}

TEST(KahlerParams, Examples) {
  const ToricFanoData p2 = make_fixture("P2");
  EXPECT_NEAR(kahler_params(p2, {0, 0, -1})[0], std::exp(-1.0), 1e-15);
  const ToricFanoData blp2 = make_fixture("BlP2");
  const double t1 = 0.5, t2 = 1.5;
  const auto q = kahler_params(blp2, {0, 0, -(t1 + t2), -t2});
  EXPECT_NEAR(q[0], std::exp(-t1), 1e-15);
  EXPECT_NEAR(q[1], std::exp(-t2), 1e-15);
  for (const auto& name : fixture_names()) {
    const ToricFanoData d = make_fixture(name);
    for (double qa : kahler_params(d, std::vector<double>(d.d(), 0.0))) EXPECT_EQ(qa, 1.0);
  }
}

TEST(KahlerParams, RoundTripWithLambdaFromQ) {
  for (const auto& name : fixture_names()) {
    const ToricFanoData d = make_fixture(name);
    std::vector<double> q;
    for (std::size_t a = 0; a < d.l(); ++a) q.push_back(0.3 + 0.2 * static_cast<double>(a));
    const auto back = kahler_params(d, lambda_from_q(d, q));
    for (std::size_t a = 0; a < d.l(); ++a) EXPECT_NEAR(back[a], q[a], 1e-14) << name;
  }
}

TEST(PolytopeVertices, WorkedValues) {
  const ToricFanoData p2 = make_fixture("P2");
  EXPECT_EQ(as_set(polytope_vertices(p2, {0, 0, -1})), (std::set<RationalPoint>{pt({0, 0}), pt({1, 0}), pt({0, 1})}));

  const ToricFanoData p1p1 = make_fixture("P1xP1");
  EXPECT_EQ(as_set(polytope_vertices(p1p1, lambda_from_q(p1p1, {std::exp(-1.0), std::exp(-1.0)}))),
            (std::set<RationalPoint>{pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})}));

  const ToricFanoData blp2 = make_fixture("BlP2");
  const auto trap = polytope_vertices(blp2, {0, 0, -2, -1});
  EXPECT_EQ(as_set(trap), (std::set<RationalPoint>{pt({0, 0}), pt({2, 0}), pt({0, 1}), pt({1, 1})}));
}

TEST(PolytopeVertices, CountsAtAnticanonical) {
  const std::map<std::string, std::size_t> expected{{"P2", 3}, {"P1xP1", 4}, {"P1xP2", 6}, {"P2xP2", 9}, {"BlP2", 4}};
  for (const auto& [name, count] : expected) {
    const ToricFanoData d = make_fixture(name);
    EXPECT_EQ(polytope_vertices(d, anticanonical_lambda(d)).size(), count) << name;
  }
}

TEST(PolytopeVertices, Errors) {
  const ToricFanoData half_plane = build_toric_data({{1, 0}, {0, 1}, {-1, 0}});
  EXPECT_ERROR_CODE(polytope_vertices(half_plane, {-1, -1, -1}), ErrorCode::UnboundedPolytope);
  // q = 1 collapses the simplex to a point
  EXPECT_ERROR_CODE(polytope_vertices(make_fixture("P2"), {0, 0, 0}), ErrorCode::DegeneratePolytope);
}

TEST(PolytopeVertices, TranslationInvariance) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> shift(-3, 3);
  for (const auto& name : fixture_names()) {
    const ToricFanoData d = make_fixture(name);
    const auto lambda = anticanonical_lambda(d);
    const auto base = as_set(polytope_vertices(d, lambda));
    for (int trial = 0; trial < 5; ++trial) {
      LatticePoint m = LatticePoint::zero(d.n());
      for (std::size_t j = 0; j < d.n(); ++j) m[j] = shift(rng);
      std::vector<double> moved = lambda;
      for (std::size_t i = 0; i < d.d(); ++i) moved[i] += static_cast<double>(dot(m, d.ray(i)));
      std::set<RationalPoint> expected;
      for (auto p : base) {
        for (std::size_t j = 0; j < d.n(); ++j) p[j] += static_cast<long>(m[j]);
        expected.insert(p);
      }
      EXPECT_EQ(as_set(polytope_vertices(d, moved)), expected) << name;
    }
  }
}

TEST(DiscArea, WorkedValues) {
  const ToricFanoData p2 = make_fixture("P2");
  const std::vector<double> lambda{0, 0, -1};
  EXPECT_NEAR(disc_area(p2, {0.25, 0.25}, 0, lambda), kPi / 2, 1e-14);
  EXPECT_NEAR(disc_area(p2, {0.25, 0.25}, 2, lambda), kPi, 1e-14);
  EXPECT_ERROR_CODE(disc_area(p2, {0.0, 0.25}, 0, lambda), ErrorCode::PointOutsidePolytope);
  EXPECT_ERROR_CODE(disc_area(p2, {0.25, 0.25}, 3, lambda), ErrorCode::IndexOutOfRange);
}

TEST(DiscArea, PositiveAndAffineInX) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.05, 0.45);
  const ToricFanoData p2 = make_fixture("P2");
  const std::vector<double> lambda{0, 0, -1};
  for (int trial = 0; trial < 50; ++trial) {
    const std::vector<double> x{u(rng), u(rng)}, y{u(rng), u(rng)};
    const std::vector<double> mid{(x[0] + y[0]) / 2, (x[1] + y[1]) / 2};
    for (std::size_t i = 0; i < 3; ++i) {
      const double ax = disc_area(p2, x, i, lambda), ay = disc_area(p2, y, i, lambda);
      EXPECT_GT(ax, 0.0);
      EXPECT_NEAR(disc_area(p2, mid, i, lambda), (ax + ay) / 2, 1e-12);
    }
  }
}

TEST(Fixtures, RegistryAndProducts) {
  EXPECT_EQ(fixture_names(), (std::vector<std::string>{"P2", "P1xP1", "P1xP2", "P2xP2", "BlP2"}));
  EXPECT_ERROR_CODE(make_fixture("P3"), ErrorCode::UnknownFixture);
  const ToricFanoData p1p2 = make_fixture("P1xP2");
  EXPECT_EQ(p1p2.n(), 3u);
  EXPECT_EQ(p1p2.d(), 5u);
  EXPECT_EQ(p1p2.l(), 2u);
  EXPECT_EQ(make_projective_product({1, 2}).rays(), p1p2.rays());
}

TEST(BoundaryPreimage, HitsTarget) {
  for (const auto& name : fixture_names()) {
    const ToricFanoData d = make_fixture(name);
    LatticePoint target = LatticePoint::zero(d.n());
    for (std::size_t j = 0; j < d.n(); ++j) target[j] = static_cast<Int>(j) * 3 - 2;
    EXPECT_EQ(d.boundary(boundary_preimage(d.rays(), target)), target) << name;
  }
}
