#include <random>

#include <gtest/gtest.h>

#include "tropcount/oracles.hpp"
#include "tropcount/theta_skeleton.hpp"
#include "tropcount/verify.hpp"

using namespace tropcount;

namespace {

FieldScalar q(long long a, long long b = 1) { return FieldScalar(Rational(a, b), 0); }

FieldMatrix F2(long long a, long long b, long long d) { return FieldMatrix{{q(a), q(b)}, {q(b), q(d)}}; }

std::vector<FieldScalar> params(long long a, long long b, long long c) { return {q(a), q(b), q(c)}; }

std::vector<FieldScalar> random_point(std::mt19937_64 &rng, std::size_t g) {
  std::uniform_int_distribution<int> num(-8, 8), den(1, 5);
  std::vector<FieldScalar> x;
  for (std::size_t i = 0; i < g; ++i) x.push_back(q(num(rng), den(rng)));
  return x;
}

} // namespace

TEST(Selling, Examples) {
  auto a2 = selling_reduce(F2(2, -1, 2));
  EXPECT_EQ(a2.params, params(1, 1, 1));
  EXPECT_EQ(a2.U, int_identity(2));
  EXPECT_EQ(selling_reduce(F2(1, 0, 1)).params, params(1, 1, 0));
  auto acute = selling_reduce(F2(2, 1, 2));
  EXPECT_EQ(selling_multiset(acute), params(1, 1, 1));
  EXPECT_TRUE(forms_congruent(F2(2, 1, 2), F2(2, -1, 2)));
  EXPECT_FALSE(forms_congruent(F2(2, 1, 2), F2(1, 0, 1)));
  EXPECT_THROW(selling_reduce(F2(1, 2, 1)), Error);
  EXPECT_THROW(selling_reduce(FieldMatrix{{q(1)}}), Error);
}

TEST(Selling, ReducedAndReconstructs) {
  std::mt19937_64 rng(41);
  for (std::size_t g : {2u, 3u})
    for (int k = 0; k < 100; ++k) {
      FieldMatrix Q = to_field(gen::pd_form(rng, g), 0);
      auto s = selling_reduce(Q);
      for (const auto &p : s.params) EXPECT_GE(p.sign(), 0);
      EXPECT_EQ(abs_int(determinant(s.U)), 1);
      FieldMatrix UF = to_field(s.U, 0);
      EXPECT_EQ(UF.transpose() * Q * UF, selling_reconstruct(s));
    }
}

TEST(Selling, QuadraticEntries) {
  FieldMatrix Q{{FieldScalar(Rational(3), Rational(0), 2), FieldScalar(Rational(0), Rational(1), 2)},
                {FieldScalar(Rational(0), Rational(1), 2), FieldScalar(Rational(3), Rational(0), 2)}};
  auto s = selling_reduce(Q);
  for (const auto &p : s.params) EXPECT_GE(p.sign(), 0);
  EXPECT_EQ(to_field(s.U, 2).transpose() * Q * to_field(s.U, 2), selling_reconstruct(s));
}

TEST(Selling, CongruenceOnVoronoiBoundary) {
  std::mt19937_64 rng(71);
  FieldMatrix Q{{q(2), q(0), q(0)}, {q(0), q(3), q(-1)}, {q(0), q(-1), q(5)}};
  ASSERT_TRUE(detail::has_zero_param(selling_reduce(Q)));
  for (int k = 0; k < 30; ++k) {
    FieldMatrix U = to_field(gen::unimodular(rng, 3), 0);
    EXPECT_TRUE(forms_congruent(Q, U.transpose() * Q * U));
  }
  FieldMatrix R{{q(2), q(0), q(0)}, {q(0), q(3), q(0)}, {q(0), q(0), q(5)}};
  EXPECT_FALSE(forms_congruent(Q, R));
}

TEST(Skeleton, Examples) {
  auto id = skeleton(F2(1, 0, 1));
  EXPECT_TRUE(id.degenerate);
  EXPECT_EQ(id.graph.vertices, 1u);
  EXPECT_EQ(genus(id.graph), 2u);

  auto a2 = skeleton(F2(2, -1, 2));
  EXPECT_FALSE(a2.degenerate);
  EXPECT_TRUE(graphs_isomorphic(a2.graph, theta_graph(q(1), q(1), q(1))));

  MetricGraph k4 = k4_graph(std::vector<FieldScalar>(6, q(1)));
  auto s = skeleton(jacobian_gram(k4));
  EXPECT_FALSE(s.degenerate);
  EXPECT_TRUE(graphs_isomorphic(s.graph, k4));
}

TEST(Skeleton, GraphToFormToGraph) {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> len(1, 12);
  for (int k = 0; k < 50; ++k) {
    MetricGraph t = theta_graph(q(len(rng)), q(len(rng)), q(len(rng)));
    EXPECT_TRUE(graphs_isomorphic(skeleton(jacobian_gram(t)).graph, t));
    std::vector<FieldScalar> l;
    for (int e = 0; e < 6; ++e) l.push_back(q(len(rng), 2));
    MetricGraph k4 = k4_graph(l);
    EXPECT_TRUE(graphs_isomorphic(skeleton(jacobian_gram(k4)).graph, k4));
  }
}

TEST(Skeleton, FormToGraphToForm) {
  std::mt19937_64 rng(47);
  for (std::size_t g : {2u, 3u})
    for (int k = 0; k < 50; ++k) {
      FieldMatrix Q = to_field(gen::pd_form(rng, g), 0);
      auto s = skeleton(Q);
      EXPECT_EQ(genus(s.graph), g);
      EXPECT_TRUE(same_selling_multiset(jacobian_gram(s.graph), Q));
      if (!s.degenerate) {
        EXPECT_TRUE(forms_congruent(jacobian_gram(s.graph), Q));
        EXPECT_TRUE(is_m_edge_connected(s.graph, 3));
      }
    }
}

TEST(Theta, ZeroAndOneDimensional) {
  EXPECT_EQ(theta_value(F2(2, -1, 2), {q(0), q(0)}), q(0));
  auto r = theta_evaluate(FieldMatrix{{q(3)}}, {q(1, 2)});
  EXPECT_EQ(r.value, q(0));
  EXPECT_EQ(r.maximizers, (std::vector<std::vector<Int>>{{Int(0)}, {Int(1)}}));
  // max over l of 3 l x - 3 l^2 / 2 at x = 2 is l = 2: 12 - 6
  EXPECT_EQ(theta_value(FieldMatrix{{q(3)}}, {q(2)}), q(6));
}

TEST(Theta, MatchesWideBox) {
  std::mt19937_64 rng(53);
  FieldMatrix a2 = F2(2, -1, 2);
  std::vector<Int> wide{Int(10), Int(10)};
  for (int k = 0; k < 100; ++k) {
    auto x = random_point(rng, 2);
    EXPECT_EQ(theta_value(a2, x), oracle::theta_box_max(a2, x, wide));
  }
  for (int k = 0; k < 40; ++k) {
    FieldMatrix Q = to_field(gen::pd_form(rng, 3), 0);
    auto x = random_point(rng, 3);
    auto box = ellipsoid_box(Q, q(16) * detail::quad(Q, x, x));
    EXPECT_EQ(theta_value(Q, x), oracle::theta_box_max(Q, x, box));
  }
}

TEST(Theta, QuasiPeriodicAndConvex) {
  std::mt19937_64 rng(59);
  FieldMatrix Q = F2(3, 1, 2);
  for (int k = 0; k < 60; ++k) {
    auto x = random_point(rng, 2);
    auto y = random_point(rng, 2);
    // Theta(x + mu) = Theta(x) + Q(mu, x) + Q(mu, mu) / 2 for integral mu
    std::vector<FieldScalar> mu{q(1), q(-2)};
    std::vector<FieldScalar> xm{x[0] + mu[0], x[1] + mu[1]};
    EXPECT_EQ(theta_value(Q, xm), theta_value(Q, x) + detail::quad(Q, mu, x) + detail::quad(Q, mu, mu) / q(2));
    std::vector<FieldScalar> mid{(x[0] + y[0]) / q(2), (x[1] + y[1]) / q(2)};
    EXPECT_LE((theta_value(Q, mid) * 2 - theta_value(Q, x) - theta_value(Q, y)).sign(), 0);
  }
}

TEST(GraphsIsomorphic, Examples) {
  EXPECT_TRUE(graphs_isomorphic(theta_graph(q(1), q(2), q(3)), theta_graph(q(3), q(1), q(2))));
  EXPECT_FALSE(graphs_isomorphic(theta_graph(q(1), q(2), q(3)), theta_graph(q(1), q(2), q(4))));
  MetricGraph relabelled{2, {{1, 0, q(2)}, {1, 0, q(1)}, {0, 1, q(3)}}};
  EXPECT_TRUE(graphs_isomorphic(relabelled, theta_graph(q(1), q(2), q(3))));
  MetricGraph big{9, {}};
  for (std::size_t v = 1; v < 9; ++v) big.edges.push_back({v - 1, v, q(1)});
  EXPECT_THROW(graphs_isomorphic(big, big), Error);
}

TEST(Suites, RoundtripAndTheta) {
  EXPECT_TRUE(verify_roundtrip().pass());
  EXPECT_TRUE(verify_theta().pass());
}
