#include <random>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <gtest/gtest.h>

#include "tropcount/field_scalar.hpp"
#include "tropcount/matrix.hpp"
#include "tropcount/normal_form.hpp"
#include "tropcount/oracles.hpp"

using namespace tropcount;

namespace {

IntMatrix M(std::initializer_list<std::initializer_list<long long>> rows) {
  IntMatrix m(rows.size(), rows.begin()->size(), Int(0));
  std::size_t i = 0;
  for (const auto &r : rows) {
    std::size_t j = 0;
    for (auto v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

FieldScalar sq(long long a, long long b, std::int64_t D) { return FieldScalar(Rational(a), Rational(b), D); }

IntMatrix random_unimodular(std::mt19937_64 &rng, std::size_t g) {
  IntMatrix U = int_identity(g);
  std::uniform_int_distribution<int> idx(0, static_cast<int>(g) - 1), k(-3, 3);
  for (int s = 0; s < 8; ++s) {
    auto i = static_cast<std::size_t>(idx(rng)), j = static_cast<std::size_t>(idx(rng));
    if (i == j) continue;
    Int c = k(rng);
    for (std::size_t col = 0; col < g; ++col) U(i, col) += c * U(j, col);
    if (s % 3 == 0) U.swap_rows(i, j);
  }
  return U;
}

bool is_hnf(const IntMatrix &H) {
  for (std::size_t i = 0; i < H.rows(); ++i) {
    if (H(i, i) <= 0) return false;
    for (std::size_t j = 0; j < H.cols(); ++j) {
      if (j < i && H(i, j) != 0) return false;
      if (j > i && (H(i, j) < 0 || H(i, j) >= H(i, i))) return false;
    }
  }
  return true;
}

} // namespace

TEST(Snf, SmallExamples) {
  EXPECT_EQ(snf(int_identity(3)).S, int_identity(3));
  EXPECT_EQ(snf(M({{2, 0}, {0, 4}})).S, M({{2, 0}, {0, 4}}));
  EXPECT_EQ(snf(M({{2, 1}, {0, 2}})).S, M({{1, 0}, {0, 4}}));
}

TEST(Snf, TransformsAndChainOnRandomMatrices) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> e(-20, 20), dim(1, 4);
  for (int k = 0; k < 300; ++k) {
    auto r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
    IntMatrix a(r, c, Int(0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = e(rng);
    auto s = snf(a);
    ASSERT_EQ(s.U * a * s.V, s.S);
    EXPECT_EQ(abs_int(determinant(s.U)), 1);
    EXPECT_EQ(abs_int(determinant(s.V)), 1);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) {
          EXPECT_EQ(s.S(i, j), 0);
        }
    const std::size_t m = std::min(r, c);
    for (std::size_t i = 0; i < m; ++i) {
      EXPECT_GE(s.S(i, i), 0);
      if (i + 1 < m && s.S(i, i) != 0) {
        EXPECT_EQ(s.S(i + 1, i + 1) % s.S(i, i), 0);
      }
    }
    EXPECT_EQ(snf(s.S).S, s.S);
  }
}

TEST(Hnf, Examples) {
  EXPECT_EQ(hnf(int_identity(2)), int_identity(2));
  EXPECT_EQ(hnf(M({{2, 0}, {0, 1}})), M({{2, 0}, {0, 1}}));
  IntMatrix h = hnf(M({{1, 1}, {1, 3}}));
  EXPECT_TRUE(is_hnf(h));
  EXPECT_EQ(determinant(h), 2);
  EXPECT_EQ(h, M({{2, 1}, {0, 1}}));
  EXPECT_THROW(hnf(M({{1, 2}, {2, 4}})), Error);
}

TEST(Hnf, UnimodularInvarianceAndIdempotence) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> e(-9, 9), dim(1, 4);
  for (int k = 0; k < 300; ++k) {
    auto g = static_cast<std::size_t>(dim(rng));
    IntMatrix a(g, g, Int(0));
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < g; ++j) a(i, j) = e(rng);
    if (determinant(a) == 0) continue;
    IntMatrix h = hnf(a);
    ASSERT_TRUE(is_hnf(h));
    EXPECT_EQ(hnf(h), h);
    EXPECT_EQ(hnf(a * random_unimodular(rng, g)), h);
    EXPECT_EQ(abs_int(determinant(h)), abs_int(determinant(a)));
    // same lattice: each is an integral combination of the other
    EXPECT_TRUE(is_integral(rational_inverse(h) * to_rational(a)));
    EXPECT_TRUE(is_integral(rational_inverse(a) * to_rational(h)));
  }
}

TEST(Adjugate, Examples) {
  EXPECT_EQ(adjugate(M({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}})), M({{15, 0, 0}, {0, 10, 0}, {0, 0, 6}}));
  EXPECT_EQ(adjugate(int_identity(3)), int_identity(3));
}

TEST(Adjugate, MatchesCofactorExpansion) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> e(-12, 12);
  for (std::size_t n = 1; n <= 4; ++n)
    for (int k = 0; k < 100; ++k) {
      IntMatrix a(n, n, Int(0));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = e(rng);
      Int d = oracle::laplace_determinant(a);
      ASSERT_EQ(determinant(a), d);
      EXPECT_EQ(a * adjugate(a), int_identity(n).scaled(d));
      EXPECT_EQ(adjugate(a) * a, int_identity(n).scaled(d));
    }
}

TEST(Cokernel, Invariants) {
  EXPECT_EQ(cokernel_invariants(M({{1, 0}, {0, 3}})), (AbelianType{1, 3}));
  EXPECT_EQ(cokernel_invariants(M({{2, 1}, {1, 2}})), (AbelianType{1, 3}));
  EXPECT_EQ(cokernel_invariants(M({{2, 0}, {0, 3}})), (AbelianType{1, 6}));
  EXPECT_THROW(cokernel_invariants(M({{1, 1}, {1, 1}})), Error);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> e(-6, 6);
  for (int k = 0; k < 100; ++k) {
    IntMatrix a(3, 3, Int(0));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) a(i, j) = e(rng);
    if (determinant(a) == 0) continue;
    EXPECT_EQ(cokernel_invariants(a).order(), abs_int(determinant(a)));
  }
}

TEST(PositiveDefinite, Examples) {
  EXPECT_TRUE(is_positive_definite(field_identity(3, 0)));
  FieldMatrix bad{{sq(1, 0, 2), sq(0, 1, 2)}, {sq(0, 1, 2), sq(1, 0, 2)}};
  EXPECT_FALSE(is_positive_definite(bad));
  FieldMatrix good{{sq(1, 0, 2), sq(0, 1, 2)}, {sq(0, 1, 2), sq(3, 0, 2)}};
  EXPECT_TRUE(is_positive_definite(good));
  FieldMatrix asym{{sq(1, 0, 0), sq(1, 0, 0)}, {sq(0, 0, 0), sq(1, 0, 0)}};
  EXPECT_THROW(is_positive_definite(asym), Error);
}

TEST(FieldScalar, SignAgreesWithHighPrecision) {
  using big = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<80>>;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long long> num(-1'000'000, 1'000'000), den(1, 1000);
  const std::int64_t discs[] = {2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 21, 22, 23, 29, 30, 31, 10007};
  std::uniform_int_distribution<std::size_t> pick(0, std::size(discs) - 1);
  for (int k = 0; k < 10'000; ++k) {
    std::int64_t D = discs[pick(rng)];
    Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    if (k % 4 == 0) {
      // near-cancellation: a close to -b sqrt(D)
      big approx = -big(boost::multiprecision::numerator(b)) / big(boost::multiprecision::denominator(b)) * sqrt(big(D));
      a = Rational(Int(approx * 1000), 1000);
    }
    FieldScalar x(a, b, D);
    big v = big(boost::multiprecision::numerator(a)) / big(boost::multiprecision::denominator(a)) +
            big(boost::multiprecision::numerator(b)) / big(boost::multiprecision::denominator(b)) * sqrt(big(D));
    int expect = v > 0 ? 1 : (v < 0 ? -1 : 0);
    ASSERT_EQ(x.sign(), expect) << x.str();
  }
}

TEST(FieldScalar, ArithmeticAndCanonicalForm) {
  FieldScalar r2(0, 1, 2);
  EXPECT_EQ(r2 * r2, FieldScalar(2, 2));
  FieldScalar x(Rational(3), Rational(2), 2);
  EXPECT_EQ(x * x.inverse(), FieldScalar(1, 2));
  EXPECT_EQ(x.norm(), Rational(1));
  EXPECT_THROW(FieldScalar(Rational(1), Rational(1), 4), Error);
  EXPECT_THROW(FieldScalar(Rational(1), Rational(1), 1), Error);
  EXPECT_THROW(FieldScalar(1, 2) + FieldScalar(1, 3), Error);
  EXPECT_EQ(FieldScalar(Rational(4, 6), 0).rat(), Rational(2, 3));
  EXPECT_EQ(parse_rational("4/-6"), Rational(-2, 3));
}

TEST(FieldMatrix, InverseOverQuadraticField) {
  FieldMatrix J{{sq(1, 0, 2), sq(0, 1, 2)}, {sq(0, 1, 2), sq(3, 0, 2)}};
  EXPECT_EQ(J * inverse(J), field_identity(2, 2));
  EXPECT_EQ(determinant(J), FieldScalar(1, 2));
}
