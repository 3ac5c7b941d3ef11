#include <gtest/gtest.h>

#include "tropcount/identities.hpp"

using namespace tropcount;

TEST(Sigma, Examples) {
  EXPECT_EQ(sigma(1, Int(1)), 1);
  EXPECT_EQ(sigma(1, Int(6)), 12);
  EXPECT_EQ(sigma(1, Int(50)), 93);
  EXPECT_EQ(sigma(0, Int(12)), 6);
  EXPECT_EQ(sigma(2, Int(4)), 21);
}

TEST(Sigma, MultiplicativeAndPrimes) {
  for (std::uint64_t a = 1; a < 60; ++a)
    for (std::uint64_t b = 1; b < 60; ++b)
      if (std::gcd(a, b) == 1) {
        ASSERT_EQ(sigma(1, Int(a * b)), sigma(1, Int(a)) * sigma(1, Int(b)));
      }
  for (std::uint64_t p : {2, 3, 5, 7, 11, 101, 1009}) EXPECT_EQ(sigma(1, Int(p)), Int(p + 1));
}

TEST(Identities, SigmaIdentity) {
  auto r = check_sigma_identity(500);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.cases.size(), 500u);
  EXPECT_EQ(r.cases[2].lhs, 4);
  EXPECT_EQ(r.cases[11].lhs, 28);
  EXPECT_FALSE(r.first_failure());
}

TEST(Identities, PrimeTimesPrimeNIdentity) {
  auto r = check_p_pn_identity({2, 3, 5, 7, 11}, 60);
  EXPECT_TRUE(r.pass) << (r.first_failure() ? r.first_failure()->input : "");
  EXPECT_EQ(r.cases.size(), 300u);
  auto small = check_p_pn_identity({5}, 2);
  EXPECT_EQ(small.cases[1].lhs, 468);
  EXPECT_EQ(small.cases[1].rhs, 93 + 375);
  auto three = check_p_pn_identity({3}, 3);
  EXPECT_EQ(three.cases[2].lhs, 148);
  EXPECT_THROW(check_p_pn_identity({4}, 3), Error);
}

TEST(Identities, Multiplicativity) {
  auto r = check_multiplicativity(1, 200);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.cases.size(), 200u);
  EXPECT_EQ(nu({6, 6}), nu({2, 2}) * nu({3, 3}));
  EXPECT_EQ(nu({6, 12}), nu({2, 4}) * nu({3, 3}));
  EXPECT_EQ(nu({6, 12}), 1560);
  EXPECT_EQ(nu({5, 10}), nu({5, 5}) * nu({1, 2}));
}

TEST(Identities, FailingCaseIsReported) {
  IdentityReport r{"x", "y", {}, true};
  r.add("a", 1, 1);
  r.add("b", 2, 3);
  r.add("c", 4, 5);
  EXPECT_FALSE(r.pass);
  ASSERT_TRUE(r.first_failure());
  EXPECT_EQ(r.first_failure()->input, "b");
}

TEST(Eisenstein, CoefficientsMatchSigma) {
  auto c = eisenstein_e2_coefficients(10'000);
  ASSERT_EQ(c.size(), 10'001u);
  EXPECT_EQ(c[0], Rational(-1, 24));
  for (std::size_t n = 1; n <= 10'000; ++n) ASSERT_EQ(c[n], Rational(sigma(1, Int(n)))) << n;
}
