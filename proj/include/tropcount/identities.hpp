#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tropcount/finite_abelian.hpp"
#include "tropcount/number_theory.hpp"

namespace tropcount {

struct IdentityCase {
  std::string input;
  Int lhs;
  Int rhs;
  bool pass = false;
};

/// Outcome of one identity sweep. `pass` holds iff every case passed.
struct IdentityReport {
  std::string name;
  std::string range;
  std::vector<IdentityCase> cases;
  bool pass = true;

  void add(std::string input, Int lhs, Int rhs) {
    bool ok = lhs == rhs;
    pass = pass && ok;
    cases.push_back({std::move(input), std::move(lhs), std::move(rhs), ok});
  }
  std::optional<IdentityCase> first_failure() const {
    for (const auto &c : cases)
      if (!c.pass) return c;
    return std::nullopt;
  }
};

/// nu(1, n) = sigma_1(n) for 1 <= n <= max_n.
inline IdentityReport check_sigma_identity(std::uint64_t max_n, std::uint64_t budget = default_budget()) {
  IdentityReport r{"nu(1,n) = sigma_1(n)", "1 <= n <= " + std::to_string(max_n), {}, true};
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    Int lhs = nu(AbelianType({Int(1), Int(n)}), NuMethod::Direct, budget);
    r.add("(1," + std::to_string(n) + ")", lhs, sigma(1, Int(n)));
  }
  return r;
}

/// nu(p, pn) = sigma_1(p^2 n) + p^3 sigma_1(n).
inline IdentityReport check_p_pn_identity(const std::vector<std::uint64_t> &primes, std::uint64_t max_n,
                                          std::uint64_t budget = default_budget()) {
  std::string plist;
  for (auto p : primes) {
    if (!is_prime(p)) raise(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
    plist += (plist.empty() ? "" : ",") + std::to_string(p);
  }
  IdentityReport r{"nu(p,pn) = sigma_1(p^2 n) + p^3 sigma_1(n)", "p in {" + plist + "}, 1 <= n <= " + std::to_string(max_n), {}, true};
  for (auto p : primes)
    for (std::uint64_t n = 1; n <= max_n; ++n) {
      Int P(p), N(n);
      Int lhs = nu(AbelianType({P, P * N}), NuMethod::Direct, budget);
      Int rhs = sigma(1, P * P * N) + P * P * P * sigma(1, N);
      r.add("(" + std::to_string(p) + "," + std::to_string(p * n) + ")", lhs, rhs);
    }
  return r;
}

namespace detail {

/// Random type of rank <= 3 supported on the given primes.
inline AbelianType random_type_on(std::mt19937_64 &rng, const std::vector<std::uint64_t> &primes) {
  std::vector<Int> f(3, Int(1));
  std::uniform_int_distribution<int> exp(0, 2);
  for (auto p : primes) {
    int e[3] = {exp(rng), exp(rng), exp(rng)};
    std::sort(e, e + 3);
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < e[i]; ++k) f[static_cast<std::size_t>(i)] *= p;
  }
  return AbelianType(std::move(f)).trimmed();
}

} // namespace detail

/// nu(G x G') = nu(G) nu(G') on seeded random coprime pairs with
/// |G| |G'| <= 10^4. Every side uses the direct subgroup sum.
inline IdentityReport check_multiplicativity(std::uint64_t seed, std::size_t cases,
                                             std::uint64_t budget = default_budget()) {
  IdentityReport r{"nu(G x G') = nu(G) nu(G') for coprime |G|, |G'|",
                   std::to_string(cases) + " seeded pairs (seed " + std::to_string(seed) + "), |G||G'| <= 10^4", {}, true};
  std::mt19937_64 rng(seed);
  const std::vector<std::uint64_t> pool = {2, 3, 5, 7, 11, 13};
  while (r.cases.size() < cases) {
    std::vector<std::uint64_t> left, right;
    std::uniform_int_distribution<int> side(0, 2);
    for (auto p : pool) {
      int s = side(rng);
      if (s == 0) left.push_back(p);
      else if (s == 1) right.push_back(p);
    }
    AbelianType a = detail::random_type_on(rng, left);
    AbelianType b = detail::random_type_on(rng, right);
    if (a.order() * b.order() > 10'000) continue;
    std::vector<Int> concat = a.factors();
    concat.insert(concat.end(), b.factors().begin(), b.factors().end());
    AbelianType combined = normalize_type(concat);
    Int lhs = nu(combined, NuMethod::Direct, budget);
    Int rhs = nu(a, NuMethod::Direct, budget) * nu(b, NuMethod::Direct, budget);
    r.add(a.str() + "x" + b.str(), lhs, rhs);
  }
  return r;
}

/// Coefficients c_0..c_n of E_2(q) = -1/24 + sum sigma_1(n) q^n, built by a
/// divisor sieve (independent of sigma()).
inline std::vector<Rational> eisenstein_e2_coefficients(std::size_t n) {
  std::vector<Rational> c(n + 1, Rational(0));
  c[0] = Rational(-1, 24);
  for (std::size_t d = 1; d <= n; ++d)
    for (std::size_t m = d; m <= n; m += d) c[m] += Rational(static_cast<long long>(d));
  return c;
}

} // namespace tropcount
