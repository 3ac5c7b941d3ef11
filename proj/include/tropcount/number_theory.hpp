#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "tropcount/bigint.hpp"

namespace tropcount {

/// Prime factorization by trial division on a 2-3-5 wheel. Returns
/// (prime, exponent) pairs in increasing prime order.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  if (n == 0) raise(ErrorKind::InvalidArgument, "cannot factor 0");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  auto take = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  };
  take(2);
  take(3);
  take(5);
  static constexpr std::uint64_t wheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
  std::uint64_t p = 7;
  for (std::size_t k = 0; p <= n / p; p += wheel[k++ % 8]) take(p);
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::vector<std::pair<Int, unsigned>> factorize(const Int &n) {
  if (n < 1) raise(ErrorKind::InvalidArgument, "factorize needs n >= 1");
  std::vector<std::pair<Int, unsigned>> out;
  for (auto [p, e] : factorize(static_cast<std::uint64_t>(to_i64(n)))) out.emplace_back(Int(p), e);
  return out;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  auto f = factorize(n);
  return f.size() == 1 && f[0].second == 1;
}

/// Sorted positive divisors.
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> d{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t base = d.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) d.push_back(d[i] * pk);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

/// Divisor power sum sigma_k(n) = sum over d | n of d^k, via the
/// multiplicative product over prime powers.
inline Int sigma(unsigned k, const Int &n) {
  if (n < 1) raise(ErrorKind::InvalidArgument, "sigma needs n >= 1");
  Int total = 1;
  for (const auto &[p, e] : factorize(n)) {
    Int pk = boost::multiprecision::pow(p, k);
    Int term = 1, acc = 1;
    for (unsigned i = 0; i < e; ++i) {
      term *= pk;
      acc += term;
    }
    total *= acc;
  }
  return total;
}

} // namespace tropcount
