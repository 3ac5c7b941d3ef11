#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "tropcount/abelian_type.hpp"
#include "tropcount/normal_form.hpp"
#include "tropcount/number_theory.hpp"

namespace tropcount {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Enumeration budget in HNF candidates; TROPCOUNT_BUDGET overrides.
inline std::uint64_t default_budget() {
  if (const char *env = std::getenv("TROPCOUNT_BUDGET")) {
    char *end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && end != env) return v;
  }
  return kDefaultBudget;
}

/// Invariant factors of the direct sum of Z/v_i, padded to the input length.
inline AbelianType normalize_type(const std::vector<Int> &values) {
  if (values.empty()) raise(ErrorKind::InvalidArgument, "normalize_type needs at least one value");
  for (const auto &v : values)
    if (v < 1) raise(ErrorKind::InvalidArgument, "type values must be positive");
  return cokernel_invariants(int_diagonal(values));
}

/// (n/d_g, ..., n/d_1) with n the order.
inline AbelianType dual_type(const AbelianType &t) {
  Int n = t.order();
  std::vector<Int> f;
  for (auto it = t.factors().rbegin(); it != t.factors().rend(); ++it) f.push_back(n / *it);
  return AbelianType(std::move(f));
}

/// A subgroup H = L / N Z^g of G = Z^g / N Z^g, N = diag(d_1..d_g), stored as
/// the HNF basis of the intermediate lattice L.
struct SubgroupRep {
  AbelianType ambient;
  IntMatrix basis;
  AbelianType invariants;
  Int order;
};

/// Number of HNF candidates visited by enumerate_subgroups. Containment of
/// d_i e_i forces H(i, i) | d_i, and row i has g-1-i entries reduced mod
/// H(i, i), so the count is the product of sigma_{g-1-i}(d_i).
inline std::uint64_t subgroup_candidates(const AbelianType &t) {
  const std::size_t g = t.rank();
  Int total = 1;
  for (std::size_t i = 0; i < g; ++i) total *= sigma(static_cast<unsigned>(g - 1 - i), t.factors()[i]);
  if (total > Int(UINT64_MAX)) return UINT64_MAX;
  return static_cast<std::uint64_t>(total);
}

/// Calls visit(H, X) once per subgroup, in no particular order. H is the HNF
/// basis of the intermediate lattice and column j of X solves H x = d_j e_j.
/// Rows of H are filled bottom-up; once rows i..g-1 are fixed, row i of X is
/// determined, so a row making it non-integral is abandoned immediately.
template <typename Visit> void visit_subgroups(const AbelianType &t, std::uint64_t budget, Visit &&visit) {
  const std::size_t g = t.rank();
  const std::uint64_t candidates = subgroup_candidates(t);
  if (candidates > budget) throw BudgetExceeded(candidates, budget);

  std::vector<std::int64_t> d;
  for (const auto &f : t.factors()) d.push_back(tropcount::to_i64(f));
  std::vector<std::vector<std::uint64_t>> divs;
  for (auto di : d) divs.push_back(divisors(static_cast<std::uint64_t>(di)));

  Matrix<std::int64_t> H(g, g, 0);
  Matrix<std::int64_t> X(g, g, 0);
  const Matrix<std::int64_t> &Hc = H, &Xc = X;

  std::function<void(std::size_t)> fill_row = [&](std::size_t i) {
    for (auto hd : divs[i]) {
      const auto h = static_cast<std::int64_t>(hd);
      H(i, i) = h;
      X(i, i) = d[i] / h;
      for (std::size_t j = i + 1; j < g; ++j) H(i, j) = 0;
      for (;;) {
        bool ok = true;
        for (std::size_t j = i + 1; j < g && ok; ++j) {
          std::int64_t r = 0;
          for (std::size_t l = i + 1; l <= j; ++l) r -= H(i, l) * X(l, j);
          if (r % h != 0) ok = false;
          else X(i, j) = r / h;
        }
        if (ok) {
          if (i == 0) visit(Hc, Xc);
          else fill_row(i - 1);
        }
        std::size_t pos = g;
        for (std::size_t j = g; j-- > i + 1;) {
          if (++H(i, j) < h) {
            pos = j;
            break;
          }
          H(i, j) = 0;
        }
        if (pos == g) break;
      }
      for (std::size_t j = i + 1; j < g; ++j) X(i, j) = 0;
    }
    H(i, i) = 0;
  };
  if (g > 0) fill_row(g - 1);
}

/// Every subgroup of the group of type `t` exactly once, sorted by HNF key.
inline std::vector<SubgroupRep> enumerate_subgroups(const AbelianType &t, std::uint64_t budget = default_budget()) {
  const std::size_t g = t.rank();
  std::vector<SubgroupRep> out;
  visit_subgroups(t, budget, [&](const Matrix<std::int64_t> &H, const Matrix<std::int64_t> &X) {
    auto s = snf(X);
    std::vector<Int> inv;
    for (std::size_t i = 0; i < g; ++i) inv.push_back(Int(s.S(i, i)));
    AbelianType invariants(std::move(inv));
    Int order = invariants.order();
    out.push_back(SubgroupRep{t, from_i64(H), std::move(invariants), std::move(order)});
  });
  auto key_less = [g](const SubgroupRep &a, const SubgroupRep &b) {
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < g; ++j)
        if (a.basis(i, j) != b.basis(i, j)) return a.basis(i, j) < b.basis(i, j);
    return false;
  };
  std::sort(out.begin(), out.end(), key_less);
  return out;
}

/// Orders of all subgroups, without building their invariants.
inline std::vector<std::uint64_t> subgroup_orders(const AbelianType &t, std::uint64_t budget = default_budget()) {
  std::uint64_t n = 1;
  for (const auto &f : t.factors()) n *= static_cast<std::uint64_t>(tropcount::to_i64(f));
  std::vector<std::uint64_t> out;
  visit_subgroups(t, budget, [&](const Matrix<std::int64_t> &H, const Matrix<std::int64_t> &) {
    std::uint64_t index = 1;
    for (std::size_t i = 0; i < H.rows(); ++i) index *= static_cast<std::uint64_t>(H(i, i));
    out.push_back(n / index);
  });
  return out;
}

/// #Hom^sym(H, H*) = product over i <= j of gcd(e_i, e_j).
inline Int hom_sym_count(const AbelianType &t) {
  Int total = 1;
  const auto &e = t.factors();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i; j < e.size(); ++j) total *= gcd_int(e[i], e[j]);
  return total;
}

/// Literal count of symmetric bilinear maps H x H -> Q/Z. A candidate picks
/// b_ij = a_ij / e_j in (1/e_j)Z/Z for i <= j and mirrors it below the
/// diagonal; it is kept when, for every (i, j), row i is a character of H
/// (e_j * b_ij in Z) killed by e_i (e_i * b_ij in Z), and b_ij = b_ji in Q/Z.
inline Int hom_sym_bruteforce(const AbelianType &t, std::uint64_t budget = 10'000'000) {
  if (t.order() > 10'000) raise(ErrorKind::TooLarge, "brute force limited to |H| <= 10^4");
  std::vector<std::int64_t> e;
  for (const auto &f : t.factors()) e.push_back(tropcount::to_i64(f));
  const std::size_t k = e.size();
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  Int space = 1;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      slots.emplace_back(i, j);
      space *= e[j];
    }
  if (space > Int(budget))
    throw BudgetExceeded(space > Int(UINT64_MAX) ? UINT64_MAX : static_cast<std::uint64_t>(space), budget);

  struct Frac {
    std::int64_t num, den;
  };
  auto integral = [](std::int64_t m, const Frac &b) { return (m * b.num) % b.den == 0; };
  auto equal_mod_one = [](const Frac &a, const Frac &b) { return (a.num * b.den - b.num * a.den) % (a.den * b.den) == 0; };

  std::vector<Frac> b(k * k, Frac{0, 1});
  std::vector<std::int64_t> cursor(slots.size(), 0);
  std::uint64_t count = 0;
  for (;;) {
    for (std::size_t s = 0; s < slots.size(); ++s) {
      auto [i, j] = slots[s];
      b[i * k + j] = Frac{cursor[s], e[j]};
      b[j * k + i] = b[i * k + j];
    }
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i)
      for (std::size_t j = 0; j < k && ok; ++j) {
        const Frac &v = b[i * k + j];
        ok = integral(e[j], v) && integral(e[i], v) && equal_mod_one(v, b[j * k + i]);
      }
    if (ok) ++count;

    std::size_t pos = 0;
    while (pos < slots.size() && ++cursor[pos] == e[slots[pos].second]) cursor[pos++] = 0;
    if (pos == slots.size()) break;
  }
  return Int(count);
}

enum class NuMethod { Direct, PrimePower };

/// nu(G) = sum over subgroups H of #Hom^sym(H, H*).
inline Int nu(const AbelianType &t, NuMethod method = NuMethod::PrimePower,
              std::uint64_t budget = default_budget()) {
  if (method == NuMethod::Direct) {
    Int total = 0;
    for (const auto &h : enumerate_subgroups(t.trimmed(), budget)) total += hom_sym_count(h.invariants);
    return total;
  }
  // nu is multiplicative over coprime parts: split G into its Sylow subgroups
  Int total = 1;
  for (const auto &[p, e] : factorize(t.order())) {
    std::vector<Int> part;
    for (Int f : t.factors()) {
      Int pk = 1;
      while (f % p == 0) {
        f /= p;
        pk *= p;
      }
      part.push_back(pk);
    }
    total *= nu(AbelianType(std::move(part)), NuMethod::Direct, budget);
  }
  return total;
}

inline Int nu_dagger(const AbelianType &t, NuMethod method = NuMethod::PrimePower,
                     std::uint64_t budget = default_budget()) {
  return nu(dual_type(t), method, budget);
}

/// Parses "d1,d2,..." into a validated type; the list must already be a
/// divisibility chain.
inline AbelianType parse_type(const std::string &s) {
  std::vector<Int> f;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto comma = s.find(',', start);
    std::string tok = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
    while (!tok.empty() && tok.back() == ' ') tok.pop_back();
    f.push_back(parse_int(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return AbelianType(std::move(f));
}

} // namespace tropcount
