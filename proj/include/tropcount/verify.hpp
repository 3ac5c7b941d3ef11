#pragma once

// Seeded self-checks. Each suite compares a library code path against an
// independent computation and keeps the first counterexample.

#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tropcount/curve_count.hpp"
#include "tropcount/identities.hpp"
#include "tropcount/oracles.hpp"
#include "tropcount/theta_skeleton.hpp"
#include "tropcount/tropical_tori.hpp"

namespace tropcount {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  template <typename Describe> void record(bool ok, Describe &&describe) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first_failure = describe();
  }
  bool pass() const { return cases > 0 && failures == 0; }
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = kDefaultSeed;
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const auto &c : checks)
      if (!c.pass()) return false;
    return !checks.empty();
  }
};

inline CheckResult from_identity(const IdentityReport &r) {
  CheckResult c{r.name + " [" + r.range + "]", 0, 0, {}};
  for (const auto &k : r.cases)
    c.record(k.pass, [&] { return k.input + ": " + to_string(k.lhs) + " != " + to_string(k.rhs); });
  return c;
}

// ---------------------------------------------------------------------------
// Random inputs

namespace gen {

inline std::int64_t uniform(std::mt19937_64 &rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline IntMatrix unimodular(std::mt19937_64 &rng, std::size_t g, std::size_t steps = 6) {
  IntMatrix U = int_identity(g);
  for (std::size_t s = 0; s < steps; ++s) {
    auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(g) - 1));
    auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(g) - 2));
    if (j >= i) ++j;
    switch (uniform(rng, 0, 3)) {
    case 0:
      U.swap_rows(i, j);
      break;
    case 1:
      for (std::size_t c = 0; c < g; ++c) U(i, c) = -U(i, c);
      break;
    default: {
      Int k = uniform(rng, -2, 2);
      for (std::size_t c = 0; c < g; ++c) U(i, c) += k * U(j, c);
    }
    }
  }
  return U;
}

/// Symmetric rational matrix with entries p/q, |p| <= 10, q <= 3, shifted by
/// k Id until positive definite.
inline RatMatrix pd_form(std::mt19937_64 &rng, std::size_t g) {
  RatMatrix Q(g, g, Rational(0));
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i; j < g; ++j) {
      Rational v(uniform(rng, -10, 10), uniform(rng, 1, 3));
      Q(i, j) = v;
      Q(j, i) = v;
    }
  while (!is_positive_definite(to_field(Q, 0)))
    for (std::size_t i = 0; i < g; ++i) Q(i, i) += 1;
  return Q;
}

/// All divisibility chains of length g with product <= max_det.
inline std::vector<std::vector<Int>> chains(std::size_t g, std::int64_t max_det) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> cur;
  std::function<void(std::int64_t, std::int64_t)> grow = [&](std::int64_t last, std::int64_t prod) {
    if (cur.size() == g) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t d = last; prod * d <= max_det; d += last) {
      cur.push_back(Int(d));
      grow(d, prod * d);
      cur.pop_back();
    }
  };
  grow(1, 1);
  return out;
}

struct PolarizedCase {
  IntMatrix C;
  TropicalTorus torus;
};

/// C = U diag(d) V with a random type of |det| <= max_det, and J = C^{-T} P
/// for a random positive definite P, so the pairing J^T C is P.
inline PolarizedCase polarized(std::mt19937_64 &rng, std::size_t g, std::int64_t max_det) {
  static thread_local std::vector<std::vector<Int>> cache2, cache3;
  auto &pool = g == 2 ? cache2 : cache3;
  if (pool.empty()) pool = chains(g, max_det);
  const auto &d = pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(pool.size()) - 1))];
  IntMatrix C = unimodular(rng, g) * int_diagonal(d) * unimodular(rng, g);
  RatMatrix P = pd_form(rng, g);
  RatMatrix J = rational_inverse(C).transpose() * P;
  return {C, TropicalTorus(to_field(J, 0))};
}

inline FieldScalar quadratic(std::mt19937_64 &rng, std::int64_t D, std::int64_t span = 3) {
  return FieldScalar(Rational(uniform(rng, -span, span)), Rational(uniform(rng, -span, span)), D);
}

/// A g = 2 torus over Q(sqrt D). With `force_subtorus` the first column of
/// J' is a field multiple of a rational vector and J = J' W^{-1}, so W e_1
/// is a witness.
inline TropicalTorus quadratic_torus(std::mt19937_64 &rng, bool force_subtorus) {
  static const std::int64_t discs[] = {2, 3, 5, 6, 7, 10, 11, 13};
  const std::int64_t D = discs[uniform(rng, 0, 7)];
  for (;;) {
    FieldMatrix J(2, 2, FieldScalar(0, D));
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) J(i, j) = quadratic(rng, D);
    if (force_subtorus) {
      FieldScalar s(Rational(uniform(rng, 1, 3)), Rational(uniform(rng, 1, 3)), D);
      J(0, 0) = s * Rational(uniform(rng, -3, 3));
      J(1, 0) = s * Rational(uniform(rng, -3, 3));
      IntMatrix W = unimodular(rng, 2);
      if (determinant(J).is_zero()) continue;
      J = J * to_field(rational_inverse(W), D);
    }
    if (!determinant(J).is_zero()) return TropicalTorus(J);
  }
}

} // namespace gen

// ---------------------------------------------------------------------------
// Suites

inline SuiteReport verify_identities(std::uint64_t seed = kDefaultSeed, std::uint64_t budget = default_budget()) {
  SuiteReport r{"identities", seed, {}};
  r.checks.push_back(from_identity(check_sigma_identity(500, budget)));
  r.checks.push_back(from_identity(check_p_pn_identity({2, 3, 5, 7, 11}, 60, budget)));
  r.checks.push_back(from_identity(check_multiplicativity(seed, 200, budget)));
  return r;
}

inline SuiteReport verify_oracles(std::uint64_t seed = kDefaultSeed, std::uint64_t budget = default_budget()) {
  SuiteReport r{"oracles", seed, {}};
  auto as_type = [](const std::vector<std::int64_t> &d) {
    return AbelianType(std::vector<Int>(d.begin(), d.end()));
  };

  CheckResult hom{"hom_sym_count = hom_sym_bruteforce, |H| <= 64", 0, 0, {}};
  for (const auto &d : oracle::types_up_to(64)) {
    AbelianType t = as_type(d);
    Int a = hom_sym_count(t), b = hom_sym_bruteforce(t);
    hom.record(a == b, [&] { return t.str() + ": " + to_string(a) + " vs " + to_string(b); });
  }
  r.checks.push_back(hom);

  CheckResult count{"enumerate_subgroups = closure oracle, |G| <= 200", 0, 0, {}};
  CheckResult orders{"subgroup order multiset = closure oracle, |G| <= 200", 0, 0, {}};
  CheckResult methods{"nu direct = nu by primary parts, |G| <= 200", 0, 0, {}};
  for (const auto &d : oracle::types_up_to(200)) {
    AbelianType t = as_type(d);
    auto subs = enumerate_subgroups(t, budget);
    auto ref = oracle::subgroup_orders(d);
    count.record(subs.size() == ref.size(), [&] {
      return t.str() + ": " + std::to_string(subs.size()) + " vs " + std::to_string(ref.size());
    });
    std::multiset<std::size_t> mine;
    for (const auto &s : subs) mine.insert(static_cast<std::size_t>(s.order));
    orders.record(mine == ref, [&] { return t.str(); });
    Int a = nu(t, NuMethod::Direct, budget), b = nu(t, NuMethod::PrimePower, budget);
    methods.record(a == b, [&] { return t.str() + ": " + to_string(a) + " vs " + to_string(b); });
  }
  r.checks.push_back(count);
  r.checks.push_back(orders);
  r.checks.push_back(methods);

  CheckResult duality{"subgroup orders closed under o -> |G|/o, |G| <= 512", 0, 0, {}};
  for (const auto &d : oracle::types_up_to(512)) {
    AbelianType t = as_type(d);
    const auto n = static_cast<std::uint64_t>(t.order());
    std::multiset<std::uint64_t> o, flipped;
    for (auto k : subgroup_orders(t, UINT64_MAX)) {
      o.insert(k);
      flipped.insert(n / k);
    }
    duality.record(o == flipped, [&] { return t.str(); });
  }
  r.checks.push_back(duality);

  std::mt19937_64 rng(seed);
  CheckResult det{"Bareiss determinant and adjugate = cofactor expansion", 0, 0, {}};
  for (int k = 0; k < 200; ++k) {
    auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 5));
    IntMatrix a(n, n, Int(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = gen::uniform(rng, -9, 9);
    Int ref = oracle::laplace_determinant(a);
    bool ok = determinant(a) == ref && a * adjugate(a) == int_identity(n).scaled(ref);
    det.record(ok, [&] {
      std::ostringstream os;
      os << a;
      return os.str();
    });
  }
  r.checks.push_back(det);
  return r;
}

inline SuiteReport verify_pipeline(std::uint64_t seed = kDefaultSeed, std::uint64_t budget = default_budget()) {
  SuiteReport r{"pipeline", seed, {}};
  std::mt19937_64 rng(seed);
  CountOptions opt;
  opt.budget = budget;
  opt.simplicity_bound = 2;

  CheckResult worked{"C = diag(1,2) gives 12", 0, 0, {}};
  {
    IntMatrix C = int_diagonal({Int(1), Int(2)});
    auto rep = total_count_enumerated(default_torus_for(C), C, opt);
    worked.record(rep.enumerated_total == 12 && rep.closed_total == 12,
                  [&] { return "got " + to_string(rep.enumerated_total); });
  }
  r.checks.push_back(worked);

  for (std::size_t g : {2u, 3u}) {
    const std::string G = std::to_string(g);
    CheckResult theorem{"enumerated count = n^2 nu_dagger(type), g = " + G, 0, 0, {}};
    CheckResult s2{"F2 F1 = adj(C) and F1 C F2 = det(C) Id, g = " + G, 0, 0, {}};
    CheckResult naive{"factorizations = subgroups of coker adj(C), g = " + G, 0, 0, {}};
    CheckResult sigma1{"(1,n): count = n^2 sigma_1(n), g = 2", 0, 0, {}};
    for (int k = 0; k < 20; ++k) {
      auto pc = gen::polarized(rng, g, 60);
      auto rep = total_count_enumerated(pc.torus, pc.C, opt);
      Int n = rep.n;
      Int expect = n * n * nu_dagger(rep.type, NuMethod::Direct, budget);
      auto show = [&] {
        std::ostringstream os;
        os << "C = " << pc.C << " type " << rep.type.str() << ": " << rep.enumerated_total << " vs " << expect;
        return os.str();
      };
      theorem.record(rep.enumerated_total == expect, show);
      bool ok = true;
      for (const auto &e : rep.entries) {
        try {
          s2_condition_check(pc.C, e.triple);
        } catch (const Error &) {
          ok = false;
        }
      }
      s2.record(ok, show);
      auto subs = enumerate_subgroups(cokernel_invariants(adjugate(pc.C)), budget);
      naive.record(subs.size() == rep.entries.size(), show);
      if (g == 2 && rep.type[0] == 1) sigma1.record(rep.enumerated_total == n * n * sigma(1, n), show);
    }
    r.checks.push_back(theorem);
    r.checks.push_back(s2);
    r.checks.push_back(naive);
    if (g == 2) r.checks.push_back(sigma1);
  }
  return r;
}

inline SuiteReport verify_roundtrip(std::uint64_t seed = kDefaultSeed) {
  SuiteReport r{"roundtrip", seed, {}};
  std::mt19937_64 rng(seed);
  for (std::size_t g : {2u, 3u}) {
    const std::string G = std::to_string(g);
    CheckResult congruent{"jacobian_gram(skeleton(Q)) ~ Q, g = " + G, 0, 0, {}};
    CheckResult shape{"non-degenerate skeletons: genus g, 3-edge-connected, g = " + G, 0, 0, {}};
    CheckResult cotree{"det Q = spanning-tree polynomial of the skeleton, g = " + G, 0, 0, {}};
    for (int k = 0; k < 50; ++k) {
      FieldMatrix Q = to_field(gen::pd_form(rng, g), 0);
      auto show = [&] {
        std::ostringstream os;
        os << Q;
        return os.str();
      };
      Skeleton s = skeleton(Q);
      FieldMatrix back = jacobian_gram(s.graph);
      congruent.record(same_selling_multiset(back, Q), show);
      if (!s.degenerate)
        shape.record(genus(s.graph) == g && is_m_edge_connected(s.graph, 3), show);
      cotree.record(determinant(Q) == oracle::cotree_polynomial(s.graph), show);
    }
    r.checks.push_back(congruent);
    r.checks.push_back(shape);
    r.checks.push_back(cotree);
  }
  return r;
}

inline SuiteReport verify_theta(std::uint64_t seed = kDefaultSeed) {
  SuiteReport r{"theta", seed, {}};
  std::mt19937_64 rng(seed);
  for (std::size_t g : {2u, 3u}) {
    const std::string G = std::to_string(g);
    CheckResult agree{"theta_value = brute force on the doubled radius, g = " + G, 0, 0, {}};
    CheckResult zero{"Theta(0) = 0, g = " + G, 0, 0, {}};
    for (int k = 0; k < 100; ++k) {
      FieldMatrix Q = to_field(gen::pd_form(rng, g), 0);
      std::vector<FieldScalar> x;
      for (std::size_t i = 0; i < g; ++i) x.emplace_back(Rational(gen::uniform(rng, -6, 6), gen::uniform(rng, 1, 4)), 0);
      // Q(lambda, lambda) <= 16 Q(x, x) is twice the radius searched by theta_evaluate
      auto box = ellipsoid_box(Q, detail::quad(Q, x, x) * Rational(16));
      FieldScalar a = theta_value(Q, x), b = oracle::theta_box_max(Q, x, box);
      agree.record(a == b, [&] {
        std::ostringstream os;
        os << Q << " x = (";
        for (const auto &v : x) os << v.str() << ' ';
        os << ") " << a.str() << " vs " << b.str();
        return os.str();
      });
      std::vector<FieldScalar> origin(g, FieldScalar(0, 0));
      zero.record(theta_value(Q, origin).is_zero(), [] { return std::string("nonzero at origin"); });
    }
    r.checks.push_back(agree);
    r.checks.push_back(zero);
  }
  return r;
}

namespace detail {

/// j(w) = J w lies on a rational line.
inline bool rational_direction(const FieldMatrix &J, const std::vector<Int> &w) {
  std::vector<FieldScalar> v(J.rows(), FieldScalar(0, J(0, 0).disc()));
  for (std::size_t i = 0; i < J.rows(); ++i)
    for (std::size_t j = 0; j < J.cols(); ++j) v[i] += J(i, j) * Rational(w[j]);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t k = i + 1; k < v.size(); ++k)
      if (v[i].rat() * v[k].irr() != v[k].rat() * v[i].irr()) return false;
  bool nonzero = false;
  for (const auto &x : w) nonzero = nonzero || x != 0;
  return nonzero;
}

inline Int height(const std::vector<Int> &w) {
  Int h = 0;
  for (const auto &x : w) h = std::max(h, abs_int(x));
  return h;
}

} // namespace detail

inline SuiteReport verify_simplicity(std::uint64_t seed = kDefaultSeed, std::int64_t search_bound = 1000) {
  SuiteReport r{"simplicity", seed, {}};
  std::mt19937_64 rng(seed);

  CheckResult worked{"J = [[1,sqrt2],[sqrt2,3]], C = Id: valid and simple", 0, 0, {}};
  {
    FieldScalar one(1, 2), r2(0, 1, 2), three(3, 2);
    TropicalTorus t(FieldMatrix{{one, r2}, {r2, three}});
    bool valid = true;
    try {
      validate_polarized_torus(t, Polarization{int_identity(2)});
    } catch (const Error &) {
      valid = false;
    }
    auto v = find_subtorus(t, search_bound);
    worked.record(valid && v.kind == SubtorusVerdictKind::Simple,
                  [&] { return std::string("valid=") + (valid ? "yes" : "no") + " verdict=" + to_string(v.kind); });
  }
  r.checks.push_back(worked);

  CheckResult rational{"rational J always has a subtorus", 0, 0, {}};
  for (std::size_t g : {2u, 3u})
    for (int k = 0; k < 20; ++k) {
      auto pc = gen::polarized(rng, g, 60);
      auto v = find_subtorus(pc.torus, 4);
      rational.record(v.kind == SubtorusVerdictKind::SubtorusFound && detail::rational_direction(pc.torus.J(), v.witness),
                      [&] {
                        std::ostringstream os;
                        os << pc.torus.J() << " -> " << to_string(v.kind);
                        return os.str();
                      });
    }
  r.checks.push_back(rational);

  CheckResult agree{"g = 2 exact verdict agrees with search to height " + std::to_string(search_bound), 0, 0, {}};
  for (int k = 0; k < 50; ++k) {
    TropicalTorus t = gen::quadratic_torus(rng, k % 2 == 1);
    auto exact = find_subtorus(t, search_bound);
    bool ok;
    if (exact.kind == SubtorusVerdictKind::Simple) {
      ok = search_subtorus(t, search_bound).kind == SubtorusVerdictKind::Inconclusive;
    } else {
      ok = exact.kind == SubtorusVerdictKind::SubtorusFound && detail::rational_direction(t.J(), exact.witness);
      if (ok && detail::height(exact.witness) <= search_bound) {
        auto s = search_subtorus(t, search_bound);
        ok = s.kind == SubtorusVerdictKind::SubtorusFound && detail::rational_direction(t.J(), s.witness);
      }
    }
    agree.record(ok, [&] {
      std::ostringstream os;
      os << t.J() << " exact " << to_string(exact.kind);
      return os.str();
    });
  }
  r.checks.push_back(agree);
  return r;
}

inline const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names = {"identities", "oracles", "pipeline", "roundtrip", "theta", "simplicity"};
  return names;
}

inline SuiteReport run_suite(const std::string &name, std::uint64_t seed = kDefaultSeed,
                             std::uint64_t budget = default_budget()) {
  if (name == "identities") return verify_identities(seed, budget);
  if (name == "oracles") return verify_oracles(seed, budget);
  if (name == "pipeline") return verify_pipeline(seed, budget);
  if (name == "roundtrip") return verify_roundtrip(seed);
  if (name == "theta") return verify_theta(seed);
  if (name == "simplicity") return verify_simplicity(seed);
  raise(ErrorKind::InvalidArgument, "unknown suite '" + name + "'");
}

} // namespace tropcount
