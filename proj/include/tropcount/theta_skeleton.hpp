#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "tropcount/matrix.hpp"
#include "tropcount/metric_graph.hpp"
#include "tropcount/normal_form.hpp"

namespace tropcount {

/// Obtuse superbase of a positive definite form in dimension 2 or 3.
/// The superbase is v_1..v_g (columns of U) and v_0 = -(v_1 + ... + v_g);
/// params[k] = -v_i^T Q v_j for the k-th pair i < j in lexicographic order
/// ((0,1), (0,2), (1,2) for g = 2; six pairs for g = 3).
struct SellingDecomposition {
  std::size_t dim = 0;
  IntMatrix U;
  std::vector<FieldScalar> params;
};

inline std::vector<std::pair<std::size_t, std::size_t>> superbase_pairs(std::size_t g) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i <= g; ++i)
    for (std::size_t j = i + 1; j <= g; ++j) pairs.emplace_back(i, j);
  return pairs;
}

namespace detail {

inline std::vector<std::vector<Int>> superbase(const IntMatrix &U) {
  const std::size_t g = U.rows();
  std::vector<std::vector<Int>> v(g + 1, std::vector<Int>(g, Int(0)));
  for (std::size_t c = 0; c < g; ++c)
    for (std::size_t r = 0; r < g; ++r) {
      v[c + 1][r] = U(r, c);
      v[0][r] -= U(r, c);
    }
  return v;
}

inline FieldScalar bilinear(const FieldMatrix &Q, const std::vector<Int> &a, const std::vector<Int> &b) {
  FieldScalar acc(0, Q(0, 0).disc());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) acc += Q(i, j) * Rational(a[i] * b[j]);
  }
  return acc;
}

inline std::vector<FieldScalar> selling_params(const FieldMatrix &Q, const IntMatrix &U) {
  auto v = superbase(U);
  std::vector<FieldScalar> p;
  for (auto [i, j] : superbase_pairs(U.rows())) p.push_back(-bilinear(Q, v[i], v[j]));
  return p;
}

inline void require_form(const FieldMatrix &Q) {
  if (!Q.square() || (Q.rows() != 2 && Q.rows() != 3))
    raise(ErrorKind::UnsupportedDimension, "Selling reduction needs a 2x2 or 3x3 form, got " + Q.shape());
  if (!is_positive_definite(Q)) raise(ErrorKind::NotPositiveDefinite, "form is not positive definite");
}

} // namespace detail

/// sum over pairs of params * (rank-one form of the pair), in the basis U.
/// Pair (0, i) contributes e_i e_i^T; pair (i, j), i, j >= 1, contributes
/// (e_i - e_j)(e_i - e_j)^T.
inline FieldMatrix selling_reconstruct(const SellingDecomposition &s) {
  const std::size_t g = s.dim;
  const auto D = s.params.front().disc();
  FieldMatrix R(g, g, FieldScalar(0, D));
  const auto pairs = superbase_pairs(g);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [i, j] = pairs[k];
    const auto &p = s.params[k];
    if (i == 0) {
      R(j - 1, j - 1) += p;
    } else {
      R(i - 1, i - 1) += p;
      R(j - 1, j - 1) += p;
      R(i - 1, j - 1) -= p;
      R(j - 1, i - 1) -= p;
    }
  }
  return R;
}

/// Selling's algorithm: while some parameter p_ij is negative (first in pair
/// order), replace v_i by -v_i and each other v_k (k != i, j) by v_k + v_i
/// (g = 3) or by v_k + 2 v_i (g = 2). Each step strictly lowers the sum of
/// the norms Q(v_k), so the loop terminates.
inline SellingDecomposition selling_reduce(const FieldMatrix &Q) {
  detail::require_form(Q);
  const std::size_t g = Q.rows();
  SellingDecomposition s{g, int_identity(g), {}};
  const auto pairs = superbase_pairs(g);
  for (;;) {
    s.params = detail::selling_params(Q, s.U);
    std::size_t neg = pairs.size();
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (s.params[k].sign() < 0) {
        neg = k;
        break;
      }
    if (neg == pairs.size()) break;
    auto [i, j] = pairs[neg];
    auto v = detail::superbase(s.U);
    auto w = v;
    const Int step = g == 2 ? 2 : 1;
    for (std::size_t r = 0; r < g; ++r) w[i][r] = -v[i][r];
    for (std::size_t k = 0; k <= g; ++k) {
      if (k == i || k == j) continue;
      for (std::size_t r = 0; r < g; ++r) w[k][r] = v[k][r] + step * v[i][r];
    }
    for (std::size_t c = 0; c < g; ++c)
      for (std::size_t r = 0; r < g; ++r) s.U(r, c) = w[c + 1][r];
  }
  const auto D = Q(0, 0).disc();
  FieldMatrix UF = to_field(s.U, D);
  if (UF.transpose() * Q * UF != selling_reconstruct(s))
    raise(ErrorKind::ConditionViolated, "Selling reconstruction identity failed");
  return s;
}

namespace detail {
inline bool lex_less(const std::vector<FieldScalar> &a, const std::vector<FieldScalar> &b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    int c = (a[k] - b[k]).sign();
    if (c != 0) return c < 0;
  }
  return false;
}
} // namespace detail

/// Parameters relabelled by the permutation of superbase indices that makes
/// the tuple lexicographically smallest. Two forms in the interior of the
/// principal Voronoi domain are GL_g(Z)-congruent iff these agree.
inline std::vector<FieldScalar> selling_canonical(const SellingDecomposition &s) {
  const std::size_t g = s.dim;
  const auto pairs = superbase_pairs(g);
  std::vector<std::size_t> perm(g + 1);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<FieldScalar> best;
  do {
    std::vector<FieldScalar> t(pairs.size(), s.params.front());
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      auto a = perm[pairs[k].first], b = perm[pairs[k].second];
      if (a > b) std::swap(a, b);
      auto it = std::find(pairs.begin(), pairs.end(), std::make_pair(a, b));
      t[static_cast<std::size_t>(it - pairs.begin())] = s.params[k];
    }
    if (best.empty() || detail::lex_less(t, best)) best = std::move(t);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Sorted Selling parameters.
inline std::vector<FieldScalar> selling_multiset(const SellingDecomposition &s) {
  auto p = s.params;
  std::sort(p.begin(), p.end(), [](const FieldScalar &a, const FieldScalar &b) { return (a - b).sign() < 0; });
  return p;
}

inline bool same_selling_multiset(const FieldMatrix &a, const FieldMatrix &b) {
  return selling_multiset(selling_reduce(a)) == selling_multiset(selling_reduce(b));
}

inline std::vector<Int> ellipsoid_box(const FieldMatrix &Q, const FieldScalar &R);

namespace detail {

inline bool has_zero_param(const SellingDecomposition &s) {
  return std::any_of(s.params.begin(), s.params.end(), [](const FieldScalar &p) { return p.is_zero(); });
}

/// Searches for W in GL_g(Z) with W^T A W = B column by column; column i
/// ranges over the integral vectors of A-norm B_ii.
inline bool isometry_search(const FieldMatrix &A, const FieldMatrix &B) {
  const std::size_t g = A.rows();
  std::vector<std::vector<std::vector<Int>>> cand(g);
  for (std::size_t i = 0; i < g; ++i) {
    auto box = ellipsoid_box(A, B(i, i));
    std::vector<Int> v(g);
    for (std::size_t k = 0; k < g; ++k) v[k] = -box[k];
    for (;;) {
      if (bilinear(A, v, v) == B(i, i)) cand[i].push_back(v);
      std::size_t k = 0;
      while (k < g && v[k] == box[k]) v[k] = -box[k], ++k;
      if (k == g) break;
      ++v[k];
    }
    if (cand[i].empty()) return false;
  }
  std::vector<const std::vector<Int> *> cols(g);
  auto rec = [&](auto &&self, std::size_t i) -> bool {
    if (i == g) {
      IntMatrix W(g, g, Int(0));
      for (std::size_t c = 0; c < g; ++c)
        for (std::size_t r = 0; r < g; ++r) W(r, c) = (*cols[c])[r];
      return abs_int(determinant(W)) == 1;
    }
    for (const auto &w : cand[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = bilinear(A, *cols[j], w) == B(j, i);
      if (!ok) continue;
      cols[i] = &w;
      if (self(self, i + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

} // namespace detail

/// Exact GL_g(Z) congruence test. Canonical Selling data decide it when
/// both forms are in the interior of the principal Voronoi domain; on its
/// boundary the obtuse superbase is not unique and the reduced forms are
/// compared by a direct isometry search.
inline bool forms_congruent(const FieldMatrix &a, const FieldMatrix &b) {
  if (a.rows() != b.rows()) return false;
  auto sa = selling_reduce(a), sb = selling_reduce(b);
  if (selling_canonical(sa) == selling_canonical(sb)) return true;
  if (!detail::has_zero_param(sa) || !detail::has_zero_param(sb)) return false;
  return detail::isometry_search(selling_reconstruct(sa), selling_reconstruct(sb));
}

struct Skeleton {
  MetricGraph graph;
  bool degenerate = false;
  SellingDecomposition selling;
};

/// Superbase pair whose parameter is the length of K4 edge (i, j): the
/// complementary pair {k, l} = {0, 1, 2, 3} minus {i, j}. (The cycle form of
/// K4 with lengths l_ij has Selling parameter l_ij on the opposite pair.)
inline std::pair<std::size_t, std::size_t> k4_length_pair(std::size_t i, std::size_t j) {
  std::vector<std::size_t> rest;
  for (std::size_t k = 0; k < 4; ++k)
    if (k != i && k != j) rest.push_back(k);
  return {rest[0], rest[1]};
}

/// Voronoi 1-skeleton of the principally polarized torus R^g / Z^g with form
/// Q: the theta graph (g = 2) or K4 (g = 3), weighted by Selling parameters.
/// Zero parameters are contracted and flagged as degenerate.
inline Skeleton skeleton(const FieldMatrix &Q) {
  Skeleton out;
  out.selling = selling_reduce(Q);
  const auto &p = out.selling.params;
  const auto pairs = superbase_pairs(Q.rows());
  auto param_of = [&](std::size_t a, std::size_t b) {
    auto it = std::find(pairs.begin(), pairs.end(), std::make_pair(std::min(a, b), std::max(a, b)));
    return p[static_cast<std::size_t>(it - pairs.begin())];
  };
  MetricGraph g;
  if (Q.rows() == 2) {
    g = theta_graph(p[0], p[1], p[2]);
  } else {
    std::vector<FieldScalar> lengths;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) {
        auto [a, b] = k4_length_pair(i, j);
        lengths.push_back(param_of(a, b));
      }
    g = k4_graph(lengths);
  }
  for (;;) {
    auto it = std::find_if(g.edges.begin(), g.edges.end(), [](const Edge &e) { return e.length.is_zero(); });
    if (it == g.edges.end()) break;
    if (it->u == it->v) raise(ErrorKind::ConditionViolated, "zero-length cycle in skeleton of a definite form");
    g = contract_edge(g, static_cast<std::size_t>(it - g.edges.begin()));
    out.degenerate = true;
  }
  out.graph = std::move(g);
  return out;
}

// ---------------------------------------------------------------------------
// Tropical theta function

namespace detail {

inline FieldScalar quad(const FieldMatrix &Q, const std::vector<FieldScalar> &x, const std::vector<FieldScalar> &y) {
  FieldScalar acc(0, Q(0, 0).disc());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) acc += Q(i, j) * x[i] * y[j];
  return acc;
}

inline std::vector<FieldScalar> lift(const std::vector<Int> &v, std::int64_t D) {
  std::vector<FieldScalar> out;
  for (const auto &x : v) out.emplace_back(Rational(x), D);
  return out;
}

/// Smallest B >= 0 with B^2 >= t, by exact comparisons only.
inline Int ceil_sqrt(const FieldScalar &t) {
  auto below = [&](const Int &b) { return (FieldScalar(Rational(b * b), t.disc()) - t).sign() < 0; };
  if (!below(0)) return 0;
  Int hi = 1;
  while (below(hi)) hi *= 2;
  Int lo = hi / 2; // below(lo) holds
  while (hi - lo > 1) {
    Int mid = (lo + hi) / 2;
    if (below(mid)) lo = mid;
    else hi = mid;
  }
  return hi;
}

} // namespace detail

/// Half-widths B_i of a box containing {lambda : Q(lambda, lambda) <= R}:
/// |lambda_i| <= sqrt(R (Q^-1)_ii).
inline std::vector<Int> ellipsoid_box(const FieldMatrix &Q, const FieldScalar &R) {
  FieldMatrix Qinv = inverse(Q);
  std::vector<Int> b;
  for (std::size_t i = 0; i < Q.rows(); ++i) b.push_back(detail::ceil_sqrt(R * Qinv(i, i)));
  return b;
}

struct ThetaResult {
  FieldScalar value;
  std::vector<std::vector<Int>> maximizers;
};

/// Theta(x) = max over lambda in Z^g of Q(lambda, x) - Q(lambda, lambda)/2.
/// Any maximizer has Q(lambda, x) >= Q(lambda, lambda)/2, hence by
/// Cauchy-Schwarz Q(lambda, lambda) <= 4 Q(x, x); only that ellipsoid is
/// searched, and lambda = 0 is always a candidate.
namespace detail {

/// Q = M / L and x = y / m with M, y integral, when D = 0 and every entry is
/// small enough for 128-bit accumulation over the search box.
struct ScaledTheta {
  Matrix<std::int64_t> M;
  std::vector<std::int64_t> y;
  std::int64_t L = 1, m = 1;
};

inline std::optional<ScaledTheta> scale_theta(const FieldMatrix &Q, const std::vector<FieldScalar> &x) {
  if (Q(0, 0).disc() != 0) return std::nullopt;
  const std::size_t g = Q.rows();
  Int L = 1, m = 1;
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < g; ++j) L = lcm_int(L, boost::multiprecision::denominator(Q(i, j).rat()));
    m = lcm_int(m, boost::multiprecision::denominator(x[i].rat()));
  }
  const Int cap = Int(1) << 24;
  if (L > cap || m > cap) return std::nullopt;
  ScaledTheta s{Matrix<std::int64_t>(g, g, 0), std::vector<std::int64_t>(g, 0), static_cast<std::int64_t>(L),
                static_cast<std::int64_t>(m)};
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < g; ++j) {
      Rational v = Q(i, j).rat() * Rational(L);
      if (abs_int(boost::multiprecision::numerator(v)) > cap) return std::nullopt;
      s.M(i, j) = static_cast<std::int64_t>(boost::multiprecision::numerator(v));
    }
    Rational v = x[i].rat() * Rational(m);
    if (abs_int(boost::multiprecision::numerator(v)) > cap) return std::nullopt;
    s.y[i] = static_cast<std::int64_t>(boost::multiprecision::numerator(v));
  }
  return s;
}

} // namespace detail

inline ThetaResult theta_evaluate(const FieldMatrix &Q, const std::vector<FieldScalar> &x) {
  if (!Q.square() || Q.rows() != x.size()) raise(ErrorKind::DimensionMismatch, "theta: Q and x disagree");
  if (!is_positive_definite(Q)) raise(ErrorKind::NotPositiveDefinite, "theta needs a positive definite form");
  const std::size_t g = Q.rows();
  const auto D = Q(0, 0).disc();
  const FieldScalar R = detail::quad(Q, x, x) * Rational(4);
  const auto box = ellipsoid_box(Q, R);
  const Rational half(1, 2);

  ThetaResult best{FieldScalar(0, D), {std::vector<Int>(g, Int(0))}};
  std::vector<Int> lam(g);
  for (std::size_t i = 0; i < g; ++i) lam[i] = -box[i];

  auto scaled = detail::scale_theta(Q, x);
  bool fast = scaled.has_value();
  for (const auto &b : box) fast = fast && b < 4096;
  if (fast) {
    // value = (2 lam^T M y - m lam^T M lam) / (2 L m)
    using i128 = __int128;
    const auto &M = scaled->M;
    const auto &y = scaled->y;
    const i128 m = scaled->m;
    i128 bound = 0;
    std::vector<i128> Myv(g, 0);
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < g; ++j) Myv[i] += i128(M(i, j)) * y[j];
    for (std::size_t i = 0; i < g; ++i) bound += Myv[i] * y[i];
    bound *= 4;
    std::vector<std::int64_t> l(g);
    for (std::size_t i = 0; i < g; ++i) l[i] = -static_cast<std::int64_t>(box[i]);
    i128 best_num = 0;
    std::vector<std::vector<std::int64_t>> arg{std::vector<std::int64_t>(g, 0)};
    for (;;) {
      i128 norm = 0, lx = 0;
      for (std::size_t i = 0; i < g; ++i) {
        i128 row = 0;
        for (std::size_t j = 0; j < g; ++j) row += i128(M(i, j)) * l[j];
        norm += row * l[i];
        lx += Myv[i] * l[i];
      }
      if (norm * m * m <= bound) {
        i128 val = 2 * lx - m * norm;
        bool zero = std::all_of(l.begin(), l.end(), [](std::int64_t v) { return v == 0; });
        if (val > best_num) best_num = val, arg = {l};
        else if (val == best_num && !zero) arg.push_back(l);
      }
      std::size_t pos = 0;
      while (pos < g && l[pos] == static_cast<std::int64_t>(box[pos])) l[pos] = -static_cast<std::int64_t>(box[pos]), ++pos;
      if (pos == g) break;
      ++l[pos];
    }
    auto to_int = [](i128 v) {
      bool neg = v < 0;
      unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
      Int r = static_cast<std::uint64_t>(u >> 64);
      r <<= 64;
      r += static_cast<std::uint64_t>(u);
      return neg ? Int(-r) : r;
    };
    best.value = FieldScalar(Rational(to_int(best_num), Int(2) * Int(scaled->L) * Int(scaled->m)), 0);
    best.maximizers.clear();
    for (const auto &a : arg) best.maximizers.emplace_back(a.begin(), a.end());
  } else {
    for (;;) {
      auto l = detail::lift(lam, D);
      FieldScalar norm = detail::quad(Q, l, l);
      if ((norm - R).sign() <= 0) {
        FieldScalar val = detail::quad(Q, l, x) - norm * half;
        int c = (val - best.value).sign();
        bool zero = std::all_of(lam.begin(), lam.end(), [](const Int &v) { return v == 0; });
        if (c > 0) best = {val, {lam}};
        else if (c == 0 && !zero) best.maximizers.push_back(lam);
      }
      std::size_t pos = 0;
      while (pos < g && lam[pos] == box[pos]) lam[pos] = -box[pos], ++pos;
      if (pos == g) break;
      ++lam[pos];
    }
  }
  std::sort(best.maximizers.begin(), best.maximizers.end());
  best.maximizers.erase(std::unique(best.maximizers.begin(), best.maximizers.end()), best.maximizers.end());
  return best;
}

inline FieldScalar theta_value(const FieldMatrix &Q, const std::vector<FieldScalar> &x) {
  return theta_evaluate(Q, x).value;
}

// ---------------------------------------------------------------------------
// Metric graph isomorphism

/// Length-preserving multigraph isomorphism by trying every vertex
/// permutation and matching edge multisets.
inline bool graphs_isomorphic(const MetricGraph &a, const MetricGraph &b) {
  if (a.vertices > 8 || b.vertices > 8) raise(ErrorKind::TooLarge, "isomorphism test limited to 8 vertices");
  if (a.vertices != b.vertices || a.edges.size() != b.edges.size()) return false;
  if (!a.edges.empty() && a.disc() != b.disc()) return false;
  using Key = std::tuple<std::size_t, std::size_t, Rational, Rational>;
  auto keys = [](const MetricGraph &g, const std::vector<std::size_t> &perm) {
    std::vector<Key> k;
    for (const auto &e : g.edges) {
      auto u = perm[e.u], v = perm[e.v];
      if (u > v) std::swap(u, v);
      k.emplace_back(u, v, e.length.rat(), e.length.irr());
    }
    std::sort(k.begin(), k.end());
    return k;
  };
  std::vector<std::size_t> id(a.vertices);
  std::iota(id.begin(), id.end(), std::size_t{0});
  const auto target = keys(b, id);
  auto perm = id;
  do {
    if (keys(a, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

} // namespace tropcount
