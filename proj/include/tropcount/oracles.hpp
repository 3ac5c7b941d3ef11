#pragma once

// Independent reference computations used by the verification suites and
// the tests. Nothing here calls the code path it is meant to check.

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "tropcount/abelian_type.hpp"
#include "tropcount/matrix.hpp"
#include "tropcount/metric_graph.hpp"

namespace tropcount::oracle {

/// Subgroups of Z/d_1 x ... x Z/d_k found by closing under addition,
/// starting from {0} and adjoining one element at a time. Each subgroup is
/// returned as its element bitmask.
inline std::vector<std::vector<bool>> subgroups_by_closure(const std::vector<std::int64_t> &d) {
  std::int64_t order = 1;
  for (auto x : d) order *= x;
  if (order > 4096) raise(ErrorKind::TooLarge, "closure oracle limited to |G| <= 4096");
  const std::size_t n = static_cast<std::size_t>(order);
  const std::size_t k = d.size();

  // mixed-radix addition table would be n^2; add on the fly instead
  auto add = [&](std::size_t a, std::size_t b) {
    std::size_t out = 0, radix = 1;
    for (std::size_t i = k; i-- > 0;) {
      const auto di = static_cast<std::size_t>(d[i]);
      std::size_t s = (a % di + b % di) % di;
      a /= di;
      b /= di;
      out += s * radix;
      radix *= di;
    }
    return out;
  };

  std::set<std::vector<bool>> seen;
  std::vector<std::vector<bool>> queue;
  std::vector<bool> trivial(n, false);
  trivial[0] = true;
  seen.insert(trivial);
  queue.push_back(trivial);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const auto h = queue[q];
    for (std::size_t x = 1; x < n; ++x) {
      if (h[x]) continue;
      std::vector<bool> kset = h;
      std::vector<std::size_t> members;
      for (std::size_t y = 0; y < n; ++y)
        if (h[y]) members.push_back(y);
      // K = H + <x>: keep adding x to the newest coset until it closes
      std::vector<std::size_t> coset = members;
      for (;;) {
        bool grew = false;
        for (auto &y : coset) {
          y = add(y, x);
          if (!kset[y]) {
            kset[y] = true;
            grew = true;
          }
        }
        if (!grew) break;
      }
      if (seen.insert(kset).second) queue.push_back(std::move(kset));
    }
  }
  return queue;
}

inline std::size_t subgroup_count(const std::vector<std::int64_t> &d) { return subgroups_by_closure(d).size(); }

/// Multiset of subgroup orders.
inline std::multiset<std::size_t> subgroup_orders(const std::vector<std::int64_t> &d) {
  std::multiset<std::size_t> out;
  for (const auto &h : subgroups_by_closure(d)) {
    std::size_t c = 0;
    for (bool b : h) c += b;
    out.insert(c);
  }
  return out;
}

/// Every invariant-factor chain (no leading 1s, rank <= max_rank) with
/// order <= max_order, plus the trivial type (1).
inline std::vector<std::vector<std::int64_t>> types_up_to(std::int64_t max_order, std::size_t max_rank = 8) {
  std::vector<std::vector<std::int64_t>> out{{1}};
  std::vector<std::int64_t> cur;
  std::function<void(std::int64_t, std::int64_t)> grow = [&](std::int64_t last, std::int64_t order) {
    if (!cur.empty()) out.push_back(cur);
    if (cur.size() == max_rank) return;
    for (std::int64_t next = last; order * next <= max_order; next += last) {
      cur.push_back(next);
      grow(next, order * next);
      cur.pop_back();
    }
  };
  for (std::int64_t first = 2; first <= max_order; ++first) {
    cur = {first};
    grow(first, first);
  }
  return out;
}

/// Determinant by cofactor expansion along the first row.
inline Int laplace_determinant(const IntMatrix &a) {
  const std::size_t n = a.rows();
  if (n == 1) return a(0, 0);
  Int total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor(n - 1, n - 1, Int(0));
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, mk = 0; k < n; ++k)
        if (k != c) minor(r - 1, mk++) = a(r, k);
    Int term = a(0, c) * laplace_determinant(minor);
    total += (c % 2 == 0) ? term : Int(-term);
  }
  return total;
}

/// Sum over spanning trees T of the product of lengths of edges not in T;
/// equals det of the cycle-space Gram matrix (weighted matrix-tree theorem).
inline FieldScalar cotree_polynomial(const MetricGraph &g) {
  const std::size_t E = g.edges.size(), need = g.vertices - 1;
  FieldScalar total(0, g.disc());
  std::vector<std::size_t> idx(need);
  std::function<void(std::size_t, std::size_t)> pick = [&](std::size_t start, std::size_t depth) {
    if (depth == need) {
      detail::UnionFind uf(g.vertices);
      for (auto k : idx)
        if (!uf.unite(g.edges[k].u, g.edges[k].v)) return;
      FieldScalar prod(1, g.disc());
      std::vector<bool> in(E, false);
      for (auto k : idx) in[k] = true;
      for (std::size_t k = 0; k < E; ++k)
        if (!in[k]) prod *= g.edges[k].length;
      total += prod;
      return;
    }
    for (std::size_t k = start; k < E; ++k) {
      idx[depth] = k;
      pick(k + 1, depth + 1);
    }
  };
  pick(0, 0);
  return total;
}

/// max of Q(lambda, x) - Q(lambda, lambda)/2 over every lambda in the box
/// |lambda_i| <= w_i. Rational inputs are cleared of denominators and
/// compared as integers.
inline FieldScalar theta_box_max(const FieldMatrix &Q, const std::vector<FieldScalar> &x, const std::vector<Int> &w) {
  const std::size_t g = Q.rows();
  const auto D = Q(0, 0).disc();
  std::vector<std::int64_t> lam(g), hi(g);
  for (std::size_t i = 0; i < g; ++i) hi[i] = static_cast<std::int64_t>(w[i]), lam[i] = -hi[i];
  auto advance = [&] {
    std::size_t pos = 0;
    while (pos < g && lam[pos] == hi[pos]) lam[pos] = -hi[pos], ++pos;
    if (pos == g) return false;
    ++lam[pos];
    return true;
  };

  if (D == 0) {
    // 2 L Q(lambda, x) - L Q(lambda, lambda) with L a common denominator
    Int L = 1;
    for (std::size_t i = 0; i < g; ++i) {
      L = lcm_int(L, boost::multiprecision::denominator(x[i].rat()));
      for (std::size_t j = 0; j < g; ++j) L = lcm_int(L, boost::multiprecision::denominator(Q(i, j).rat()));
    }
    L = L * L;
    std::vector<std::vector<Int>> A(g, std::vector<Int>(g)), B(g, std::vector<Int>(g));
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < g; ++j) {
        Rational qi = Q(i, j).rat() * Rational(L);
        A[i][j] = boost::multiprecision::numerator(qi);
      }
    std::vector<Int> Ax(g, Int(0));
    for (std::size_t i = 0; i < g; ++i) {
      Rational acc = 0;
      for (std::size_t j = 0; j < g; ++j) acc += Q(i, j).rat() * x[j].rat();
      Ax[i] = boost::multiprecision::numerator(acc * Rational(2 * L));
    }
    bool first = true;
    Int best = 0;
    do {
      Int v = 0;
      for (std::size_t i = 0; i < g; ++i) {
        v += Ax[i] * lam[i];
        for (std::size_t j = 0; j < g; ++j) v -= A[i][j] * lam[i] * lam[j];
      }
      if (first || v > best) best = v;
      first = false;
    } while (advance());
    return FieldScalar(Rational(best, 2 * L), 0);
  }

  bool first = true;
  FieldScalar best(0, D);
  do {
    FieldScalar lx(0, D), ll(0, D);
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < g; ++j) {
        lx += Q(i, j) * Rational(lam[i]) * x[j];
        ll += Q(i, j) * Rational(lam[i] * lam[j]);
      }
    FieldScalar val = lx - ll * Rational(1, 2);
    if (first || val > best) best = val;
    first = false;
  } while (advance());
  return best;
}

} // namespace tropcount::oracle
