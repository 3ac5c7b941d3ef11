#pragma once

#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include "tropcount/abelian_type.hpp"
#include "tropcount/matrix.hpp"

namespace tropcount {

namespace detail {

inline Int zero_like(const Int &) { return 0; }
inline Int one_like(const Int &) { return 1; }
inline std::int64_t zero_like(std::int64_t) { return 0; }
inline std::int64_t one_like(std::int64_t) { return 1; }
inline Rational zero_like(const Rational &) { return 0; }
inline Rational one_like(const Rational &) { return 1; }
inline FieldScalar zero_like(const FieldScalar &x) { return FieldScalar(0, x.disc()); }
inline FieldScalar one_like(const FieldScalar &x) { return FieldScalar(1, x.disc()); }

inline bool is_zero(const Int &x) { return x == 0; }
inline bool is_zero(std::int64_t x) { return x == 0; }
inline bool is_zero(const Rational &x) { return x == 0; }
inline bool is_zero(const FieldScalar &x) { return x.is_zero(); }

template <typename I> I abs_of(const I &x) { return x < 0 ? I(-x) : x; }

/// Returns (g, x, y) with x*a + y*b = g = gcd(a, b) >= 0.
template <typename I> std::tuple<I, I, I> ext_gcd(I a, I b) {
  I x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    I q = a / b;
    I r = a - q * b;
    a = b;
    b = r;
    I tx = x0 - q * x1;
    x0 = x1;
    x1 = tx;
    I ty = y0 - q * y1;
    y0 = y1;
    y1 = ty;
  }
  if (a < 0) return {I(-a), I(-x0), I(-y0)};
  return {a, x0, y0};
}

template <typename I> void row_axpy(Matrix<I> &m, std::size_t dst, const I &q, std::size_t src) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}
template <typename I> void col_axpy(Matrix<I> &m, std::size_t dst, const I &q, std::size_t src) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= q * m(i, src);
}

} // namespace detail

/// Determinant by fraction-free (Bareiss) elimination; valid over any of
/// the exact scalar types.
template <typename T> T determinant(const Matrix<T> &a) {
  if (!a.square()) raise(ErrorKind::DimensionMismatch, "determinant of non-square " + a.shape());
  const std::size_t n = a.rows();
  if (n == 0) return T(1);
  Matrix<T> m = a;
  T one = detail::one_like(a(0, 0));
  T prev = one;
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    if (detail::is_zero(m(k, k))) {
      std::size_t p = k + 1;
      while (p < n && detail::is_zero(m(p, k))) ++p;
      if (p == n) return detail::zero_like(a(0, 0));
      m.swap_rows(k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = detail::zero_like(a(0, 0));
    }
    prev = m(k, k);
  }
  T d = m(n - 1, n - 1);
  if (negate) d = -d;
  return d;
}

/// Matrix of cofactors transposed, so that A * adj(A) = det(A) * Id.
template <typename T> Matrix<T> adjugate(const Matrix<T> &a) {
  if (!a.square()) raise(ErrorKind::DimensionMismatch, "adjugate of non-square " + a.shape());
  const std::size_t n = a.rows();
  if (n == 1) return Matrix<T>(1, 1, detail::one_like(a(0, 0)));
  Matrix<T> adj(n, n, detail::zero_like(a(0, 0)));
  Matrix<T> minor(n - 1, n - 1, detail::zero_like(a(0, 0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = a(r, c);
        }
        ++mr;
      }
      T cof = determinant(minor);
      adj(j, i) = ((i + j) % 2 == 0) ? cof : T(-cof);
    }
  return adj;
}

/// Inverse over a field (Rational or FieldScalar) by Gauss-Jordan.
template <typename T> Matrix<T> inverse(const Matrix<T> &a) {
  if (!a.square()) raise(ErrorKind::DimensionMismatch, "inverse of non-square " + a.shape());
  const std::size_t n = a.rows();
  Matrix<T> m = a;
  Matrix<T> inv = Matrix<T>::identity(n, detail::one_like(a(0, 0)), detail::zero_like(a(0, 0)));
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && detail::is_zero(m(p, k))) ++p;
    if (p == n) raise(ErrorKind::SingularMatrix, "matrix is singular");
    m.swap_rows(k, p);
    inv.swap_rows(k, p);
    T pivot_inv = detail::one_like(a(0, 0)) / m(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      m(k, j) = m(k, j) * pivot_inv;
      inv(k, j) = inv(k, j) * pivot_inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || detail::is_zero(m(i, k))) continue;
      T f = m(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

inline RatMatrix rational_inverse(const IntMatrix &a) { return inverse(to_rational(a)); }

template <typename I> struct SnfResult {
  Matrix<I> U; ///< unimodular, rows x rows
  Matrix<I> S; ///< diagonal, s1 | s2 | ..., nonnegative
  Matrix<I> V; ///< unimodular, cols x cols
};

/// Smith normal form with transforms: U * A * V = S.
template <typename I> SnfResult<I> snf(const Matrix<I> &a) {
  using detail::abs_of;
  const std::size_t m = a.rows(), n = a.cols();
  SnfResult<I> r{Matrix<I>::identity(m, I(1), I(0)), a, Matrix<I>::identity(n, I(1), I(0))};
  Matrix<I> &S = r.S;

  auto move_min_to = [&](std::size_t t, std::size_t rlo, std::size_t clo, bool only_cross) {
    bool found = false;
    std::size_t bi = t, bj = t;
    I best = 0;
    for (std::size_t i = rlo; i < m; ++i)
      for (std::size_t j = clo; j < n; ++j) {
        if (only_cross && i != t && j != t) continue;
        if (S(i, j) == 0) continue;
        I v = abs_of(S(i, j));
        if (!found || v < best) {
          found = true;
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (!found) return false;
    if (bi != t) {
      S.swap_rows(t, bi);
      r.U.swap_rows(t, bi);
    }
    if (bj != t) {
      S.swap_cols(t, bj);
      r.V.swap_cols(t, bj);
    }
    return true;
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    if (!move_min_to(t, t, t, false)) break;
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (S(i, t) == 0) continue;
        I q = S(i, t) / S(t, t);
        detail::row_axpy(S, i, q, t);
        detail::row_axpy(r.U, i, q, t);
        if (S(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        I q = S(t, j) / S(t, t);
        detail::col_axpy(S, j, q, t);
        detail::col_axpy(r.V, j, q, t);
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) {
        move_min_to(t, t, t, true);
        continue;
      }
      // pivot must divide the rest of the block
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (S(i, j) % S(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      detail::row_axpy(S, t, I(-1), bad);
      detail::row_axpy(r.U, t, I(-1), bad);
    }
    if (S(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) S(t, j) = -S(t, j);
      for (std::size_t j = 0; j < m; ++j) r.U(t, j) = -r.U(t, j);
    }
  }
  return r;
}

/// Column-style Hermite normal form: H = A * W with W unimodular, H upper
/// triangular, positive diagonal, and H(i, j) in [0, H(i, i)) for j > i.
/// Two nonsingular matrices span the same lattice iff their HNFs agree.
template <typename I> Matrix<I> hnf(const Matrix<I> &a) {
  if (!a.square()) raise(ErrorKind::DimensionMismatch, "hnf of non-square " + a.shape());
  const std::size_t n = a.rows();
  Matrix<I> H = a;
  for (std::size_t ii = n; ii-- > 0;) {
    for (std::size_t j = 0; j < ii; ++j) {
      if (H(ii, j) == 0) continue;
      auto [g, x, y] = detail::ext_gcd(H(ii, ii), H(ii, j));
      I p = H(ii, ii) / g, q = H(ii, j) / g;
      for (std::size_t r = 0; r < n; ++r) {
        I ci = H(r, ii), cj = H(r, j);
        H(r, ii) = x * ci + y * cj;
        H(r, j) = p * cj - q * ci;
      }
    }
    if (H(ii, ii) == 0) raise(ErrorKind::SingularMatrix, "hnf requires a nonsingular matrix");
    if (H(ii, ii) < 0)
      for (std::size_t r = 0; r < n; ++r) H(r, ii) = -H(r, ii);
    for (std::size_t j = ii + 1; j < n; ++j) {
      I q = H(ii, j) / H(ii, ii);
      if (H(ii, j) - q * H(ii, ii) < 0) q -= 1;
      if (q != 0) detail::col_axpy(H, j, q, ii);
    }
  }
  return H;
}

/// Invariant factors of Z^g / A Z^g (length g, leading 1s kept).
inline AbelianType cokernel_invariants(const IntMatrix &a) {
  if (!a.square()) raise(ErrorKind::DimensionMismatch, "cokernel of non-square " + a.shape());
  if (determinant(a) == 0) raise(ErrorKind::InfiniteCokernel, "det = 0");
  auto r = snf(a);
  std::vector<Int> d;
  for (std::size_t i = 0; i < a.rows(); ++i) d.push_back(r.S(i, i));
  return AbelianType(std::move(d));
}

/// Exact Sylvester test on leading principal minors.
inline bool is_positive_definite(const FieldMatrix &q) {
  if (!q.square()) raise(ErrorKind::DimensionMismatch, "form must be square");
  discriminant_of(q);
  if (!q.is_symmetric()) raise(ErrorKind::NotSymmetric, "form is not symmetric");
  for (std::size_t k = 1; k <= q.rows(); ++k) {
    FieldMatrix lead(k, k, q(0, 0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead(i, j) = q(i, j);
    if (determinant(lead).sign() <= 0) return false;
  }
  return true;
}

inline Matrix<std::int64_t> to_i64(const IntMatrix &m) {
  return m.map([](const Int &x) { return tropcount::to_i64(x); });
}
inline IntMatrix from_i64(const Matrix<std::int64_t> &m) {
  return m.map([](std::int64_t x) { return Int(x); });
}

} // namespace tropcount
