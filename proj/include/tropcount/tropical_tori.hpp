#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "tropcount/finite_abelian.hpp"
#include "tropcount/matrix.hpp"
#include "tropcount/normal_form.hpp"

namespace tropcount {

/// Hom(X, R) / Lambda with both lattices pinned to Z^g. Column j of `J` is
/// j(lambda_j) written in the basis dual to the chosen basis of X.
class TropicalTorus {
public:
  explicit TropicalTorus(FieldMatrix J) : J_(std::move(J)) {
    if (!J_.square() || J_.rows() == 0) raise(ErrorKind::DimensionMismatch, "J must be square");
    D_ = discriminant_of(J_);
    if (determinant(J_).is_zero()) raise(ErrorKind::SingularMatrix, "lattice embedding J is not full rank");
  }

  std::size_t rank() const { return J_.rows(); }
  std::int64_t disc() const { return D_; }
  const FieldMatrix &J() const { return J_; }

private:
  FieldMatrix J_;
  std::int64_t D_ = 0;
};

/// c_L : Lambda -> X; column j is c_L(lambda_j) in X-coordinates.
struct Polarization {
  IntMatrix C;
};

/// A morphism of tori: G : Lambda_1 -> Lambda_2 and H : X_2 -> X_1.
struct TorusHom {
  IntMatrix G;
  IntMatrix H;
};

/// The dual torus: Lambda-hat = X, X-hat = Lambda, embedding J^T.
inline TropicalTorus dual_torus(const TropicalTorus &t) { return TropicalTorus(t.J().transpose()); }

namespace detail {
inline void require_nonsingular(const IntMatrix &C) {
  if (!C.square() || C.rows() == 0) raise(ErrorKind::DimensionMismatch, "polarization must be square");
  if (determinant(C) == 0) raise(ErrorKind::SingularPolarization, "det C = 0");
}
} // namespace detail

/// Checks that (T, L) is a polarized tropical abelian variety and returns the
/// pairing matrix P = J^T C, P(i, j) = <lambda_i, lambda_j>.
inline FieldMatrix validate_polarized_torus(const TropicalTorus &t, const Polarization &l) {
  if (l.C.rows() != t.rank() || l.C.cols() != t.rank())
    raise(ErrorKind::DimensionMismatch, "C is " + l.C.shape() + ", torus has rank " + std::to_string(t.rank()));
  detail::require_nonsingular(l.C);
  FieldMatrix P = t.J().transpose() * to_field(l.C, t.disc());
  if (!P.is_symmetric()) raise(ErrorKind::NotSymmetric, "pairing J^T C is not symmetric");
  // the dual pairing J adj(C) is symmetric iff J^T C is
  FieldMatrix dual_pairing = t.J() * to_field(adjugate(l.C), t.disc());
  if (!dual_pairing.is_symmetric())
    raise(ErrorKind::ConditionViolated, "J^T C symmetric but J adj(C) is not");
  if (!is_positive_definite(P)) raise(ErrorKind::NotPositiveDefinite, "pairing J^T C is not positive definite");
  return P;
}

struct PolarizationType {
  AbelianType type;
  Int degree;
  bool primitive = false;
};

inline PolarizationType polarization_type(const Polarization &l) {
  detail::require_nonsingular(l.C);
  AbelianType t = cokernel_invariants(l.C);
  Int n = t.order();
  bool primitive = t[0] == 1;
  return {std::move(t), std::move(n), primitive};
}

/// Order of ker(A -> A-hat), i.e. |det C|.
inline Int kernel_order(const Polarization &l) {
  detail::require_nonsingular(l.C);
  return abs_int(determinant(l.C));
}

/// The dual polarization adj(C) on A-hat.
inline Polarization dual_polarization(const Polarization &l) {
  detail::require_nonsingular(l.C);
  IntMatrix adj = adjugate(l.C);
  const std::size_t g = l.C.rows();
  IntMatrix scalar = int_identity(g).scaled(determinant(l.C));
  if (l.C * adj != scalar || adj * l.C != scalar)
    raise(ErrorKind::ConditionViolated, "C adj(C) != det(C) Id");
  if (cokernel_invariants(adj) != dual_type(cokernel_invariants(l.C)))
    raise(ErrorKind::ConditionViolated, "type of adj(C) is not the dual type");
  return {std::move(adj)};
}

struct HomDegrees {
  Int topological; ///< |det G| = [Lambda_2 : g(Lambda_1)]
  Int metric;      ///< |det H| = [X_1 : h(X_2)]
  Int tropical;    ///< product of the two
};

inline HomDegrees validate_hom(const TropicalTorus &t1, const TropicalTorus &t2, const TorusHom &f) {
  if (t1.disc() != t2.disc()) raise(ErrorKind::MixedDiscriminant, "tori over different fields");
  if (f.G.rows() != t2.rank() || f.G.cols() != t1.rank() || f.H.rows() != t1.rank() || f.H.cols() != t2.rank())
    raise(ErrorKind::DimensionMismatch, "hom matrices do not match the tori ranks");
  const auto D = t1.disc();
  if (t2.J() * to_field(f.G, D) != to_field(f.H, D).transpose() * t1.J())
    raise(ErrorKind::DiagramDoesNotCommute, "J2 G != H^T J1");
  Int dt = abs_int(determinant(f.G));
  Int dm = abs_int(determinant(f.H));
  if (dt == 0 || dm == 0) raise(ErrorKind::NotIsogeny, "hom has a zero degree");
  return {dt, dm, dt * dm};
}

/// f* c_L = h o c_L o g.
inline Polarization pullback_polarization(const TorusHom &f, const Polarization &l) {
  return {f.H * l.C * f.G};
}

/// The polarization isogeny A -> A-hat as a TorusHom (G = H = C).
inline TorusHom polarization_hom(const Polarization &l) { return {l.C, l.C}; }

// ---------------------------------------------------------------------------
// Simplicity

enum class SubtorusVerdictKind { Simple, SubtorusFound, Inconclusive };

inline const char *to_string(SubtorusVerdictKind k) {
  switch (k) {
  case SubtorusVerdictKind::Simple: return "simple";
  case SubtorusVerdictKind::SubtorusFound: return "subtorus";
  case SubtorusVerdictKind::Inconclusive: return "inconclusive";
  }
  return "?";
}

/// For a rank-1 witness, `witness` is a primitive lambda in Lambda whose
/// image spans a rational line. For a rank-2 witness (g = 3), it is a
/// primitive covector c with {lambda : c . j(lambda) = 0} of rank 2.
struct SubtorusVerdict {
  SubtorusVerdictKind kind = SubtorusVerdictKind::Inconclusive;
  std::vector<Int> witness;
  std::size_t subtorus_dim = 0;
  bool exact = false;
};

namespace detail {

/// J = A + sqrt(D) B with A, B rational; both scaled by one positive integer
/// so that they become integral (parallelism tests are scale-free).
struct SplitEmbedding {
  IntMatrix A;
  IntMatrix B;
};

inline SplitEmbedding split_scaled(const FieldMatrix &J) {
  Int den = 1;
  for (std::size_t i = 0; i < J.rows(); ++i)
    for (std::size_t j = 0; j < J.cols(); ++j) {
      den = lcm_int(den, boost::multiprecision::denominator(J(i, j).rat()));
      den = lcm_int(den, boost::multiprecision::denominator(J(i, j).irr()));
    }
  IntMatrix A(J.rows(), J.cols(), Int(0)), B(J.rows(), J.cols(), Int(0));
  for (std::size_t i = 0; i < J.rows(); ++i)
    for (std::size_t j = 0; j < J.cols(); ++j) {
      Rational a = J(i, j).rat() * Rational(den);
      Rational b = J(i, j).irr() * Rational(den);
      A(i, j) = boost::multiprecision::numerator(a);
      B(i, j) = boost::multiprecision::numerator(b);
    }
  return {std::move(A), std::move(B)};
}

/// Shell order used for witnesses: by height, then lexicographically
/// descending among vectors whose first nonzero entry is positive.
inline bool witness_before(const std::vector<Int> &a, const std::vector<Int> &b) {
  Int ha = 0, hb = 0;
  for (const auto &x : a) ha = std::max(ha, abs_int(x));
  for (const auto &x : b) hb = std::max(hb, abs_int(x));
  if (ha != hb) return ha < hb;
  return a > b;
}

inline std::vector<Int> canonical_primitive(std::vector<Int> v) {
  Int g = 0;
  for (const auto &x : v) g = gcd_int(g, x);
  if (g == 0) return v;
  for (auto &x : v) x /= g;
  for (const auto &x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto &y : v) y = -y;
    break;
  }
  return v;
}

inline bool is_rational_square(const Rational &q, Rational &root) {
  if (q < 0) return false;
  Int num = boost::multiprecision::numerator(q), den = boost::multiprecision::denominator(q);
  Int rn = boost::multiprecision::sqrt(num), rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return false;
  root = Rational(rn, rd);
  return true;
}

/// Checks whether two integer vectors are parallel (all 2x2 minors vanish).
inline bool parallel(const std::vector<Int> &u, const std::vector<Int> &v) {
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (u[i] * v[j] != u[j] * v[i]) return false;
  return true;
}

inline std::vector<Int> mat_vec(const IntMatrix &M, const std::vector<Int> &x) {
  std::vector<Int> y(M.rows(), Int(0));
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) y[i] += M(i, j) * x[j];
  return y;
}
inline std::vector<Int> vec_mat(const std::vector<Int> &c, const IntMatrix &M) {
  std::vector<Int> y(M.cols(), Int(0));
  for (std::size_t j = 0; j < M.cols(); ++j)
    for (std::size_t i = 0; i < M.rows(); ++i) y[j] += c[i] * M(i, j);
  return y;
}

/// Calls visit(v) on primitive vectors of Z^g with first nonzero entry
/// positive, shell by shell up to `bound`, in witness order; stops when
/// visit returns true. Only the boundary of each shell is generated.
template <typename Visit> bool for_each_primitive(std::size_t g, std::int64_t bound, Visit &&visit) {
  std::vector<std::int64_t> v(g);
  bool stop = false;
  auto emit = [&](std::int64_t h) {
    std::int64_t gg = 0;
    for (auto x : v) gg = std::gcd(gg, x);
    if (gg != 1) return;
    for (auto x : v) {
      if (x == 0) continue;
      if (x < 0) return;
      break;
    }
    (void)h;
    stop = visit(static_cast<const std::vector<std::int64_t> &>(v));
  };
  // descending lexicographic order over the shell max|v_i| = h
  auto rec = [&](auto &&self, std::size_t pos, bool extreme, std::int64_t h) -> void {
    if (stop) return;
    if (pos == g) {
      if (extreme) emit(h);
      return;
    }
    if (pos + 1 == g && !extreme) {
      v[pos] = h;
      self(self, pos + 1, true, h);
      if (stop) return;
      v[pos] = -h;
      self(self, pos + 1, true, h);
      return;
    }
    for (std::int64_t x = h; x >= -h && !stop; --x) {
      v[pos] = x;
      self(self, pos + 1, extreme || x == h || x == -h, h);
    }
  };
  for (std::int64_t h = 1; h <= bound && !stop; ++h) rec(rec, 0, false, h);
  return stop;
}

/// Integer parallelism tests, with an __int128 fast path when the scaled
/// embedding is small enough that no product can overflow.
class ParallelTester {
public:
  ParallelTester(const IntMatrix &A, const IntMatrix &B, std::int64_t bound) : A_(A), B_(B) {
    Int maxc = 0;
    for (const auto *M : {&A, &B})
      for (std::size_t i = 0; i < M->rows(); ++i)
        for (std::size_t j = 0; j < M->cols(); ++j) maxc = std::max(maxc, abs_int((*M)(i, j)));
    // |entries of A lambda| <= g * maxc * bound; minors need twice the bits
    fast_ = maxc < (Int(1) << 40) && bound < (1 << 20);
    if (fast_) {
      a_ = tropcount::to_i64(A).map([](std::int64_t x) { return static_cast<__int128>(x); });
      b_ = tropcount::to_i64(B).map([](std::int64_t x) { return static_cast<__int128>(x); });
    }
  }

  /// A lambda parallel to B lambda (column action) or c A parallel to c B
  /// (row action).
  bool test(const std::vector<std::int64_t> &x, bool row_action) const {
    const std::size_t g = x.size();
    if (fast_) {
      __int128 u[3] = {0, 0, 0}, w[3] = {0, 0, 0};
      for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) {
          if (row_action) {
            u[j] += x[i] * a_(i, j);
            w[j] += x[i] * b_(i, j);
          } else {
            u[i] += a_(i, j) * x[j];
            w[i] += b_(i, j) * x[j];
          }
        }
      for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i + 1; j < g; ++j)
          if (u[i] * w[j] != u[j] * w[i]) return false;
      return true;
    }
    std::vector<Int> xi(x.begin(), x.end());
    return row_action ? parallel(vec_mat(xi, A_), vec_mat(xi, B_)) : parallel(mat_vec(A_, xi), mat_vec(B_, xi));
  }

private:
  IntMatrix A_, B_;
  Matrix<__int128> a_, b_;
  bool fast_ = false;
};

} // namespace detail

/// Bounded exhaustive search for subtori (rank-1 lines first, then rank-2
/// planes when g = 3). Never claims simplicity: no witness => Inconclusive.
inline SubtorusVerdict search_subtorus(const TropicalTorus &t, std::int64_t height_bound) {
  const std::size_t g = t.rank();
  if (g != 2 && g != 3) raise(ErrorKind::UnsupportedRank, "subtorus search supports g = 2, 3");
  auto [A, B] = detail::split_scaled(t.J());
  const detail::ParallelTester tester(A, B, height_bound);
  SubtorusVerdict v;
  auto found_with = [&](bool row_action, std::size_t dim) {
    return detail::for_each_primitive(g, height_bound, [&](const std::vector<std::int64_t> &x) {
      if (!tester.test(x, row_action)) return false;
      v = {SubtorusVerdictKind::SubtorusFound, std::vector<Int>(x.begin(), x.end()), dim, false};
      return true;
    });
  };
  bool found = found_with(false, 1);
  if (!found && g == 3) found = found_with(true, 2);
  if (!found) v = {SubtorusVerdictKind::Inconclusive, {}, 0, false};
  return v;
}

/// Binary quadratic form q(a, b) = det[A lambda | B lambda] for g = 2, whose
/// rational zeros are exactly the lambda with a rational image direction.
struct RationalityForm {
  Rational a2, ab, b2;
};

inline RationalityForm rationality_form(const TropicalTorus &t) {
  if (t.rank() != 2) raise(ErrorKind::UnsupportedRank, "rationality form is defined for g = 2");
  const FieldMatrix &J = t.J();
  auto A = [&](std::size_t i, std::size_t j) { return J(i, j).rat(); };
  auto B = [&](std::size_t i, std::size_t j) { return J(i, j).irr(); };
  auto det2 = [](const Rational &x0, const Rational &x1, const Rational &y0, const Rational &y1) {
    return x0 * y1 - x1 * y0;
  };
  RationalityForm q;
  q.a2 = det2(A(0, 0), A(1, 0), B(0, 0), B(1, 0));
  q.ab = det2(A(0, 0), A(1, 0), B(0, 1), B(1, 1)) + det2(A(0, 1), A(1, 1), B(0, 0), B(1, 0));
  q.b2 = det2(A(0, 1), A(1, 1), B(0, 1), B(1, 1));
  return q;
}

/// Decides whether T admits a proper subtorus. Exact for g = 2 and for
/// rational J; for g = 3 over Q(sqrt D) a bounded search is used.
inline SubtorusVerdict find_subtorus(const TropicalTorus &t, std::int64_t height_bound) {
  const std::size_t g = t.rank();
  if (g != 2 && g != 3) raise(ErrorKind::UnsupportedRank, "find_subtorus supports g = 2, 3");
  std::vector<Int> e1(g, Int(0));
  e1[0] = 1;
  bool rational = true;
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) rational = rational && t.J()(i, j).is_rational();
  if (rational) return {SubtorusVerdictKind::SubtorusFound, e1, 1, true};
  if (g == 3) return search_subtorus(t, height_bound);

  RationalityForm q = rationality_form(t);
  if (q.a2 == 0 && q.ab == 0 && q.b2 == 0) return {SubtorusVerdictKind::SubtorusFound, e1, 1, true};
  Rational disc = q.ab * q.ab - 4 * q.a2 * q.b2;
  Rational root;
  if (!detail::is_rational_square(disc, root)) return {SubtorusVerdictKind::Simple, {}, 0, true};

  std::vector<std::vector<Int>> lines;
  auto add_line = [&](const Rational &a, const Rational &b) {
    Int den = lcm_int(boost::multiprecision::denominator(a), boost::multiprecision::denominator(b));
    Rational sa = a * Rational(den), sb = b * Rational(den);
    lines.push_back(detail::canonical_primitive({boost::multiprecision::numerator(sa), boost::multiprecision::numerator(sb)}));
  };
  if (q.a2 == 0) {
    // q = b (ab*a + b2*b)
    add_line(1, 0);
    if (q.ab != 0) add_line(-q.b2, q.ab);
  } else {
    // a/b = (-ab +- root) / (2 a2)
    add_line(-q.ab + root, 2 * q.a2);
    add_line(-q.ab - root, 2 * q.a2);
  }
  auto best = lines.front();
  for (const auto &l : lines)
    if (detail::witness_before(l, best)) best = l;
  return {SubtorusVerdictKind::SubtorusFound, best, 1, true};
}

} // namespace tropcount
