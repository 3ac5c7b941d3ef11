#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tropcount/finite_abelian.hpp"
#include "tropcount/metric_graph.hpp"
#include "tropcount/normal_form.hpp"
#include "tropcount/theta_skeleton.hpp"
#include "tropcount/tropical_tori.hpp"

namespace tropcount {

/// A chain X --F1--> I --F2--> Lambda with F2 F1 = adj(C); F2 is the HNF
/// basis of I inside Lambda = Z^g. `subgroup` is I / adj(C) Z^g, written in
/// the Smith coordinates of Lambda / adj(C) Z^g.
struct FactorizationTriple {
  IntMatrix F1;
  IntMatrix F2;
  SubgroupRep subgroup;
};

namespace detail {
inline void require_polarization(const IntMatrix &C) {
  if (!C.square() || C.rows() == 0) raise(ErrorKind::DimensionMismatch, "polarization must be square");
  if (determinant(C) == 0) raise(ErrorKind::SingularPolarization, "det C = 0");
}
inline int sign_of(const Int &x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }
} // namespace detail

/// One triple per intermediate lattice adj(C) Z^g <= I <= Z^g, sorted by
/// the HNF of F2.
inline std::vector<FactorizationTriple> enumerate_factorizations(const IntMatrix &C,
                                                                 std::uint64_t budget = default_budget()) {
  detail::require_polarization(C);
  const IntMatrix adj = adjugate(C);
  const auto s = snf(adj);
  std::vector<Int> diag;
  for (std::size_t i = 0; i < adj.rows(); ++i) diag.push_back(s.S(i, i));
  const AbelianType ambient(diag);
  // U maps Lambda / adj(C) Z^g isomorphically onto Z^g / S Z^g
  const IntMatrix U_inv = to_integer(rational_inverse(s.U));

  std::vector<FactorizationTriple> out;
  for (auto &h : enumerate_subgroups(ambient, budget)) {
    IntMatrix F2 = hnf(U_inv * h.basis);
    RatMatrix F1q = rational_inverse(F2) * to_rational(adj);
    if (!is_integral(F1q)) raise(ErrorKind::ConditionViolated, "adj(C) Z^g is not contained in I");
    out.push_back({to_integer(F1q), std::move(F2), std::move(h)});
  }
  std::sort(out.begin(), out.end(), [](const FactorizationTriple &a, const FactorizationTriple &b) {
    const std::size_t g = a.F2.rows();
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < g; ++j)
        if (a.F2(i, j) != b.F2(i, j)) return a.F2(i, j) < b.F2(i, j);
    return false;
  });
  return out;
}

/// F1 C F2 = det(C) Id: pulling c_L back along the chain gives n times a
/// principal polarization (n = det C when det C > 0). Throws on failure.
inline bool s2_condition_check(const IntMatrix &C, const FactorizationTriple &t) {
  detail::require_polarization(C);
  const Int d = determinant(C);
  if (t.F2 * t.F1 != adjugate(C)) raise(ErrorKind::ConditionViolated, "F2 F1 != adj(C)");
  if (t.F1 * C * t.F2 != int_identity(C.rows()).scaled(d))
    raise(ErrorKind::ConditionViolated, "F1 C F2 != det(C) Id");
  return true;
}

/// Gram matrix K = (1/d) F2^T J^T adj(F1) of the principally polarized
/// torus Hom(I, R) / I, with d = sign(det C) det F1 (= |det F1| whenever
/// det C > 0). Equivalently K = F2^T P F2 / n for the pairing P = J^T C.
inline FieldMatrix build_ppav(const TropicalTorus &t, const IntMatrix &C, const FactorizationTriple &tr) {
  validate_polarized_torus(t, Polarization{C});
  const auto D = t.disc();
  const Int d = determinant(tr.F1) * detail::sign_of(determinant(C));
  FieldMatrix K = to_field(tr.F2, D).transpose() * t.J().transpose() * to_field(adjugate(tr.F1), D);
  K = K.scaled(Rational(1) / Rational(d));
  if (!K.is_symmetric()) raise(ErrorKind::ConditionViolated, "PPAV form is not symmetric");
  if (!is_positive_definite(K)) raise(ErrorKind::ConditionViolated, "PPAV form is not positive definite");
  return K;
}

/// n * #Hom^sym(G, G*) with G = coker(F1) = I / F1(X). The global factor n
/// from translations is not included.
inline Int multiplicity(const IntMatrix &C, const FactorizationTriple &t) {
  detail::require_polarization(C);
  Int n = abs_int(determinant(C));
  return n * hom_sym_count(cokernel_invariants(t.F1));
}

/// n^2 nu^dagger(d_1, ..., d_g) from the type alone.
inline Int total_count_closed(const AbelianType &type, std::uint64_t budget = default_budget()) {
  if (type.rank() != 2 && type.rank() != 3) raise(ErrorKind::UnsupportedRank, "curve count is defined for g = 2, 3");
  Int n = type.order();
  return n * n * nu_dagger(type, NuMethod::PrimePower, budget);
}

inline Int total_count_closed(const IntMatrix &C, std::uint64_t budget = default_budget()) {
  detail::require_polarization(C);
  return total_count_closed(cokernel_invariants(C), budget);
}

/// Rational torus J = C^{-T}, whose pairing J^T C is the identity. Used when
/// only a polarization matrix is supplied.
inline TropicalTorus default_torus_for(const IntMatrix &C) {
  detail::require_polarization(C);
  return TropicalTorus(to_field(rational_inverse(C).transpose(), 0));
}

struct SkeletonSummary {
  Skeleton skeleton;
  std::size_t genus = 0;
  bool three_edge_connected = false;
};

struct CountEntry {
  FactorizationTriple triple;
  AbelianType quotient; ///< G = coker(F1)
  Int multiplicity;
  FieldMatrix ppav_gram;
  std::optional<SkeletonSummary> skeleton;
};

struct CountReport {
  AbelianType type;
  Int n;
  AbelianType dual;
  Int kernel_factor;
  std::vector<CountEntry> entries;
  Int enumerated_total;
  Int closed_total;
  bool agreement = false;
  std::vector<std::string> warnings;

  /// kernel order times the number of triples.
  Int naive_count() const { return kernel_factor * Int(entries.size()); }
};

struct CountOptions {
  bool skeletons = false;
  std::uint64_t budget = default_budget();
  std::int64_t simplicity_bound = 8;
};

/// Sum over the factorization triples, times the kernel order, compared
/// against the closed form.
inline CountReport total_count_enumerated(const TropicalTorus &t, const IntMatrix &C, const CountOptions &opt = {}) {
  detail::require_polarization(C);
  const std::size_t g = C.rows();
  if (g != 2 && g != 3) raise(ErrorKind::UnsupportedRank, "curve count is defined for g = 2, 3");
  validate_polarized_torus(t, Polarization{C});

  CountReport r;
  auto pt = polarization_type(Polarization{C});
  r.type = pt.type;
  r.n = pt.degree;
  r.dual = dual_type(pt.type);
  r.kernel_factor = kernel_order(Polarization{C});

  Int sum = 0;
  std::size_t degenerate = 0, not_three_connected = 0;
  for (auto &tr : enumerate_factorizations(C, opt.budget)) {
    s2_condition_check(C, tr);
    CountEntry e;
    e.quotient = cokernel_invariants(tr.F1);
    e.multiplicity = multiplicity(C, tr);
    e.ppav_gram = build_ppav(t, C, tr);
    if (opt.skeletons) {
      SkeletonSummary s;
      s.skeleton = skeleton(e.ppav_gram);
      s.genus = genus(s.skeleton.graph);
      s.three_edge_connected = is_m_edge_connected(s.skeleton.graph, 3);
      if (s.skeleton.degenerate) ++degenerate;
      if (!s.three_edge_connected) ++not_three_connected;
      e.skeleton = std::move(s);
    }
    sum += e.multiplicity;
    e.triple = std::move(tr);
    r.entries.push_back(std::move(e));
  }
  r.enumerated_total = r.kernel_factor * sum;
  r.closed_total = total_count_closed(pt.type, opt.budget);
  r.agreement = r.enumerated_total == r.closed_total;

  if (degenerate)
    r.warnings.push_back("DegenerateSkeleton: " + std::to_string(degenerate) +
                         " skeleton(s) lie on a Voronoi cone boundary");
  if (not_three_connected)
    r.warnings.push_back(std::to_string(not_three_connected) + " skeleton(s) are not 3-edge-connected (Torelli hypothesis)");
  auto simple = find_subtorus(t, opt.simplicity_bound);
  if (simple.kind == SubtorusVerdictKind::SubtorusFound)
    r.warnings.push_back("torus is not simple: a subtorus exists");
  else if (simple.kind == SubtorusVerdictKind::Inconclusive)
    r.warnings.push_back("simplicity not established (bounded search found no subtorus)");
  return r;
}

} // namespace tropcount
