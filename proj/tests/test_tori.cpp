#include <random>

#include <gtest/gtest.h>

#include "tropcount/tropical_tori.hpp"
#include "tropcount/verify.hpp"

using namespace tropcount;

namespace {

FieldScalar sq(long long a, long long b, std::int64_t D) { return FieldScalar(Rational(a), Rational(b), D); }

TropicalTorus sqrt2_example() { return TropicalTorus(FieldMatrix{{sq(1, 0, 2), sq(0, 1, 2)}, {sq(0, 1, 2), sq(3, 0, 2)}}); }

IntMatrix M2(long long a, long long b, long long c, long long d) { return IntMatrix{{Int(a), Int(b)}, {Int(c), Int(d)}}; }

} // namespace

TEST(Torus, RejectsSingularEmbedding) {
  EXPECT_THROW(TropicalTorus(FieldMatrix{{sq(1, 0, 0), sq(2, 0, 0)}, {sq(2, 0, 0), sq(4, 0, 0)}}), Error);
}

TEST(PolarizedTorus, Validation) {
  TropicalTorus id(field_identity(2, 0));
  EXPECT_EQ(validate_polarized_torus(id, {int_identity(2)}), field_identity(2, 0));
  auto t = sqrt2_example();
  EXPECT_EQ(validate_polarized_torus(t, {int_identity(2)}), t.J());
  try {
    validate_polarized_torus(id, {M2(1, 2, 0, 1)});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSymmetric);
  }
  try {
    validate_polarized_torus(id, {M2(-1, 0, 0, 1)});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPositiveDefinite);
  }
  try {
    validate_polarized_torus(id, {M2(1, 1, 1, 1)});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::SingularPolarization);
  }
}

TEST(PolarizationType, Examples) {
  auto a = polarization_type({M2(1, 0, 0, 3)});
  EXPECT_EQ(a.type, (AbelianType{1, 3}));
  EXPECT_EQ(a.degree, 3);
  EXPECT_TRUE(a.primitive);
  auto b = polarization_type({M2(2, 1, 1, 2)});
  EXPECT_EQ(b.type, (AbelianType{1, 3}));
  EXPECT_TRUE(b.primitive);
  auto c = polarization_type({M2(2, 0, 0, 4)});
  EXPECT_EQ(c.type, (AbelianType{2, 4}));
  EXPECT_EQ(c.degree, 8);
  EXPECT_FALSE(c.primitive);
}

TEST(KernelOrder, Examples) {
  EXPECT_EQ(kernel_order({int_identity(2)}), 1);
  EXPECT_EQ(kernel_order({M2(1, 0, 0, 2)}), 2);
  EXPECT_EQ(kernel_order({M2(2, 0, 0, 4)}), 8);
}

TEST(DualPolarization, AdjugateAndType) {
  EXPECT_EQ(dual_polarization({M2(2, 0, 0, 5)}).C, M2(5, 0, 0, 2));
  auto d = dual_polarization({M2(2, 1, 1, 2)});
  EXPECT_EQ(cokernel_invariants(d.C), (AbelianType{1, 3}));
  std::mt19937_64 rng(9);
  for (std::size_t g : {2u, 3u})
    for (int k = 0; k < 30; ++k) {
      auto pc = gen::polarized(rng, g, 60);
      IntMatrix C = pc.C;
      Int n = determinant(C);
      IntMatrix adj = dual_polarization({C}).C;
      EXPECT_EQ(C * adj, int_identity(g).scaled(n));
      // dual of dual: adj(adj C) = n^{g-2} C
      Int scale = 1;
      for (std::size_t i = 2; i < g; ++i) scale *= n;
      EXPECT_EQ(adjugate(adj), C.scaled(scale));
    }
}

TEST(Hom, Degrees) {
  auto t = sqrt2_example();
  auto id = validate_hom(t, t, {int_identity(2), int_identity(2)});
  EXPECT_EQ(id.topological, 1);
  EXPECT_EQ(id.metric, 1);
  EXPECT_EQ(id.tropical, 1);
  auto m = validate_hom(t, t, {int_identity(2).scaled(Int(3)), int_identity(2).scaled(Int(3))});
  EXPECT_EQ(m.topological, 9);
  EXPECT_EQ(m.metric, 9);
  EXPECT_EQ(m.tropical, 81);

  std::mt19937_64 rng(4);
  auto pc = gen::polarized(rng, 3, 40);
  Int n = abs_int(determinant(pc.C));
  auto p = validate_hom(pc.torus, dual_torus(pc.torus), polarization_hom({pc.C}));
  EXPECT_EQ(p.topological, n);
  EXPECT_EQ(p.metric, n);
  EXPECT_EQ(p.tropical, n * n);

  try {
    validate_hom(t, t, {int_identity(2).scaled(Int(2)), int_identity(2)});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::DiagramDoesNotCommute);
  }
  TropicalTorus r(field_identity(2, 0));
  IntMatrix z = M2(1, 0, 0, 0);
  try {
    validate_hom(r, r, {z, z});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotIsogeny);
  }
}

TEST(Hom, PairingSymmetryIsDualHomCommuting) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 20; ++k) {
    auto pc = gen::polarized(rng, 2 + k % 2, 30);
    bool symmetric = true, commutes = true;
    try {
      validate_polarized_torus(pc.torus, {pc.C});
    } catch (const Error &) {
      symmetric = false;
    }
    try {
      validate_hom(pc.torus, dual_torus(pc.torus), polarization_hom({pc.C}));
    } catch (const Error &) {
      commutes = false;
    }
    EXPECT_TRUE(symmetric);
    EXPECT_EQ(symmetric, commutes);
  }
  // an asymmetric pairing breaks both
  TropicalTorus id(field_identity(2, 0));
  EXPECT_THROW(validate_hom(id, dual_torus(id), polarization_hom({M2(1, 2, 0, 1)})), Error);
}

TEST(Hom, DegreesMultiplyUnderComposition) {
  // on J = Id the commuting condition reads H = G^T
  std::mt19937_64 rng(21);
  TropicalTorus t(field_identity(3, 0));
  for (int k = 0; k < 30; ++k) {
    IntMatrix A = gen::unimodular(rng, 3) * int_diagonal({Int(1), Int(1 + k % 3), Int(2)}) * gen::unimodular(rng, 3);
    IntMatrix B = gen::unimodular(rng, 3) * int_diagonal({Int(1), Int(3), Int(1 + k % 4)});
    TorusHom f1{A, A.transpose()}, f2{B, B.transpose()};
    auto d1 = validate_hom(t, t, f1), d2 = validate_hom(t, t, f2);
    auto d = validate_hom(t, t, {f2.G * f1.G, f1.H * f2.H});
    EXPECT_EQ(d.topological, d1.topological * d2.topological);
    EXPECT_EQ(d.metric, d1.metric * d2.metric);
    EXPECT_EQ(d.tropical, d1.tropical * d2.tropical);
  }
}

TEST(Pullback, Examples) {
  IntMatrix C = M2(1, 1, 1, 3);
  EXPECT_EQ(pullback_polarization({int_identity(2), int_identity(2)}, {C}).C, C);
  EXPECT_EQ(pullback_polarization({int_identity(2).scaled(Int(3)), int_identity(2).scaled(Int(3))}, {C}).C,
            C.scaled(Int(9)));
  Int n = determinant(C);
  EXPECT_EQ(pullback_polarization(polarization_hom({C}), dual_polarization({C})).C, C.scaled(n));
}

TEST(Pullback, DeterminantMultiplies) {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 20; ++k) {
    auto pc = gen::polarized(rng, 2, 30);
    TorusHom f{gen::unimodular(rng, 2).scaled(Int(2)), gen::unimodular(rng, 2)};
    IntMatrix P = pullback_polarization(f, {pc.C}).C;
    EXPECT_EQ(abs_int(determinant(P)), abs_int(determinant(pc.C)) * abs_int(determinant(f.G)) * abs_int(determinant(f.H)));
  }
}

TEST(Simplicity, WorkedExamples) {
  auto v = find_subtorus(sqrt2_example(), 1000);
  EXPECT_EQ(v.kind, SubtorusVerdictKind::Simple);
  EXPECT_TRUE(v.exact);
  EXPECT_EQ(search_subtorus(sqrt2_example(), 1000).kind, SubtorusVerdictKind::Inconclusive);

  TropicalTorus split(FieldMatrix{{sq(1, 0, 2), sq(0, 1, 2)}, {sq(0, 1, 2), sq(1, 0, 2)}});
  auto w = find_subtorus(split, 10);
  EXPECT_EQ(w.kind, SubtorusVerdictKind::SubtorusFound);
  EXPECT_EQ(w.witness, (std::vector<Int>{1, 1}));
  auto s = search_subtorus(split, 10);
  EXPECT_EQ(s.kind, SubtorusVerdictKind::SubtorusFound);
  EXPECT_EQ(s.witness, (std::vector<Int>{1, 1}));

  TropicalTorus rational(FieldMatrix{{sq(2, 0, 0), sq(1, 0, 0)}, {sq(1, 0, 0), sq(5, 0, 0)}});
  auto r = find_subtorus(rational, 5);
  EXPECT_EQ(r.kind, SubtorusVerdictKind::SubtorusFound);
  EXPECT_EQ(r.witness, (std::vector<Int>{1, 0}));
}

TEST(Simplicity, GenusThreeSearch) {
  // block-diagonal: the first basis vector spans a rational line
  auto r2 = [](long long a, long long b) { return sq(a, b, 2); };
  TropicalTorus split(FieldMatrix{{r2(1, 0), r2(0, 0), r2(0, 0)}, {r2(0, 0), r2(1, 0), r2(0, 1)}, {r2(0, 0), r2(0, 1), r2(3, 0)}});
  auto v = find_subtorus(split, 3);
  EXPECT_EQ(v.kind, SubtorusVerdictKind::SubtorusFound);
  EXPECT_EQ(v.subtorus_dim, 1u);
  EXPECT_FALSE(v.exact);
  EXPECT_THROW(find_subtorus(TropicalTorus(field_identity(4, 0)), 2), Error);
}

TEST(Simplicity, SuiteAgreement) {
  auto r = verify_simplicity(kDefaultSeed, 300);
  for (const auto &c : r.checks) EXPECT_TRUE(c.pass()) << c.name << ": " << c.first_failure;
}
