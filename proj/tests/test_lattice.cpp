#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace horikawa;

namespace {

DivisorClass cls(const SurfaceModel& s, std::vector<Integer> c) { return DivisorClass(s, std::move(c)); }

}  // namespace

TEST(Intersect, NegativeSectionOnF2) {
  const auto f2 = SurfaceModel::hirzebruch(2);
  EXPECT_EQ(self_intersection(negative_section(f2)), -2);
  EXPECT_EQ(intersect(negative_section(f2), fiber(f2)), 1);
  EXPECT_EQ(self_intersection(fiber(f2)), 0);
}

TEST(Intersect, ZeroClass) {
  oracle::Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto s = oracle::random_surface(rng);
    EXPECT_EQ(intersect(DivisorClass::zero(s), oracle::random_class(rng, s)), 0);
  }
}

TEST(Intersect, BranchSquareOnBlownUpF1) {
  const auto s = blow_up(SurfaceModel::hirzebruch(1), 8);
  const DivisorClass d = Integer(2) * negative_section(s) + Integer(3) * fiber(s) - exceptional_sum(s);
  EXPECT_EQ(self_intersection(d), 0);
}

TEST(Intersect, MismatchedSurfacesThrow) {
  EXPECT_THROW(intersect(fiber(SurfaceModel::hirzebruch(1)), fiber(SurfaceModel::hirzebruch(2))), SurfaceMismatch);
  EXPECT_THROW(cls(SurfaceModel::hirzebruch(0), {1}), PreconditionError);
}

TEST(Canonical, StandardSquares) {
  const auto p2 = SurfaceModel::projective_plane();
  EXPECT_EQ(canonical_class(p2), cls(p2, {-3}));
  EXPECT_EQ(self_intersection(canonical_class(p2)), 9);
  for (int e = 0; e <= 12; ++e) EXPECT_EQ(self_intersection(canonical_class(SurfaceModel::hirzebruch(e))), 8);
  EXPECT_EQ(self_intersection(canonical_class(blow_up(SurfaceModel::hirzebruch(1), 8))), 0);
}

TEST(Canonical, DropsByOnePerPointUpTo200) {
  for (const auto& base : {SurfaceModel::projective_plane(), SurfaceModel::hirzebruch(0), SurfaceModel::hirzebruch(3)}) {
    const Integer k2 = self_intersection(canonical_class(base));
    for (int n = 1; n <= 200; ++n) EXPECT_EQ(self_intersection(canonical_class(blow_up(base, n))), k2 - n);
  }
  // Nested blow-ups compose.
  const auto twice = blow_up(blow_up(SurfaceModel::hirzebruch(2), 5), 7);
  EXPECT_EQ(self_intersection(canonical_class(twice)), 8 - 12);
  EXPECT_EQ(intersect(canonical_class(twice), exceptional(twice, 11)), -1);
}

TEST(Lattice, BilinearAndSymmetricOnRandomPairs) {
  oracle::Rng rng(20261016);
  for (int i = 0; i < 10000; ++i) {
    const auto s = oracle::random_surface(rng);
    const auto a = oracle::random_class(rng, s);
    const auto b = oracle::random_class(rng, s);
    const auto c = oracle::random_class(rng, s);
    const Integer k = rng.uniform(-50, 50);
    ASSERT_EQ(intersect(a, b), intersect(b, a));
    ASSERT_EQ(intersect(a + c, b), intersect(a, b) + intersect(c, b));
    ASSERT_EQ(intersect(k * a, b), k * intersect(a, b));
    ASSERT_EQ(intersect(a, b), oracle::dot(a, b)) << s.describe();
  }
}

TEST(Lattice, BlowUpIsAnIsometry) {
  oracle::Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    const auto base = oracle::random_surface(rng);
    const auto blown = blow_up(base, rng.uniform(1, 10));
    const auto a = oracle::random_class(rng, base);
    const auto b = oracle::random_class(rng, base);
    ASSERT_EQ(intersect(pullback(blown, a), pullback(blown, b)), intersect(a, b));
    for (std::size_t j = base.picard_rank(); j < blown.picard_rank(); ++j)
      ASSERT_EQ(intersect(pullback(blown, a), exceptional(blown, j - blown.minimal_rank())), 0);
  }
}

TEST(Lattice, PullbackExamples) {
  for (int e = 0; e <= 5; ++e)
    for (int alpha = 0; alpha <= 8; ++alpha)
      for (int beta = 0; beta <= 8; ++beta) {
        const auto fe = SurfaceModel::hirzebruch(e);
        const auto s = blow_up(fe, 3);
        const auto d1 = cls(fe, {2, alpha});
        const auto d2 = cls(fe, {2, beta});
        EXPECT_EQ(intersect(pullback(s, d1), pullback(s, d2)), 2 * alpha + 2 * beta - 4 * e);
      }
  const auto s = blow_up(SurfaceModel::hirzebruch(4), 2);
  EXPECT_TRUE(pullback(s, DivisorClass::zero(SurfaceModel::hirzebruch(4))).is_zero());
  EXPECT_EQ(self_intersection(pullback(s, fiber(SurfaceModel::hirzebruch(4)))), 0);
  EXPECT_THROW(pullback(s, fiber(SurfaceModel::hirzebruch(3))), SurfaceMismatch);
  const auto nested = blow_up(s, 4);
  EXPECT_EQ(pullback_to(nested, fiber(SurfaceModel::hirzebruch(4))), fiber(nested));
}

TEST(Lattice, DivisionAndFormatting) {
  const auto s = blow_up(SurfaceModel::hirzebruch(0), 4);
  const auto d = Integer(2) * negative_section(s) + Integer(5) * fiber(s) - exceptional_sum(s);
  EXPECT_EQ(d.to_string(), "2D0 + 5F - (E1..E4)");
  EXPECT_THROW(d.divided_by(3), DivisibilityError);
  EXPECT_EQ((Integer(3) * d).divided_by(3), d);
  EXPECT_EQ(DivisorClass::zero(s).to_string(), "0");
}

TEST(H0, Examples) {
  const auto p2 = SurfaceModel::projective_plane();
  EXPECT_EQ(h0(cls(p2, {2})).value, 6);
  EXPECT_TRUE(h0(cls(p2, {2})).is_exact());
  EXPECT_EQ(h0(cls(SurfaceModel::hirzebruch(2), {2, 5})).value, 12);

  const auto s = blow_up(SurfaceModel::hirzebruch(1), 8, true);
  const SectionCount r = h0(negative_section(s) + Integer(4) * fiber(s) - exceptional_sum(s));
  EXPECT_EQ(r.value, 1);
  EXPECT_EQ(r.kind, CountKind::virtual_count);
}

TEST(H0, MatchesMonomialOracleOnScrolls) {
  for (int e = 0; e <= 6; ++e) {
    const auto fe = SurfaceModel::hirzebruch(e);
    for (int a = 0; a <= 6; ++a)
      for (int b = 0; b <= 30; ++b) {
        const SectionCount c = h0(cls(fe, {a, b}));
        ASSERT_EQ(c.value, oracle::monomial_count(e, a, b)) << "e=" << e << " a=" << a << " b=" << b;
        ASSERT_TRUE(c.is_exact());
      }
  }
}

TEST(H0, PlaneAndNegativeDegrees) {
  const auto p2 = SurfaceModel::projective_plane();
  for (int d = -5; d <= 40; ++d) EXPECT_EQ(h0(cls(p2, {d})).value, oracle::plane_count(d));
  EXPECT_EQ(h0(cls(SurfaceModel::hirzebruch(3), {-1, 10})).value, 0);
  EXPECT_EQ(h0(cls(SurfaceModel::hirzebruch(3), {2, -1})).value, 0);
}

TEST(H0, BlowUpRules) {
  const auto gen = blow_up(SurfaceModel::hirzebruch(0), 3, true);
  const auto special = blow_up(SurfaceModel::hirzebruch(0), 3, false);
  // Fixed exceptional components do not change the count.
  EXPECT_EQ(h0(negative_section(gen) + exceptional(gen, 0)), h0(negative_section(SurfaceModel::hirzebruch(0))));
  // Points beyond the dimension clamp at zero.
  EXPECT_EQ(h0(fiber(gen) - exceptional_sum(gen)).value, 0);
  EXPECT_THROW(h0(negative_section(gen) - Integer(2) * exceptional(gen, 0)), PreconditionError);
  EXPECT_THROW(h0(fiber(special) - exceptional(special, 0)), PreconditionError);
  EXPECT_TRUE(h0(fiber(special)).is_exact());
}

TEST(Ampleness, HirzebruchCriterion) {
  const auto f3 = SurfaceModel::hirzebruch(3);
  EXPECT_TRUE(is_ample_on_minimal(cls(f3, {1, 4})));
  EXPECT_FALSE(is_ample_on_minimal(cls(f3, {1, 3})));
  EXPECT_FALSE(is_ample_on_minimal(cls(f3, {0, 4})));
  EXPECT_TRUE(is_ample_on_minimal(cls(SurfaceModel::projective_plane(), {1})));
  EXPECT_THROW(is_ample_on_minimal(fiber(blow_up(f3, 1))), PreconditionError);
}

TEST(Surface, Description) {
  const auto s = blow_up(SurfaceModel::hirzebruch(1), 8);
  EXPECT_EQ(s.describe(), "Bl_8(F_1)");
  EXPECT_EQ(s.picard_rank(), 10u);
  EXPECT_EQ(s.basis_labels().front(), "D0");
  EXPECT_EQ(SurfaceModel::projective_plane().basis_labels(), std::vector<std::string>{"H"});
  EXPECT_THROW(blow_up(s, 0), PreconditionError);
  EXPECT_THROW(SurfaceModel::hirzebruch(-1), PreconditionError);
  EXPECT_FALSE(blow_up(SurfaceModel::hirzebruch(1), 8, false) == s);
}
