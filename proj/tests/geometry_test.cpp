#include <gtest/gtest.h>

#include "twideal/geometry.hpp"

using namespace twideal;

namespace {

using QRing = PolyRing<RationalField>;
using QIdeal = HomIdeal<RationalField>;

ProjAutomorphism diag(std::vector<long> e) {
  std::vector<Rational> r;
  for (long x : e) r.push_back(Rational(x));
  return ProjAutomorphism::diagonal(r);
}
ProjAutomorphism shear() { return ProjAutomorphism({{Rational(1), Rational(1)}, {Rational(0), Rational(1)}}); }

// Exhaustive re-check of a certified report through 2*n0 (at least the horizon).
void expect_sound(const OrbitReport& rep, const ProjAutomorphism& s, const QIdeal& Z) {
  ASSERT_EQ(rep.verdict, OrbitVerdict::CertifiedFinite);
  long upto = std::max<long>(2 * rep.n0, rep.horizon);
  std::vector<long> hits;
  for (long n = 0; n <= upto; ++n)
    if (lies_on(Z, rep.point.image(s, n))) hits.push_back(n);
  EXPECT_EQ(hits, rep.hits);
}

}  // namespace

TEST(RationalPointTest, ParseAndNormalize) {
  auto p = RationalPoint::parse("[ 2 : 4 : -1/3 ]");
  EXPECT_EQ(p.str(), "[1:2:-1/6]");
  EXPECT_EQ(RationalPoint::parse("[0:3]"), RationalPoint({Rational(0), Rational(1)}));
  EXPECT_THROW(RationalPoint::parse("[0:0]"), Error);
  EXPECT_THROW(RationalPoint::parse("1:2"), Error);
  EXPECT_THROW(RationalPoint::parse("[1:x]"), Error);
}

TEST(PointOrder, Examples) {
  auto p = RationalPoint::parse("[1:1:1]");
  EXPECT_EQ(point_order(p, ProjAutomorphism::identity(2), 5), 1);
  EXPECT_EQ(point_order(RationalPoint::parse("[1:1]"), diag({1, -1}), 5), 2);
  EXPECT_FALSE(point_order(RationalPoint::parse("[0:1]"), shear(), 100).has_value());
}

TEST(PointIdealTest, VanishesAtPoint) {
  QRing R(3);
  auto p = RationalPoint::parse("[0:2:3]");
  auto I = point_ideal(R, p);
  EXPECT_TRUE(lies_on(I, p));
  EXPECT_EQ(I.hilbert_polynomial(), UniPoly::constant(Rational(1)));
}

TEST(ForwardOrbit, DiagonalCertified) {
  QRing R(3);
  auto s = diag({1, 2, 3});
  auto Z = QIdeal::parse(R, {"x0 - x1"});
  auto rep = forward_orbit_hits(RationalPoint::parse("[1:1:1]"), s, Z, 20);
  EXPECT_EQ(rep.verdict, OrbitVerdict::CertifiedFinite);
  EXPECT_EQ(rep.hits, (std::vector<long>{0}));
  expect_sound(rep, s, Z);
}

TEST(ForwardOrbit, DominantTermWithLateHit) {
  QRing R(3);
  auto s = diag({1, 2, 3});
  auto Z = QIdeal::parse(R, {"x2 - x1 - 5*x0"});
  auto rep = forward_orbit_hits(RationalPoint::parse("[1:1:1]"), s, Z, 10);
  EXPECT_EQ(rep.verdict, OrbitVerdict::CertifiedFinite);
  EXPECT_EQ(rep.hits, (std::vector<long>{2}));
  expect_sound(rep, s, Z);
}

TEST(ForwardOrbit, FixedPointInside) {
  QRing R(3);
  auto rep = forward_orbit_hits(RationalPoint::parse("[0:0:1]"), diag({1, 2, 3}), QIdeal::parse(R, {"x0", "x1"}), 10);
  EXPECT_EQ(rep.verdict, OrbitVerdict::Infinite);
  EXPECT_EQ(rep.period, 1);
  EXPECT_EQ(rep.hits.size(), 11u);
}

TEST(ForwardOrbit, ShearCertifiedByPolynomialBound) {
  QRing R(2);
  auto Z = QIdeal::parse(R, {"x0"});
  auto rep = forward_orbit_hits(RationalPoint::parse("[0:1]"), shear(), Z, 10);
  EXPECT_EQ(rep.verdict, OrbitVerdict::CertifiedFinite);
  EXPECT_EQ(rep.hits, (std::vector<long>{0}));
  expect_sound(rep, shear(), Z);
  auto Z2 = QIdeal::parse(R, {"x0 - 7*x1"});
  auto rep2 = forward_orbit_hits(RationalPoint::parse("[0:1]"), shear(), Z2, 3);
  EXPECT_EQ(rep2.hits, (std::vector<long>{7}));
  expect_sound(rep2, shear(), Z2);
}

TEST(ForwardOrbit, SignParitySplit) {
  QRing R(3);
  auto rep = forward_orbit_hits(RationalPoint::parse("[1:1:1]"), diag({1, -1, 2}), QIdeal::parse(R, {"x0 - x1"}), 10);
  EXPECT_EQ(rep.verdict, OrbitVerdict::Infinite);
  EXPECT_EQ(rep.period, 2);
  auto rep2 = forward_orbit_hits(RationalPoint::parse("[1:1:1]"), diag({1, -1, 2}), QIdeal::parse(R, {"x2 - 4*x0"}), 10);
  EXPECT_EQ(rep2.verdict, OrbitVerdict::CertifiedFinite);
  EXPECT_EQ(rep2.hits, (std::vector<long>{2}));
}

TEST(ForwardOrbit, ProjectiveScalingInvariant) {
  QRing R(3);
  auto Z = QIdeal::parse(R, {"x2 - x1 - 5*x0"});
  auto p = RationalPoint::parse("[1:1:1]");
  auto a = forward_orbit_hits(p, diag({1, 2, 3}), Z, 10);
  auto b = forward_orbit_hits(p, diag({1, 2, 3}).scaled(Rational(-7, 2)), Z, 10);
  EXPECT_EQ(a.hits, b.hits);
  EXPECT_EQ(a.verdict, b.verdict);
}

TEST(Multiplicative, Examples) {
  EXPECT_TRUE(multiplicative_independence({Rational(2), Rational(3)}).independent);
  auto r = multiplicative_independence({Rational(2), Rational(4)});
  EXPECT_FALSE(r.independent);
  EXPECT_EQ(r.relation, (std::vector<long>{-2, 1}));
  EXPECT_TRUE(multiplicative_independence({Rational(6), Rational(10), Rational(15)}).independent);
  auto s = multiplicative_independence({Rational(-2), Rational(8)});
  EXPECT_FALSE(s.independent);
  EXPECT_EQ(s.relation, (std::vector<long>{-6, 2}));
  EXPECT_FALSE(multiplicative_independence({Rational(-1)}).independent);
  EXPECT_TRUE(multiplicative_independence({Rational(2, 3), Rational(3, 5)}).independent);
  EXPECT_THROW(multiplicative_independence({Rational(0)}), Error);
}

TEST(EigenDataTest, TorusGeneric) {
  EXPECT_TRUE(eigen_data(diag({1, 2, 3})).torus_generic());
  EXPECT_FALSE(eigen_data(diag({1, 2, 4})).torus_generic());
  EXPECT_FALSE(eigen_data(diag({1, 1, 3})).torus_generic());
  EXPECT_FALSE(eigen_data(shear()).torus_generic());
}

TEST(InvariantSubschemes, Counts) {
  QRing R2(2), R3(3);
  EXPECT_EQ(invariant_coordinate_subschemes(R3, diag({1, 2, 3}), 1).size(), 6u);
  auto line = invariant_coordinate_subschemes(R2, diag({1, 2}), 2, true);
  ASSERT_EQ(line.size(), 4u);
  EXPECT_TRUE(line[0].ideal.is_zero());
  EXPECT_THROW(invariant_coordinate_subschemes(R3, diag({1, 2, 4}), 1), Error);
}

TEST(InvariantSubschemes, UnionOfTwoPoints) {
  QRing R(3);
  for (const auto& y : invariant_coordinate_subschemes(R, diag({1, 2, 3}), 2))
    if (y.supports == std::vector<std::vector<int>>{{0, 2}, {1, 2}}) {
      EXPECT_TRUE(ideals_equal(y.ideal, QIdeal::parse(R, {"x2", "x0*x1"})));
      EXPECT_TRUE(ideals_equal(y.ideal, intersect(QIdeal::parse(R, {"x0", "x2"}), QIdeal::parse(R, {"x1", "x2"}))));
      return;
    }
  FAIL() << "union not enumerated";
}

TEST(CriticalTransversality, GenericPointCertified) {
  QRing R(3);
  auto s = diag({1, 2, 3});
  auto Z = point_ideal(R, RationalPoint::parse("[1:1:1]"));
  auto c = critical_transversality_certificate(Z, s);
  EXPECT_EQ(c.kind, CtKind::Certified);
  EXPECT_GT(c.checked, 6u);
  for (const auto& y : invariant_coordinate_subschemes(R, s, 3))
    EXPECT_TRUE(homologically_transverse(Z, y.ideal).transverse) << y.str();
}

TEST(CriticalTransversality, CoordinatePointRefuted) {
  QRing R(3);
  auto Z = point_ideal(R, RationalPoint::parse("[1:0:0]"));
  auto c = critical_transversality_certificate(Z, diag({1, 2, 3}));
  ASSERT_EQ(c.kind, CtKind::Refuted);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_TRUE(is_subset(c.witness->ideal, Z));  // nested: Z lies on the witness
  auto v = homologically_transverse(Z, c.witness->ideal);
  EXPECT_FALSE(v.transverse);
  EXPECT_EQ(v.failing_index, c.failing_index);
}

TEST(CriticalTransversality, DependentRatiosInconclusive) {
  QRing R(3);
  auto c = critical_transversality_certificate(point_ideal(R, RationalPoint::parse("[1:1:1]")), diag({1, 2, 4}));
  EXPECT_EQ(c.kind, CtKind::Inconclusive);
  EXPECT_EQ(c.reason, "invariant family not classified");
}
