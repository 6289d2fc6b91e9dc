#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "twideal/homology.hpp"

using namespace twideal;

namespace {

using QRing = PolyRing<RationalField>;
using QIdeal = HomIdeal<RationalField>;

QIdeal ideal(const QRing& R, std::vector<std::string> g) { return QIdeal::parse(R, g); }

// Sum_j (-1)^j dim (F_j)_n computed from the Betti shifts.
long euler_characteristic(const FreeResolution<RationalField>& F, int length, int n, int nvars) {
  long acc = 0;
  for (int j = 0; j <= length; ++j)
    for (int a : F.shifts(j)) {
      if (n - a < 0) continue;
      long c = static_cast<long>(monomials_of_degree(nvars, n - a).size());
      acc += (j % 2 == 0 ? c : -c);
    }
  return acc;
}

void expect_complex(const QRing& R, const FreeResolution<RationalField>& F, int length) {
  for (int j = 2; j <= length; ++j) {
    auto d = F.map(j), e = F.map(j - 1);
    for (const auto& col : d.columns) {
      auto img = apply_map(R, e, col);
      EXPECT_TRUE(img.is_zero()) << "d_" << j - 1 << " o d_" << j << " != 0";
    }
  }
}

}  // namespace

TEST(FreeResolutionTest, PrincipalIdeal) {
  QRing R(3);
  ResolutionResult info;
  auto F = free_resolution(ideal(R, {"x0"}), 1, &info);
  EXPECT_EQ(F.ranks(2), (std::vector<std::size_t>{1, 1, 0}));
  EXPECT_EQ(F.shifts(1), (std::vector<int>{1}));
}

TEST(FreeResolutionTest, KoszulOnTwoVariables) {
  QRing R(3);
  auto F = free_resolution(ideal(R, {"x0", "x1"}), 3);
  EXPECT_EQ(F.ranks(3), (std::vector<std::size_t>{1, 2, 1, 0}));
  EXPECT_EQ(F.shifts(1), (std::vector<int>{1, 1}));
  EXPECT_EQ(F.shifts(2), (std::vector<int>{2}));
  expect_complex(R, F, 2);
}

TEST(FreeResolutionTest, ThreeCoordinatePoints) {
  QRing R(3);
  auto I = ideal(R, {"x0*x1", "x0*x2", "x1*x2"});
  auto F = free_resolution(I, 3);
  EXPECT_EQ(F.ranks(3), (std::vector<std::size_t>{1, 3, 2, 0}));
  expect_complex(R, F, 3);
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(euler_characteristic(F, 3, n, 3), I.hilbert_function(n)) << n;
}

TEST(FreeResolutionTest, LengthClampedWithNotice) {
  QRing R(3);
  ResolutionResult info;
  free_resolution(ideal(R, {"x0", "x1", "x2"}), 7, &info);
  ASSERT_EQ(info.notices.size(), 1u);
  EXPECT_EQ(info.length, 3);
}

TEST(FreeResolutionTest, ExactnessByHilbertFunction) {
  QRing R(4);
  auto I = ideal(R, {"x0^2 - x1*x2", "x1^2 - x0*x3", "x0*x1 - x2*x3"});
  auto F = free_resolution(I, 4);
  expect_complex(R, F, 4);
  for (int n = 0; n <= 7; ++n) EXPECT_EQ(euler_characteristic(F, 4, n, 4), I.hilbert_function(n)) << n;
}

TEST(GradedTor, DisjointPointsOfLine) {
  QRing R(2);
  auto p = ideal(R, {"x0"}), q = ideal(R, {"x1"});
  EXPECT_TRUE(graded_tor(p, q, 0).sheaf_zero());
  EXPECT_TRUE(graded_tor(p, q, 1).sheaf_zero());
}

TEST(GradedTor, PointOnLine) {
  QRing R(3);
  auto T = graded_tor(ideal(R, {"x0", "x1"}), ideal(R, {"x0"}), 1);
  EXPECT_FALSE(T.sheaf_zero());
  EXPECT_EQ(T.hilbert_polynomial, UniPoly::constant(Rational(1)));
}

TEST(GradedTor, NestedSubschemes) {
  QRing R(3);
  auto V = ideal(R, {"x0^2 + x1^2 - x2^2"});
  auto W = ideal(R, {"x0", "x1 - x2"});
  EXPECT_FALSE(graded_tor(V, W, 1).sheaf_zero());
}

TEST(GradedTor, PresentationMatchesDimensions) {
  QRing R(3);
  auto I = ideal(R, {"x0", "x1"}), J = ideal(R, {"x0"});
  TorCalculator<RationalField> calc(I);
  auto T = calc.tor(J, 1, 6);
  auto pres = calc.presentation(T);
  ASSERT_EQ(pres.generator_degrees.size(), 1u);
  EXPECT_EQ(pres.generator_degrees[0], 1);
  // Tor_1 = S/(x0, x1)(-1): relations are x0 and x1.
  EXPECT_EQ(pres.relations.source_rank(), 2u);
}

TEST(Transversality, LineAndTangentConic) {
  QRing R(3);
  auto line = ideal(R, {"x2"});
  auto conic = ideal(R, {"x0*x2 - x1^2"});
  EXPECT_TRUE(homologically_transverse(line, conic).transverse);
}

TEST(Transversality, PointOnLineFailsAtOne) {
  QRing R(3);
  auto v = homologically_transverse(ideal(R, {"x0", "x1"}), ideal(R, {"x0"}));
  EXPECT_FALSE(v.transverse);
  EXPECT_EQ(v.failing_index, 1);
}

TEST(Transversality, AgainstAmbient) {
  QRing R(3);
  EXPECT_TRUE(homologically_transverse(ideal(R, {"x0 - x1", "x2"}), QIdeal::zero(R)).transverse);
}

TEST(SerreMultiplicity, TwoLines) {
  QRing R(3);
  EXPECT_EQ(serre_multiplicity_total(ideal(R, {"x0"}), ideal(R, {"x1"})), 1);
}

TEST(SerreMultiplicity, TwoGenericConics) {
  QRing R(3);
  EXPECT_EQ(serre_multiplicity_total(ideal(R, {"x0^2 + x1^2 - x2^2"}), ideal(R, {"x0*x1 - 2*x2^2 + x0*x2"})), 4);
}

TEST(SerreMultiplicity, TangentLineConic) {
  QRing R(3);
  auto line = ideal(R, {"x2"}), conic = ideal(R, {"x0*x2 - x1^2"});
  EXPECT_EQ(serre_multiplicity_total(line, conic), 2);
  for (int j = 1; j <= 3; ++j) EXPECT_TRUE(graded_tor(line, conic, j).sheaf_zero());
}

TEST(SerreMultiplicity, ImproperIntersectionRejected) {
  QRing R(3);
  try {
    serre_multiplicity_total(ideal(R, {"x0"}), ideal(R, {"x0*x1"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ImproperIntersection);
  }
}

TEST(QuotientTor, SmoothPointOfCubic) {
  QRing R(3);
  auto X = ideal(R, {"x1^2*x2 - x0^3"});
  auto P = ideal(R, {"x0 - x2", "x1 - x2"});
  auto rep = truncated_tor_over_quotient(X, P, P, 4);
  EXPECT_TRUE(rep.routes_agree);
  EXPECT_TRUE(rep.nonzero[0]);
  EXPECT_TRUE(rep.nonzero[1]);
  for (int j = 2; j <= 4; ++j) EXPECT_FALSE(rep.nonzero[j]) << j;
  EXPECT_FALSE(rep.infinite_hd_evidence);
}

TEST(QuotientTor, CuspOfCuspidalCubic) {
  QRing R(3);
  auto X = ideal(R, {"x1^2*x2 - x0^3"});
  auto P = ideal(R, {"x0", "x1"});
  auto rep = truncated_tor_over_quotient(X, P, P, 6);
  EXPECT_TRUE(rep.routes_agree);
  for (int j = 1; j <= 6; ++j) {
    EXPECT_TRUE(rep.nonzero[j]) << j;
    EXPECT_TRUE(rep.nonzero_within_truncation[j]) << j;
  }
  EXPECT_TRUE(rep.infinite_hd_evidence);
}

TEST(QuotientTor, PlainProjectiveSpace) {
  QRing R(3);
  auto P = ideal(R, {"x0 - x1", "x2"});
  auto rep = truncated_tor_over_quotient(QIdeal::zero(R), P, P, 4);
  EXPECT_TRUE(rep.routes_agree);
  for (int j = 3; j <= 4; ++j) {
    EXPECT_FALSE(rep.nonzero[j]);
    for (long d : rep.truncated_dims[j]) EXPECT_EQ(d, 0);
  }
}

TEST(QuotientTor, PointOffCurveRejected) {
  QRing R(3);
  auto X = ideal(R, {"x1^2*x2 - x0^3"});
  auto P = ideal(R, {"x0 - x2", "x1"});
  EXPECT_THROW(truncated_tor_over_quotient(X, P, P, 2), Error);
}
