#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "twideal/cli.hpp"

using namespace twideal;

namespace {

std::string read_scene(const std::string& name) {
  std::ifstream in(std::string(TWIDEAL_SCENE_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SceneFile scene(const std::string& name) {
  auto p = parse_scene(read_scene(name));
  if (!p.ok()) {
    std::string all;
    for (const auto& d : p.diagnostics) all += d.str() + "\n";
    ADD_FAILURE() << all;
  }
  return *p.scene;
}

bool has_code(const SceneParse& p, const std::string& code, int line = -1) {
  for (const auto& d : p.diagnostics)
    if (d.code == code && (line < 0 || d.line == line)) return true;
  return false;
}

const ReportRow& row(const ClassificationReport& r, const char* name) {
  const ReportRow* x = r.find(name);
  if (!x) throw std::runtime_error(std::string("missing row ") + name);
  return *x;
}

bool has_flag(const ClassificationReport& r, const std::string& prefix) {
  for (const auto& f : r.flags)
    if (f.rfind(prefix, 0) == 0) return true;
  return false;
}

}  // namespace

TEST(SceneParse, MinimalProjectiveLine) {
  auto p = parse_scene("field rational\ndim 1\nsigma\n1 0\n0 1\nideal\nx0\nend\n");
  ASSERT_TRUE(p.ok());
  EXPECT_EQ(p.scene->dim, 1);
  EXPECT_TRUE(p.scene->automorphism().is_projective_identity());
  EXPECT_EQ(p.scene->ideal.size(), 1u);
  EXPECT_EQ(p.scene->horizon, 30);
}

TEST(SceneParse, FatPointScene) {
  SceneFile s = scene("fat_point.scene");
  EXPECT_EQ(s.dim, 2);
  EXPECT_EQ(s.ideal.size(), 2u);
  EXPECT_EQ(s.maxdeg, 4);
  EXPECT_FALSE(s.prime);
}

TEST(SceneParse, PointsCommentsAndBounds) {
  SceneFile s = scene("flagship.scene");
  ASSERT_EQ(s.points.size(), 2u);
  EXPECT_EQ(s.points[1].str(), "[1:2:5]");
  EXPECT_EQ(s.sigma[2][2], Rational(3));
}

TEST(SceneParse, PrimeField) {
  SceneFile s = scene("prime_field.scene");
  ASSERT_TRUE(s.prime);
  EXPECT_EQ(*s.prime, 101u);
}

TEST(SceneParse, DiagnosticsCarryLines) {
  auto p = parse_scene(read_scene("bad_syntax.scene"));
  EXPECT_FALSE(p.ok());
  EXPECT_TRUE(has_code(p, "SINGULAR_SIGMA"));
  EXPECT_TRUE(has_code(p, "INHOMOGENEOUS_GENERATOR", 8));
  EXPECT_TRUE(has_code(p, "UNKNOWN_KEYWORD", 10));
  for (std::size_t i = 1; i < p.diagnostics.size(); ++i)
    EXPECT_LE(p.diagnostics[i - 1].line, p.diagnostics[i].line);
}

TEST(SceneParse, MoreDiagnostics) {
  EXPECT_TRUE(has_code(parse_scene("dim 12\n"), "DIM_RANGE", 1));
  EXPECT_TRUE(has_code(parse_scene("dim 1\nsigma\n1 0 0\n0 1\nideal\nx0\nend\n"), "NONSQUARE_SIGMA"));
  EXPECT_TRUE(has_code(parse_scene("dim 1\nsigma\n1 0\n0 1\nideal\nx0\n"), "UNTERMINATED_BLOCK"));
  EXPECT_TRUE(has_code(parse_scene("dim 1\nsigma\n1 0\n0 1\n"), "MISSING_SECTION"));
  EXPECT_TRUE(has_code(parse_scene("dim 1\nsigma\n1 0\n0 1\nideal\nx0 +* x1\nend\n"), "BAD_POLYNOMIAL", 6));
  EXPECT_TRUE(has_code(parse_scene("dim 1\nsigma\n1 0\n0 1/0\nideal\nx0\nend\n"), "BAD_RATIONAL", 4));
  EXPECT_TRUE(has_code(parse_scene("dim 1\nsigma\n1 0\n0 1\nideal\nx0\nend\npoint [1:2:3]\n"), "BAD_POINT"));
  EXPECT_TRUE(has_code(parse_scene("field prime 7\ndim 1\nsigma\n1 0\n0 7\nideal\nx0\nend\n"), "SINGULAR_SIGMA"));
  EXPECT_TRUE(has_code(parse_scene("field prime 8\ndim 1\nsigma\n1 0\n0 1\nideal\nx0\nend\n"), "BAD_FIELD", 1));
}

TEST(ComponentAnalysis, TwoFixedLines) {
  SceneFile s = scene("lines.scene");
  PolyRing<RationalField> R(3);
  IdealizerScene<RationalField> sc(scene_ideal(R, s.ideal), s.automorphism());
  auto ca = component_analysis(sc, 12);
  EXPECT_EQ(ca.source, "monomial");
  ASSERT_EQ(ca.components.size(), 2u);
  for (const auto& c : ca.components) {
    EXPECT_EQ(c.codim, 1);
    EXPECT_EQ(c.order, 1);
  }
  EXPECT_FALSE(ca.W);
  ASSERT_TRUE(ca.J);
  EXPECT_TRUE(ideals_equal(*ca.J, sc.ideal()));
  EXPECT_EQ(ca.j_period, 1);
}

TEST(ComponentAnalysis, GenericPointHasLargeOrder) {
  SceneFile s = scene("flagship.scene");
  PolyRing<RationalField> R(3);
  IdealizerScene<RationalField> sc(scene_ideal(R, s.ideal), s.automorphism());
  auto ca = component_analysis(sc, 12);
  ASSERT_EQ(ca.components.size(), 1u);
  EXPECT_EQ(ca.components[0].codim, 2);
  EXPECT_FALSE(ca.components[0].finite_order());
  EXPECT_FALSE(ca.has_fixed_part());
}

TEST(ComponentAnalysis, SwapHasPeriodTwo) {
  SceneFile s = scene("swap.scene");
  PolyRing<RationalField> R(3);
  IdealizerScene<RationalField> sc(scene_ideal(R, s.ideal), s.automorphism());
  auto ca = component_analysis(sc, 12);
  EXPECT_EQ(ca.source, "linear");
  ASSERT_EQ(ca.components.size(), 1u);
  EXPECT_EQ(ca.components[0].order, 2);
  EXPECT_EQ(ca.j_period, 2);
}

TEST(ComponentAnalysis, DeclaredAndVerified) {
  SceneFile s = scene("declared.scene");
  PolyRing<RationalField> R(3);
  std::vector<PrimaryComponent<RationalField>> comps;
  for (const auto& c : s.components) comps.push_back({scene_ideal(R, c.generators), scene_ideal(R, c.generators)});
  IdealizerScene<RationalField> sc(scene_ideal(R, s.ideal), s.automorphism(), comps);
  auto ca = component_analysis(sc, 12);
  EXPECT_EQ(ca.source, "declared");
  EXPECT_EQ(ca.components.size(), 2u);
}

TEST(ComponentAnalysis, UnavailableWithoutDeclaration) {
  PolyRing<RationalField> R(3);
  IdealizerScene<RationalField> sc(HomIdeal<RationalField>(R, {R.parse("x0^2 + x1^2 - x2^2")}),
                                   ProjAutomorphism::diagonal({Rational(1), Rational(2), Rational(3)}));
  try {
    component_analysis(sc, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Precondition);
  }
}

TEST(Classify, FlagshipRows) {
  auto rep = classify(scene("flagship.scene"));
  ASSERT_EQ(rep.rows.size(), 8u);
  EXPECT_EQ(row(rep, kRightNoetherian).verdict, "yes");
  EXPECT_EQ(row(rep, kRightNoetherian).evidence, Evidence::Heuristic);
  EXPECT_EQ(row(rep, kRightNoetherian).horizon, 30);
  EXPECT_EQ(row(rep, kStronglyRight).verdict, "yes");
  EXPECT_EQ(row(rep, kStronglyRight).evidence, Evidence::Heuristic);
  EXPECT_EQ(row(rep, kLeftChi1).verdict, "no");
  EXPECT_EQ(row(rep, kLeftChi1).evidence, Evidence::Certified);
  EXPECT_EQ(row(rep, kLeftNoetherian).verdict, "yes");
  EXPECT_EQ(row(rep, kLeftNoetherian).evidence, Evidence::Certified);
  EXPECT_EQ(row(rep, kStronglyLeft).verdict, "no");
  EXPECT_EQ(row(rep, kStronglyLeft).evidence, Evidence::Refuted);
  EXPECT_NE(row(rep, kStronglyLeft).witness.find("codimension 2"), std::string::npos);
  EXPECT_EQ(row(rep, kRightChi).verdict, "chi_1 holds, chi_2 fails");
  EXPECT_EQ(row(rep, kRightChi).evidence, Evidence::Certified);
  EXPECT_EQ(row(rep, kCohDim).verdict, "finite");
  EXPECT_EQ(row(rep, kTensor).verdict, "no");
  EXPECT_EQ(row(rep, kTensor).evidence, Evidence::Refuted);
  EXPECT_TRUE(has_flag(rep, "colon stabilizes at n0 = 1"));
}

TEST(Classify, FatPointIsNotFinitelyGenerated) {
  auto rep = classify(scene("fat_point.scene"));
  EXPECT_TRUE(has_flag(rep, "not a finitely generated idealizer"));
  for (const char* name : {kRightNoetherian, kStronglyRight, kLeftNoetherian, kStronglyLeft}) {
    EXPECT_EQ(row(rep, name).verdict, "no") << name;
    EXPECT_EQ(row(rep, name).evidence, Evidence::Refuted) << name;
  }
}

TEST(Classify, IdentityIsDegenerate) {
  auto rep = classify(scene("identity_p1.scene"));
  EXPECT_TRUE(has_flag(rep, "degenerate"));
  EXPECT_TRUE(has_flag(rep, "fixed part present"));
  EXPECT_EQ(row(rep, kRightNoetherian).verdict, "yes");
  EXPECT_EQ(row(rep, kRightNoetherian).evidence, Evidence::Certified);
  EXPECT_EQ(row(rep, kLeftChi1).evidence, Evidence::NotApplicable);
}

TEST(Classify, ShearOnProjectiveLine) {
  auto rep = classify(scene("shear_p1.scene"));
  EXPECT_EQ(row(rep, kRightNoetherian).evidence, Evidence::Heuristic);
  EXPECT_EQ(row(rep, kLeftNoetherian).verdict, "inconclusive");
  EXPECT_EQ(row(rep, kStronglyLeft).verdict, "inconclusive");
}

TEST(Classify, CuspProbeReportsInfiniteHd) {
  auto rep = classify(scene("cusp.scene"));
  EXPECT_EQ(row(rep, kCohDim).verdict, "infinite");
  EXPECT_EQ(row(rep, kCohDim).evidence, Evidence::Heuristic);
}

TEST(Classify, CertifiedRowsAgreeWithRecomputation) {
  SceneFile s = scene("flagship.scene");
  auto rep = classify(s);
  PolyRing<RationalField> R(3);
  HomIdeal<RationalField> Z = saturate(scene_ideal(R, s.ideal));
  auto sigma = s.automorphism();
  // left-noetherian: every invariant union is transverse to Z.
  for (const auto& Y : invariant_coordinate_subschemes(R, sigma, 3))
    EXPECT_TRUE(homologically_transverse(Z, Y.ideal).transverse) << Y.str();
  // strongly-left refutation: Z really has codimension 2.
  EXPECT_EQ(Z.codimension(), 2);
  // left-chi_1 certification: the point's orbit meets Z only at n = 0.
  auto o = forward_orbit_hits(RationalPoint::parse("[1:1:1]"), sigma, Z, 30);
  EXPECT_EQ(o.verdict, OrbitVerdict::CertifiedFinite);
  EXPECT_EQ(o.hits, std::vector<long>{0});
}

TEST(Classify, VerificationFailureSurfaces) {
  try {
    classify(scene("bad_declared.scene"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Verification);
  }
}

TEST(Classify, PrimeFieldMarksCertificateHypothesis) {
  auto rep = classify(scene("prime_field.scene"));
  EXPECT_EQ(row(rep, kLeftNoetherian).verdict, "inconclusive");
  EXPECT_EQ(row(rep, kRightNoetherian).evidence, Evidence::Heuristic);
}

TEST(Emit, EmptyReportIsHeaderOnly) {
  ClassificationReport empty;
  std::string text = emit(empty, "text");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1);
  EXPECT_EQ(text.rfind("predicate", 0), 0u);
  std::string rec = emit(empty, "records");
  EXPECT_EQ(std::count(rec.begin(), rec.end(), '\n'), 1);
  EXPECT_EQ(parse_records(rec), empty);
}

TEST(Emit, DeterministicAndRoundTrips) {
  SceneFile s = scene("flagship.scene");
  auto a = classify(s);
  auto b = classify(s);
  EXPECT_EQ(emit(a, "text"), emit(b, "text"));
  EXPECT_EQ(emit(a, "records"), emit(b, "records"));
  EXPECT_EQ(parse_records(emit(a, "records")), a);
  std::string rec = emit(a, "records");
  EXPECT_EQ(std::count(rec.begin(), rec.end(), '\n'), 9);
}

TEST(Emit, HeuristicRowsNeverSayCertified) {
  for (const char* name : {"flagship.scene", "shear_p1.scene", "cusp.scene", "prime_field.scene"}) {
    auto rep = classify(scene(name));
    std::istringstream text(emit(rep, "text"));
    for (std::string line; std::getline(text, line);) {
      if (line.find("heuristic") == std::string::npos) continue;
      EXPECT_EQ(line.find("certified"), std::string::npos) << line;
    }
    for (const auto& r : rep.rows) {
      if (r.evidence != Evidence::Heuristic) continue;
      EXPECT_EQ(r.rule.find("certified"), std::string::npos);
      EXPECT_EQ(r.note.find("certified"), std::string::npos);
    }
  }
}

TEST(Emit, BadRecordsRejected) {
  EXPECT_THROW(parse_records("{\"record\":\"row\"}\n"), Error);
  EXPECT_THROW(parse_records("not json\n"), Error);
  EXPECT_THROW(parse_records(""), Error);
  EXPECT_THROW(emit(ClassificationReport{}, "xml"), Error);
}
