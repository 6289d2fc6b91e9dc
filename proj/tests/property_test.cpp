#include <random>

#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "twideal/cli.hpp"

using namespace twideal;

namespace {

using QRing = PolyRing<RationalField>;
using QIdeal = HomIdeal<RationalField>;
using QPoly = Poly<Rational>;

QIdeal random_ideal(const QRing& R, std::mt19937& rng, int max_gens = 3, int max_deg = 3) {
  std::uniform_int_distribution<int> ngens(1, max_gens), deg(1, max_deg);
  std::vector<QPoly> g;
  int k = ngens(rng);
  for (int i = 0; i < k; ++i) g.push_back(oracle::random_form(R, deg(rng), rng));
  return QIdeal(R, g);
}

QIdeal random_monomial_ideal(const QRing& R, std::mt19937& rng, int max_gens = 3, int max_deg = 3) {
  std::uniform_int_distribution<int> ngens(1, max_gens), deg(1, max_deg);
  std::vector<QPoly> g;
  int k = ngens(rng);
  for (int i = 0; i < k; ++i) g.push_back(R.monomial(oracle::random_monomial(R.nvars(), deg(rng), rng)));
  return QIdeal(R, g);
}

/// A random f that lies in I about half of the time.
QPoly random_test_form(const QIdeal& I, std::mt19937& rng, int degree) {
  const QRing& R = I.ring();
  if (rng() % 2 == 0) return oracle::random_form(R, degree, rng, 4);
  QPoly f;
  for (const auto& g : I.gens()) {
    int e = degree - g.lead().deg;
    if (e < 0) continue;
    f = R.add(f, R.mul(g, oracle::random_form(R, e, rng)));
  }
  return f;
}

ProjAutomorphism random_automorphism(int nvars, std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-2, 2);
  for (;;) {
    RatMatrix m(nvars, std::vector<Rational>(nvars, Rational(0)));
    for (auto& row : m)
      for (auto& e : row) e = Rational(c(rng));
    try {
      return ProjAutomorphism(m);
    } catch (const Error&) {
    }
  }
}

ProjAutomorphism random_diagonal(int nvars, std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-5, 5);
  std::vector<Rational> e;
  for (int i = 0; i < nvars; ++i) {
    int v = 0;
    while (v == 0) v = c(rng);
    e.push_back(Rational(v));
  }
  return ProjAutomorphism::diagonal(e);
}

RationalPoint random_point(int nvars, std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-3, 3);
  for (;;) {
    std::vector<Rational> v;
    for (int i = 0; i < nvars; ++i) v.push_back(Rational(c(rng)));
    bool any = false;
    for (const auto& x : v) any = any || !x.is_zero();
    if (any) return RationalPoint(v);
  }
}

long hf(const QIdeal& I, int n) { return I.hilbert_function(n); }

}  // namespace

// --- kernel ---------------------------------------------------------------

TEST(KernelProperties, GroebnerDeterministicAndMatchesNaive) {
  std::mt19937 rng(1001);
  QRing R(3);
  for (int trial = 0; trial < 200; ++trial) {
    QIdeal I = random_ideal(R, rng);
    auto a = groebner_basis(R, I.gens());
    auto b = groebner_basis(R, I.gens());
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) ASSERT_TRUE(R.sub(a[i], b[i]).is_zero()) << trial;
    auto naive = oracle::naive_groebner(R, I.gens());
    ASSERT_EQ(naive.size(), a.size()) << trial;
    for (std::size_t i = 0; i < a.size(); ++i) ASSERT_TRUE(R.sub(a[i], naive[i]).is_zero()) << trial;
  }
}

TEST(KernelProperties, MembershipAgreesWithLinearAlgebra) {
  std::mt19937 rng(1002);
  QRing R(3);
  int members = 0;
  for (int trial = 0; trial < 200; ++trial) {
    QIdeal I = random_ideal(R, rng);
    for (int k = 0; k < 3; ++k) {
      int d = 1 + static_cast<int>(rng() % 4);
      QPoly f = random_test_form(I, rng, d);
      if (f.is_zero()) continue;
      bool in = I.contains(f);
      members += in;
      ASSERT_EQ(in, oracle::member(R, I.gens(), f)) << I.str() << " " << R.to_string(f);
    }
  }
  EXPECT_GT(members, 50);
}

TEST(KernelProperties, QuotientAdjunction) {
  std::mt19937 rng(1003);
  QRing R(3);
  for (int trial = 0; trial < 40; ++trial) {
    QIdeal I = random_ideal(R, rng, 3, 2), J = random_ideal(R, rng, 2, 2);
    QIdeal C = ideal_quotient(I, J);
    for (int k = 0; k < 4; ++k) {
      QPoly f = k % 2 ? random_test_form(C, rng, 2) : oracle::random_form(R, 2, rng);
      if (f.is_zero()) continue;
      bool all = true;
      for (const auto& g : J.gens()) all = all && I.contains(R.mul(f, g));
      ASSERT_EQ(C.contains(f), all);
    }
  }
}

TEST(KernelProperties, SaturationIdempotentAndQuotientPreservesIt) {
  std::mt19937 rng(1004);
  QRing R(3);
  for (int trial = 0; trial < 30; ++trial) {
    QIdeal S = saturate(random_ideal(R, rng, 2, 2));
    EXPECT_TRUE(ideals_equal(saturate(S), S));
    if (S.is_unit()) continue;
    QIdeal C = ideal_quotient(S, random_ideal(R, rng, 2, 2));
    EXPECT_TRUE(ideals_equal(saturate(C), C)) << trial;
  }
}

TEST(KernelProperties, HilbertAdditivity) {
  std::mt19937 rng(1005);
  QRing R(3);
  for (int trial = 0; trial < 30; ++trial) {
    QIdeal I = random_ideal(R, rng, 2, 2), J = random_ideal(R, rng, 2, 2);
    QIdeal cap = intersect(I, J), sum = ideal_sum(I, J);
    for (int n = 0; n <= 7; ++n) EXPECT_EQ(hf(cap, n) + hf(sum, n), hf(I, n) + hf(J, n)) << trial << " " << n;
  }
}

// --- homology -------------------------------------------------------------

TEST(HomologyProperties, TorSymmetry) {
  std::mt19937 rng(2001);
  QRing R(3);
  for (int trial = 0; trial < 12; ++trial) {
    QIdeal I = random_ideal(R, rng, 2, 2), J = random_ideal(R, rng, 2, 2);
    TorCalculator<RationalField> ci(I), cj(J);
    for (int j = 0; j <= 3; ++j) EXPECT_EQ(ci.tor(J, j, 7).dims, cj.tor(I, j, 7).dims) << trial << " j=" << j;
  }
}

TEST(HomologyProperties, EulerIdentityAndLowTor) {
  std::mt19937 rng(2002);
  QRing R(3);
  for (int trial = 0; trial < 12; ++trial) {
    QIdeal I = random_ideal(R, rng, 2, 2), J = random_ideal(R, rng, 2, 2);
    TorCalculator<RationalField> calc(I);
    const auto& res = calc.resolution();
    std::vector<TorModule<RationalField>> tors;
    for (int j = 0; j <= 4; ++j) tors.push_back(calc.tor(J, j, 7));
    QIdeal sum = ideal_sum(I, J), cap = intersect(I, J), prod = ideal_product(I, J);
    for (int n = 0; n <= 7; ++n) {
      long alt = 0, chain = 0;
      for (int j = 0; j <= 4; ++j) {
        long sign = j % 2 ? -1 : 1;
        alt += sign * tors[j].dims[n];
        for (int s : res.shifts(j)) chain += sign * (n - s >= 0 ? hf(J, n - s) : 0);
      }
      EXPECT_EQ(alt, chain) << trial << " n=" << n;
      EXPECT_EQ(tors[0].dims[n], hf(sum, n));
      EXPECT_EQ(tors[1].dims[n], hf(prod, n) - hf(cap, n)) << trial << " n=" << n;
    }
  }
}

TEST(HomologyProperties, VanishingCeiling) {
  std::mt19937 rng(2003);
  QRing R(3);
  for (int trial = 0; trial < 10; ++trial) {
    QIdeal I = random_ideal(R, rng, 3, 2), J = random_ideal(R, rng, 3, 2);
    EXPECT_TRUE(graded_tor(I, J, 4, 6).is_zero());
    EXPECT_TRUE(graded_tor(I, J, 5, 6).is_zero());
  }
}

TEST(HomologyProperties, NestedPairsFailAtOne) {
  std::mt19937 rng(2004);
  int tested = 0;
  for (int trial = 0; tested < 10 && trial < 200; ++trial) {
    QRing R(trial % 2 ? 4 : 3);
    QIdeal V = random_monomial_ideal(R, rng, 2, 2);
    QIdeal W = ideal_sum(V, random_monomial_ideal(R, rng, 2, 2));
    if (saturate(W).is_unit() || V.is_zero()) continue;
    ++tested;
    auto v = homologically_transverse(V, W);
    EXPECT_FALSE(v.transverse) << V.str() << " " << W.str();
    EXPECT_EQ(v.failing_index, 1);
  }
  EXPECT_EQ(tested, 10);
}

TEST(HomologyProperties, KoszulLaw) {
  std::mt19937 rng(2005);
  QRing R(3);
  int applicable = 0;
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<QPoly> seq{oracle::random_form(R, 1 + trial % 2, rng)};
    if (trial % 3 == 0) seq.push_back(oracle::random_form(R, 1, rng));
    QIdeal I(R, seq);
    if (I.codimension() != static_cast<int>(seq.size())) continue;  // not a regular sequence
    QIdeal J = saturate(random_ideal(R, rng, 2, 2));
    if (J.is_unit()) continue;
    QIdeal meet = saturate(ideal_sum(I, J));
    if (meet.is_unit()) continue;
    int dim_meet = meet.hilbert_polynomial().degree(), dim_J = J.hilbert_polynomial().degree();
    if (dim_meet != dim_J - I.codimension()) continue;
    ++applicable;
    EXPECT_TRUE(homologically_transverse(I, J).transverse) << I.str() << " " << J.str();
  }
  EXPECT_GE(applicable, 5);
}

// --- twist ----------------------------------------------------------------

TEST(TwistProperties, Associativity) {
  std::mt19937 rng(3001);
  QRing R(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto sigma = random_automorphism(3, rng);
    std::uniform_int_distribution<int> deg(1, 2);
    auto elt = [&] {
      int d = deg(rng);
      return twisted(R, d, oracle::random_form(R, d, rng));
    };
    auto a = elt(), b = elt(), c = elt();
    auto l = twist_multiply(R, twist_multiply(R, a, b, sigma), c, sigma);
    auto r = twist_multiply(R, a, twist_multiply(R, b, c, sigma), sigma);
    ASSERT_EQ(l.degree, r.degree);
    ASSERT_TRUE(R.sub(l.poly, r.poly).is_zero()) << trial;
  }
}

TEST(TwistProperties, PullbackHomomorphismAndCompatibility) {
  std::mt19937 rng(3002);
  QRing R(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto sigma = random_automorphism(3, rng);
    int k = static_cast<int>(rng() % 5) - 2;
    QPoly f = oracle::random_form(R, 2, rng), g = oracle::random_form(R, 1, rng);
    EXPECT_TRUE(R.sub(pullback(R, R.mul(f, g), sigma, k), R.mul(pullback(R, f, sigma, k), pullback(R, g, sigma, k)))
                    .is_zero());
    auto a = twisted(R, 2, f), b = twisted(R, 1, g);
    auto lhs = pullback(R, twist_multiply(R, a, b, sigma).poly, sigma, k);
    auto rhs = twist_multiply(R, twisted(R, 2, pullback(R, f, sigma, k)), twisted(R, 1, pullback(R, g, sigma, k)), sigma);
    EXPECT_TRUE(R.sub(lhs, rhs.poly).is_zero()) << trial;
  }
}

TEST(TwistProperties, PullbackCommutesWithGroebnerAndScaling) {
  std::mt19937 rng(3003);
  QRing R(3);
  for (int trial = 0; trial < 30; ++trial) {
    auto sigma = random_automorphism(3, rng);
    QIdeal I = random_ideal(R, rng, 2, 2);
    QIdeal a = pullback_ideal(I, sigma, 1);
    QIdeal b = pullback_ideal(groebner(I), sigma, 1);
    EXPECT_TRUE(ideals_equal(a, b));
    EXPECT_TRUE(ideals_equal(pullback_ideal(I, sigma.scaled(Rational(-3, 2)), 2), pullback_ideal(I, sigma, 2)));
  }
}

TEST(TwistProperties, ScalingKeepsVerdicts) {
  std::mt19937 rng(3004);
  QRing R(3);
  for (int trial = 0; trial < 15; ++trial) {
    auto sigma = random_diagonal(3, rng);
    auto scaled = sigma.scaled(Rational(-2));
    auto p = random_point(3, rng);
    QIdeal Z = point_ideal(R, random_point(3, rng));
    auto a = forward_orbit_hits(p, sigma, Z, 20), b = forward_orbit_hits(p, scaled, Z, 20);
    EXPECT_EQ(a.verdict, b.verdict);
    EXPECT_EQ(a.hits, b.hits);
    EXPECT_EQ(critical_transversality_certificate(Z, sigma).kind, critical_transversality_certificate(Z, scaled).kind);
  }
}

// --- idealizer ------------------------------------------------------------

TEST(IdealizerProperties, ClosedUnderTwistedProduct) {
  std::mt19937 rng(4001);
  QRing R(3);
  for (int trial = 0; trial < 4; ++trial) {
    auto sigma = random_diagonal(3, rng);
    IdealizerScene<RationalField> scene(point_ideal(R, random_point(3, rng)), sigma);
    for (int n = 0; n <= 3; ++n)
      for (int m = 0; n + m <= 6 && m <= 3; ++m) {
        auto Rn = idealizer_piece(scene, n), Rm = idealizer_piece(scene, m);
        for (const auto& a : Rn.basis)
          for (const auto& b : Rm.basis) {
            auto prod = twist_multiply(R, twisted(R, n, a), twisted(R, m, b), sigma);
            if (n + m == 0) continue;
            EXPECT_TRUE(scene.colon(n + m).contains(prod.poly)) << trial << " " << n << "+" << m;
          }
      }
  }
}

TEST(IdealizerProperties, TransportConsistency) {
  std::mt19937 rng(4002);
  for (int trial = 0; trial < 6; ++trial) {
    const int nv = trial % 2 ? 2 : 3;
    QRing R(nv);
    auto sigma = trial % 3 == 2 ? random_automorphism(nv, rng) : random_diagonal(nv, rng);
    IdealizerScene<RationalField> scene(point_ideal(R, random_point(nv, rng)), sigma);
    for (int n = 1; n <= 4; ++n) {
      auto piece = idealizer_piece(scene, n);
      for (const auto& b : piece.basis) EXPECT_TRUE(membership_oracle(twisted(R, n, b), scene, 6));
      EXPECT_TRUE(oracle_piece(scene, n, 6) == piece) << trial << " n=" << n;
    }
  }
}

TEST(IdealizerProperties, VeroneseAndRightIdeal) {
  std::mt19937 rng(4003);
  QRing R(3);
  for (int trial = 0; trial < 4; ++trial) {
    auto sigma = random_diagonal(3, rng);
    IdealizerScene<RationalField> scene(point_ideal(R, random_point(3, rng)), sigma);
    for (int v = 2; v <= 3; ++v) {
      auto ver = scene.veronese(v);
      for (int k = 1; k <= 2; ++k) {
        EXPECT_TRUE(ideals_equal(ver.colon(k), scene.colon(v * k)));
        EXPECT_TRUE(make_piece(R, v * k, ver.colon(k).degree_part(v * k)) == idealizer_piece(scene, v * k));
      }
    }
    auto st = stabilization_degree(scene, 4);
    if (!st.n0) continue;
    for (int n = *st.n0; n <= 4; ++n)
      for (const auto& g : ideal_piece(scene, n).basis) EXPECT_TRUE(scene.colon(n).contains(g));
  }
}

// --- geometry -------------------------------------------------------------

TEST(GeometryProperties, CertifiedOrbitsAreSound) {
  std::mt19937 rng(5001);
  QRing R(3);
  int certified = 0;
  for (int trial = 0; trial < 60; ++trial) {
    ProjAutomorphism sigma = trial % 3 == 0 ? ProjAutomorphism({{Rational(1), Rational(1), Rational(0)},
                                                                {Rational(0), Rational(1), Rational(1)},
                                                                {Rational(0), Rational(0), Rational(1)}})
                                            : random_diagonal(3, rng);
    auto p = random_point(3, rng);
    QIdeal Z = trial % 2 ? point_ideal(R, random_point(3, rng)) : QIdeal(R, {oracle::random_form(R, 1, rng, 3)});
    auto rep = forward_orbit_hits(p, sigma, Z, 15);
    if (rep.verdict != OrbitVerdict::CertifiedFinite) continue;
    ++certified;
    long top = std::max<long>(2 * rep.n0, 15);
    std::vector<long> hits;
    for (long n = 0; n <= top; ++n)
      if (lies_on(Z, p.image(sigma, n))) hits.push_back(n);
    std::vector<long> reported;
    for (long h : rep.hits)
      if (h <= top) reported.push_back(h);
    EXPECT_EQ(hits, reported) << trial;
  }
  EXPECT_GE(certified, 30);
}

TEST(GeometryProperties, OrbitFunctoriality) {
  std::mt19937 rng(5002);
  QRing R(3);
  for (int trial = 0; trial < 30; ++trial) {
    auto sigma = random_diagonal(3, rng);
    auto p = random_point(3, rng);
    QIdeal Z(R, {oracle::random_form(R, 1, rng, 3)});
    const int v = 2 + trial % 2, H = 8;
    auto fine = forward_orbit_hits(p, sigma, Z, v * H);
    auto coarse = forward_orbit_hits(p, sigma.pow(v), Z, H);
    std::vector<long> a, b;
    for (long h : fine.hits)
      if (h % v == 0 && h <= v * H) a.push_back(h / v);
    for (long h : coarse.hits)
      if (h <= H) b.push_back(h);
    EXPECT_EQ(a, b) << trial;
  }
}

TEST(GeometryProperties, CertificatesRecheck) {
  std::mt19937 rng(5003);
  QRing R(3);
  auto sigma = ProjAutomorphism::diagonal({Rational(1), Rational(2), Rational(3)});
  auto family = invariant_coordinate_subschemes(R, sigma, 3);
  int certified = 0, refuted = 0;
  for (int trial = 0; trial < 8; ++trial) {
    std::uniform_int_distribution<int> c(0, 2);
    std::vector<Rational> v{Rational(c(rng)), Rational(c(rng)), Rational(1)};
    QIdeal Z = point_ideal(R, RationalPoint(v));
    auto cert = critical_transversality_certificate(Z, sigma);
    if (cert.kind == CtKind::Certified) {
      ++certified;
      for (const auto& Y : family) EXPECT_TRUE(homologically_transverse(Z, Y.ideal).transverse);
    } else if (cert.kind == CtKind::Refuted) {
      ++refuted;
      ASSERT_TRUE(cert.witness);
      auto t = homologically_transverse(Z, cert.witness->ideal);
      EXPECT_FALSE(t.transverse);
      EXPECT_EQ(t.failing_index, cert.failing_index);
    }
  }
  EXPECT_GT(certified + refuted, 0);
}
