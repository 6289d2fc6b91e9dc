#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twideal/geometry/point.hpp"

namespace twideal {

enum class OrbitVerdict { CertifiedFinite, FiniteWithinHorizon, Infinite, Inconclusive };

inline std::string to_string(OrbitVerdict v) {
  switch (v) {
    case OrbitVerdict::CertifiedFinite: return "certified-finite";
    case OrbitVerdict::FiniteWithinHorizon: return "finite-within-horizon";
    case OrbitVerdict::Infinite: return "infinite";
    case OrbitVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

/// Hits {n : σ^n(p) ∈ Z} with a verdict on whether the full set is finite.
struct OrbitReport {
  RationalPoint point;
  int horizon = 0;
  std::vector<long> hits;  // ascending; complete through max(horizon, n0) when certified
  OrbitVerdict verdict = OrbitVerdict::Inconclusive;
  long n0 = 0;             // certified: no hit at any n >= n0
  int period = 0;          // infinite: hits recur with this period
  std::string justification;
};

/// Largest n for which a certified orbit is enumerated exhaustively.
inline constexpr long kOrbitEnumerationCap = 20000;

namespace detail {

/// Bound k0 with |lead| * ratio^k > rest for all k >= k0, or nullopt if beyond `cap`.
inline std::optional<long> dominance_start(const Rational& lead, const Rational& ratio, const Rational& rest, long cap) {
  Rational lhs = lead.abs();
  for (long k = 0; k <= cap; ++k) {
    if (lhs > rest) return k;
    lhs *= ratio;
  }
  return std::nullopt;
}

/// Exponential-sum certificate for diagonal σ. Returns per parity r either the least n0 (n ≡ r,
/// n >= n0 never hits via this generator) or "identically zero on this parity" (value -1).
template <class F>
std::array<std::optional<long>, 2> dominant_term_bounds(const PolyRing<F>& R, const Poly<typename F::Elem>& g,
                                                        const std::vector<Rational>& lambda,
                                                        const std::vector<Rational>& p,
                                                        const std::function<Rational(const typename F::Elem&)>& lift) {
  std::map<Rational, Rational> by_base;
  for (const auto& t : g.terms) {
    Rational beta(1), c = lift(t.c);
    for (int i = 0; i < R.nvars(); ++i) {
      beta *= lambda[i].pow(t.m.exp[i]);
      c *= p[i].pow(t.m.exp[i]);
    }
    by_base[beta] += c;
  }
  std::array<std::optional<long>, 2> out;
  for (int r = 0; r < 2; ++r) {
    std::map<Rational, Rational> by_square;
    for (const auto& [beta, c] : by_base) by_square[beta * beta] += c * beta.pow(r);
    std::vector<std::pair<Rational, Rational>> live;
    for (const auto& [B, D] : by_square)
      if (!D.is_zero()) live.push_back({B, D});
    if (live.empty()) {
      out[r] = -1;
      continue;
    }
    std::sort(live.begin(), live.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    if (live.size() == 1) {
      out[r] = r;
      continue;
    }
    Rational rest(0);
    for (std::size_t k = 1; k < live.size(); ++k) rest += live[k].second.abs();
    auto k0 = dominance_start(live[0].second, live[0].first / live[1].first, rest, kOrbitEnumerationCap);
    if (k0) out[r] = 2 * *k0 + r;
  }
  return out;
}

/// Scalar c with (M - cI) nilpotent, if M has a single eigenvalue.
inline std::optional<Rational> single_eigenvalue(const RatMatrix& M) {
  const std::size_t n = M.size();
  Rational tr(0);
  for (std::size_t i = 0; i < n; ++i) tr += M[i][i];
  Rational c = tr / Rational(static_cast<long>(n));
  RatMatrix N = M;
  for (std::size_t i = 0; i < n; ++i) N[i][i] -= c;
  RatMatrix P = N;
  for (std::size_t k = 1; k < n; ++k) P = matmul(P, N);
  for (const auto& row : P)
    for (const auto& e : row)
      if (!e.is_zero()) return std::nullopt;
  return c;
}

/// Cauchy bound: every real root of the polynomial is < the returned integer.
inline long cauchy_bound(const UniPoly& h) {
  int d = h.degree();
  Rational m(0);
  for (int i = 0; i < d; ++i) m = std::max(m, (h.coeff(i) / h.coeff(d)).abs());
  Rational b = m + Rational(1);
  mpz_class q = b.num() / b.den();
  return q.get_si() + 1;
}

}  // namespace detail

/// Forward-orbit hits of p in V(Z) through `horizon`, with a finiteness certificate where one
/// applies: periodic orbits, diagonal σ (dominant exponential term, signs split by parity), and σ
/// with a single eigenvalue (hits are roots of a polynomial in n). Certificates need characteristic 0.
template <class F>
OrbitReport forward_orbit_hits(const RationalPoint& p, const ProjAutomorphism& sigma, const HomIdeal<F>& Z,
                               int horizon) {
  if (horizon < 1) throw Error(ErrorCode::Precondition, "orbit horizon must be at least 1");
  const PolyRing<F>& R = Z.ring();
  if (p.dim() + 1 != R.nvars() || static_cast<int>(sigma.size()) != R.nvars())
    throw Error(ErrorCode::Precondition, "point, automorphism and ring dimensions differ");
  OrbitReport rep{p, horizon, {}, OrbitVerdict::Inconclusive, 0, 0, ""};

  auto scan = [&](long upto) {
    std::vector<long> hits;
    std::vector<Rational> cur = p.coords();
    for (long n = 0; n <= upto; ++n) {
      if (lies_on(Z, RationalPoint(cur))) hits.push_back(n);
      cur = RationalPoint(matvec(sigma.matrix(), cur)).coords();
    }
    return hits;
  };
  rep.hits = scan(horizon);
  auto heuristic = [&](const std::string& why) {
    bool late = !rep.hits.empty() && rep.hits.back() > horizon / 2;
    rep.verdict = late ? OrbitVerdict::Inconclusive : OrbitVerdict::FiniteWithinHorizon;
    rep.justification = why;
    return rep;
  };
  if (Z.is_zero()) {
    rep.verdict = OrbitVerdict::Infinite;
    rep.period = 1;
    rep.justification = "Z is all of projective space";
    return rep;
  }
  if (R.field().characteristic() != 0) return heuristic("horizon check only in positive characteristic");

  if (auto k = point_order(p, sigma, horizon)) {
    bool meets = !rep.hits.empty() && rep.hits.front() < *k;
    rep.verdict = meets ? OrbitVerdict::Infinite : OrbitVerdict::CertifiedFinite;
    rep.period = meets ? *k : 0;
    rep.n0 = 0;
    rep.justification = "periodic orbit of length " + std::to_string(*k) + (meets ? " meets Z" : " avoids Z");
    return rep;
  }

  auto lift = [](const typename F::Elem& c) -> Rational {
    if constexpr (std::is_same_v<typename F::Elem, Rational>) return c;
    else throw Error(ErrorCode::Precondition, "rational lift needs characteristic 0");
  };

  const auto& M = sigma.matrix();
  bool diagonal = sigma.is_diagonal();
  auto single = diagonal ? std::nullopt : detail::single_eigenvalue(M);
  if (!diagonal && !single) return heuristic("no certificate for this automorphism; horizon check only");

  std::optional<long> n0;
  std::string tag;
  if (diagonal) {
    // Per parity: the best bound over generators; the parity lies in Z when every generator
    // vanishes identically on it.
    std::array<std::optional<long>, 2> best;
    std::array<bool, 2> all_zero{true, true};
    for (const auto& g : Z.gens()) {
      auto b = detail::dominant_term_bounds<F>(R, g, sigma.diagonal_entries(), p.coords(), lift);
      for (int r = 0; r < 2; ++r) {
        if (b[r] && *b[r] < 0) continue;
        all_zero[r] = false;
        if (b[r] && (!best[r] || *b[r] < *best[r])) best[r] = b[r];
      }
    }
    if (all_zero[0] || all_zero[1]) {
      rep.verdict = OrbitVerdict::Infinite;
      rep.period = (all_zero[0] && all_zero[1]) ? 1 : 2;
      rep.justification = "generators vanish identically along the orbit";
      return rep;
    }
    if (best[0] && best[1]) n0 = std::max(*best[0], *best[1]);
    tag = "dominant exponential term";
  } else {
    const Rational c = *single;
    RatMatrix U = M;
    for (auto& row : U)
      for (auto& e : row) e /= c;
    long best = -1;
    bool vanishing = true;
    for (const auto& g : Z.gens()) {
      const int deg = g.lead().deg * (R.nvars() - 1);
      std::vector<Rational> xs, ys;
      std::vector<Rational> cur = p.coords();
      for (int n = 0; n <= deg; ++n) {
        xs.push_back(Rational(n));
        Rational v(0);
        for (const auto& t : g.terms) {
          Rational term = lift(t.c);
          for (int i = 0; i < R.nvars(); ++i) term *= cur[i].pow(t.m.exp[i]);
          v += term;
        }
        ys.push_back(v);
        cur = matvec(U, cur);
      }
      UniPoly h = UniPoly::interpolate(xs, ys);
      if (h.is_zero()) continue;
      vanishing = false;
      long b = h.degree() == 0 ? 0 : detail::cauchy_bound(h);
      if (best < 0 || b < best) best = b;
    }
    if (vanishing) {
      rep.verdict = OrbitVerdict::Infinite;
      rep.period = 1;
      rep.justification = "generators vanish identically along the orbit";
      return rep;
    }
    n0 = best;
    tag = "polynomial growth root bound";
  }
  if (!n0 || *n0 > kOrbitEnumerationCap) return heuristic("certificate bound too large; horizon check only");
  rep.n0 = *n0;
  if (*n0 > horizon) rep.hits = scan(*n0);
  rep.verdict = OrbitVerdict::CertifiedFinite;
  rep.justification = tag + ": no hits for n >= " + std::to_string(*n0);
  return rep;
}

}  // namespace twideal
