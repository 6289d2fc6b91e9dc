#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twideal/homology/resolution.hpp"

namespace twideal {

/// Tor_j(A/I, A/J) over A = S/Q realized as cycles / boundaries inside F_j of a resolution of A/I.
template <class F>
struct TorModule {
  using K = typename F::Elem;
  using P = Poly<K>;

  int j = 0;
  std::vector<int> shifts;      // basis degrees of F_j
  std::vector<P> cycles;        // Groebner basis of {a : d_j(a) ∈ J F_{j-1}} (includes J F_j)
  std::vector<P> boundaries;    // Groebner basis of im d_{j+1} + J F_j
  HilbertSeries series;         // of cycles / boundaries
  UniPoly hilbert_polynomial;
  std::vector<long> dims;       // graded dimensions for n = 0..deg_bound

  /// Zero sheafification: the module is supported at the irrelevant ideal only.
  bool sheaf_zero() const { return hilbert_polynomial.is_zero(); }
  bool is_zero() const { return series.numerator.empty(); }
  long dim(long n) const { return series.function(n); }
};

/// Computes Tor_j(A/I, A/J) for many J against one cached resolution of A/I.
template <class F>
class TorCalculator {
 public:
  using K = typename F::Elem;
  using P = Poly<K>;

  explicit TorCalculator(const HomIdeal<F>& I) : res_(I) {}
  TorCalculator(const HomIdeal<F>& I, const HomIdeal<F>& Q) : res_(I, Q) {}

  const FreeResolution<F>& resolution() const { return res_; }

  TorModule<F> tor(const HomIdeal<F>& J, int j, int deg_bound = 10) const {
    const PolyRing<F>& R = res_.ring();
    if (j < 0) throw Error(ErrorCode::Precondition, "negative homological index");
    std::vector<P> Jq = J.gens();
    for (const auto& q : res_.quotient_relations()) Jq.push_back(q);

    TorModule<F> out;
    out.j = j;
    out.shifts = res_.shifts(j);
    out.series.nvars = R.nvars();
    if (out.shifts.empty()) {
      out.dims.assign(deg_bound + 1, 0);
      return out;
    }
    const std::size_t rank = out.shifts.size();
    auto J_Fj = ideal_times_free(R, Jq, rank);

    std::vector<P> cyc = J_Fj;
    if (j == 0) {
      for (std::size_t c = 0; c < rank; ++c) cyc.push_back(R.monomial(Monomial::one(static_cast<int>(c))));
    } else {
      GradedMap<F> d = res_.map(j);
      auto lifts = kernel_lifts(R, d, ideal_times_free(R, Jq, d.target_rank()));
      cyc.insert(cyc.end(), lifts.begin(), lifts.end());
    }
    std::vector<P> bnd = J_Fj;
    GradedMap<F> dn = res_.map(j + 1);
    bnd.insert(bnd.end(), dn.columns.begin(), dn.columns.end());

    auto cyc_eng = submodule_engine(R, out.shifts, cyc);
    auto bnd_eng = submodule_engine(R, out.shifts, bnd);
    out.cycles = cyc_eng.reduced_basis();
    out.boundaries = bnd_eng.reduced_basis();
    out.series = quotient_series(R, out.shifts, bnd_eng) - quotient_series(R, out.shifts, cyc_eng);
    out.hilbert_polynomial = out.series.polynomial();
    for (int n = 0; n <= deg_bound; ++n) out.dims.push_back(out.series.function(n));
    return out;
  }

  /// Presentation of Tor: minimal generators of cycles modulo boundaries and their relations.
  GradedModulePresentation<F> presentation(const TorModule<F>& T) const {
    const PolyRing<F>& R = res_.ring();
    GradedModulePresentation<F> pres;
    if (T.shifts.empty()) return pres;
    auto gens = minimal_generators(R, T.shifts, T.cycles, T.boundaries);
    GradedMap<F> cover;
    cover.target_shifts = T.shifts;
    for (const auto& g : gens) {
      cover.source_shifts.push_back(module_degree(g.lead(), T.shifts));
      cover.columns.push_back(g);
    }
    pres.generator_degrees = cover.source_shifts;
    pres.relations.target_shifts = cover.source_shifts;
    if (gens.empty()) return pres;
    auto rel = kernel_lifts(R, cover, T.boundaries);
    rel = minimal_generators(R, cover.source_shifts, rel, {});
    for (const auto& r : rel) {
      pres.relations.source_shifts.push_back(module_degree(r.lead(), cover.source_shifts));
      pres.relations.columns.push_back(r);
    }
    return pres;
  }

 private:
  FreeResolution<F> res_;
};

/// Tor_j^S(S/I, S/J) with graded dimensions up to deg_bound.
template <class F>
TorModule<F> graded_tor(const HomIdeal<F>& I, const HomIdeal<F>& J, int j, int deg_bound = 10) {
  require_same_ring(I, J);
  return TorCalculator<F>(I).tor(J, j, deg_bound);
}

struct TransversalityVerdict {
  bool transverse = true;
  int failing_index = 0;  // least j >= 1 with nonzero sheaf Tor, when not transverse
};

/// Homological transversality of V(I) and V(J): all higher Tor sheaves vanish.
template <class F>
TransversalityVerdict homologically_transverse(const TorCalculator<F>& saturated_I, const HomIdeal<F>& J) {
  HomIdeal<F> Js = saturate(J);
  int top = saturated_I.resolution().ring().nvars();
  for (int j = 1; j <= top; ++j)
    if (!saturated_I.tor(Js, j, 0).sheaf_zero()) return {false, j};
  return {true, 0};
}

template <class F>
TransversalityVerdict homologically_transverse(const HomIdeal<F>& I, const HomIdeal<F>& J) {
  require_same_ring(I, J);
  if (I.is_unit() || J.is_unit()) throw Error(ErrorCode::Precondition, "transversality needs proper ideals");
  TorCalculator<F> calc(saturate(I));
  return homologically_transverse(calc, J);
}

/// Total intersection number sum_j (-1)^j (constant Hilbert polynomial of Tor_j).
template <class F>
long serre_multiplicity_total(const HomIdeal<F>& I, const HomIdeal<F>& J) {
  require_same_ring(I, J);
  UniPoly hp = ideal_sum(I, J).hilbert_polynomial();
  if (hp.degree() > 0)
    throw Error(ErrorCode::ImproperIntersection, "improper intersection; multiplicity undefined by this operation");
  TorCalculator<F> calc(I);
  Rational total(0);
  for (int j = 0; j <= I.ring().nvars(); ++j) {
    UniPoly t = calc.tor(J, j, 0).hilbert_polynomial;
    if (t.degree() > 0) throw Error(ErrorCode::Verification, "Tor of a finite intersection has positive dimension");
    total += (j % 2 == 0 ? t.coeff(0) : -t.coeff(0));
  }
  if (!total.is_integer()) throw Error(ErrorCode::Verification, "non-integral intersection number");
  return total.num().get_si();
}

}  // namespace twideal
