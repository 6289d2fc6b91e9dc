#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "twideal/kernel.hpp"

namespace twideal {

/// Homogeneous map between graded free modules.
/// Basis element i of a module with shifts s sits in degree s[i]; column j is the image
/// of the j-th source basis element, a vector over the target components.
template <class F>
struct GradedMap {
  using K = typename F::Elem;
  std::vector<int> source_shifts;
  std::vector<int> target_shifts;
  std::vector<Poly<K>> columns;

  std::size_t source_rank() const { return source_shifts.size(); }
  std::size_t target_rank() const { return target_shifts.size(); }

  /// Entry (i, j) as a ring element.
  Poly<K> entry(const PolyRing<F>& R, std::size_t i, std::size_t j) const {
    Poly<K> out;
    for (const auto& t : columns[j].terms)
      if (t.m.comp == static_cast<int>(i)) out.terms.push_back({t.m.with_comp(0), t.c});
    return R.resort(out);
  }
};

/// Finitely presented graded module: cokernel of relations -> free cover.
template <class F>
struct GradedModulePresentation {
  std::vector<int> generator_degrees;
  GradedMap<F> relations;
};

/// Applies a map to a source vector.
template <class F>
Poly<typename F::Elem> apply_map(const PolyRing<F>& R, const GradedMap<F>& d, const Poly<typename F::Elem>& v) {
  Poly<typename F::Elem> out;
  for (const auto& t : v.terms) {
    Monomial m = t.m.with_comp(0);
    out = R.add(out, R.mul_term(d.columns[t.m.comp], m, t.c));
  }
  return out;
}

/// Generators of the submodule `relations` * F: each generator of the ideal placed in each component.
template <class F>
std::vector<Poly<typename F::Elem>> ideal_times_free(const PolyRing<F>& R, const std::vector<Poly<typename F::Elem>>& ideal_gens,
                                                     std::size_t rank) {
  std::vector<Poly<typename F::Elem>> out;
  for (std::size_t c = 0; c < rank; ++c)
    for (const auto& q : ideal_gens) out.push_back(R.in_component(q, static_cast<int>(c)));
  return out;
}

/// Degree of a homogeneous module element.
inline int module_degree(const Monomial& lead, const std::vector<int>& shifts) { return lead.deg + shifts.at(lead.comp); }

/// Completed Groebner engine for the submodule of F (given shifts) generated by gens.
template <class F>
GroebnerEngine<F> submodule_engine(const PolyRing<F>& R, const std::vector<int>& shifts,
                                   const std::vector<Poly<typename F::Elem>>& gens) {
  GroebnerEngine<F> eng(R, shifts);
  for (const auto& g : gens) eng.add(g);
  eng.complete();
  return eng;
}

/// Hilbert series of F / U with U spanned by the given completed engine.
template <class F>
HilbertSeries quotient_series(const PolyRing<F>& R, const std::vector<int>& shifts, const GroebnerEngine<F>& eng) {
  return hilbert_series_of_leads(R.nvars(), eng.lead_monomials(), shifts);
}

/// Lifts of the kernel of d modulo N: vectors a in the source with d(a) in the span of N.
/// N lives in the target. The result generates {a : d(a) ∈ N}.
template <class F>
std::vector<Poly<typename F::Elem>> kernel_lifts(const PolyRing<F>& R, const GradedMap<F>& d,
                                                 const std::vector<Poly<typename F::Elem>>& N) {
  using P = Poly<typename F::Elem>;
  const int t = static_cast<int>(d.target_rank());
  std::vector<int> shifts = d.target_shifts;
  shifts.insert(shifts.end(), d.source_shifts.begin(), d.source_shifts.end());
  GroebnerEngine<F> eng(R, shifts);
  for (std::size_t j = 0; j < d.source_rank(); ++j) {
    P v = d.columns[j];
    v = R.add(v, R.monomial(Monomial::one(t + static_cast<int>(j))));
    eng.add(v);
  }
  for (const auto& n : N) eng.add(n);
  eng.complete();
  std::vector<P> out;
  for (const auto& g : eng.reduced_basis()) {
    if (g.lead().comp < t) continue;
    P h = g;
    for (auto& term : h.terms) term.m.comp = static_cast<std::int16_t>(term.m.comp - t);
    out.push_back(h);
  }
  return out;
}

/// Greedy minimal generators of (span(candidates) + span(N)) / span(N), by increasing degree.
template <class F>
std::vector<Poly<typename F::Elem>> minimal_generators(const PolyRing<F>& R, const std::vector<int>& shifts,
                                                       std::vector<Poly<typename F::Elem>> candidates,
                                                       const std::vector<Poly<typename F::Elem>>& N) {
  using P = Poly<typename F::Elem>;
  GroebnerEngine<F> eng(R, shifts);
  for (const auto& n : N) eng.add(n);
  std::erase_if(candidates, [](const P& p) { return p.is_zero(); });
  std::stable_sort(candidates.begin(), candidates.end(), [&](const P& a, const P& b) {
    return module_degree(a.lead(), shifts) < module_degree(b.lead(), shifts);
  });
  std::vector<P> out;
  for (const auto& c : candidates) {
    eng.complete(module_degree(c.lead(), shifts));
    if (eng.contains(c)) continue;
    out.push_back(c);
    eng.add(c);
  }
  return out;
}

}  // namespace twideal
