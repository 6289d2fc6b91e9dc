#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <vector>

#include "twideal/kernel/monomial.hpp"
#include "twideal/kernel/unipoly.hpp"

namespace twideal {

/// Hilbert series N(t) / (1 - t)^nvars of a graded quotient of a free module.
struct HilbertSeries {
  int nvars = 1;
  std::vector<long> numerator;  // coefficient of t^k

  long function(long n) const {
    mpz_class acc = 0;
    for (std::size_t k = 0; k < numerator.size(); ++k) {
      long m = n - static_cast<long>(k);
      if (numerator[k] == 0 || m < 0) continue;
      mpz_class b;
      mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(m + nvars - 1), static_cast<unsigned long>(nvars - 1));
      acc += b * numerator[k];
    }
    return acc.get_si();
  }

  UniPoly polynomial() const {
    UniPoly acc;
    for (std::size_t k = 0; k < numerator.size(); ++k)
      if (numerator[k] != 0)
        acc = acc + UniPoly::binomial_shifted(nvars - 1 - static_cast<long>(k), nvars - 1) * Rational(numerator[k]);
    return acc;
  }

  friend HilbertSeries operator-(const HilbertSeries& a, const HilbertSeries& b) {
    HilbertSeries r{a.nvars, a.numerator};
    if (r.numerator.size() < b.numerator.size()) r.numerator.resize(b.numerator.size(), 0);
    for (std::size_t k = 0; k < b.numerator.size(); ++k) r.numerator[k] -= b.numerator[k];
    r.trim();
    return r;
  }
  friend HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b) {
    HilbertSeries r{a.nvars, a.numerator};
    if (r.numerator.size() < b.numerator.size()) r.numerator.resize(b.numerator.size(), 0);
    for (std::size_t k = 0; k < b.numerator.size(); ++k) r.numerator[k] += b.numerator[k];
    r.trim();
    return r;
  }
  friend bool operator==(const HilbertSeries& a, const HilbertSeries& b) {
    return a.nvars == b.nvars && a.numerator == b.numerator;
  }

  void trim() {
    while (!numerator.empty() && numerator.back() == 0) numerator.pop_back();
  }
};

namespace detail {

using Numer = std::vector<long>;

inline void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.deg < b.deg; });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  gens = std::move(out);
}

inline Numer numer_sub(Numer a, const Numer& b, int shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= b[k];
  return a;
}
inline Numer numer_add(Numer a, const Numer& b, int shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] += b[k];
  return a;
}

/// Numerator of the Hilbert series of S / (gens); gens are ring monomials.
inline Numer monomial_numerator(std::vector<Monomial> gens) {
  for (auto& g : gens) g.comp = 0;
  minimalize(gens);
  if (gens.empty()) return {1};
  for (const auto& g : gens)
    if (g.deg == 0) return {};
  // Pairwise coprime generators: product of (1 - t^deg).
  std::array<int, kMaxVars> count{};
  for (const auto& g : gens)
    for (int i = 0; i < kMaxVars; ++i)
      if (g.exp[i]) ++count[i];
  int pivot_var = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  if (count[pivot_var] <= 1) {
    Numer r{1};
    for (const auto& g : gens) r = numer_sub(r, r, g.deg);
    return r;
  }
  std::vector<int> exps;
  for (const auto& g : gens)
    if (g.exp[pivot_var]) exps.push_back(g.exp[pivot_var]);
  std::sort(exps.begin(), exps.end());
  int e = exps[(exps.size() - 1) / 2];
  Monomial p = Monomial::one();
  p.exp[pivot_var] = static_cast<std::uint16_t>(e);
  p.deg = static_cast<std::int16_t>(e);
  // N(M) = N(M + p) + t^e N(M : p)
  std::vector<Monomial> plus = gens;
  plus.push_back(p);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) colon.push_back(Monomial::lcm(g, p) / p);
  return numer_add(monomial_numerator(std::move(plus)), monomial_numerator(std::move(colon)), e);
}

}  // namespace detail

/// Hilbert series of F / M where F has generators in degrees shifts[c] and M has initial
/// module spanned by the given lead monomials.
inline HilbertSeries hilbert_series_of_leads(int nvars, const std::vector<Monomial>& leads,
                                             const std::vector<int>& shifts) {
  std::map<int, std::vector<Monomial>> by_comp;
  for (const auto& m : leads) by_comp[m.comp].push_back(m);
  HilbertSeries hs{nvars, {}};
  for (std::size_t c = 0; c < shifts.size(); ++c) {
    if (shifts[c] < 0) throw Error(ErrorCode::Precondition, "negative degree shift");
    auto it = by_comp.find(static_cast<int>(c));
    detail::Numer n = detail::monomial_numerator(it == by_comp.end() ? std::vector<Monomial>{} : it->second);
    hs.numerator = detail::numer_add(hs.numerator, n, shifts[c]);
  }
  hs.trim();
  return hs;
}

}  // namespace twideal
