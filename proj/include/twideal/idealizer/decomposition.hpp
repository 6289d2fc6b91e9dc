#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twideal/kernel.hpp"

namespace twideal {

/// One primary component with its prime (radical).
template <class F>
struct PrimaryComponent {
  HomIdeal<F> ideal;
  HomIdeal<F> prime;
};

/// Irreducible components of a monomial ideal: each is generated by pure powers.
/// Returned as exponent vectors (0 = variable absent), minimal and deduplicated.
inline std::vector<std::vector<int>> irreducible_monomial_components(const std::vector<Monomial>& gens, int nvars) {
  std::vector<std::vector<int>> out;
  std::vector<Monomial> start = gens;
  detail::minimalize(start);
  std::vector<std::vector<Monomial>> stack{start};
  while (!stack.empty()) {
    std::vector<Monomial> cur = std::move(stack.back());
    stack.pop_back();
    detail::minimalize(cur);
    const Monomial* split = nullptr;
    for (const auto& m : cur) {
      int support = 0;
      for (int i = 0; i < nvars; ++i) support += m.exp[i] > 0;
      if (support > 1) {
        split = &m;
        break;
      }
    }
    if (split == nullptr) {
      std::vector<int> e(nvars, 0);
      bool unit = false;
      for (const auto& m : cur) {
        if (m.deg == 0) unit = true;
        for (int i = 0; i < nvars; ++i)
          if (m.exp[i] > 0) e[i] = m.exp[i];
      }
      if (!unit) out.push_back(e);
      continue;
    }
    int v = 0;
    while (split->exp[v] == 0) ++v;
    Monomial pure = Monomial::one();
    pure.exp[v] = split->exp[v];
    pure.deg = static_cast<std::int16_t>(split->exp[v]);
    Monomial rest = *split / pure;
    std::vector<Monomial> a = cur, b = cur;
    a.push_back(pure);
    b.push_back(rest);
    stack.push_back(std::move(b));
    stack.push_back(std::move(a));
  }
  // Drop components containing another one (larger ideal means smaller set of exponents constraints).
  auto contains = [&](const std::vector<int>& big, const std::vector<int>& small) {
    // ideal(big) ⊇ ideal(small) iff every pure power of small is divisible by one of big
    for (int i = 0; i < nvars; ++i)
      if (small[i] > 0 && (big[i] == 0 || big[i] > small[i])) return false;
    return true;
  };
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::vector<std::vector<int>> minimal;
  for (std::size_t i = 0; i < out.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < out.size() && !redundant; ++j)
      if (i != j && contains(out[i], out[j])) redundant = true;
    if (!redundant) minimal.push_back(out[i]);
  }
  return minimal;
}

/// Primary decomposition of a monomial ideal (components with the irrelevant prime dropped when
/// `saturated_only`). Components sharing a radical are intersected.
template <class F>
std::vector<PrimaryComponent<F>> monomial_primary_decomposition(const HomIdeal<F>& I, bool saturated_only = true) {
  if (!I.is_monomial()) throw Error(ErrorCode::Precondition, "ideal is not monomial");
  const PolyRing<F>& R = I.ring();
  const int nv = R.nvars();
  std::vector<Monomial> gens;
  for (const auto& g : I.gens()) gens.push_back(g.lead().with_comp(0));
  std::map<std::vector<int>, std::vector<std::vector<int>>> by_support;
  for (const auto& e : irreducible_monomial_components(gens, nv)) {
    std::vector<int> support;
    for (int i = 0; i < nv; ++i)
      if (e[i] > 0) support.push_back(i);
    if (saturated_only && static_cast<int>(support.size()) == nv) continue;
    by_support[support].push_back(e);
  }
  std::vector<PrimaryComponent<F>> out;
  for (const auto& [support, comps] : by_support) {
    std::optional<HomIdeal<F>> acc;
    for (const auto& e : comps) {
      std::vector<Poly<typename F::Elem>> g;
      for (int i = 0; i < nv; ++i)
        if (e[i] > 0) g.push_back(R.pow(R.var(i), e[i]));
      HomIdeal<F> q(R, std::move(g), Saturation::Yes);
      acc = acc ? intersect(*acc, q) : q;
    }
    std::vector<Poly<typename F::Elem>> pg;
    for (int i : support) pg.push_back(R.var(i));
    out.push_back({acc->with_saturation(Saturation::Yes), HomIdeal<F>(R, std::move(pg), Saturation::Yes)});
  }
  return out;
}

/// Checks a declared decomposition: each component contains I and lies in its prime, each prime
/// generator has a power (up to `power_bound`) in its component, and the saturated intersection
/// equals the saturation of I. Throws Verification naming the lowest degree where they differ.
template <class F>
void verify_decomposition(const HomIdeal<F>& I, const std::vector<PrimaryComponent<F>>& comps, int power_bound = 8) {
  if (comps.empty()) throw Error(ErrorCode::Verification, "declared decomposition is empty");
  const PolyRing<F>& R = I.ring();
  std::optional<HomIdeal<F>> acc;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const auto& c = comps[k];
    if (!is_subset(I, c.ideal))
      throw Error(ErrorCode::Verification, "component " + std::to_string(k + 1) + " does not contain the ideal");
    if (!is_subset(c.ideal, c.prime))
      throw Error(ErrorCode::Verification, "component " + std::to_string(k + 1) + " is not contained in its prime");
    for (const auto& p : c.prime.gens()) {
      bool found = false;
      Poly<typename F::Elem> q = p;
      for (int e = 1; e <= power_bound && !found; ++e) {
        if (c.ideal.contains(q)) found = true;
        q = R.mul(q, p);
      }
      if (!found)
        throw Error(ErrorCode::Verification,
                    "no power of " + R.to_string(p) + " lies in component " + std::to_string(k + 1));
    }
    acc = acc ? intersect(*acc, c.ideal) : c.ideal;
  }
  HomIdeal<F> meet = saturate(*acc);
  HomIdeal<F> target = saturate(I);
  if (ideals_equal(meet, target)) return;
  int lowest = -1;
  auto scan = [&](const HomIdeal<F>& a, const HomIdeal<F>& b) {
    for (const auto& g : a.gb())
      if (!b.contains(g) && (lowest < 0 || g.lead().deg < lowest)) lowest = g.lead().deg;
  };
  scan(meet, target);
  scan(target, meet);
  throw Error(ErrorCode::Verification,
              "intersection of declared components differs from the ideal in degree " + std::to_string(lowest));
}

}  // namespace twideal
