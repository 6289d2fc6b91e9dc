#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twideal/cli/scene_file.hpp"

namespace twideal {

struct ComponentInfo {
  std::string ideal;
  std::string prime;
  int codim = 0;
  std::optional<int> order;  // σ-order of the reduced component, if <= the bound
  bool finite_order() const { return order.has_value(); }
};

/// Primary components split into J (finite σ-order) and W (infinite order, as far as checked).
template <class F>
struct ComponentAnalysis {
  std::string source;  // "monomial", "linear" or "declared"
  std::vector<ComponentInfo> components;
  std::optional<HomIdeal<F>> J;  // intersection of finite-order components
  std::optional<HomIdeal<F>> W;  // intersection of the others
  std::optional<int> j_period;   // least n <= bound with J^{σ^n} = J
  int order_bound = 0;
  bool has_fixed_part() const { return J.has_value(); }
};

/// Decomposition computed natively: monomial ideals, and ideals generated by linear forms (prime).
template <class F>
std::optional<std::vector<PrimaryComponent<F>>> native_decomposition(const HomIdeal<F>& I, std::string* source = nullptr) {
  if (I.is_monomial()) {
    if (source) *source = "monomial";
    return monomial_primary_decomposition(I);
  }
  bool linear = true;
  for (const auto& g : I.gb()) linear = linear && g.lead().deg == 1;
  if (linear) {
    if (source) *source = "linear";
    return std::vector<PrimaryComponent<F>>{{I, I}};
  }
  return std::nullopt;
}

/// Least k in 1..bound with P^{σ^k} = P.
template <class F>
std::optional<int> ideal_order(const HomIdeal<F>& P, const ProjAutomorphism& sigma, int bound) {
  for (int k = 1; k <= bound; ++k)
    if (ideals_equal(pullback_ideal(P, sigma, k), P)) return k;
  return std::nullopt;
}

template <class F>
ComponentAnalysis<F> component_analysis(const IdealizerScene<F>& scene, int order_bound) {
  ComponentAnalysis<F> out;
  out.order_bound = order_bound;
  std::vector<PrimaryComponent<F>> comps;
  if (!scene.components().empty()) {
    comps = scene.components();
    out.source = "declared";
  } else if (auto native = native_decomposition(scene.ideal(), &out.source)) {
    comps = *native;
  } else {
    throw Error(ErrorCode::Precondition,
                "decomposition unavailable: the ideal is neither monomial nor linear and no components are declared");
  }
  for (const auto& c : comps) {
    ComponentInfo info;
    info.ideal = c.ideal.str();
    info.prime = c.prime.str();
    info.codim = c.ideal.codimension();
    info.order = ideal_order(c.prime, scene.sigma(), order_bound);
    out.components.push_back(info);
    auto& slot = info.order ? out.J : out.W;
    slot = slot ? intersect(*slot, c.ideal) : c.ideal;
  }
  if (out.J) out.j_period = ideal_order(*out.J, scene.sigma(), order_bound);
  return out;
}

}  // namespace twideal
