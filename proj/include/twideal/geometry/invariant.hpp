#pragma once

#include <string>
#include <vector>

#include "twideal/geometry/multiplicative.hpp"
#include "twideal/geometry/point.hpp"
#include "twideal/homology.hpp"
#include "twideal/idealizer.hpp"

namespace twideal {

/// Union of coordinate subspaces V({x_i : i ∈ S}) over the listed supports S.
template <class F>
struct InvariantSubscheme {
  std::vector<std::vector<int>> supports;  // empty list: all of P^d
  HomIdeal<F> ideal;

  std::string str() const {
    if (supports.empty()) return "P^" + std::to_string(ideal.ring().nvars() - 1);
    std::string s;
    for (std::size_t k = 0; k < supports.size(); ++k) {
      s += k ? " u V(" : "V(";
      for (std::size_t i = 0; i < supports[k].size(); ++i)
        s += (i ? "," : "") + ideal.ring().names()[supports[k][i]];
      s += ")";
    }
    return s;
  }
};

namespace detail {

inline std::vector<Monomial> monomial_meet(const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
  std::vector<Monomial> out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(Monomial::lcm(x, y));
  minimalize(out);
  return out;
}

inline bool is_subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace detail

/// Reduced σ-invariant subschemes when σ is diagonal and torus-generic: unions of at most
/// `max_union` coordinate subspaces, as antichains of supports ordered lexicographically.
template <class F>
std::vector<InvariantSubscheme<F>> invariant_coordinate_subschemes(const PolyRing<F>& R, const ProjAutomorphism& sigma,
                                                                   int max_union, bool include_ambient = false) {
  if (static_cast<int>(sigma.size()) != R.nvars())
    throw Error(ErrorCode::Precondition, "automorphism size does not match the ring");
  if (!eigen_data(sigma).torus_generic()) throw Error(ErrorCode::NotClassified, "invariant family not classified");
  const int nv = R.nvars();
  std::vector<std::vector<int>> subsets;
  for (int mask = 1; mask < (1 << nv) - 1; ++mask) {
    std::vector<int> s;
    for (int i = 0; i < nv; ++i)
      if (mask & (1 << i)) s.push_back(i);
    subsets.push_back(s);
  }
  std::sort(subsets.begin(), subsets.end());

  std::vector<InvariantSubscheme<F>> out;
  if (include_ambient) out.push_back({{}, HomIdeal<F>::zero(R)});
  std::vector<int> chosen;
  std::function<void(std::size_t, const std::vector<Monomial>&)> rec = [&](std::size_t from,
                                                                           const std::vector<Monomial>& meet) {
    for (std::size_t k = from; k < subsets.size(); ++k) {
      bool comparable = false;
      for (int c : chosen)
        if (detail::is_subset_of(subsets[c], subsets[k]) || detail::is_subset_of(subsets[k], subsets[c]))
          comparable = true;
      if (comparable) continue;
      std::vector<Monomial> gens;
      for (int i : subsets[k]) gens.push_back(Monomial::var(i));
      std::vector<Monomial> next = chosen.empty() ? gens : detail::monomial_meet(meet, gens);
      chosen.push_back(static_cast<int>(k));
      InvariantSubscheme<F> y{{}, HomIdeal<F>::zero(R)};
      std::vector<Poly<typename F::Elem>> polys;
      for (const auto& m : next) polys.push_back(R.monomial(m));
      for (int c : chosen) y.supports.push_back(subsets[c]);
      y.ideal = HomIdeal<F>(R, std::move(polys), Saturation::Yes);
      out.push_back(std::move(y));
      if (static_cast<int>(chosen.size()) < max_union) rec(k + 1, next);
      chosen.pop_back();
    }
  };
  rec(0, {});
  return out;
}

enum class CtKind { Certified, Refuted, Inconclusive };

inline std::string to_string(CtKind k) {
  switch (k) {
    case CtKind::Certified: return "certified";
    case CtKind::Refuted: return "refuted";
    case CtKind::Inconclusive: return "inconclusive";
  }
  return "?";
}

inline constexpr int kCertificateMaxDim = 3;

template <class F>
struct CtCertificate {
  CtKind kind = CtKind::Inconclusive;
  std::string reason;
  std::optional<InvariantSubscheme<F>> witness;
  int failing_index = 0;  // least j with nonzero Tor_j sheaf against the witness
  std::size_t checked = 0;
  std::vector<std::string> hypotheses;
};

/// Critical transversality of {σ^n Z} through the invariant-subscheme criterion: Z must be
/// homologically transverse to every reduced σ-invariant subscheme (all unions of coordinate
/// subspaces when σ is diagonal and torus-generic).
template <class F>
CtCertificate<F> critical_transversality_certificate(const HomIdeal<F>& Z, const ProjAutomorphism& sigma) {
  const PolyRing<F>& R = Z.ring();
  CtCertificate<F> out;
  if (R.field().characteristic() != 0) {
    out.reason = "characteristic-0 theorem assumed";
    return out;
  }
  if (!eigen_data(sigma).torus_generic()) {
    out.reason = "invariant family not classified";
    return out;
  }
  if (R.nvars() - 1 > kCertificateMaxDim) {
    out.reason = "enumeration capped at d <= " + std::to_string(kCertificateMaxDim);
    return out;
  }
  out.hypotheses = {"characteristic-0 theorem assumed",
                    "distinct eigenvalues with multiplicatively independent ratios stand in for algebraic independence"};
  HomIdeal<F> Is = saturate(Z);
  if (Is.is_unit()) throw Error(ErrorCode::Precondition, "empty subscheme");
  TorCalculator<F> calc(Is);
  for (const auto& Y : invariant_coordinate_subschemes(R, sigma, R.nvars())) {
    ++out.checked;
    auto v = homologically_transverse(calc, Y.ideal);
    if (!v.transverse) {
      out.kind = CtKind::Refuted;
      out.witness = Y;
      out.failing_index = v.failing_index;
      out.reason = "not homologically transverse to " + Y.str() + " (Tor_" + std::to_string(v.failing_index) + ")";
      return out;
    }
  }
  out.kind = CtKind::Certified;
  out.reason = "transverse to all " + std::to_string(out.checked) + " invariant coordinate unions";
  return out;
}

template <class F>
CtCertificate<F> critical_transversality_certificate(const IdealizerScene<F>& scene) {
  return critical_transversality_certificate(scene.ideal(), scene.sigma());
}

}  // namespace twideal
