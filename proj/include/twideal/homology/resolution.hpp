#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "twideal/homology/module.hpp"

namespace twideal {

/// Minimal graded free resolution ... -> F_2 -> F_1 -> F_0 = A of A/I over A = S/Q,
/// extended lazily on demand. Q = 0 gives the polynomial ring itself.
template <class F>
class FreeResolution {
 public:
  using K = typename F::Elem;
  using P = Poly<K>;

  FreeResolution(const HomIdeal<F>& I, const HomIdeal<F>& Q) : ring_(I.ring()), state_(std::make_shared<State>()) {
    require_same_ring(I, Q);
    state_->Q = Q.gb();
    state_->shifts.push_back({0});
    std::vector<P> cands;
    for (const auto& g : I.gens()) cands.push_back(g);
    auto gens = minimal_generators(ring_, {0}, cands, state_->Q);
    GradedMap<F> d1;
    d1.target_shifts = {0};
    for (const auto& g : gens) {
      d1.source_shifts.push_back(g.lead().deg);
      d1.columns.push_back(g);
    }
    if (!gens.empty()) {
      state_->shifts.push_back(d1.source_shifts);
      state_->maps.push_back(std::move(d1));
    } else {
      state_->exact = true;
    }
  }

  explicit FreeResolution(const HomIdeal<F>& I) : FreeResolution(I, HomIdeal<F>::zero(I.ring())) {}

  const PolyRing<F>& ring() const { return ring_; }
  const std::vector<P>& quotient_relations() const { return state_->Q; }
  bool over_polynomial_ring() const { return state_->Q.empty(); }

  /// Makes sure d_1..d_length exist (or the resolution has terminated).
  void extend_to(int length) const {
    std::lock_guard<std::mutex> lock(state_->mu);
    State& s = *state_;
    while (!s.exact && static_cast<int>(s.maps.size()) < length) {
      const GradedMap<F>& last = s.maps.back();
      auto N_target = ideal_times_free(ring_, s.Q, last.target_rank());
      auto lifts = kernel_lifts(ring_, last, N_target);
      auto N_source = ideal_times_free(ring_, s.Q, last.source_rank());
      auto gens = minimal_generators(ring_, last.source_shifts, lifts, N_source);
      if (gens.empty()) {
        s.exact = true;
        break;
      }
      GradedMap<F> d;
      d.target_shifts = last.source_shifts;
      for (const auto& g : gens) {
        d.source_shifts.push_back(module_degree(g.lead(), last.source_shifts));
        d.columns.push_back(g);
      }
      s.shifts.push_back(d.source_shifts);
      s.maps.push_back(std::move(d));
    }
  }

  /// Number of nonzero maps computed so far.
  int computed_length() const {
    std::lock_guard<std::mutex> lock(state_->mu);
    return static_cast<int>(state_->maps.size());
  }
  /// True once a zero kernel has been found (the resolution is complete).
  bool terminated() const {
    std::lock_guard<std::mutex> lock(state_->mu);
    return state_->exact;
  }

  /// Degrees of the basis of F_j (empty if F_j = 0). Extends as needed.
  std::vector<int> shifts(int j) const {
    extend_to(j);
    std::lock_guard<std::mutex> lock(state_->mu);
    if (j < static_cast<int>(state_->shifts.size())) return state_->shifts[j];
    return {};
  }
  /// d_j : F_j -> F_{j-1} for j >= 1. Zero map if beyond the end.
  GradedMap<F> map(int j) const {
    extend_to(j);
    std::lock_guard<std::mutex> lock(state_->mu);
    if (j >= 1 && j <= static_cast<int>(state_->maps.size())) return state_->maps[j - 1];
    GradedMap<F> zero;
    if (j - 1 < static_cast<int>(state_->shifts.size())) zero.target_shifts = state_->shifts[j - 1];
    return zero;
  }
  std::vector<std::size_t> ranks(int length) const {
    std::vector<std::size_t> r;
    for (int j = 0; j <= length; ++j) r.push_back(shifts(j).size());
    return r;
  }

 private:
  struct State {
    std::mutex mu;
    std::vector<P> Q;
    std::vector<std::vector<int>> shifts;
    std::vector<GradedMap<F>> maps;
    bool exact = false;
  };

  PolyRing<F> ring_;
  std::shared_ptr<State> state_;
};

struct ResolutionResult {
  int requested_length = 0;
  int length = 0;
  std::vector<std::string> notices;
};

/// Minimal free resolution of S/I up to the requested length (clamped to d+1 over S).
template <class F>
FreeResolution<F> free_resolution(const HomIdeal<F>& I, int length, ResolutionResult* info = nullptr) {
  FreeResolution<F> res(I);
  int cap = I.ring().nvars();
  int eff = length;
  if (length > cap) {
    eff = cap;
    if (info) info->notices.push_back("length " + std::to_string(length) + " clamped to " + std::to_string(cap));
  }
  res.extend_to(eff);
  if (info) {
    info->requested_length = length;
    info->length = std::min(eff, res.computed_length());
  }
  return res;
}

}  // namespace twideal
