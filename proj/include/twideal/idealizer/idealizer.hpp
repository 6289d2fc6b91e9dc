#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "twideal/idealizer/decomposition.hpp"
#include "twideal/twist.hpp"

namespace twideal {

/// Data (P^d, O(1), σ, Z) of a geometric idealizer; I_Z is stored saturated.
template <class F>
class IdealizerScene {
 public:
  using P = Poly<typename F::Elem>;

  IdealizerScene(HomIdeal<F> I, ProjAutomorphism sigma, std::vector<PrimaryComponent<F>> components = {})
      : ring_(I.ring()), sigma_(std::move(sigma)), I_(saturate(I)), components_(std::move(components)),
        cache_(std::make_shared<Cache>()) {
    if (static_cast<int>(sigma_.size()) != ring_.nvars())
      throw Error(ErrorCode::Precondition, "automorphism size does not match the ring");
    if (I_.is_unit()) throw Error(ErrorCode::Precondition, "the subscheme is empty (ideal saturates to the unit ideal)");
    if (!components_.empty()) verify_decomposition(I_, components_);
  }

  const PolyRing<F>& ring() const { return ring_; }
  const ProjAutomorphism& sigma() const { return sigma_; }
  const HomIdeal<F>& ideal() const { return I_; }
  const std::vector<PrimaryComponent<F>>& components() const { return components_; }
  int dim() const { return ring_.nvars() - 1; }

  /// (I : I^{σ^n}), cached per n.
  HomIdeal<F> colon(int n) const {
    {
      std::lock_guard<std::mutex> lock(cache_->mu);
      auto it = cache_->colons.find(n);
      if (it != cache_->colons.end()) return it->second;
    }
    HomIdeal<F> c = n == 0 ? HomIdeal<F>::unit(ring_) : ideal_quotient(I_, pullback_ideal(I_, sigma_, n));
    c = groebner(c).with_saturation(Saturation::Yes);
    std::lock_guard<std::mutex> lock(cache_->mu);
    return cache_->colons.emplace(n, c).first->second;
  }

  /// The same Z with σ replaced by σ^v.
  IdealizerScene veronese(long v) const { return IdealizerScene(I_, sigma_.pow(v), components_); }

 private:
  struct Cache {
    std::mutex mu;
    std::map<int, HomIdeal<F>> colons;
  };

  PolyRing<F> ring_;
  ProjAutomorphism sigma_;
  HomIdeal<F> I_;
  std::vector<PrimaryComponent<F>> components_;
  std::shared_ptr<Cache> cache_;
};

/// R_n = (I : I^{σ^n})_n, with R_0 = k.
template <class F>
DegreePiece<F> idealizer_piece(const IdealizerScene<F>& scene, int n) {
  if (n < 0) throw Error(ErrorCode::Precondition, "negative degree");
  if (n == 0) return make_piece(scene.ring(), 0, {scene.ring().one()});
  return make_piece(scene.ring(), n, scene.colon(n).degree_part(n));
}

/// I_n, the degree-n part of the saturated ideal of Z.
template <class F>
DegreePiece<F> ideal_piece(const IdealizerScene<F>& scene, int n) {
  return make_piece(scene.ring(), n, scene.ideal().degree_part(n));
}

/// Degree-bounded idealizer test: x ⋆ I_m ⊆ I_{n+m} for 0 <= m <= horizon.
/// On failure `witness_degree` receives the least failing m.
template <class F>
bool membership_oracle(const TwistedElement<F>& x, const IdealizerScene<F>& scene, int horizon,
                       int* witness_degree = nullptr) {
  if (horizon < 1) throw Error(ErrorCode::Precondition, "oracle horizon must be at least 1");
  const PolyRing<F>& R = scene.ring();
  if (x.poly.is_zero()) return true;
  for (int m = 0; m <= horizon; ++m)
    for (const auto& g : scene.ideal().degree_part(m)) {
      auto prod = twist_multiply(R, x, TwistedElement<F>{m, g}, scene.sigma());
      if (!scene.ideal().contains(prod.poly)) {
        if (witness_degree) *witness_degree = m;
        return false;
      }
    }
  return true;
}

/// Every degree-n form passing the membership oracle, found by linear algebra over all of B_n.
template <class F>
DegreePiece<F> oracle_piece(const IdealizerScene<F>& scene, int n, int horizon) {
  const PolyRing<F>& R = scene.ring();
  auto monos = monomials_of_degree(R.nvars(), n);
  if (n == 0) return make_piece(R, 0, {R.one()});
  // Column k of the condition matrix: images NF(μ_k · g^{σ^n}) stacked over all test elements g.
  std::vector<Poly<typename F::Elem>> tests;
  for (int m = 0; m <= horizon; ++m)
    for (const auto& g : scene.ideal().degree_part(m)) tests.push_back(pullback(R, g, scene.sigma(), n));
  std::vector<std::vector<Monomial>> image_monos(tests.size());
  std::vector<std::vector<Poly<typename F::Elem>>> images(monos.size());
  for (std::size_t k = 0; k < monos.size(); ++k)
    for (const auto& t : tests)
      images[k].push_back(scene.ideal().normal_form(R.mul_term(t, monos[k], R.field().one())));
  // Index every monomial that occurs per test slot.
  std::vector<std::map<std::array<std::uint16_t, kMaxVars>, std::size_t>> slot(tests.size());
  std::size_t rows = 0;
  for (std::size_t t = 0; t < tests.size(); ++t)
    for (std::size_t k = 0; k < monos.size(); ++k)
      for (const auto& term : images[k][t].terms)
        if (slot[t].emplace(term.m.exp, 0).second) ++rows;
  std::size_t offset = 0;
  for (auto& s : slot)
    for (auto& [key, idx] : s) idx = offset++;
  Matrix<F> A(R.field(), rows, monos.size());
  for (std::size_t k = 0; k < monos.size(); ++k)
    for (std::size_t t = 0; t < tests.size(); ++t)
      for (const auto& term : images[k][t].terms) A.at(slot[t].at(term.m.exp), k) = term.c;
  std::vector<Poly<typename F::Elem>> forms;
  for (const auto& v : A.nullspace()) forms.push_back(from_coordinates(R, monos, v));
  return make_piece(R, n, forms);
}

struct StabilizationRow {
  int n = 0;
  bool equals_ideal = false;  // (I : I^{σ^n}) = I
  bool unit = false;          // (I : I^{σ^n}) = (1)
};

struct StabilizationResult {
  std::optional<int> n0;  // empty: not stabilized by N
  bool degenerate = false;  // colon is the unit ideal for some n (fixed part present)
  std::vector<StabilizationRow> table;
};

/// Least n0 with (I : I^{σ^n}) = I for all n0 <= n <= N.
template <class F>
StabilizationResult stabilization_degree(const IdealizerScene<F>& scene, int N) {
  if (N < 1) throw Error(ErrorCode::Precondition, "stabilization bound must be at least 1");
  StabilizationResult out;
  for (int n = 1; n <= N; ++n) {
    HomIdeal<F> c = scene.colon(n);
    StabilizationRow row{n, ideals_equal(c, scene.ideal()), c.is_unit()};
    out.degenerate = out.degenerate || row.unit;
    out.table.push_back(row);
  }
  int n0 = N + 1;
  while (n0 > 1 && out.table[n0 - 2].equals_ideal) --n0;
  if (n0 <= N) out.n0 = n0;
  return out;
}

struct IdealizerHilbertRow {
  int n = 0;
  long dim_B = 0;
  long dim_I = 0;
  long dim_R = 0;
  bool stabilized = false;  // (I : I^{σ^n}) = I at this n
};

/// dim B_n, dim I_n and dim R_n for n = 0..N.
template <class F>
std::vector<IdealizerHilbertRow> idealizer_hilbert(const IdealizerScene<F>& scene, int N) {
  if (N < 0) throw Error(ErrorCode::Precondition, "negative degree bound");
  const int nv = scene.ring().nvars();
  std::vector<IdealizerHilbertRow> out;
  for (int n = 0; n <= N; ++n) {
    IdealizerHilbertRow row;
    row.n = n;
    row.dim_B = static_cast<long>(monomials_of_degree(nv, n).size());
    row.dim_I = row.dim_B - scene.ideal().hilbert_function(n);
    if (n == 0) {
      row.dim_R = 1;
    } else {
      HomIdeal<F> c = scene.colon(n);
      row.dim_R = row.dim_B - c.hilbert_function(n);
      row.stabilized = ideals_equal(c, scene.ideal());
    }
    out.push_back(row);
  }
  return out;
}

}  // namespace twideal
