#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "twideal/kernel/groebner.hpp"
#include "twideal/kernel/hilbert.hpp"

namespace twideal {

enum class Saturation { Unknown, Yes, No };

/// Homogeneous ideal of k[x_0..x_d] with a lazily computed, shared reduced Groebner basis.
template <class F>
class HomIdeal {
 public:
  using K = typename F::Elem;
  using P = Poly<K>;

  HomIdeal(PolyRing<F> ring, std::vector<P> gens, Saturation sat = Saturation::Unknown)
      : ring_(std::move(ring)), sat_(sat), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      if (!g.is_homogeneous())
        throw Error(ErrorCode::Precondition, "generator is not homogeneous: " + ring_.to_string(g));
      gens_.push_back(std::move(g));
    }
  }

  static HomIdeal zero(const PolyRing<F>& ring) { return HomIdeal(ring, {}, Saturation::Yes); }
  static HomIdeal unit(const PolyRing<F>& ring) { return HomIdeal(ring, {ring.one()}, Saturation::Yes); }
  /// The irrelevant ideal (x_0, ..., x_d).
  static HomIdeal irrelevant(const PolyRing<F>& ring) {
    std::vector<P> g;
    for (int i = 0; i < ring.nvars(); ++i) g.push_back(ring.var(i));
    return HomIdeal(ring, std::move(g), Saturation::No);
  }
  static HomIdeal parse(const PolyRing<F>& ring, const std::vector<std::string>& gens,
                        Saturation sat = Saturation::Unknown) {
    std::vector<P> g;
    for (const auto& s : gens) g.push_back(ring.parse(s));
    return HomIdeal(ring, std::move(g), sat);
  }

  const PolyRing<F>& ring() const { return ring_; }
  const std::vector<P>& gens() const { return gens_; }
  Saturation saturated() const { return sat_; }
  HomIdeal with_saturation(Saturation s) const {
    HomIdeal r = *this;
    r.sat_ = s;
    return r;
  }

  /// Reduced Groebner basis for the ring's order.
  const std::vector<P>& gb() const { return cache().gb; }
  const GroebnerEngine<F>& engine() const { return *cache().eng; }

  P normal_form(const P& f) const { return engine().reduce(f); }
  bool contains(const P& f) const { return normal_form(f).is_zero(); }
  bool is_zero() const { return gb().empty(); }
  bool is_unit() const { return !gb().empty() && gb().front().is_constant(); }
  bool is_monomial() const {
    for (const auto& g : gens_)
      if (g.size() != 1) return false;
    return true;
  }
  int max_generator_degree() const {
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, static_cast<int>(g.lead().deg));
    return d;
  }

  std::vector<Monomial> lead_monomials() const {
    std::vector<Monomial> out;
    for (const auto& g : gb()) out.push_back(g.lead());
    return out;
  }

  HilbertSeries hilbert_series() const { return hilbert_series_of_leads(ring_.nvars(), lead_monomials(), {0}); }
  /// dim_k (S/I)_n
  long hilbert_function(long n) const { return hilbert_series().function(n); }
  UniPoly hilbert_polynomial() const { return hilbert_series().polynomial(); }
  /// d minus the degree of the Hilbert polynomial (the zero polynomial has degree -1).
  int codimension() const { return ring_.nvars() - 1 - hilbert_polynomial().degree(); }

  /// Canonical basis of the degree-n piece I_n: m - NF(m) for each leading monomial m of degree n.
  std::vector<P> degree_part(int n) const {
    std::vector<P> out;
    auto leads = lead_monomials();
    for (const auto& m : monomials_of_degree(ring_.nvars(), n)) {
      bool in_initial = false;
      for (const auto& l : leads)
        if (l.divides(m)) {
          in_initial = true;
          break;
        }
      if (!in_initial) continue;
      P mono = ring_.monomial(m);
      out.push_back(ring_.sub(mono, normal_form(mono)));
    }
    std::sort(out.begin(), out.end(), [&](const P& a, const P& b) { return ring_.cmp(a.lead(), b.lead()) > 0; });
    return out;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + ring_.to_string(gens_[i]);
    return s + ")";
  }

 private:
  struct Cache {
    std::once_flag once;
    std::optional<GroebnerEngine<F>> eng;
    std::vector<P> gb;
  };

  const Cache& cache() const {
    std::call_once(cache_->once, [this] {
      GroebnerEngine<F> e(ring_);
      for (const auto& g : gens_) e.add(g);
      e.complete();
      cache_->gb = e.reduced_basis();
      // Rebuild on the reduced basis so later reductions use the smallest reducers.
      GroebnerEngine<F> r(ring_);
      for (const auto& g : cache_->gb) r.add(g);
      cache_->eng.emplace(std::move(r));
    });
    return *cache_;
  }

  PolyRing<F> ring_;
  std::vector<P> gens_;
  Saturation sat_;
  std::shared_ptr<Cache> cache_;
};

template <class F>
void require_same_ring(const HomIdeal<F>& a, const HomIdeal<F>& b) {
  if (a.ring().nvars() != b.ring().nvars() || !(a.ring().order() == b.ring().order()) ||
      !(a.ring().field() == b.ring().field()))
    throw Error(ErrorCode::Precondition, "ideals live in different rings");
}

/// The ideal with its reduced basis (for the given order) as generators.
template <class F>
HomIdeal<F> groebner(const HomIdeal<F>& I, std::optional<TermOrder> ord = std::nullopt) {
  PolyRing<F> ring = ord ? I.ring().with_order(*ord) : I.ring();
  std::vector<typename HomIdeal<F>::P> gens;
  for (const auto& g : I.gens()) gens.push_back(ring.resort(g));
  HomIdeal<F> J(ring, std::move(gens), I.saturated());
  return HomIdeal<F>(ring, J.gb(), I.saturated());
}

template <class F>
bool is_subset(const HomIdeal<F>& a, const HomIdeal<F>& b) {
  require_same_ring(a, b);
  for (const auto& g : a.gens())
    if (!b.contains(g)) return false;
  return true;
}

template <class F>
bool ideals_equal(const HomIdeal<F>& a, const HomIdeal<F>& b) {
  require_same_ring(a, b);
  return a.gb() == b.gb();
}

template <class F>
HomIdeal<F> ideal_sum(const HomIdeal<F>& a, const HomIdeal<F>& b) {
  require_same_ring(a, b);
  auto g = a.gens();
  g.insert(g.end(), b.gens().begin(), b.gens().end());
  return HomIdeal<F>(a.ring(), std::move(g));
}

template <class F>
HomIdeal<F> ideal_product(const HomIdeal<F>& a, const HomIdeal<F>& b) {
  require_same_ring(a, b);
  std::vector<typename HomIdeal<F>::P> g;
  for (const auto& f : a.gens())
    for (const auto& h : b.gens()) g.push_back(a.ring().mul(f, h));
  return HomIdeal<F>(a.ring(), std::move(g));
}

/// I ∩ J by eliminating t from t*I + (1 - t)*J.
template <class F>
HomIdeal<F> intersect(const HomIdeal<F>& a, const HomIdeal<F>& b) {
  require_same_ring(a, b);
  const auto& R = a.ring();
  if (a.is_zero() || b.is_zero()) return HomIdeal<F>::zero(R);
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  int n = R.nvars();
  if (n + 1 > kMaxVars) throw Error(ErrorCode::Precondition, "no room for an auxiliary variable");
  PolyRing<F> T = R.with_extra_variable("t_", TermOrder::elimination(1U << n));
  auto t = T.var(n);
  auto one_minus_t = T.sub(T.one(), t);
  GroebnerEngine<F> eng(T);
  for (const auto& f : a.gens()) eng.add(T.mul(t, T.resort(f)));
  for (const auto& g : b.gens()) eng.add(T.mul(one_minus_t, T.resort(g)));
  eng.complete();
  std::vector<typename HomIdeal<F>::P> out;
  for (const auto& g : eng.reduced_basis())
    if (g.lead().exp[n] == 0) out.push_back(R.resort(g));
  bool sat = a.saturated() == Saturation::Yes && b.saturated() == Saturation::Yes;
  return HomIdeal<F>(R, std::move(out), sat ? Saturation::Yes : Saturation::Unknown);
}

/// (I : f) for a single homogeneous polynomial.
template <class F>
HomIdeal<F> quotient_by_element(const HomIdeal<F>& I, const typename HomIdeal<F>::P& f) {
  const auto& R = I.ring();
  if (f.is_zero() || I.contains(f)) return HomIdeal<F>::unit(R);
  HomIdeal<F> principal(R, {f});
  HomIdeal<F> cap = intersect(I, principal);
  std::vector<typename HomIdeal<F>::P> out;
  for (const auto& g : cap.gb()) out.push_back(R.divide_exact(g, f));
  return HomIdeal<F>(R, std::move(out), I.saturated() == Saturation::Yes ? Saturation::Yes : Saturation::Unknown);
}

/// (I : J) = {f : f J ⊆ I}.
template <class F>
HomIdeal<F> ideal_quotient(const HomIdeal<F>& I, const HomIdeal<F>& J) {
  require_same_ring(I, J);
  const auto& R = I.ring();
  if (is_subset(J, I)) return HomIdeal<F>::unit(R);
  std::optional<HomIdeal<F>> acc;
  for (const auto& g : J.gens()) {
    if (I.contains(g)) continue;
    HomIdeal<F> q = quotient_by_element(I, g);
    acc = acc ? intersect(*acc, q) : q;
  }
  HomIdeal<F> res = groebner(*acc);
  return res.with_saturation(I.saturated() == Saturation::Yes ? Saturation::Yes : Saturation::Unknown);
}

inline constexpr int kSaturationCap = 50;

/// (I : J^∞) by iterated quotients; J defaults to the irrelevant ideal.
template <class F>
HomIdeal<F> saturate(const HomIdeal<F>& I, std::optional<HomIdeal<F>> J = std::nullopt) {
  HomIdeal<F> m = HomIdeal<F>::irrelevant(I.ring());
  bool irrelevant = !J.has_value() || ideals_equal(*J, m);
  HomIdeal<F> by = J ? *J : m;
  if (irrelevant && I.saturated() == Saturation::Yes) return I;
  HomIdeal<F> cur = I;
  for (int k = 0; k < kSaturationCap; ++k) {
    HomIdeal<F> next = ideal_quotient(cur, by);
    if (ideals_equal(next, cur))
      return groebner(cur).with_saturation(irrelevant ? Saturation::Yes : I.saturated());
    cur = next;
  }
  throw Error(ErrorCode::ResourceCap, "saturation did not stabilize within " + std::to_string(kSaturationCap) +
                                          " quotient steps");
}

template <class F>
bool is_saturated(const HomIdeal<F>& I) {
  if (I.saturated() != Saturation::Unknown) return I.saturated() == Saturation::Yes;
  return ideals_equal(ideal_quotient(I, HomIdeal<F>::irrelevant(I.ring())), I);
}

}  // namespace twideal
