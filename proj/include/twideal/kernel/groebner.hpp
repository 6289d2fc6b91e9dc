#pragma once

#include <algorithm>
#include <climits>
#include <optional>
#include <vector>

#include "twideal/kernel/poly.hpp"

namespace twideal {

/// Incremental Buchberger engine with the Gebauer-Moeller pair criteria.
///
/// Works for ideals and for submodules of graded free modules (components carry
/// degree shifts, position-over-term order). For homogeneous input, complete(D)
/// makes the basis correct through degree D and can be resumed later.
template <class F>
class GroebnerEngine {
 public:
  using K = typename F::Elem;
  using P = Poly<K>;

  explicit GroebnerEngine(PolyRing<F> ring, std::vector<int> shifts = {})
      : ring_(std::move(ring)), shifts_(std::move(shifts)), module_(shifts_.size() > 1) {
    if (shifts_.empty()) shifts_.push_back(0);
  }

  const PolyRing<F>& ring() const { return ring_; }
  const std::vector<int>& shifts() const { return shifts_; }

  int degree_of(const Monomial& m) const { return m.deg + shifts_.at(m.comp); }
  int degree_of(const P& f) const { return degree_of(f.lead()); }

  /// Adds a generator. Returns false if it already reduces to zero.
  bool add(const P& f) {
    if (!f.is_zero() && f.lead().comp >= static_cast<int>(shifts_.size()))
      throw Error(ErrorCode::Precondition, "module component out of range");
    P h = reduce(f);
    if (h.is_zero()) return false;
    insert(ring_.make_monic(h));
    return true;
  }

  /// Processes pending pairs, optionally only those of degree <= max_degree.
  void complete(std::optional<int> max_degree = std::nullopt) {
    for (;;) {
      std::size_t best = pairs_.size();
      for (std::size_t k = 0; k < pairs_.size(); ++k) {
        if (max_degree && pairs_[k].degree > *max_degree) continue;
        if (best == pairs_.size() || before(pairs_[k], pairs_[best])) best = k;
      }
      if (best == pairs_.size()) break;
      Pair pr = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      P h = reduce(spoly(pr));
      if (!h.is_zero()) insert(ring_.make_monic(h));
    }
  }

  /// Lowest degree of a pending pair, if any.
  std::optional<int> pending_degree() const {
    std::optional<int> d;
    for (const auto& p : pairs_)
      if (!d || p.degree < *d) d = p.degree;
    return d;
  }

  /// Full normal form with respect to the current active elements.
  P reduce(const P& f) const {
    P g = f, result;
    std::size_t start = 0;
    while (start < g.size()) {
      const Term<K>& lt = g.terms[start];
      const P* r = find_reducer(lt.m);
      if (r == nullptr) {
        result.terms.push_back(lt);
        ++start;
        continue;
      }
      Monomial q = lt.m / r->lead();
      K c = -lt.c;
      if (start > 0) {
        g.terms.erase(g.terms.begin(), g.terms.begin() + static_cast<std::ptrdiff_t>(start));
        start = 0;
      }
      g = ring_.add_multiple(g, c, q, *r);
    }
    return result;
  }

  bool contains(const P& f) const { return reduce(f).is_zero(); }

  /// Active elements; their leading monomials form the minimal generators of the initial module.
  std::vector<P> basis() const {
    std::vector<P> out;
    for (std::size_t i = 0; i < elems_.size(); ++i)
      if (active_[i]) out.push_back(elems_[i]);
    return out;
  }

  std::vector<Monomial> lead_monomials() const {
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < elems_.size(); ++i)
      if (active_[i]) out.push_back(elems_[i].lead());
    return out;
  }

  /// The unique reduced basis (meaningful once complete() has run), sorted by decreasing lead.
  std::vector<P> reduced_basis() const {
    std::vector<P> out;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (!active_[i]) continue;
      const P& g = elems_[i];
      P tail;
      tail.terms.assign(g.terms.begin() + 1, g.terms.end());
      P red = reduce(tail);
      P h;
      h.terms.push_back(g.terms.front());
      h.terms.insert(h.terms.end(), red.terms.begin(), red.terms.end());
      out.push_back(ring_.make_monic(h));
    }
    std::sort(out.begin(), out.end(), [&](const P& a, const P& b) { return ring_.cmp(a.lead(), b.lead()) > 0; });
    return out;
  }

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    int degree;
  };

  bool before(const Pair& a, const Pair& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    int c = ring_.cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  const P* find_reducer(const Monomial& m) const {
    for (std::size_t k = 0; k < leads_.size(); ++k) {
      const Monomial& l = leads_[k];
      if (l.comp == m.comp && l.divides(m)) return &elems_[lead_index_[k]];
    }
    return nullptr;
  }

  P spoly(const Pair& pr) const {
    const P& a = elems_[pr.i];
    const P& b = elems_[pr.j];
    Monomial ma = pr.lcm / a.lead();
    Monomial mb = pr.lcm / b.lead();
    P s = ring_.mul_term(a, ma, ring_.one_coeff());
    return ring_.add_multiple(s, -ring_.one_coeff(), mb, b);
  }

  bool disjoint(const Monomial& a, const Monomial& b) const { return !module_ && a.coprime(b); }

  void insert(P h) {
    std::size_t hi = elems_.size();
    const Monomial hl = h.lead();
    elems_.push_back(std::move(h));
    active_.push_back(true);

    // Chain criterion on existing pairs.
    std::vector<Pair> kept;
    kept.reserve(pairs_.size());
    for (const auto& p : pairs_) {
      if (p.lcm.comp == hl.comp && hl.divides(p.lcm)) {
        Monomial li = Monomial::lcm(elems_[p.i].lead(), hl);
        Monomial lj = Monomial::lcm(elems_[p.j].lead(), hl);
        if (!(li == p.lcm) && !(lj == p.lcm)) continue;
      }
      kept.push_back(p);
    }
    pairs_ = std::move(kept);

    // New pairs, pruned among themselves.
    std::vector<Pair> cand;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g] || elems_[g].lead().comp != hl.comp) continue;
      Monomial l = Monomial::lcm(elems_[g].lead(), hl);
      cand.push_back({g, hi, l, degree_of(l)});
    }
    std::vector<Pair> d;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      const Pair& p = cand[a];
      bool keep = disjoint(elems_[p.i].lead(), hl);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < cand.size() && keep; ++b)
          if (cand[b].lcm.divides(p.lcm)) keep = false;
        for (std::size_t b = 0; b < d.size() && keep; ++b)
          if (d[b].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) d.push_back(p);
    }
    for (const auto& p : d)
      if (!disjoint(elems_[p.i].lead(), hl)) pairs_.push_back(p);

    // Retire elements whose lead is now redundant.
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && elems_[g].lead().comp == hl.comp && hl.divides(elems_[g].lead())) active_[g] = false;
    leads_.clear();
    lead_index_.clear();
    for (std::size_t g = 0; g < elems_.size(); ++g)
      if (active_[g]) {
        leads_.push_back(elems_[g].lead());
        lead_index_.push_back(g);
      }
  }

  PolyRing<F> ring_;
  std::vector<int> shifts_;
  bool module_;
  std::vector<P> elems_;
  std::vector<bool> active_;
  std::vector<Monomial> leads_;
  std::vector<std::size_t> lead_index_;
  std::vector<Pair> pairs_;
};

/// Reduced Groebner basis of the given generators.
template <class F>
std::vector<Poly<typename F::Elem>> groebner_basis(const PolyRing<F>& ring, const std::vector<Poly<typename F::Elem>>& gens) {
  GroebnerEngine<F> eng(ring);
  for (const auto& g : gens) eng.add(g);
  eng.complete();
  return eng.reduced_basis();
}

}  // namespace twideal
