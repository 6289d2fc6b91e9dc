#pragma once

#include <map>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "twideal/homology/tor.hpp"

namespace twideal {

/// Graded pieces (S/G)_e for e <= top, in the basis of standard monomials of G's initial ideal.
template <class F>
class QuotientPieces {
 public:
  using K = typename F::Elem;
  using P = Poly<K>;
  using Vec = std::vector<K>;

  QuotientPieces(const HomIdeal<F>& G, int top) : G_(G), top_(top) {
    const int n = G.ring().nvars();
    auto leads = G.lead_monomials();
    basis_.resize(top + 2);
    index_.resize(top + 2);
    for (int e = 0; e <= top + 1; ++e) {
      for (const auto& m : monomials_of_degree(n, e)) {
        bool standard = true;
        for (const auto& l : leads)
          if (l.divides(m)) {
            standard = false;
            break;
          }
        if (!standard) continue;
        index_[e][m] = basis_[e].size();
        basis_[e].push_back(m);
      }
    }
  }

  const PolyRing<F>& ring() const { return G_.ring(); }
  int top() const { return top_; }
  std::size_t dim(int e) const { return e < 0 || e > top_ + 1 ? 0 : basis_[e].size(); }
  const std::vector<Monomial>& basis(int e) const { return basis_.at(e); }
  /// Position of a standard monomial, or -1.
  long position(const Monomial& m) const {
    if (m.deg > top_ + 1) return -1;
    auto it = index_[m.deg].find(m.with_comp(0));
    return it == index_[m.deg].end() ? -1 : static_cast<long>(it->second);
  }

  /// Coordinates of a homogeneous polynomial of degree e.
  Vec coords(const P& f, int e) const {
    Vec v(dim(e), ring().field().zero());
    P r = G_.normal_form(f);
    for (const auto& t : r.terms) {
      long p = position(t.m);
      if (p < 0) throw Error(ErrorCode::Verification, "normal form left the standard basis");
      v[p] = t.c;
    }
    return v;
  }

  /// x_k * (basis element b of degree e), cached.
  const Vec& times_var_basis(int e, std::size_t b, int k) const {
    auto key = std::make_tuple(e, b, k);
    auto it = mult_cache_.find(key);
    if (it != mult_cache_.end()) return it->second;
    Monomial m = basis_[e][b] * Monomial::var(k);
    Vec v = coords(ring().monomial(m), e + 1);
    return mult_cache_.emplace(key, std::move(v)).first->second;
  }

 private:
  struct KeyHash {
    std::size_t operator()(const std::tuple<int, std::size_t, int>& k) const {
      return (static_cast<std::size_t>(std::get<0>(k)) * 1000003u + std::get<1>(k)) * 31u + std::get<2>(k);
    }
  };

  HomIdeal<F> G_;
  int top_;
  std::vector<std::vector<Monomial>> basis_;
  std::vector<std::unordered_map<Monomial, std::size_t, MonomialHash>> index_;
  mutable std::unordered_map<std::tuple<int, std::size_t, int>, Vec, KeyHash> mult_cache_;
};

/// Minimal free resolution of A/M over A = S/Q, computed degree by degree with linear algebra
/// and valid through degree `top`.
template <class F>
class TruncatedResolution {
 public:
  using K = typename F::Elem;
  using P = Poly<K>;
  using Vec = std::vector<K>;

  TruncatedResolution(const HomIdeal<F>& Q, const HomIdeal<F>& M, int top_j, int top)
      : A_(Q, top), top_j_(top_j), top_(top) {
    gens_.resize(top_j + 1);
    gens_[0].push_back({0, Vec{ring().field().one()}});
    build(M);
  }

  const PolyRing<F>& ring() const { return A_.ring(); }
  const QuotientPieces<F>& pieces() const { return A_; }
  int top_index() const { return top_j_; }

  /// Degrees of the generators of F_j found through the truncation degree.
  std::vector<int> generator_degrees(int j) const {
    std::vector<int> out;
    for (const auto& g : gens_.at(j)) out.push_back(g.deg);
    return out;
  }

  std::size_t module_dim(int j, int n) const {
    std::size_t s = 0;
    for (const auto& g : gens_[j]) s += A_.dim(n - g.deg);
    return s;
  }

  /// Image of (mu * generator g of F_j) in F_{j-1}, where mu is basis element b of A_e.
  const Vec& image(int j, std::size_t g, int e, std::size_t b) const {
    auto& per = img_cache_[{j, g, e}];
    if (per.empty()) per.resize(A_.dim(e));
    if (!per[b].empty()) return per[b];
    Vec v;
    if (e == 0) {
      v = gens_[j][g].image;
    } else {
      const Monomial& mu = A_.basis(e)[b];
      int k = 0;
      while (mu.exp[k] == 0) ++k;
      Monomial prev = mu / Monomial::var(k);
      long pb = A_.position(prev);
      v = times_var(j - 1, gens_[j][g].deg + e - 1, k, image(j, g, e - 1, static_cast<std::size_t>(pb)));
    }
    img_cache_[{j, g, e}][b] = v;
    return img_cache_[{j, g, e}][b];
  }

  /// Multiplies a degree-n vector of F_j by x_k.
  Vec times_var(int j, int n, int k, const Vec& v) const {
    Vec out(module_dim(j, n + 1), ring().field().zero());
    std::size_t in_off = 0, out_off = 0;
    for (const auto& g : gens_[j]) {
      int e = n - g.deg;
      std::size_t din = A_.dim(e), dout = A_.dim(e + 1);
      if (e >= 0) {
        for (std::size_t b = 0; b < din; ++b) {
          const K& c = v[in_off + b];
          if (c.is_zero()) continue;
          const Vec& w = A_.times_var_basis(e, b, k);
          for (std::size_t r = 0; r < dout; ++r)
            if (!w[r].is_zero()) out[out_off + r] += c * w[r];
        }
      }
      in_off += e >= 0 ? din : 0;
      out_off += e + 1 >= 0 ? dout : 0;
    }
    return out;
  }

  /// Columns of d_j in degree n (j >= 1).
  std::vector<Vec> differential(int j, int n) const {
    std::vector<Vec> cols;
    for (std::size_t g = 0; g < gens_[j].size(); ++g) {
      int e = n - gens_[j][g].deg;
      if (e < 0) continue;
      for (std::size_t b = 0; b < A_.dim(e); ++b) cols.push_back(image(j, g, e, b));
    }
    return cols;
  }

  /// dim Tor_j(A/M, A/P)_n for n = 0..top, j = 0..top_j - 1, where P is a point ideal containing Q.
  std::vector<std::vector<long>> tor_dims(const HomIdeal<F>& PQ) const {
    QuotientPieces<F> B(PQ, top_);
    // Projection of A-standard monomials to B coordinates.
    std::vector<std::vector<Vec>> proj(top_ + 1);
    for (int e = 0; e <= top_; ++e)
      for (const auto& m : A_.basis(e)) proj[e].push_back(B.coords(ring().monomial(m), e));
    auto project = [&](int e, std::size_t b) -> const Vec& { return proj[e][b]; };
    std::vector<std::vector<long>> dims(top_j_, std::vector<long>(top_ + 1, 0));
    std::vector<std::vector<long>> rank(top_j_ + 1, std::vector<long>(top_ + 1, 0));
    for (int j = 1; j <= top_j_; ++j) {
      for (int n = 0; n <= top_; ++n) {
        std::size_t rows = 0;
        for (const auto& g : gens_[j - 1]) rows += B.dim(n - g.deg);
        Matrix<F> m(ring().field(), 0, rows);
        for (std::size_t g = 0; g < gens_[j].size(); ++g) {
          int e = n - gens_[j][g].deg;
          if (e < 0) continue;
          for (const auto& nu : B.basis(e)) {
            long pa = A_.position(nu);
            const Vec& v = image(j, g, e, static_cast<std::size_t>(pa));
            Vec row(rows, ring().field().zero());
            std::size_t in_off = 0, out_off = 0;
            for (const auto& h : gens_[j - 1]) {
              int f = n - h.deg;
              if (f < 0) continue;
              for (std::size_t b = 0; b < A_.dim(f); ++b) {
                if (v[in_off + b].is_zero()) continue;
                const Vec& pb = project(f, b);
                for (std::size_t r = 0; r < pb.size(); ++r) row[out_off + r] += v[in_off + b] * pb[r];
              }
              in_off += A_.dim(f);
              out_off += B.dim(f);
            }
            m.append_row(row);
          }
        }
        rank[j][n] = static_cast<long>(m.rank());
      }
    }
    for (int j = 0; j < top_j_; ++j)
      for (int n = 0; n <= top_; ++n) {
        long total = 0;
        for (const auto& g : gens_[j]) total += static_cast<long>(B.dim(n - g.deg));
        dims[j][n] = total - (j >= 1 ? rank[j][n] : 0) - rank[j + 1][n];
      }
    return dims;
  }

 private:
  struct Gen {
    int deg;
    Vec image;  // in (F_{j-1})_deg
  };
  struct CacheKey {
    int j;
    std::size_t g;
    int e;
    bool operator<(const CacheKey& o) const { return std::tie(j, g, e) < std::tie(o.j, o.g, o.e); }
  };

  void build(const HomIdeal<F>& M) {
    const PolyRing<F>& R = ring();
    for (int n = 0; n <= top_; ++n) {
      for (int j = 1; j <= top_j_; ++j) {
        // Candidates: the kernel of the previous map in degree n.
        std::vector<Vec> kernel;
        std::size_t dim_target = module_dim(j - 1, n);
        if (j == 1) {
          for (const auto& g : M.gens()) {
            int e = n - g.lead().deg;
            if (e < 0) continue;
            for (const auto& mu : monomials_of_degree(R.nvars(), e))
              kernel.push_back(A_.coords(R.mul_term(g, mu, R.one_coeff()), n));
          }
        } else {
          auto cols = differential(j - 1, n);
          Matrix<F> dm(R.field(), 0, module_dim(j - 2, n));
          for (const auto& c : cols) dm.append_row(c);
          kernel = dm.left_nullspace();
        }
        if (dim_target == 0 || kernel.empty()) continue;
        // Already covered: image of the generators of lower degree.
        Matrix<F> span(R.field(), 0, dim_target);
        for (const auto& c : differential(j, n)) span.append_row(c);
        std::size_t r = span.rank();
        for (const auto& k : kernel) {
          span.append_row(k);
          std::size_t r2 = span.rank();
          if (r2 > r) {
            gens_[j].push_back({n, k});
            img_cache_.clear();
            r = r2;
          } else {
            Matrix<F> trimmed(R.field(), 0, dim_target);
            for (std::size_t i = 0; i + 1 < span.rows(); ++i) trimmed.append_row(span.row(i));
            span = trimmed;
          }
        }
      }
    }
  }

  QuotientPieces<F> A_;
  int top_j_, top_;
  std::vector<std::vector<Gen>> gens_;
  mutable std::map<CacheKey, std::vector<Vec>> img_cache_;
};

struct QuotientTorReport {
  int j_max = 0;
  int deg_bound = 0;
  std::vector<std::vector<long>> truncated_dims;  // degree-wise linear algebra, [j][n]
  std::vector<std::vector<long>> module_dims;     // Groebner module Tor, [j][n]
  std::vector<UniPoly> hilbert_polynomials;       // Groebner module Tor, per j
  std::vector<bool> nonzero;                      // nonzero sheaf Tor, per j
  std::vector<bool> nonzero_within_truncation;    // some graded piece <= deg_bound is nonzero, per j
  bool routes_agree = true;
  bool infinite_hd_evidence = false;
};

/// Default truncation degree: j_max + maximum generator degree + 2.
template <class F>
int default_quotient_deg_bound(const HomIdeal<F>& Q, const HomIdeal<F>& M, const HomIdeal<F>& P, int j_max) {
  int g = std::max({Q.max_generator_degree(), M.max_generator_degree(), P.max_generator_degree(), 1});
  return j_max + g + 2;
}

/// Tor_j over the coordinate ring S/Q of X between O_Z (ideal M) and a rational point (ideal P),
/// for j <= j_max, by two independent routes.
template <class F>
QuotientTorReport truncated_tor_over_quotient(const HomIdeal<F>& Q, const HomIdeal<F>& M, const HomIdeal<F>& P,
                                              int j_max, std::optional<int> deg_bound = std::nullopt) {
  require_same_ring(Q, M);
  require_same_ring(Q, P);
  const int n = Q.ring().nvars();
  int linear = 0;
  for (const auto& g : P.gb()) {
    if (g.lead().deg != 1) throw Error(ErrorCode::Precondition, "point ideal is not generated by linear forms");
    ++linear;
  }
  if (linear != n - 1) throw Error(ErrorCode::Precondition, "point ideal does not define a rational point");
  if (!is_subset(Q, P)) throw Error(ErrorCode::Precondition, "point is not on X");

  QuotientTorReport rep;
  rep.j_max = j_max;
  rep.deg_bound = deg_bound.value_or(default_quotient_deg_bound(Q, M, P, j_max));
  HomIdeal<F> PQ = ideal_sum(P, Q);

  TruncatedResolution<F> trunc(Q, M, j_max + 1, rep.deg_bound);
  rep.truncated_dims = trunc.tor_dims(PQ);

  TorCalculator<F> calc(M, Q);
  for (int j = 0; j <= j_max; ++j) {
    TorModule<F> T = calc.tor(P, j, rep.deg_bound);
    rep.module_dims.push_back(T.dims);
    rep.hilbert_polynomials.push_back(T.hilbert_polynomial);
    rep.nonzero.push_back(!T.sheaf_zero());
    bool any = false;
    for (long d : rep.truncated_dims[j]) any = any || d > 0;
    rep.nonzero_within_truncation.push_back(any);
    if (T.dims != rep.truncated_dims[j]) rep.routes_agree = false;
  }
  rep.infinite_hd_evidence = j_max >= 1;
  for (int j = 1; j <= j_max; ++j) rep.infinite_hd_evidence = rep.infinite_hd_evidence && rep.nonzero[j];
  return rep;
}

}  // namespace twideal
