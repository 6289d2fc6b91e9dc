#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "twideal/twist.hpp"

namespace twideal {

/// Multiplicative relations among nonzero rationals, computed over a coprime factor base.
struct MultiplicativeData {
  bool independent = false;
  std::vector<mpz_class> factor_base;          // pairwise coprime integers > 1
  std::vector<std::vector<long>> exponents;    // one row per input, one column per base element
  std::size_t rank = 0;
  std::vector<long> relation;                  // prod q_i^{a_i} = 1 when dependent
};

namespace detail {

/// Refines integers > 1 into a pairwise coprime set generating the same multiplicative monoid.
inline std::vector<mpz_class> coprime_base(std::vector<mpz_class> xs) {
  std::erase_if(xs, [](const mpz_class& x) { return x <= 1; });
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (std::size_t i = 0; i < xs.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < xs.size() && !changed; ++j) {
        mpz_class g = gcd(xs[i], xs[j]);
        if (g == 1) continue;
        mpz_class a = xs[i] / g, b = xs[j] / g;
        xs.erase(xs.begin() + static_cast<std::ptrdiff_t>(j));
        xs.erase(xs.begin() + static_cast<std::ptrdiff_t>(i));
        for (const auto& y : {g, a, b})
          if (y > 1) xs.push_back(y);
        changed = true;
      }
  }
  return xs;
}

inline std::vector<long> base_exponents(mpz_class n, const std::vector<mpz_class>& base) {
  std::vector<long> e(base.size(), 0);
  for (std::size_t k = 0; k < base.size(); ++k)
    while (n % base[k] == 0) {
      n /= base[k];
      ++e[k];
    }
  if (n != 1) throw Error(ErrorCode::Verification, "coprime base does not factor an input");
  return e;
}

}  // namespace detail

/// Decides whether the inputs satisfy a nontrivial relation prod q_i^{a_i} = 1 over the integers.
/// Signs are torsion: a relation up to sign is doubled to become an exact one.
inline MultiplicativeData multiplicative_independence(const std::vector<Rational>& qs) {
  std::vector<mpz_class> raw;
  for (const auto& q : qs) {
    if (q.is_zero()) throw Error(ErrorCode::Precondition, "multiplicative independence of zero is undefined");
    raw.push_back(abs(q.num()));
    raw.push_back(q.den());
  }
  MultiplicativeData out;
  out.factor_base = detail::coprime_base(raw);
  Matrix<RationalField> A(RationalField{}, 0, out.factor_base.size());
  for (const auto& q : qs) {
    auto en = detail::base_exponents(abs(q.num()), out.factor_base);
    auto ed = detail::base_exponents(q.den(), out.factor_base);
    std::vector<long> row(en.size());
    std::vector<Rational> rrow;
    for (std::size_t k = 0; k < en.size(); ++k) {
      row[k] = en[k] - ed[k];
      rrow.push_back(Rational(row[k]));
    }
    out.exponents.push_back(row);
    if (!out.factor_base.empty()) A.append_row(rrow);
  }
  out.rank = out.factor_base.empty() ? 0 : A.rank();
  out.independent = out.rank == qs.size();
  if (out.independent) return out;

  // Integer left-kernel vector of the exponent matrix.
  std::vector<Rational> v;
  if (out.factor_base.empty()) {
    v.assign(qs.size(), Rational(0));
    v[0] = Rational(1);
  } else {
    v = A.left_nullspace().front();
  }
  mpz_class l = 1;
  for (const auto& x : v) l = lcm(l, x.den());
  mpz_class g = 0;
  std::vector<mpz_class> ints;
  for (const auto& x : v) {
    ints.push_back(x.num() * (l / x.den()));
    g = gcd(g, ints.back());
  }
  bool negative = false;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    ints[i] /= g;
    if (qs[i].sign() < 0 && ints[i] % 2 != 0) negative = !negative;
  }
  for (auto& a : ints) out.relation.push_back((negative ? 2 : 1) * a.get_si());
  Rational check(1);
  for (std::size_t i = 0; i < qs.size(); ++i) check *= qs[i].pow(out.relation[i]);
  if (!check.is_one()) throw Error(ErrorCode::Verification, "multiplicative relation failed to verify");
  return out;
}

/// Eigenvalue data of σ when its matrix is triangular (so eigenvalues are the rational diagonal).
struct EigenData {
  std::optional<std::vector<Rational>> eigenvalues;
  bool diagonal = false;
  bool distinct = false;
  std::optional<MultiplicativeData> ratios;  // for λ_i / λ_0, i >= 1

  /// Diagonal with distinct eigenvalues whose ratios are multiplicatively independent:
  /// the closure of the cyclic group generated by σ is then the full diagonal torus.
  bool torus_generic() const { return diagonal && distinct && ratios && ratios->independent; }
};

inline EigenData eigen_data(const ProjAutomorphism& sigma) {
  EigenData out;
  const auto& M = sigma.matrix();
  const std::size_t n = M.size();
  bool upper = true, lower = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i > j && !M[i][j].is_zero()) upper = false;
      if (i < j && !M[i][j].is_zero()) lower = false;
    }
  out.diagonal = upper && lower;
  if (!upper && !lower) return out;
  out.eigenvalues = sigma.diagonal_entries();
  auto ev = *out.eigenvalues;
  std::sort(ev.begin(), ev.end());
  out.distinct = std::adjacent_find(ev.begin(), ev.end()) == ev.end();
  if (out.distinct) {
    std::vector<Rational> ratios;
    for (std::size_t i = 1; i < n; ++i) ratios.push_back(M[i][i] / M[0][0]);
    out.ratios = multiplicative_independence(ratios);
  }
  return out;
}

}  // namespace twideal
