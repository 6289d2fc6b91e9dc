#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "twideal/kernel.hpp"

namespace twideal {

using RatMatrix = std::vector<std::vector<Rational>>;

inline RatMatrix identity_matrix(std::size_t n) {
  RatMatrix m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Rational(1);
  return m;
}

inline RatMatrix matmul(const RatMatrix& a, const RatMatrix& b) {
  const std::size_t n = a.size();
  RatMatrix c(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

inline std::vector<Rational> matvec(const RatMatrix& a, const std::vector<Rational>& v) {
  std::vector<Rational> out(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

/// Inverse by Gauss-Jordan elimination; throws on a singular matrix.
inline RatMatrix invert(const RatMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix a = m, inv = identity_matrix(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) throw Error(ErrorCode::Precondition, "matrix is singular");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rational s = a[c][c].inv();
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] *= s;
      inv[c][j] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      Rational f = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

/// Linear automorphism of P^d given by an invertible (d+1)x(d+1) rational matrix.
/// Points transform as p -> M p; polynomials pull back by x_i -> sum_j M_ij x_j.
class ProjAutomorphism {
 public:
  explicit ProjAutomorphism(RatMatrix m) : m_(std::move(m)), cache_(std::make_shared<Cache>()) {
    const std::size_t n = m_.size();
    if (n < 2) throw Error(ErrorCode::Precondition, "automorphism needs at least a 2x2 matrix");
    for (const auto& row : m_)
      if (row.size() != n) throw Error(ErrorCode::Precondition, "matrix is not square");
    cache_->inverse = invert(m_);
    cache_->powers.emplace(0, identity_matrix(n));
    cache_->powers.emplace(1, m_);
    cache_->powers.emplace(-1, cache_->inverse);
  }

  static ProjAutomorphism identity(int d) { return ProjAutomorphism(identity_matrix(static_cast<std::size_t>(d) + 1)); }
  static ProjAutomorphism diagonal(const std::vector<Rational>& entries) {
    RatMatrix m = identity_matrix(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m[i][i] = entries[i];
    return ProjAutomorphism(std::move(m));
  }

  /// Dimension d of the projective space.
  int dim() const { return static_cast<int>(m_.size()) - 1; }
  std::size_t size() const { return m_.size(); }
  const RatMatrix& matrix() const { return m_; }
  const RatMatrix& inverse() const { return cache_->inverse; }

  /// M^n for any integer n, cached.
  RatMatrix power(long n) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    return power_locked(n);
  }

  ProjAutomorphism pow(long n) const { return ProjAutomorphism(power(n)); }
  ProjAutomorphism scaled(const Rational& lambda) const {
    if (lambda.is_zero()) throw Error(ErrorCode::Precondition, "scaling by zero");
    RatMatrix m = m_;
    for (auto& row : m)
      for (auto& e : row) e *= lambda;
    return ProjAutomorphism(std::move(m));
  }

  bool is_diagonal() const {
    for (std::size_t i = 0; i < m_.size(); ++i)
      for (std::size_t j = 0; j < m_.size(); ++j)
        if (i != j && !m_[i][j].is_zero()) return false;
    return true;
  }
  std::vector<Rational> diagonal_entries() const {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < m_.size(); ++i) out.push_back(m_[i][i]);
    return out;
  }
  /// True when M is a scalar multiple of the identity, i.e. the identity of P^d.
  bool is_projective_identity() const {
    if (!is_diagonal()) return false;
    for (const auto& e : diagonal_entries())
      if (e != m_[0][0]) return false;
    return true;
  }

  std::vector<Rational> apply(const std::vector<Rational>& p, long n = 1) const { return matvec(power(n), p); }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < m_.size(); ++i) {
      if (i) s += "; ";
      for (std::size_t j = 0; j < m_.size(); ++j) s += (j ? " " : "") + m_[i][j].str();
    }
    return "[" + s + "]";
  }

 private:
  struct Cache {
    std::mutex mu;
    RatMatrix inverse;
    std::map<long, RatMatrix> powers;
  };

  const RatMatrix& power_locked(long n) const {
    auto it = cache_->powers.find(n);
    if (it != cache_->powers.end()) return it->second;
    long half = n / 2;
    RatMatrix h = power_locked(half);
    RatMatrix r = matmul(h, h);
    if (n % 2 != 0) r = matmul(r, power_locked(n > 0 ? 1 : -1));
    return cache_->powers.emplace(n, std::move(r)).first->second;
  }

  RatMatrix m_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace twideal
