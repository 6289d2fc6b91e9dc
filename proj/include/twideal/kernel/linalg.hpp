#pragma once

#include <vector>

#include "twideal/kernel/field.hpp"

namespace twideal {

/// Dense matrix over a field, row-major.
template <class F>
class Matrix {
 public:
  using K = typename F::Elem;

  Matrix(const F& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), a_(rows * cols, field.zero()) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const F& field() const { return field_; }
  K& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const K& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  void append_row(const std::vector<K>& row) {
    if (row.size() != cols_) throw Error(ErrorCode::Precondition, "row length mismatch");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
  }
  std::vector<K> row(std::size_t r) const {
    return std::vector<K>(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  /// Reduced row echelon form in place; returns pivot columns. Zero rows are dropped.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && at(p, c).is_zero()) ++p;
      if (p == rows_) continue;
      if (p != r)
        for (std::size_t k = 0; k < cols_; ++k) std::swap(at(p, k), at(r, k));
      K inv = at(r, c).inv();
      for (std::size_t k = c; k < cols_; ++k) at(r, k) = at(r, k) * inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || at(i, c).is_zero()) continue;
        K f = at(i, c);
        for (std::size_t k = c; k < cols_; ++k)
          if (!at(r, k).is_zero()) at(i, k) = at(i, k) - f * at(r, k);
      }
      pivots.push_back(c);
      ++r;
    }
    a_.resize(r * cols_, field_.zero());
    rows_ = r;
    return pivots;
  }

  std::size_t rank() const {
    Matrix m = *this;
    return m.rref().size();
  }

  /// Basis of {v : A v = 0}.
  std::vector<std::vector<K>> nullspace() const {
    Matrix m = *this;
    auto piv = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::vector<K>> out;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      std::vector<K> v(cols_, field_.zero());
      v[f] = field_.one();
      for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m.at(i, f);
      out.push_back(std::move(v));
    }
    return out;
  }

  /// Basis of {w : w A = 0}.
  std::vector<std::vector<K>> left_nullspace() const { return transpose().nullspace(); }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

 private:
  F field_;
  std::size_t rows_, cols_;
  std::vector<K> a_;
};

/// Canonical (reduced echelon) basis of the span of the given vectors.
template <class F>
std::vector<std::vector<typename F::Elem>> row_space(const F& field, std::size_t dim,
                                                     const std::vector<std::vector<typename F::Elem>>& vecs) {
  Matrix<F> m(field, 0, dim);
  for (const auto& v : vecs) m.append_row(v);
  m.rref();
  std::vector<std::vector<typename F::Elem>> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row(r));
  return out;
}

}  // namespace twideal
