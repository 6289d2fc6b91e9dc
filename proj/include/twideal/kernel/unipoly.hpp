#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "twideal/kernel/rational.hpp"

namespace twideal {

/// Univariate polynomial in n with rational coefficients, coefficient i for n^i.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UniPoly constant(const Rational& a) { return UniPoly({a}); }
  /// n + a
  static UniPoly linear(const Rational& a) { return UniPoly({a, Rational(1)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + b * Rational(-1); }
  friend UniPoly operator*(const UniPoly& a, const Rational& s) {
    std::vector<Rational> r = a.c_;
    for (auto& x : r) x *= s;
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(r));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Polynomial through the points (x_i, y_i) with distinct x_i.
  static UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    UniPoly acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      UniPoly basis = constant(Rational(1));
      Rational denom(1);
      for (std::size_t j = 0; j < xs.size(); ++j) {
        if (i == j) continue;
        basis = basis * linear(-xs[j]);
        denom *= xs[i] - xs[j];
      }
      acc = acc + basis * (ys[i] / denom);
    }
    return acc;
  }

  /// Binomial coefficient C(n + a, m) as a polynomial in n.
  static UniPoly binomial_shifted(long a, int m) {
    UniPoly r = constant(Rational(1));
    Rational fact(1);
    for (int i = 0; i < m; ++i) {
      r = r * linear(Rational(a - i));
      fact *= Rational(i + 1);
    }
    return r * fact.inv();
  }

  /// Renders with variable n, highest degree first, e.g. "2*n + 1".
  std::string str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      const Rational& a = c_[i];
      if (a.is_zero()) continue;
      std::string coef = a.abs().str();
      std::string mono = i == 0 ? "" : (i == 1 ? "n" : "n^" + std::to_string(i));
      std::string piece = mono.empty() ? coef : (coef == "1" ? mono : coef + "*" + mono);
      if (s.empty()) {
        s = (a.sign() < 0 ? "-" : "") + piece;
      } else {
        s += (a.sign() < 0 ? " - " : " + ") + piece;
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

}  // namespace twideal
