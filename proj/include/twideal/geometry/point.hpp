#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twideal/twist.hpp"

namespace twideal {

/// Point of P^d with rational coordinates, normalized so the first nonzero coordinate is 1.
class RationalPoint {
 public:
  explicit RationalPoint(std::vector<Rational> coords) : c_(std::move(coords)) {
    std::size_t k = 0;
    while (k < c_.size() && c_[k].is_zero()) ++k;
    if (k == c_.size()) throw Error(ErrorCode::Precondition, "point has all coordinates zero");
    Rational s = c_[k].inv();
    for (auto& x : c_) x *= s;
  }

  /// Parses "[a0 : a1 : ... : ad]".
  static RationalPoint parse(const std::string& text) {
    std::string s = text;
    auto strip = [](std::string t) {
      std::size_t a = t.find_first_not_of(" \t"), b = t.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : t.substr(a, b - a + 1);
    };
    s = strip(s);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
      throw Error(ErrorCode::Parse, "point must be written as [a0 : ... : ad]");
    s = s.substr(1, s.size() - 2);
    std::vector<Rational> coords;
    std::size_t start = 0;
    for (;;) {
      std::size_t colon = s.find(':', start);
      coords.push_back(Rational::parse(strip(s.substr(start, colon - start))));
      if (colon == std::string::npos) break;
      start = colon + 1;
    }
    if (coords.size() < 2) throw Error(ErrorCode::Parse, "point needs at least two coordinates");
    return RationalPoint(std::move(coords));
  }

  const std::vector<Rational>& coords() const { return c_; }
  int dim() const { return static_cast<int>(c_.size()) - 1; }
  /// Index of the first nonzero coordinate (which equals 1).
  std::size_t pivot() const {
    std::size_t k = 0;
    while (c_[k].is_zero()) ++k;
    return k;
  }

  RationalPoint image(const ProjAutomorphism& sigma, long n = 1) const { return RationalPoint(sigma.apply(c_, n)); }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? ":" : "") + c_[i].str();
    return s + "]";
  }

  friend bool operator==(const RationalPoint& a, const RationalPoint& b) { return a.c_ == b.c_; }

 private:
  std::vector<Rational> c_;
};

/// Homogeneous ideal of a rational point: x_i - p_i x_k for the pivot k.
template <class F>
HomIdeal<F> point_ideal(const PolyRing<F>& R, const RationalPoint& p) {
  if (p.dim() + 1 != R.nvars()) throw Error(ErrorCode::Precondition, "point dimension does not match the ring");
  std::size_t k = p.pivot();
  std::vector<Poly<typename F::Elem>> g;
  for (std::size_t i = 0; i < p.coords().size(); ++i) {
    if (i == k) continue;
    g.push_back(R.sub(R.var(static_cast<int>(i)),
                      R.scale(R.var(static_cast<int>(k)), R.field().from_rational(p.coords()[i]))));
  }
  return HomIdeal<F>(R, std::move(g), Saturation::Yes);
}

/// True when every generator of Z vanishes at p.
template <class F>
bool lies_on(const HomIdeal<F>& Z, const RationalPoint& p) {
  const PolyRing<F>& R = Z.ring();
  std::vector<typename F::Elem> pt;
  for (const auto& c : p.coords()) pt.push_back(R.field().from_rational(c));
  for (const auto& g : Z.gens())
    if (!(R.evaluate(g, pt) == R.field().zero())) return false;
  return true;
}

/// Least k <= bound with σ^k(p) = p, if any.
inline std::optional<int> point_order(const RationalPoint& p, const ProjAutomorphism& sigma, int bound) {
  if (bound < 1) throw Error(ErrorCode::Precondition, "order bound must be at least 1");
  std::vector<Rational> cur = p.coords();
  for (int k = 1; k <= bound; ++k) {
    cur = RationalPoint(matvec(sigma.matrix(), cur)).coords();
    if (RationalPoint(cur) == p) return k;
  }
  return std::nullopt;
}

}  // namespace twideal
