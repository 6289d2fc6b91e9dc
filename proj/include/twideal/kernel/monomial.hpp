#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "twideal/kernel/error.hpp"

namespace twideal {

inline constexpr int kMaxVars = 12;

/// Exponent vector with cached total degree and a module component index (0 for ring elements).
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::int16_t deg = 0;
  std::int16_t comp = 0;

  static Monomial one(int comp = 0) {
    Monomial m;
    m.comp = static_cast<std::int16_t>(comp);
    return m;
  }
  static Monomial var(int i, int comp = 0) {
    Monomial m = one(comp);
    m.exp[i] = 1;
    m.deg = 1;
    return m;
  }
  static Monomial from_exponents(const std::vector<int>& e, int comp = 0) {
    if (e.size() > static_cast<std::size_t>(kMaxVars)) throw Error(ErrorCode::Precondition, "too many variables");
    Monomial m = one(comp);
    for (std::size_t i = 0; i < e.size(); ++i) {
      m.exp[i] = static_cast<std::uint16_t>(e[i]);
      m.deg = static_cast<std::int16_t>(m.deg + e[i]);
    }
    return m;
  }

  bool is_one() const { return deg == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(a.exp[i] + b.exp[i]);
    r.deg = static_cast<std::int16_t>(a.deg + b.deg);
    r.comp = static_cast<std::int16_t>(a.comp + b.comp);
    return r;
  }
  /// a / b; requires b | a. The component of b is ignored.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(a.exp[i] - b.exp[i]);
    r.deg = static_cast<std::int16_t>(a.deg - b.deg);
    r.comp = 0;
    return r;
  }
  /// Exponent-wise divisibility, ignoring components.
  bool divides(const Monomial& o) const {
    if (deg > o.deg) return false;
    for (int i = 0; i < kMaxVars; ++i)
      if (exp[i] > o.exp[i]) return false;
    return true;
  }
  bool coprime(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (exp[i] != 0 && o.exp[i] != 0) return false;
    return true;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    int d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      r.exp[i] = std::max(a.exp[i], b.exp[i]);
      d += r.exp[i];
    }
    r.deg = static_cast<std::int16_t>(d);
    r.comp = a.comp;
    return r;
  }
  Monomial with_comp(int c) const {
    Monomial r = *this;
    r.comp = static_cast<std::int16_t>(c);
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.comp == b.comp && a.exp == b.exp;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = static_cast<std::size_t>(m.comp) * 0x9e3779b97f4a7c15ULL;
    for (auto e : m.exp) h = (h ^ e) * 0x100000001b3ULL;
    return h;
  }
};

enum class OrderKind { DegRevLex, Lex, Elimination };

/// Monomial well-order. Module components use position-over-term with lower index greater.
class TermOrder {
 public:
  TermOrder() { std::iota(priority_.begin(), priority_.end(), 0); }

  static TermOrder degrevlex() { return TermOrder(); }
  static TermOrder lex() {
    TermOrder o;
    o.kind_ = OrderKind::Lex;
    return o;
  }
  /// Block order: the total degree in the masked variables decides first, ties broken by degrevlex.
  static TermOrder elimination(std::uint32_t eliminate_mask) {
    TermOrder o;
    o.kind_ = OrderKind::Elimination;
    o.mask_ = eliminate_mask;
    return o;
  }
  /// priority[0] is the largest variable.
  TermOrder with_priority(const std::vector<int>& priority) const {
    TermOrder o = *this;
    std::vector<int> seen(kMaxVars, 0);
    for (std::size_t i = 0; i < priority.size(); ++i) {
      if (priority[i] < 0 || priority[i] >= kMaxVars || seen[priority[i]]++)
        throw Error(ErrorCode::Precondition, "variable priority is not a permutation");
      o.priority_[i] = static_cast<std::uint8_t>(priority[i]);
    }
    std::size_t k = priority.size();
    for (int v = 0; v < kMaxVars; ++v)
      if (!seen[v]) o.priority_[k++] = static_cast<std::uint8_t>(v);
    return o;
  }

  OrderKind kind() const { return kind_; }
  std::uint32_t eliminate_mask() const { return mask_; }
  bool eliminates(int var) const { return kind_ == OrderKind::Elimination && ((mask_ >> var) & 1U); }

  /// Returns >0 if a > b, <0 if a < b, 0 if equal.
  int compare(const Monomial& a, const Monomial& b) const {
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return compare_exponents(a, b);
  }

  int compare_exponents(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case OrderKind::Lex:
        for (int k = 0; k < kMaxVars; ++k) {
          int v = priority_[k];
          if (a.exp[v] != b.exp[v]) return a.exp[v] > b.exp[v] ? 1 : -1;
        }
        return 0;
      case OrderKind::Elimination: {
        int ea = 0, eb = 0;
        for (int v = 0; v < kMaxVars; ++v)
          if ((mask_ >> v) & 1U) {
            ea += a.exp[v];
            eb += b.exp[v];
          }
        if (ea != eb) return ea > eb ? 1 : -1;
        return revlex(a, b);
      }
      case OrderKind::DegRevLex:
        return revlex(a, b);
    }
    return 0;
  }

  friend bool operator==(const TermOrder& a, const TermOrder& b) {
    return a.kind_ == b.kind_ && a.mask_ == b.mask_ && a.priority_ == b.priority_;
  }

 private:
  int revlex(const Monomial& a, const Monomial& b) const {
    if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
    for (int k = kMaxVars - 1; k >= 0; --k) {
      int v = priority_[k];
      if (a.exp[v] != b.exp[v]) return a.exp[v] < b.exp[v] ? 1 : -1;
    }
    return 0;
  }

  OrderKind kind_ = OrderKind::DegRevLex;
  std::uint32_t mask_ = 0;
  std::array<std::uint8_t, kMaxVars> priority_{};
};

/// All exponent vectors of total degree n in nvars variables, in descending lex order.
inline std::vector<Monomial> monomials_of_degree(int nvars, int n) {
  std::vector<Monomial> out;
  if (n < 0) return out;
  if (nvars == 0) {
    if (n == 0) out.push_back(Monomial::one());
    return out;
  }
  std::vector<int> e(nvars, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == nvars - 1) {
      e[i] = left;
      out.push_back(Monomial::from_exponents(e));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, n);
  return out;
}

}  // namespace twideal
