#pragma once

#include <cassert>
#include <cstdint>
#include <string>

#include "twideal/kernel/error.hpp"

namespace twideal {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Element of Z/p. Every element carries its modulus so arithmetic needs no context.
class ModP {
 public:
  ModP() = default;
  ModP(std::int64_t v, std::uint32_t p) : p_(p) {
    assert(p >= 2);
    auto r = v % static_cast<std::int64_t>(p);
    v_ = static_cast<std::uint32_t>(r < 0 ? r + p : r);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  ModP inv() const {
    if (v_ == 0) throw Error(ErrorCode::Precondition, "inverse of zero mod p");
    std::int64_t a = v_, m = p_, x0 = 1, x1 = 0;
    while (m != 0) {
      std::int64_t q = a / m;
      std::int64_t t = a - q * m;
      a = m;
      m = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    return ModP(x0, p_);
  }

  std::string str() const { return std::to_string(v_); }

  friend ModP operator+(ModP a, ModP b) {
    assert(a.p_ == b.p_);
    std::uint64_t s = std::uint64_t{a.v_} + b.v_;
    if (s >= a.p_) s -= a.p_;
    a.v_ = static_cast<std::uint32_t>(s);
    return a;
  }
  friend ModP operator-(ModP a, ModP b) {
    assert(a.p_ == b.p_);
    a.v_ = a.v_ >= b.v_ ? a.v_ - b.v_ : static_cast<std::uint32_t>(std::uint64_t{a.v_} + a.p_ - b.v_);
    return a;
  }
  friend ModP operator*(ModP a, ModP b) {
    assert(a.p_ == b.p_);
    a.v_ = static_cast<std::uint32_t>((std::uint64_t{a.v_} * b.v_) % a.p_);
    return a;
  }
  friend ModP operator/(ModP a, ModP b) { return a * b.inv(); }
  friend ModP operator-(ModP a) {
    a.v_ = a.v_ == 0 ? 0 : a.p_ - a.v_;
    return a;
  }
  ModP& operator+=(ModP o) { return *this = *this + o; }
  ModP& operator-=(ModP o) { return *this = *this - o; }
  ModP& operator*=(ModP o) { return *this = *this * o; }
  friend bool operator==(ModP a, ModP b) { return a.v_ == b.v_ && a.p_ == b.p_; }

 private:
  std::uint32_t v_ = 0;
  std::uint32_t p_ = 2;
};

}  // namespace twideal
