#pragma once

#include <cstdint>
#include <string>

#include "twideal/kernel/modp.hpp"
#include "twideal/kernel/rational.hpp"

namespace twideal {

/// Field descriptor for Q.
struct RationalField {
  using Elem = Rational;

  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  Elem from_int(long v) const { return Rational(v); }
  Elem from_rational(const Rational& q) const { return q; }
  std::uint32_t characteristic() const { return 0; }
  std::string name() const { return "rational"; }
  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Field descriptor for Z/p.
struct PrimeField {
  using Elem = ModP;

  explicit PrimeField(std::uint32_t modulus = 32003) : p(modulus) {
    if (!is_prime(p)) throw Error(ErrorCode::Precondition, "modulus " + std::to_string(p) + " is not prime");
  }

  Elem zero() const { return ModP(0, p); }
  Elem one() const { return ModP(1, p); }
  Elem from_int(long v) const { return ModP(v, p); }
  Elem from_rational(const Rational& q) const {
    mpz_class n = q.num() % p, d = q.den() % p;
    if (d == 0)
      throw Error(ErrorCode::Precondition, "denominator of " + q.str() + " vanishes mod " + std::to_string(p));
    return ModP(n.get_si(), p) / ModP(d.get_si(), p);
  }
  std::uint32_t characteristic() const { return p; }
  std::string name() const { return "prime " + std::to_string(p); }
  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p == b.p; }

  std::uint32_t p;
};

}  // namespace twideal
