#ifndef CHEVLIE_FIELD_HPP
#define CHEVLIE_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "chevlie/errors.hpp"

namespace chevlie {

inline bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Ground field descriptor.  Characteristic 0 selects the rationals,
/// a prime p <= 101 selects GF(p).
struct FieldSpec {
  unsigned characteristic = 0;

  void validate() const {
    if (characteristic == 0) return;
    if (characteristic > 101 || !is_prime(characteristic))
      throw ValidationError("field characteristic must be 0 or a prime <= 101, got " +
                            std::to_string(characteristic));
  }
};

/// Exact rational arithmetic.  Elements are arbitrary-precision
/// fractions kept in lowest terms by GMP.
class Rationals {
public:
  using Elem = mpq_class;

  unsigned characteristic() const { return 0; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long long v) const { return Elem(mpz_class(static_cast<long>(v))); }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem div(const Elem& a, const Elem& b) const { return a / b; }
  Elem neg(const Elem& a) const { return -a; }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::string str(const Elem& a) const { return a.get_str(); }
};

/// GF(p) for a small prime p.  Elements are residues in [0, p).
class PrimeField {
public:
  using Elem = std::uint32_t;

  explicit PrimeField(unsigned p) : p_(p) {
    if (!is_prime(p) || p > 101)
      throw ValidationError("prime field requires a prime characteristic <= 101, got " +
                            std::to_string(p));
  }

  unsigned characteristic() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
  }

  Elem add(Elem a, Elem b) const { return (a + b) % p_; }
  Elem sub(Elem a, Elem b) const { return (a + p_ - b) % p_; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const {
    if (a == 0) throw Error("division by zero in GF(p)");
    // Fermat: a^(p-2) mod p.
    std::uint64_t base = a, acc = 1;
    unsigned e = p_ - 2;
    while (e) {
      if (e & 1) acc = acc * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<Elem>(acc);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  std::string str(Elem a) const { return std::to_string(a); }

private:
  unsigned p_;
};

} // namespace chevlie

#endif
