#pragma once

// The two coefficient fields of the toolkit: Q (exact rationals) and F_p for
// an odd prime p > 3.  All generic code is templated on the field context
// (QQ or GFp); elements carry enough state for the arithmetic operators to
// work without reaching back to the context.

#include <optional>
#include <string>
#include <utility>

#include "basics.hpp"

namespace ellmod {

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

inline uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, p);
    a = mulmod_u64(a, a, p);
    e >>= 1;
  }
  return r;
}

inline bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct FpElem {
  uint64_t v = 0;
  uint64_t p = 0;  // 0 only for a default-constructed placeholder

  friend bool operator==(const FpElem& a, const FpElem& b) {
    return a.v == b.v && a.p == b.p;
  }
  friend bool operator!=(const FpElem& a, const FpElem& b) { return !(a == b); }

  friend FpElem operator+(const FpElem& a, const FpElem& b) {
    uint64_t s = a.v + b.v;
    if (s >= a.p) s -= a.p;
    return {s, a.p};
  }
  friend FpElem operator-(const FpElem& a, const FpElem& b) {
    uint64_t s = a.v >= b.v ? a.v - b.v : a.v + a.p - b.v;
    return {s, a.p};
  }
  friend FpElem operator-(const FpElem& a) {
    return {a.v == 0 ? 0 : a.p - a.v, a.p};
  }
  friend FpElem operator*(const FpElem& a, const FpElem& b) {
    return {mulmod_u64(a.v, b.v, a.p), a.p};
  }
  FpElem inv() const {
    check_internal(v != 0, "F_p inverse of zero");
    // extended Euclid; much cheaper than powmod at small p
    int64_t t = 0, new_t = 1;
    int64_t r = static_cast<int64_t>(p), new_r = static_cast<int64_t>(v);
    while (new_r != 0) {
      int64_t q = r / new_r;
      t -= q * new_t;
      std::swap(t, new_t);
      r -= q * new_r;
      std::swap(r, new_r);
    }
    if (t < 0) t += static_cast<int64_t>(p);
    return {static_cast<uint64_t>(t), p};
  }
  friend FpElem operator/(const FpElem& a, const FpElem& b) { return a * b.inv(); }

  FpElem& operator+=(const FpElem& b) { return *this = *this + b; }
  FpElem& operator-=(const FpElem& b) { return *this = *this - b; }
  FpElem& operator*=(const FpElem& b) { return *this = *this * b; }
};

inline bool is_zero(const FpElem& a) { return a.v == 0; }
inline bool is_zero(const Rat& a) { return sgn(a) == 0; }

// Field context for F_p.
struct GFp {
  uint64_t p;
  using Elem = FpElem;
  static constexpr bool is_rational_field = false;

  explicit GFp(uint64_t prime) : p(prime) {
    require(prime > 3 && is_prime_u64(prime), "field characteristic must be a prime > 3");
  }

  Elem zero() const { return {0, p}; }
  Elem one() const { return {1, p}; }
  Elem from_int(long long x) const {
    long long m = x % static_cast<long long>(p);
    if (m < 0) m += static_cast<long long>(p);
    return {static_cast<uint64_t>(m), p};
  }
  Elem from_rat(const Rat& q) const {
    Int num = q.get_num(), den = q.get_den();
    uint64_t d = mpz_fdiv_ui(den.get_mpz_t(), p);
    require(d != 0, "denominator not invertible mod p");
    uint64_t n = mpz_fdiv_ui(num.get_mpz_t(), p);
    return {mulmod_u64(n, powmod_u64(d, p - 2, p), p), p};
  }
  Elem parse(const std::string& s) const { return from_rat(rat_parse(s)); }

  bool is_square(const Elem& a) const {
    if (a.v == 0) return true;
    return powmod_u64(a.v, (p - 1) / 2, p) == 1;
  }

  // Tonelli–Shanks; p is odd.
  std::optional<Elem> sqrt(const Elem& a) const {
    if (a.v == 0) return zero();
    if (!is_square(a)) return std::nullopt;
    if (p % 4 == 3) return Elem{powmod_u64(a.v, (p + 1) / 4, p), p};
    uint64_t q = p - 1, s = 0;
    while (q % 2 == 0) q /= 2, ++s;
    uint64_t z = 2;
    while (powmod_u64(z, (p - 1) / 2, p) != p - 1) ++z;
    uint64_t m = s;
    uint64_t c = powmod_u64(z, q, p);
    uint64_t t = powmod_u64(a.v, q, p);
    uint64_t r = powmod_u64(a.v, (q + 1) / 2, p);
    while (t != 1) {
      uint64_t i = 0, tt = t;
      while (tt != 1) tt = mulmod_u64(tt, tt, p), ++i;
      uint64_t b = powmod_u64(c, uint64_t(1) << (m - i - 1), p);
      m = i;
      c = mulmod_u64(b, b, p);
      t = mulmod_u64(t, c, p);
      r = mulmod_u64(r, b, p);
    }
    return Elem{r, p};
  }

  std::string str(const Elem& a) const { return std::to_string(a.v); }
};

// Field context for Q.
struct QQ {
  using Elem = Rat;
  static constexpr bool is_rational_field = true;

  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  Elem from_int(long long x) const { return Rat(static_cast<long>(x)); }
  Elem from_rat(const Rat& q) const { return q; }
  Elem parse(const std::string& s) const { return rat_parse(s); }
  std::string str(const Elem& a) const { return a.get_str(); }
};

// Small-integer scalar with the field deduced from a model element.
inline Rat elem_from_int(const Rat&, long long x) { return Rat(static_cast<long>(x)); }
inline FpElem elem_from_int(const FpElem& model, long long x) {
  check_internal(model.p != 0, "placeholder F_p element has no modulus");
  long long m = x % static_cast<long long>(model.p);
  if (m < 0) m += static_cast<long long>(model.p);
  return {static_cast<uint64_t>(m), model.p};
}

inline std::string elem_str(const Rat& a) { return a.get_str(); }
inline std::string elem_str(const FpElem& a) { return std::to_string(a.v); }

}  // namespace ellmod
