#pragma once

#include <cstdint>
#include <vector>

#include "core/errors.hpp"

namespace motrace {

using i64 = long long;
using i128 = __int128;

inline i64 abs64(i64 a) { return a < 0 ? -a : a; }

inline i64 gcd64(i64 a, i64 b) {
  a = abs64(a);
  b = abs64(b);
  while (b) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline i64 checked_mul(i64 a, i64 b) {
  i128 p = (i128)a * b;
  if (p > (i128)INT64_MAX || p < (i128)INT64_MIN)
    throw Error(ErrorCode::InputTooLarge, "integer overflow in exact arithmetic");
  return (i64)p;
}

// a*b mod m for 0 <= a,b < m < 2^62.
inline i64 mulmod(i64 a, i64 b, i64 m) { return (i64)((i128)a * b % m); }

inline i64 powmod(i64 base, i64 exp, i64 m) {
  if (m == 1) return 0;
  i64 r = 1 % m;
  base %= m;
  if (base < 0) base += m;
  while (exp > 0) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

inline i64 mod_norm(i64 a, i64 m) {
  a %= m;
  if (a < 0) a += m;
  return a;
}

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d : {2LL, 3LL, 5LL}) {
    if (n == d) return true;
    if (n % d == 0) return false;
  }
  for (i64 d = 7; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// Legendre symbol (a|p) for odd prime p; a coprime to p. Returns +1 or -1.
inline int legendre(i64 a, i64 p) {
  i64 r = powmod(mod_norm(a, p), (p - 1) / 2, p);
  return r == 1 ? 1 : -1;
}

// p-adic valuation of a nonzero integer.
inline int valuation(i64 a, i64 p, i64* unit_out = nullptr) {
  int v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  if (unit_out) *unit_out = a;
  return v;
}

// Prime factorization by trial division; |n| must be <= kFactorCap.
inline constexpr i64 kFactorCap = 1'000'000'000'000LL;  // 1e12; trial division up to 1e6

inline std::vector<std::pair<i64, int>> factorize(i64 n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "factorize(0)");
  if (abs64(n) > kFactorCap)
    throw Error(ErrorCode::InputTooLarge, "integer too large to factor: " + std::to_string(n));
  std::vector<std::pair<i64, int>> out;
  i64 m = abs64(n);
  for (i64 d = 2; d * d <= m; d == 2 ? d = 3 : d += 2) {
    if (m % d) continue;
    int e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

// Squarefree part of n, sign preserved.
inline i64 squarefree_part(i64 n) {
  i64 sign = n < 0 ? -1 : 1;
  i64 r = 1;
  for (auto [p, e] : factorize(n))
    if (e & 1) r = checked_mul(r, p);
  return sign * r;
}

}  // namespace motrace
