#include "core/hilbert.hpp"

#include "core/errors.hpp"

namespace motrace {

Place Place::prime(i64 p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not a prime");
  return Place{false, p};
}

namespace {

// (u-1)/2 mod 2 for odd u.
int eps2(i64 u) {
  i64 m = mod_norm(u, 4);
  return m == 3 ? 1 : 0;
}

// (u^2-1)/8 mod 2 for odd u.
int omega2(i64 u) {
  i64 m = mod_norm(u, 8);
  return (m == 3 || m == 5) ? 1 : 0;
}

int symbol_at_odd_prime(i64 a, i64 b, i64 p) {
  i64 u, v;
  int alpha = valuation(a, p, &u);
  int beta = valuation(b, p, &v);
  int eps = (int)(((p - 1) / 2) & 1);
  int sign = 1;
  if ((alpha & 1) && (beta & 1) && eps) sign = -sign;
  if (beta & 1) sign *= legendre(u, p);
  if (alpha & 1) sign *= legendre(v, p);
  return sign;
}

int symbol_at_two(i64 a, i64 b) {
  i64 u, v;
  int alpha = valuation(a, 2, &u);
  int beta = valuation(b, 2, &v);
  int e = eps2(u) * eps2(v) + (alpha & 1) * omega2(v) + (beta & 1) * omega2(u);
  return (e & 1) ? -1 : 1;
}

}  // namespace

int hilbert_symbol(i64 an, i64 ad, i64 bn, i64 bd, const Place& v) {
  if (an == 0 || ad == 0 || bn == 0 || bd == 0)
    throw Error(ErrorCode::ZeroRepresentative, "Hilbert symbol arguments must be nonzero");
  // (a,b) depends on a,b only modulo squares, so n/d and n*d agree.
  i64 a = checked_mul(an, ad);
  i64 b = checked_mul(bn, bd);
  if (v.real) return (a < 0 && b < 0) ? -1 : 1;
  if (v.p == 2) return symbol_at_two(a, b);
  return symbol_at_odd_prime(a, b, v.p);
}

}  // namespace motrace
