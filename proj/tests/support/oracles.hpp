#pragma once

// Independent oracles used by the tests. Everything here is deliberately
// brute-force and stays clear of the closed-form routes the library uses.

#include <array>
#include <optional>
#include <vector>

#include "core/hilbert.hpp"
#include "core/intmath.hpp"

namespace motrace::oracle {

// --- local solubility of c1 x^2 + c2 y^2 + c3 z^2 = 0 -----------------------
//
// Valuation bookkeeping: square factors of p are stripped from each
// coefficient; if two or three coefficients then carry a factor p, the whole
// form is scaled by p and stripped again, leaving at most one p among the
// coefficients. After that a primitive solution of the congruence below
// lifts by Hensel's lemma, and conversely any p-adic solution reduces to
// one, so exhaustive search over the residues decides isotropy:
//   - no p in the coefficients: search (x,y,z) mod p (p odd)
//   - one p (say on c3):        search (x,y) mod p with c1 x^2 + c2 y^2 = 0
//   - p = 2:                    search primitive triples mod 32
inline bool isotropic_ternary(i64 c1, i64 c2, i64 c3, const Place& v) {
  if (v.real) return !((c1 > 0 && c2 > 0 && c3 > 0) || (c1 < 0 && c2 < 0 && c3 < 0));
  i64 p = v.p;
  std::array<i64, 3> c{c1, c2, c3};
  auto strip = [&](i64 x) {
    while (x % (p * p) == 0) x /= p * p;
    return x;
  };
  for (auto& x : c) x = strip(x);
  int with_p = 0;
  for (auto& x : c)
    if (x % p == 0) ++with_p;
  if (with_p >= 2) {
    for (auto& x : c) x = strip(x * p);
    with_p = 0;
    for (auto& x : c)
      if (x % p == 0) ++with_p;
  }
  if (p == 2) {
    const i64 m = 32;
    for (i64 x = 0; x < m; ++x)
      for (i64 y = 0; y < m; ++y)
        for (i64 z = 0; z < m; ++z) {
          if (x % 2 == 0 && y % 2 == 0 && z % 2 == 0) continue;
          if (mod_norm(c[0] * x * x + c[1] * y * y + c[2] * z * z, m) == 0) return true;
        }
    return false;
  }
  if (with_p == 0) {
    for (i64 x = 0; x < p; ++x)
      for (i64 y = 0; y < p; ++y)
        for (i64 z = 0; z < p; ++z) {
          if (x == 0 && y == 0 && z == 0) continue;
          if (mod_norm(c[0] * x * x + c[1] * y * y + c[2] * z * z, p) == 0) return true;
        }
    return false;
  }
  // exactly one coefficient divisible by p; move it to the back
  std::array<i64, 2> units{};
  int u = 0;
  for (auto& x : c)
    if (x % p != 0) units[u++] = x;
  for (i64 x = 0; x < p; ++x)
    for (i64 y = 0; y < p; ++y) {
      if (x == 0 && y == 0) continue;
      if (mod_norm(units[0] * x * x + units[1] * y * y, p) == 0) return true;
    }
  return false;
}

// (a,b)_v by brute-force solubility of z^2 = a x^2 + b y^2.
inline int hilbert_oracle(i64 a, i64 b, const Place& v) {
  return isotropic_ternary(a, b, -1, v) ? 1 : -1;
}

// --- exhaustive square test in a prime field --------------------------------
inline bool is_square_mod_p(i64 a, i64 p) {
  a = mod_norm(a, p);
  for (i64 t = 0; t < p; ++t)
    if (mulmod(t, t, p) == a) return true;
  return false;
}

// --- integral isometry search for small diagonal forms over Q ---------------
//
// Looks for a rational change of basis B with B^T diag(d1) B = diag(d2),
// columns of the form (p1/q, p2/q) with small p, q. Returns false only if no
// such matrix exists within the search bounds, so it is one-sided.
inline bool isometric_2x2(i64 a1, i64 a2, i64 b1, i64 b2, int bound = 12, int denbound = 6) {
  struct Col {
    i64 p1, p2, q;
  };
  auto find_cols = [&](i64 target) {
    std::vector<Col> cols;
    for (i64 q = 1; q <= denbound; ++q)
      for (i64 p1 = -bound; p1 <= bound; ++p1)
        for (i64 p2 = -bound; p2 <= bound; ++p2) {
          if (p1 == 0 && p2 == 0) continue;
          if (a1 * p1 * p1 + a2 * p2 * p2 == target * q * q) cols.push_back({p1, p2, q});
        }
    return cols;
  };
  for (auto& u : find_cols(b1))
    for (auto& w : find_cols(b2))
      if (a1 * u.p1 * w.p1 + a2 * u.p2 * w.p2 == 0) return true;
  return false;
}

}  // namespace motrace::oracle
