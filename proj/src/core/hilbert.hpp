#pragma once

#include "core/intmath.hpp"

namespace motrace {

// A place of Q: a finite prime or the real place.
struct Place {
  bool real = false;
  i64 p = 0;

  static Place real_place() { return Place{true, 0}; }
  static Place prime(i64 p);
};

// Hilbert symbol (a,b)_v for nonzero rationals a = an/ad, b = bn/bd.
// +1 iff z^2 = a x^2 + b y^2 has a nontrivial solution over the completion.
int hilbert_symbol(i64 an, i64 ad, i64 bn, i64 bd, const Place& v);

inline int hilbert_symbol(i64 a, i64 b, const Place& v) { return hilbert_symbol(a, 1, b, 1, v); }

}  // namespace motrace
