#pragma once

#include <optional>
#include <string>

#include "core/intmath.hpp"

namespace motrace {

enum class FieldKind { QuadraticallyClosed, RealClosed, Finite, Rational };

// Descriptor of a supported base field. Immutable after construction.
//
// For Finite, q must be an odd prime power; characteristic 2 is rejected
// because the quadratic form normal forms used here assume 2 invertible.
class FieldSpec {
 public:
  static FieldSpec quadratically_closed() { return FieldSpec(FieldKind::QuadraticallyClosed, 0, 0, 1); }
  static FieldSpec real_closed() { return FieldSpec(FieldKind::RealClosed, 0, 0, 1); }
  static FieldSpec rational() { return FieldSpec(FieldKind::Rational, 0, 0, 1); }
  static FieldSpec finite(i64 q);

  // Parses "Qbar", "R", "Q", or "F<q>".
  static FieldSpec parse(const std::string& name);

  FieldKind kind() const { return kind_; }
  i64 q() const { return q_; }
  i64 characteristic() const { return char_; }
  int extension_degree() const { return ext_deg_; }

  bool has_sqrt_minus_one() const;

  // Canonical non-square representative s for Finite(q), when an integer one
  // exists (it does iff the extension degree is odd). For even-degree
  // extensions every prime-field element is a square, so no <s> term can
  // ever arise.
  std::optional<i64> canonical_nonsquare() const;

  // True iff the integer n, coprime to the characteristic, is a square in F_q.
  bool is_square_in_finite(i64 n) const;

  std::string name() const;

  bool operator==(const FieldSpec& o) const { return kind_ == o.kind_ && q_ == o.q_; }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

 private:
  FieldSpec(FieldKind k, i64 q, i64 ch, int deg) : kind_(k), q_(q), char_(ch), ext_deg_(deg) {}

  FieldKind kind_;
  i64 q_;      // only for Finite
  i64 char_;   // 0 except Finite
  int ext_deg_;
};

}  // namespace motrace
