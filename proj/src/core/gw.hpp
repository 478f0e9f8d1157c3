#pragma once

#include <map>
#include <optional>
#include <string>

#include "core/field.hpp"
#include "core/hilbert.hpp"

namespace motrace {

// A rational representative n/d of a field element.
struct RatNum {
  i64 num = 0;
  i64 den = 1;
};

struct GwInvariants {
  i64 rank = 0;
  i64 discriminant = 1;  // canonical square-class representative
  std::optional<i64> signature;
  std::optional<std::map<i64, int>> hasse;  // prime -> +-1, Rational only
};

// An element of GW(k) in per-field normal form:
//   QuadraticallyClosed: rank * <1>
//   RealClosed:          pos * <1> + neg * <-1>
//   Finite(q):           a * <1> + b * <s>, b in {0,1}
//   Rational:            sum of m_d * <d> over squarefree representatives d
// Values are immutable; all operations return fresh elements.
class GwElement {
 public:
  static GwElement zero(const FieldSpec& f);
  static GwElement one(const FieldSpec& f) { return unit_form(f, {1, 1}); }
  static GwElement unit_form(const FieldSpec& f, RatNum a);

  const FieldSpec& field() const { return field_; }

  GwElement add(const GwElement& o) const;
  GwElement neg() const;
  GwElement sub(const GwElement& o) const { return add(o.neg()); }
  GwElement mul(const GwElement& o) const;
  GwElement scale(i64 n) const;

  bool is_equal(const GwElement& o) const;
  bool is_zero() const { return is_equal(zero(field_)); }

  GwInvariants invariants() const;
  i64 rank() const;

  // Renders per the element grammar, deterministically:
  // representatives ascending by absolute value, positive before negative.
  std::string render() const;
  static GwElement parse(const FieldSpec& f, const std::string& text);

  // Structural accessors (normal form), used by tests.
  i64 qc_rank() const { return rank_; }
  i64 rc_pos() const { return pos_; }
  i64 rc_neg() const { return neg_; }
  i64 fin_a() const { return fa_; }
  int fin_b() const { return fb_; }
  const std::map<i64, i64>& rat_terms() const { return reps_; }

 private:
  explicit GwElement(const FieldSpec& f) : field_(f) {}
  void check_same_field(const GwElement& o) const;
  void normalize();

  FieldSpec field_;
  i64 rank_ = 0;            // QuadraticallyClosed
  i64 pos_ = 0, neg_ = 0;   // RealClosed
  i64 fa_ = 0;              // Finite
  int fb_ = 0;              // Finite, in {0,1}
  std::map<i64, i64> reps_; // Rational
};

}  // namespace motrace
