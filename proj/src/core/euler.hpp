#pragma once

#include "core/gw.hpp"
#include "core/space.hpp"

namespace motrace {

struct EulerResult {
  GwElement value;
  // In positive characteristic the identities live in GW(k) with the prime
  // inverted; the class is reported unchanged with this flag set.
  bool p_inverted = false;
};

// GW(k)-valued Euler characteristic of a stratified-space expression.
// Rules beyond Point/Affine/Product/Disjoint require sqrt(-1) in the field.
EulerResult euler_char(const SpacePtr& space, const FieldSpec& field);

// Replaces every Proj / Flag / PartialFlag / GmodT node by its explicit
// stratification into affine cells (Bruhat cells; for G/T the cells of G/B
// times the affine fiber of G/T -> G/B). euler_char is preserved.
SpacePtr expand_cells(const SpacePtr& space);

}  // namespace motrace
