#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "core/weyl.hpp"

namespace motrace {

struct TransferTerm {
  std::string conjugator_word;
  int conjugator_length = 0;
  std::optional<std::set<int>> restriction;  // parabolic subset (K, H^g) descriptor
  long long coefficient = 1;
};

// A formal double-coset transfer formula: one term per double coset.
struct TransferFormula {
  CartanType type;
  std::optional<std::set<int>> parabolic;  // engaged subgroup for the maximal-rank case
  std::vector<TransferTerm> terms;

  std::string render() const;
};

// Sum over w in W of C_w (torus-torus case).
TransferFormula torus_transfer_formula(const CartanType& type);

// Sum over minimal coset representatives of p*(K,H^g) . C_g (maximal-rank case).
TransferFormula maxrank_transfer_formula(const CartanType& type, const std::set<int>& I);

struct ProjectorReport {
  CartanType type;
  int degree_cap = 0;
  bool projector_idempotent = false;
  std::vector<long long> image_dims;   // degrees 0..degree_cap
  std::vector<long long> molien_dims;  // same truncation of the Molien series
  bool match = false;

  std::string render_text() const;
};

// Builds the exact averaging projector e = (1/|W|) sum_w C_w on a polynomial
// model of H*(BT) degree by degree, verifies idempotence and that e fixes the
// independently computed invariant subspace pointwise, and compares image
// dimensions against the Molien series.
ProjectorReport averaging_projector_check(const CartanType& type, int degree_cap);

}  // namespace motrace
