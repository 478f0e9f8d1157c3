#pragma once

#include <set>
#include <string>
#include <vector>

#include "core/intmath.hpp"

namespace motrace {

// A (possibly reducible) Cartan type: a list of irreducible factors.
// Parsed from strings like "A2", "B3", "G2", "A1xA1". D3 is accepted and
// normalized to A3.
class CartanType {
 public:
  struct Factor {
    char family;  // 'A'..'G'
    int rank;
    bool operator==(const Factor& o) const { return family == o.family && rank == o.rank; }
  };

  static CartanType parse(const std::string& text);
  explicit CartanType(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  int rank() const;
  std::string render() const;

  // Cartan matrix on the simple-root basis, block diagonal over factors.
  std::vector<std::vector<int>> cartan_matrix() const;

  // Degrees of the fundamental invariants, concatenated over factors.
  std::vector<int> degrees() const;

  unsigned long long weyl_order() const;
  int positive_root_count() const;

  bool operator==(const CartanType& o) const { return factors_ == o.factors_; }

 private:
  std::vector<Factor> factors_;
};

// Order of the parabolic subgroup W_I generated by the simple reflections in
// I (1-based indices into the simple roots of `type`). Computed by
// classifying the induced subdiagram, so it needs no group enumeration.
unsigned long long parabolic_order(const CartanType& type, const std::set<int>& I);

}  // namespace motrace
