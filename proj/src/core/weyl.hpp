#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "core/cartan.hpp"

namespace motrace {

// Square integer matrix on the simple-root basis, row-major.
using Mat = std::vector<int>;

Mat mat_identity(int n);
Mat mat_mul(const Mat& a, const Mat& b, int n);

struct WeylElement {
  Mat mat;
  int length = 0;
  std::string word;  // canonical reduced word from BFS, "e" for the identity
};

// A finite Weyl group, materialized by breadth-first generation from the
// simple reflections. Immutable after construction.
class WeylGroup {
 public:
  static constexpr unsigned long long kEnumerationCap = 2'000'000ULL;

  explicit WeylGroup(const CartanType& type);

  const CartanType& type() const { return type_; }
  int rank() const { return rank_; }
  unsigned long long order() const { return (unsigned long long)elements_.size(); }

  // Elements in BFS order: by length, then by discovery. elements()[0] = e.
  const std::vector<WeylElement>& elements() const { return elements_; }
  const std::vector<Mat>& simple_reflections() const { return gens_; }

  std::map<int, long long> length_spectrum() const;

  // Minimal-length representatives of the cosets w W_I, I given by 1-based
  // simple-root indices. Sorted by (length, word).
  std::vector<WeylElement> min_coset_reps(const std::set<int>& I) const;

  const WeylElement& longest_element() const { return elements_.back(); }

 private:
  CartanType type_;
  int rank_;
  std::vector<Mat> gens_;
  std::vector<WeylElement> elements_;
  std::map<Mat, int> index_;  // matrix -> index into elements_
};

// Coefficients of prod_i (1 + t + ... + t^(d_i - 1)), the Poincare polynomial
// of W by length. Used to cross-validate the BFS length spectrum.
std::vector<long long> poincare_polynomial(const CartanType& type);

}  // namespace motrace
