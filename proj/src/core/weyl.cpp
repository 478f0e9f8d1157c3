#include "core/weyl.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace motrace {

Mat mat_identity(int n) {
  Mat m(n * n, 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b, int n) {
  Mat c(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int aik = a[i * n + k];
      if (!aik) continue;
      for (int j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
    }
  return c;
}

WeylGroup::WeylGroup(const CartanType& type) : type_(type), rank_(type.rank()) {
  unsigned long long order = type.weyl_order();
  if (order > kEnumerationCap)
    throw Error(ErrorCode::EnumerationCapExceeded,
                "|W(" + type.render() + ")| = " + std::to_string(order) +
                    " exceeds the enumeration cap of " + std::to_string(kEnumerationCap));
  auto a = type.cartan_matrix();
  int n = rank_;
  for (int i = 0; i < n; ++i) {
    // s_i(alpha_j) = alpha_j - a[i][j] alpha_i: only row i differs from I.
    Mat s = mat_identity(n);
    for (int j = 0; j < n; ++j) s[i * n + j] = (i == j ? 1 : 0) - a[i][j];
    gens_.push_back(std::move(s));
  }
  elements_.push_back({mat_identity(n), 0, "e"});
  index_[elements_[0].mat] = 0;
  for (size_t head = 0; head < elements_.size(); ++head) {
    // note: elements_ may reallocate, so copy what we need first
    Mat cur = elements_[head].mat;
    int len = elements_[head].length;
    std::string word = elements_[head].word;
    for (int i = 0; i < n; ++i) {
      Mat next = mat_mul(cur, gens_[i], n);
      if (index_.count(next)) continue;
      std::string w = head == 0 ? "s" + std::to_string(i + 1)
                                : word + "*s" + std::to_string(i + 1);
      index_[next] = (int)elements_.size();
      elements_.push_back({std::move(next), len + 1, std::move(w)});
    }
  }
  if ((unsigned long long)elements_.size() != order)
    throw Error(ErrorCode::InvalidArgument,
                "internal: generated " + std::to_string(elements_.size()) + " elements, expected " +
                    std::to_string(order));
}

std::map<int, long long> WeylGroup::length_spectrum() const {
  std::map<int, long long> h;
  for (auto& e : elements_) ++h[e.length];
  return h;
}

std::vector<WeylElement> WeylGroup::min_coset_reps(const std::set<int>& I) const {
  for (int i : I)
    if (i < 1 || i > rank_)
      throw Error(ErrorCode::InvalidArgument,
                  "parabolic index " + std::to_string(i) + " out of range 1.." + std::to_string(rank_));
  std::vector<WeylElement> reps;
  for (auto& e : elements_) {
    bool minimal = true;
    for (int i : I) {
      Mat ws = mat_mul(e.mat, gens_[i - 1], rank_);
      if (elements_[index_.at(ws)].length < e.length) {
        minimal = false;
        break;
      }
    }
    if (minimal) reps.push_back(e);
  }
  std::sort(reps.begin(), reps.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.word < b.word;
  });
  unsigned long long expected = type_.weyl_order() / parabolic_order(type_, I);
  if ((unsigned long long)reps.size() != expected)
    throw Error(ErrorCode::InvalidArgument,
                "internal: coset representative count " + std::to_string(reps.size()) +
                    " does not match |W|/|W_I| = " + std::to_string(expected));
  return reps;
}

std::vector<long long> poincare_polynomial(const CartanType& type) {
  std::vector<long long> poly{1};
  for (int d : type.degrees()) {
    std::vector<long long> next(poly.size() + d - 1, 0);
    for (size_t i = 0; i < poly.size(); ++i)
      for (int k = 0; k < d; ++k) next[i + k] += poly[i];
    poly = std::move(next);
  }
  return poly;
}

}  // namespace motrace
