#include "core/weyl.hpp"

#include "core/errors.hpp"
#include "doctest.h"

using namespace motrace;

TEST_CASE("cartan type parsing and rendering") {
  CHECK(CartanType::parse("A2").render() == "A2");
  CHECK(CartanType::parse("A1xA1").render() == "A1xA1");
  CHECK(CartanType::parse("B3xG2").rank() == 5);
  CHECK(CartanType::parse("D3").render() == "A3");  // D3 = A3 normalization
  CHECK_THROWS_AS(CartanType::parse("B1"), Error);
  CHECK_THROWS_AS(CartanType::parse("E9"), Error);
  CHECK_THROWS_AS(CartanType::parse("H3"), ParseError);
  CHECK_THROWS_AS(CartanType::parse("A2x"), ParseError);
  CHECK_THROWS_AS(CartanType::parse(""), ParseError);
}

TEST_CASE("orders from the degrees table") {
  CHECK(CartanType::parse("A1").weyl_order() == 2);
  CHECK(CartanType::parse("A2").weyl_order() == 6);
  CHECK(CartanType::parse("B2").weyl_order() == 8);
  CHECK(CartanType::parse("G2").weyl_order() == 12);
  CHECK(CartanType::parse("F4").weyl_order() == 1152);
  CHECK(CartanType::parse("D4").weyl_order() == 192);
  CHECK(CartanType::parse("E6").weyl_order() == 51840);
  CHECK(CartanType::parse("E7").weyl_order() == 2903040ULL);
  CHECK(CartanType::parse("E8").weyl_order() == 696729600ULL);
  CHECK(CartanType::parse("A1xA1").weyl_order() == 4);
  CHECK(CartanType::parse("A2xB2").weyl_order() == 48);
}

TEST_CASE("BFS count equals the degrees product") {
  for (const char* t : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "D5", "F4",
                        "G2", "E6", "A1xA1", "A2xA1", "B2xG2"}) {
    CartanType type = CartanType::parse(t);
    WeylGroup w(type);
    CHECK(w.order() == type.weyl_order());
  }
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(WeylGroup(CartanType::parse("E7")), Error);
  try {
    WeylGroup w(CartanType::parse("E8"));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EnumerationCapExceeded);
  }
}

TEST_CASE("length spectra") {
  WeylGroup a1(CartanType::parse("A1"));
  CHECK(a1.length_spectrum() == std::map<int, long long>{{0, 1}, {1, 1}});
  WeylGroup a2(CartanType::parse("A2"));
  CHECK(a2.length_spectrum() == std::map<int, long long>{{0, 1}, {1, 2}, {2, 2}, {3, 1}});
  WeylGroup b2(CartanType::parse("B2"));
  CHECK(b2.length_spectrum() ==
        std::map<int, long long>{{0, 1}, {1, 2}, {2, 2}, {3, 2}, {4, 1}});
}

TEST_CASE("spectrum matches the Poincare polynomial") {
  for (const char* t : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "A1xA1", "A2xB2"}) {
    CartanType type = CartanType::parse(t);
    WeylGroup w(type);
    auto poly = poincare_polynomial(type);
    auto spec = w.length_spectrum();
    CHECK(spec.size() == poly.size());
    long long total = 0;
    for (size_t l = 0; l < poly.size(); ++l) {
      CHECK(spec[(int)l] == poly[l]);
      total += poly[l];
    }
    CHECK(total == (long long)w.order());  // evaluation at t = 1
    CHECK((int)poly.size() - 1 == type.positive_root_count());
  }
}

TEST_CASE("longest element") {
  for (const char* t : {"A2", "B2", "A3", "G2", "D4"}) {
    CartanType type = CartanType::parse(t);
    WeylGroup w(type);
    auto& w0 = w.longest_element();
    CHECK(w0.length == type.positive_root_count());
    CHECK(mat_mul(w0.mat, w0.mat, w.rank()) == mat_identity(w.rank()));
  }
}

TEST_CASE("minimal coset representatives") {
  WeylGroup a2(CartanType::parse("A2"));
  auto all = a2.min_coset_reps({});
  CHECK(all.size() == 6);
  std::multiset<int> lengths;
  for (auto& r : all) lengths.insert(r.length);
  CHECK(lengths == std::multiset<int>{0, 1, 1, 2, 2, 3});

  auto p1 = a2.min_coset_reps({1});
  CHECK(p1.size() == 3);
  std::multiset<int> l1;
  for (auto& r : p1) l1.insert(r.length);
  CHECK(l1 == std::multiset<int>{0, 1, 2});  // cells of P^2

  WeylGroup a3(CartanType::parse("A3"));
  CHECK(a3.min_coset_reps({1, 3}).size() == 6);
  CHECK(a3.min_coset_reps({1, 2}).size() == 4);
  CHECK_THROWS_AS(a3.min_coset_reps({5}), Error);
}

TEST_CASE("coset counts match |W|/|W_I| across types") {
  for (const char* t : {"A3", "B3", "D4", "F4"}) {
    CartanType type = CartanType::parse(t);
    WeylGroup w(type);
    int n = type.rank();
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::set<int> I;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) I.insert(i + 1);
      auto reps = w.min_coset_reps(I);
      CHECK((unsigned long long)reps.size() * parabolic_order(type, I) == w.order());
    }
  }
}

TEST_CASE("parabolic orders by subdiagram classification agree with BFS") {
  // brute-force: generate the subgroup generated by the chosen reflections
  auto subgroup_order = [](const WeylGroup& w, const std::set<int>& I) {
    std::set<Mat> seen{mat_identity(w.rank())};
    std::vector<Mat> queue{mat_identity(w.rank())};
    while (!queue.empty()) {
      Mat cur = queue.back();
      queue.pop_back();
      for (int i : I) {
        Mat next = mat_mul(cur, w.simple_reflections()[i - 1], w.rank());
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
    return (unsigned long long)seen.size();
  };
  for (const char* t : {"A4", "B4", "D4", "F4", "G2", "A2xB2"}) {
    CartanType type = CartanType::parse(t);
    WeylGroup w(type);
    int n = type.rank();
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::set<int> I;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) I.insert(i + 1);
      CHECK(parabolic_order(type, I) == subgroup_order(w, I));
    }
  }
  // spot checks on exceptional subdiagrams inside E6/E7 (table only, no BFS)
  CHECK(parabolic_order(CartanType::parse("E6"), {1, 2, 3, 4, 5, 6}) == 51840);
  CHECK(parabolic_order(CartanType::parse("E7"), {1, 2, 3, 4, 5, 6}) == 51840);
  CHECK(parabolic_order(CartanType::parse("E7"), {1, 3, 4, 5, 6, 7}) == 720 * 7);  // A6
}
