#include "core/smp.hpp"

#include "core/errors.hpp"
#include "doctest.h"
#include "support/generators.hpp"

using namespace motrace;
using namespace motrace::smp;

namespace {

StableTerm f_after_g(int n, int j, int jp) {
  Gen g = gen_G(jp, n);
  Gen f = gen_F(n - j, j);
  return make_term(make_composite(g.src, {{g}, {f}}));
}

// number of 2x2 nonnegative integer matrices with row sums (r,s) and column
// sums (i,j)
int contingency_count(int i, int j, int r, int s) {
  int count = 0;
  for (int m11 = 0; m11 <= r; ++m11)
    for (int m21 = 0; m21 <= s; ++m21) {
      int m12 = r - m11, m22 = s - m21;
      if (m11 + m21 == i && m12 + m22 == j) ++count;
    }
  return count;
}

}  // namespace

TEST_CASE("gl_double_cosets") {
  using P = std::pair<int, int>;
  CHECK(gl_double_cosets(2, 2, 2, 2) == std::vector<P>{{0, 2}, {1, 1}, {2, 0}});
  CHECK(gl_double_cosets(1, 0, 1, 0) == std::vector<P>{{1, 0}});
  CHECK(gl_double_cosets(2, 1, 1, 2) == std::vector<P>{{0, 2}, {1, 1}});
  CHECK_THROWS_AS(gl_double_cosets(2, 1, 1, 1), Error);
  CHECK_THROWS_AS(gl_double_cosets(-1, 2, 1, 0), Error);
}

TEST_CASE("gl_double_cosets counts match contingency tables") {
  for (int r = 0; r <= 5; ++r)
    for (int s = 0; s <= 5; ++s)
      for (int i = 0; i <= r + s; ++i) {
        int j = r + s - i;
        CHECK((int)gl_double_cosets(i, j, r, s).size() == contingency_count(i, j, r, s));
      }
}

TEST_CASE("generator degenerations") {
  CHECK(gen_F(2, 0) == gen_Eps(2));  // f_{i,0} is the augmentation
  CHECK(gen_F(0, 2) == gen_Proj(2)); // f_{0,j} is the projection
  CHECK(gen_M(3, 0).is_identity());
  CHECK(gen_Tr(0, 3).is_identity());
  CHECK(gen_G(2, 2).is_identity());
  CHECK(gen_Mbar(0, 2).is_identity());
  CHECK(gen_Pi(0, 2) == gen_Proj(2));
  CHECK(gen_Pi(2, 0) == gen_Eps(2));
  CHECK(gen_C(1, 2, 1, 2) == gen_M(1, 2));  // trivial switch is multiplication
  CHECK_THROWS_AS(gen_G(3, 2), Error);
  CHECK_THROWS_AS(gen_C(2, 0, 1, 1), Error);
}

TEST_CASE("ill-typed composites are rejected") {
  Gen m = gen_M(1, 2);
  Gen f = gen_F(1, 1);  // src BGL(2), but m produces BGL(3)
  CHECK_THROWS_AS(make_composite(m.src, {{m}, {f}}), Error);
  try {
    make_composite(m.src, {{m}, {f}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IllTypedTerm);
  }
}

TEST_CASE("expansion examples from the splitting argument") {
  // f_{n-j,j} . g_j identifies with the projection
  for (int n : {2, 3, 5})
    for (int j = 1; j <= n; ++j) {
      auto e = expand(f_after_g(n, j, j));
      REQUIRE(e.terms.size() == 1);
      CHECK(render_stable(e) == "Proj(" + std::to_string(j) + ")");
      CHECK(e.terms[0].coeff.integer == 1);
      CHECK(e.terms[0].coeff.symbols.empty());
    }
  // f_{n,0} . g_j is the augmentation
  for (int n : {2, 4})
    for (int j = 1; j <= n; ++j)
      CHECK(render_stable(expand(f_after_g(n, 0, j))) == "Eps(" + std::to_string(j) + ")");
  // j' < j kills everything
  CHECK(expand(f_after_g(3, 2, 1)).is_zero());
  CHECK(expand(f_after_g(4, 3, 0)).is_zero());
  CHECK(expand(f_after_g(5, 2, 1)).is_zero());
  // above the diagonal the surviving term is F(j'-j, j)
  CHECK(render_stable(expand(f_after_g(4, 1, 2))) == "F(1,1)");
  CHECK(render_stable(expand(f_after_g(4, 1, 3))) == "F(2,1)");
}

TEST_CASE("Tr . M expands over double cosets with formal switches") {
  Gen m = gen_M(1, 1);
  Gen tr = gen_Tr(1, 1);
  auto e = expand(make_term(make_composite(m.src, {{m}, {tr}})));
  REQUIRE(e.terms.size() == 2);
  // aligned coset (1,0) has integer multiplicity 1; the other stays symbolic
  CHECK(render_stable(e) == "n[0,1;1,1]*C(0,1;1,1) + C(1,0;1,1)");
  bool found_symbolic = false, found_unit = false;
  for (auto& t : e.terms) {
    if (!t.coeff.symbols.empty()) found_symbolic = true;
    if (t.coeff.symbols.empty() && t.coeff.integer == 1) found_unit = true;
  }
  CHECK(found_symbolic);
  CHECK(found_unit);
}

TEST_CASE("expansion preserves domain and codomain") {
  testgen::Rng rng(211);
  for (int it = 0; it < 100; ++it) {
    auto t = testgen::random_stable_term(rng);
    auto e = expand(t);
    CHECK(e.source == t.source);
    CHECK(e.target == t.target);
  }
}

TEST_CASE("rewriting is confluent across strategies") {
  testgen::Rng rng(223);
  for (int it = 0; it < 100; ++it) {
    auto t = testgen::random_stable_term(rng);
    auto nf = expand(t);
    for (std::uint64_t s = 1; s <= 5; ++s) {
      auto nf2 = expand_seeded(t, 1000 * it + s);
      CHECK(stable_equal(nf, nf2));
    }
  }
}

TEST_CASE("verify_splitting certificates") {
  for (int n = 0; n <= 6; ++n) {
    auto cert = verify_splitting(n);
    CHECK(cert.triangular);
    CHECK(cert.diagonal_is_projection);
    CHECK(cert.ok());
  }
  CHECK(verify_splitting(12).ok());  // the supported maximum
  CHECK_THROWS_AS(verify_splitting(13), Error);
  CHECK_THROWS_AS(verify_splitting(-1), Error);
  try {
    verify_splitting(40);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
}

TEST_CASE("certificate for n=1 matches the two-row rewrite") {
  auto cert = verify_splitting(1);
  CHECK(render_stable(cert.entries[0][0]) == "id");  // Eps(0) = Proj(0) = id of S0
  CHECK(render_stable(cert.entries[0][1]) == "Eps(1)");
  CHECK(render_stable(cert.entries[1][0]) == "Zero");
  CHECK(render_stable(cert.entries[1][1]) == "Proj(1)");
  auto text = cert.render();
  CHECK(text.find("f(1,0) . g(1,1) => Eps(1)") != std::string::npos);
  CHECK(text.find("f(0,1) . g(0,1) => Zero") != std::string::npos);
  CHECK(text.find("TRIANGULAR: yes") != std::string::npos);
  CHECK(text.find("DIAGONAL: yes") != std::string::npos);
}

TEST_CASE("n=0 is trivially true") {
  auto cert = verify_splitting(0);
  CHECK(cert.ok());
  CHECK(cert.entries[0][0].terms.size() == 1);
  CHECK(render_stable(cert.entries[0][0]) == "id");
}

TEST_CASE("zero rule: unit into a positive-index quotient") {
  // Proj(j) . Unit(j): S0 lands in BGL_{j-1}, hence at the basepoint
  Gen u = gen_Unit(2);
  Gen p = gen_Proj(2);
  CHECK(expand(make_term(make_composite({}, {{u}, {p}}))).is_zero());
  Gen f = gen_F(1, 1);
  CHECK(expand(make_term(make_composite({}, {{gen_Unit(2)}, {f}}))).is_zero());
  // Eps . Unit is the identity of S0, not zero
  auto e = expand(make_term(make_composite({}, {{gen_Unit(2)}, {gen_Eps(2)}})));
  CHECK(render_stable(e) == "id");
}
