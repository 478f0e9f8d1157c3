#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "core/intmath.hpp"

namespace motrace::smp {

// ---------------------------------------------------------------------------
// Objects: smash products of BGL_n and quotients BGL_n/BGL_{n-1}. The unit
// S^0 is the empty product; BGL_0 and BGL_0/BGL_{-1} both normalize to it.
// ---------------------------------------------------------------------------

struct ObFactor {
  bool bar = false;  // true: BGL_n/BGL_{n-1}
  int index = 0;
  auto operator<=>(const ObFactor&) const = default;
};
using Object = std::vector<ObFactor>;

std::string render_object(const Object& o);

// ---------------------------------------------------------------------------
// Generators. Each instance carries its full source/target labels; index-0
// degenerations are normalized away at construction (e.g. F(i,0) is the
// augmentation, M(r,0) the identity).
// ---------------------------------------------------------------------------

enum class GenKind { M, Tr, F, G, Pi, Eps, Proj, Mbar, C, Unit, Id };

struct Gen {
  GenKind kind = GenKind::Id;
  int a = 0, b = 0;  // parameters; C additionally uses r,s
  int r = 0, s = 0;
  Object src, dst;

  bool is_identity() const { return kind == GenKind::Id; }
  std::string render() const;
  auto operator<=>(const Gen&) const = default;
};

Gen gen_M(int r, int s);
Gen gen_Tr(int i, int j);
Gen gen_F(int i, int j);
Gen gen_G(int j, int n);
Gen gen_Pi(int i, int j);
Gen gen_Eps(int i);
Gen gen_Proj(int j);
Gen gen_Mbar(int u, int v);
Gen gen_C(int a, int b, int r, int s);
Gen gen_Unit(int r);
Gen gen_Id(ObFactor f);

// ---------------------------------------------------------------------------
// Terms: formal sums of composites with positive-integer and symbolic
// multiplicities n_{a,b} (kept symbolic per expansion context (a,b;r,s)).
// ---------------------------------------------------------------------------

struct SymKey {
  int a = 0, b = 0, r = 0, s = 0;
  auto operator<=>(const SymKey&) const = default;
};

struct Coeff {
  long long integer = 1;
  std::map<SymKey, int> symbols;  // symbol -> exponent
  std::string render() const;    // "" when trivial, else e.g. "2*n[1,0;1,1]*"
  auto operator<=>(const Coeff&) const = default;
};

using Layer = std::vector<Gen>;

struct Composite {
  Object source;
  std::vector<Layer> layers;  // applied first to last (outermost last)
  Object target() const;
};

struct Term {
  Coeff coeff;
  Composite comp;
};

// A formal sum of well-typed composites with a common source and target.
// An empty sum is the zero map.
struct StableTerm {
  Object source, target;
  std::vector<Term> terms;
  bool is_zero() const { return terms.empty(); }
};

// Validates layer-by-layer domain/codomain compatibility (IllTypedTerm on
// failure) and returns the packed composite.
Composite make_composite(Object source, std::vector<Layer> layers);
StableTerm make_term(Composite c);

std::string render_stable(const StableTerm& t);
bool stable_equal(const StableTerm& x, const StableTerm& y);

// All pairs (a,b) with a+b = i, 0 <= a <= r, 0 <= b <= s, ascending in a:
// the double cosets (GL_r x GL_s)\GL_n/(GL_i x GL_j), n = i+j = r+s.
std::vector<std::pair<int, int>> gl_double_cosets(int i, int j, int r, int s);

// Rewrites to normal form with the deterministic (first-redex) strategy.
StableTerm expand(const StableTerm& t);
// Same normal form, choosing among redexes with a seeded RNG; used by the
// confluence suite.
StableTerm expand_seeded(const StableTerm& t, std::uint64_t seed);

struct SplitCertificate {
  int n = 0;
  std::vector<std::vector<StableTerm>> entries;  // entries[j][j'] = expand(F(n-j,j) . G(j',n))
  bool triangular = false;
  bool diagonal_is_projection = false;
  bool ok() const { return triangular && diagonal_is_projection; }
  std::string render() const;
};

// The triangularity certificate behind the stable splitting of BGL_n.
SplitCertificate verify_splitting(int n);

}  // namespace motrace::smp
