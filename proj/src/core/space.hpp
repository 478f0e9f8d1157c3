#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "core/cartan.hpp"

namespace motrace {

enum class SpaceKind {
  Point,
  Affine,       // A^n, n >= 0
  Gm,
  Torus,        // Gm^n, n >= 1
  Proj,         // P^n, n >= 0
  Flag,         // G/B
  PartialFlag,  // G/P_I
  GmodT,        // G/T
  GmodNT,       // G/N(T)
  Product,
  Disjoint,
  Strat,        // stratification into locally closed smooth strata
  TorusAction,  // decomposition X_j = (T/Gamma_j) x Y_j
};

struct SpaceExpr;
using SpacePtr = std::shared_ptr<const SpaceExpr>;

// One stratum of a torus-action decomposition. The attractivity hypothesis
// on non-full isotropy strata is a caller-asserted precondition; it has no
// symbolic certificate here.
struct TorusStratum {
  bool gamma_is_full_torus = false;
  SpacePtr slice;
};

struct SpaceExpr {
  SpaceKind kind;
  int n = 0;                            // Affine / Torus / Proj
  std::optional<CartanType> type;       // Flag / PartialFlag / GmodT / GmodNT
  std::set<int> parabolic;              // PartialFlag
  std::vector<SpacePtr> children;       // Product (2) / Disjoint / Strat
  std::vector<TorusStratum> strata;     // TorusAction

  static SpacePtr point();
  static SpacePtr affine(int n);
  static SpacePtr gm();
  static SpacePtr torus(int n);
  static SpacePtr proj(int n);
  static SpacePtr flag(CartanType t);
  static SpacePtr partial_flag(CartanType t, std::set<int> I);
  static SpacePtr gmod_t(CartanType t);
  static SpacePtr gmod_nt(CartanType t);
  static SpacePtr product(SpacePtr a, SpacePtr b);
  static SpacePtr disjoint(std::vector<SpacePtr> parts);
  static SpacePtr strat(std::vector<SpacePtr> strata);
  static SpacePtr torus_action(std::vector<TorusStratum> strata);
};

bool space_equal(const SpacePtr& a, const SpacePtr& b);

// Renders per the space grammar. TorusAction has no concrete syntax and is
// rejected with InvalidExpr.
std::string render_space(const SpacePtr& s);
SpacePtr parse_space(const std::string& text);

}  // namespace motrace
