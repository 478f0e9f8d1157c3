#include "core/euler.hpp"

#include "core/errors.hpp"
#include "core/weyl.hpp"

namespace motrace {

namespace {

bool needs_sqrt_minus_one(const SpacePtr& s) {
  switch (s->kind) {
    case SpaceKind::Point:
    case SpaceKind::Affine:
      return false;
    case SpaceKind::Product:
    case SpaceKind::Disjoint: {
      for (auto& c : s->children)
        if (needs_sqrt_minus_one(c)) return true;
      return false;
    }
    default:
      return true;  // Gm, Torus, Proj, Strat, flag-like, TorusAction
  }
}

GwElement eval(const SpacePtr& s, const FieldSpec& f) {
  switch (s->kind) {
    case SpaceKind::Point:
    case SpaceKind::Affine:
      return GwElement::one(f);
    case SpaceKind::Gm:
    case SpaceKind::Torus:
      return GwElement::zero(f);
    case SpaceKind::Proj:
      return GwElement::one(f).scale(s->n + 1);
    case SpaceKind::Flag:
    case SpaceKind::GmodT:
      return GwElement::one(f).scale((i64)s->type->weyl_order());
    case SpaceKind::PartialFlag: {
      unsigned long long cells = s->type->weyl_order() / parabolic_order(*s->type, s->parabolic);
      return GwElement::one(f).scale((i64)cells);
    }
    case SpaceKind::GmodNT:
      return GwElement::one(f);
    case SpaceKind::Product:
      return eval(s->children[0], f).mul(eval(s->children[1], f));
    case SpaceKind::Disjoint:
    case SpaceKind::Strat: {
      GwElement acc = GwElement::zero(f);
      for (auto& c : s->children) acc = acc.add(eval(c, f));
      return acc;
    }
    case SpaceKind::TorusAction: {
      // strata with Gamma_j = T are the fixed locus; the others have
      // vanishing trace (their T/Gamma factor is a positive-dimensional
      // split torus)
      GwElement acc = GwElement::zero(f);
      for (auto& st : s->strata)
        if (st.gamma_is_full_torus) acc = acc.add(eval(st.slice, f));
      return acc;
    }
  }
  throw Error(ErrorCode::InvalidExpr, "malformed space expression");
}

}  // namespace

EulerResult euler_char(const SpacePtr& space, const FieldSpec& field) {
  if (!space) throw Error(ErrorCode::InvalidExpr, "null space expression");
  if (!field.has_sqrt_minus_one() && needs_sqrt_minus_one(space))
    throw Error(ErrorCode::SqrtMinusOneRequired,
                "this evaluation uses rules licensed only over fields containing sqrt(-1); field " +
                    field.name() + " has none");
  return EulerResult{eval(space, field), field.characteristic() > 0};
}

namespace {

SpacePtr strat_of_cells(const std::vector<int>& dims) {
  std::vector<SpacePtr> cells;
  cells.reserve(dims.size());
  for (int d : dims) cells.push_back(SpaceExpr::affine(d));
  return SpaceExpr::strat(std::move(cells));
}

}  // namespace

SpacePtr expand_cells(const SpacePtr& s) {
  switch (s->kind) {
    case SpaceKind::Proj: {
      std::vector<int> dims;
      for (int d = 0; d <= s->n; ++d) dims.push_back(d);
      return strat_of_cells(dims);
    }
    case SpaceKind::Flag: {
      WeylGroup w(*s->type);
      std::vector<int> dims;
      for (auto& e : w.elements()) dims.push_back(e.length);
      return strat_of_cells(dims);
    }
    case SpaceKind::PartialFlag: {
      WeylGroup w(*s->type);
      std::vector<int> dims;
      for (auto& e : w.min_coset_reps(s->parabolic)) dims.push_back(e.length);
      return strat_of_cells(dims);
    }
    case SpaceKind::GmodT: {
      // affine-space bundle over G/B with fiber R_u(B)
      WeylGroup w(*s->type);
      int fiber = s->type->positive_root_count();
      std::vector<int> dims;
      for (auto& e : w.elements()) dims.push_back(e.length + fiber);
      return strat_of_cells(dims);
    }
    case SpaceKind::Product:
      return SpaceExpr::product(expand_cells(s->children[0]), expand_cells(s->children[1]));
    case SpaceKind::Disjoint:
    case SpaceKind::Strat: {
      std::vector<SpacePtr> parts;
      for (auto& c : s->children) parts.push_back(expand_cells(c));
      return s->kind == SpaceKind::Strat ? SpaceExpr::strat(std::move(parts))
                                         : SpaceExpr::disjoint(std::move(parts));
    }
    case SpaceKind::TorusAction: {
      std::vector<TorusStratum> parts;
      for (auto& st : s->strata) parts.push_back({st.gamma_is_full_torus, expand_cells(st.slice)});
      return SpaceExpr::torus_action(std::move(parts));
    }
    default:
      return s;
  }
}

}  // namespace motrace
