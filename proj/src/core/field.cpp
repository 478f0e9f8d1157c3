#include "core/field.hpp"

#include "core/errors.hpp"

namespace motrace {

FieldSpec FieldSpec::finite(i64 q) {
  if (q < 3) throw Error(ErrorCode::InvalidArgument, "F" + std::to_string(q) + ": q must be an odd prime power >= 3");
  if (q % 2 == 0)
    throw Error(ErrorCode::InvalidArgument, "F" + std::to_string(q) + ": characteristic 2 is not supported");
  auto fac = factorize(q);
  if (fac.size() != 1)
    throw Error(ErrorCode::InvalidArgument, "F" + std::to_string(q) + ": q is not a prime power");
  i64 p = fac[0].first;
  int e = fac[0].second;
  return FieldSpec(FieldKind::Finite, q, p, e);
}

FieldSpec FieldSpec::parse(const std::string& name) {
  if (name == "Qbar") return quadratically_closed();
  if (name == "R") return real_closed();
  if (name == "Q") return rational();
  if (name.size() >= 2 && name[0] == 'F') {
    i64 q = 0;
    for (size_t i = 1; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9')
        throw Error(ErrorCode::InvalidArgument, "unknown field name: " + name);
      q = q * 10 + (name[i] - '0');
      if (q > kFactorCap) throw Error(ErrorCode::InputTooLarge, "field size too large: " + name);
    }
    return finite(q);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown field name: " + name + " (expected Qbar, R, Q, or F<q>)");
}

bool FieldSpec::has_sqrt_minus_one() const {
  switch (kind_) {
    case FieldKind::QuadraticallyClosed: return true;
    case FieldKind::RealClosed: return false;
    case FieldKind::Finite: return q_ % 4 == 1;
    case FieldKind::Rational: return false;
  }
  return false;
}

bool FieldSpec::is_square_in_finite(i64 n) const {
  // n is a unit of the prime field inside F_q. For even extension degree the
  // whole prime field lies in the index-2 subgroup of squares; for odd degree
  // squareness agrees with the Legendre symbol mod p.
  if (kind_ != FieldKind::Finite) throw Error(ErrorCode::InvalidArgument, "is_square_in_finite on non-finite field");
  if (mod_norm(n, char_) == 0) throw Error(ErrorCode::ZeroRepresentative, "zero is not a unit");
  if (ext_deg_ % 2 == 0) return true;
  return legendre(n, char_) == 1;
}

std::optional<i64> FieldSpec::canonical_nonsquare() const {
  if (kind_ != FieldKind::Finite) return std::nullopt;
  if (ext_deg_ % 2 == 0) return std::nullopt;
  for (i64 s = 2; s < char_; ++s)
    if (legendre(s, char_) == -1) return s;
  return std::nullopt;  // unreachable: every odd prime has a nonresidue below it
}

std::string FieldSpec::name() const {
  switch (kind_) {
    case FieldKind::QuadraticallyClosed: return "Qbar";
    case FieldKind::RealClosed: return "R";
    case FieldKind::Finite: return "F" + std::to_string(q_);
    case FieldKind::Rational: return "Q";
  }
  return "?";
}

}  // namespace motrace
