#include "core/gw.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <vector>

#include "core/errors.hpp"

namespace motrace {

namespace {

constexpr i64 kInputCap = 1'000'000'000LL;  // unit_form representatives, per design

// Product of two squarefree integers, reduced to its squarefree part.
// d1*d2 = g^2 * (d1/g)(d2/g) with g = gcd, and (d1/g)(d2/g) is squarefree
// because d1, d2 are. No factorization happens here, so representatives may
// legitimately grow beyond the factoring cap; only the Hasse support
// computation needs to factor them.
i64 sqf_mul(i64 d1, i64 d2) {
  i64 g = gcd64(d1, d2);
  return checked_mul(d1 / g, d2 / g);
}

int sign_of(i64 v) { return v > 0 ? 1 : -1; }

}  // namespace

GwElement GwElement::zero(const FieldSpec& f) { return GwElement(f); }

GwElement GwElement::unit_form(const FieldSpec& f, RatNum a) {
  if (a.num == 0) throw Error(ErrorCode::ZeroRepresentative, "<0> does not represent a unit form");
  if (a.den == 0) throw Error(ErrorCode::ZeroRepresentative, "representative has zero denominator");
  if (abs64(a.num) > kInputCap || abs64(a.den) > kInputCap)
    throw Error(ErrorCode::InputTooLarge, "representative exceeds the 10^9 input cap");
  GwElement e(f);
  switch (f.kind()) {
    case FieldKind::QuadraticallyClosed:
      e.rank_ = 1;
      break;
    case FieldKind::RealClosed:
      if (sign_of(a.num) * sign_of(a.den) > 0)
        e.pos_ = 1;
      else
        e.neg_ = 1;
      break;
    case FieldKind::Finite: {
      i64 p = f.characteristic();
      i64 n = mod_norm(a.num, p);
      i64 d = mod_norm(a.den, p);
      if (n == 0)
        throw Error(ErrorCode::ZeroRepresentative, "representative is 0 in F" + std::to_string(f.q()));
      if (d == 0)
        throw Error(ErrorCode::ZeroRepresentative,
                    "representative denominator vanishes in F" + std::to_string(f.q()));
      // num/den and num*den lie in the same square class.
      if (f.is_square_in_finite(mulmod(n, d, p)))
        e.fa_ = 1;
      else
        e.fb_ = 1;
      break;
    }
    case FieldKind::Rational: {
      i64 d = sqf_mul(squarefree_part(a.num), squarefree_part(a.den));
      e.reps_[d] = 1;
      break;
    }
  }
  return e;
}

void GwElement::check_same_field(const GwElement& o) const {
  if (field_ != o.field_)
    throw Error(ErrorCode::FieldMismatch,
                "operands over different fields: " + field_.name() + " vs " + o.field_.name());
}

void GwElement::normalize() {
  if (field_.kind() == FieldKind::Finite) {
    // <s,s> = <1,1>: even multiples of <s> fold into <1>.
    i64 b = fb_;
    i64 bn = mod_norm(b, 2);
    fa_ += b - bn;
    fb_ = (int)bn;
  } else if (field_.kind() == FieldKind::Rational) {
    for (auto it = reps_.begin(); it != reps_.end();)
      it = it->second == 0 ? reps_.erase(it) : std::next(it);
  }
}

GwElement GwElement::add(const GwElement& o) const {
  check_same_field(o);
  GwElement r(*this);
  r.rank_ += o.rank_;
  r.pos_ += o.pos_;
  r.neg_ += o.neg_;
  r.fa_ += o.fa_;
  r.fb_ += o.fb_;
  for (auto& [d, m] : o.reps_) r.reps_[d] += m;
  r.normalize();
  return r;
}

GwElement GwElement::neg() const { return scale(-1); }

GwElement GwElement::scale(i64 n) const {
  GwElement r(*this);
  r.rank_ *= n;
  r.pos_ *= n;
  r.neg_ *= n;
  r.fa_ *= n;
  // fold the scaled <s> multiplicity back into normal form
  i64 b = (i64)r.fb_ * n;
  r.fa_ += b - mod_norm(b, 2);
  r.fb_ = (int)mod_norm(b, 2);
  for (auto& [d, m] : r.reps_) m *= n;
  r.normalize();
  return r;
}

GwElement GwElement::mul(const GwElement& o) const {
  check_same_field(o);
  GwElement r(field_);
  switch (field_.kind()) {
    case FieldKind::QuadraticallyClosed:
      r.rank_ = checked_mul(rank_, o.rank_);
      break;
    case FieldKind::RealClosed:
      // <-1><-1> = <1>
      r.pos_ = checked_mul(pos_, o.pos_) + checked_mul(neg_, o.neg_);
      r.neg_ = checked_mul(pos_, o.neg_) + checked_mul(neg_, o.pos_);
      break;
    case FieldKind::Finite: {
      // <s><s> = <1>
      r.fa_ = checked_mul(fa_, o.fa_) + (i64)fb_ * o.fb_;
      i64 b = checked_mul(fa_, (i64)o.fb_) + checked_mul((i64)fb_, o.fa_);
      r.fa_ += b - mod_norm(b, 2);
      r.fb_ = (int)mod_norm(b, 2);
      break;
    }
    case FieldKind::Rational:
      for (auto& [d1, m1] : reps_)
        for (auto& [d2, m2] : o.reps_) r.reps_[sqf_mul(d1, d2)] += checked_mul(m1, m2);
      break;
  }
  r.normalize();
  return r;
}

i64 GwElement::rank() const {
  switch (field_.kind()) {
    case FieldKind::QuadraticallyClosed: return rank_;
    case FieldKind::RealClosed: return pos_ + neg_;
    case FieldKind::Finite: return fa_ + fb_;
    case FieldKind::Rational: {
      i64 r = 0;
      for (auto& [d, m] : reps_) r += m;
      return r;
    }
  }
  return 0;
}

namespace {

// Hasse invariant of an honest diagonal form given as rep -> multiplicity
// (all multiplicities >= 0), with the product-over-pairs convention
// prod_{i<j} (a_i, a_j)_p.
int hasse_of_form(const std::map<i64, i64>& form, i64 p) {
  Place v = Place{false, p};
  i64 exponent = 0;
  for (auto it = form.begin(); it != form.end(); ++it) {
    auto [d, m] = *it;
    if (m >= 2 && hilbert_symbol(d, d, v) == -1) exponent += m * (m - 1) / 2;
    for (auto jt = std::next(it); jt != form.end(); ++jt) {
      auto [e, n] = *jt;
      if (hilbert_symbol(d, e, v) == -1) exponent += m * n;
    }
  }
  return (exponent & 1) ? -1 : 1;
}

i64 disc_of_terms(const std::map<i64, i64>& terms) {
  i64 d = 1;
  for (auto& [rep, m] : terms)
    if (m & 1) d = sqf_mul(d, rep);
  return d;
}

i64 signature_of_terms(const std::map<i64, i64>& terms) {
  i64 s = 0;
  for (auto& [rep, m] : terms) s += rep > 0 ? m : -m;
  return s;
}

void split_virtual(const std::map<i64, i64>& terms, std::map<i64, i64>* pos, std::map<i64, i64>* neg) {
  for (auto& [d, m] : terms) {
    if (m > 0) (*pos)[d] = m;
    if (m < 0) (*neg)[d] = -m;
  }
}

std::set<i64> prime_support(const std::map<i64, i64>& terms) {
  std::set<i64> ps{2};
  for (auto& [d, m] : terms)
    for (auto [p, e] : factorize(d)) ps.insert(p);
  return ps;
}

}  // namespace

GwInvariants GwElement::invariants() const {
  GwInvariants inv;
  inv.rank = rank();
  switch (field_.kind()) {
    case FieldKind::QuadraticallyClosed:
      inv.discriminant = 1;
      break;
    case FieldKind::RealClosed:
      inv.discriminant = (neg_ & 1) ? -1 : 1;
      inv.signature = pos_ - neg_;
      break;
    case FieldKind::Finite:
      inv.discriminant = fb_ ? field_.canonical_nonsquare().value() : 1;
      break;
    case FieldKind::Rational: {
      inv.discriminant = disc_of_terms(reps_);
      inv.signature = signature_of_terms(reps_);
      // The Hasse invariant extends from honest forms to virtual classes by
      // the pairing rule c(u+w) = c(u) c(w) (disc u, disc w); with x = P - N
      // canonical this gives c(x) = c(P) c(N) (disc x, disc N).
      std::map<i64, i64> pos, negpart;
      split_virtual(reps_, &pos, &negpart);
      std::map<i64, int> hasse;
      for (i64 p : prime_support(reps_)) {
        int c = hasse_of_form(pos, p) * hasse_of_form(negpart, p);
        i64 dn = disc_of_terms(negpart);
        c *= hilbert_symbol(inv.discriminant, dn, Place{false, p});
        hasse[p] = c;
      }
      inv.hasse = std::move(hasse);
      break;
    }
  }
  return inv;
}

bool GwElement::is_equal(const GwElement& o) const {
  check_same_field(o);
  switch (field_.kind()) {
    case FieldKind::QuadraticallyClosed: return rank_ == o.rank_;
    case FieldKind::RealClosed: return pos_ == o.pos_ && neg_ == o.neg_;
    case FieldKind::Finite: return fa_ == o.fa_ && fb_ == o.fb_;
    case FieldKind::Rational: break;
  }
  // Virtual equality over Q: move negative multiplicities across the
  // equation, then compare the two honest forms by their complete set of
  // invariants (Hasse-Minkowski).
  std::map<i64, i64> diff = reps_;
  for (auto& [d, m] : o.reps_) diff[d] -= m;
  std::map<i64, i64> pos, negpart;
  split_virtual(diff, &pos, &negpart);
  if (disc_of_terms(pos) != disc_of_terms(negpart)) return false;
  i64 rp = 0, rn = 0;
  for (auto& [d, m] : pos) rp += m;
  for (auto& [d, m] : negpart) rn += m;
  if (rp != rn) return false;
  if (signature_of_terms(pos) != signature_of_terms(negpart)) return false;
  std::map<i64, i64> all = pos;
  for (auto& [d, m] : negpart) all[d] += m;
  for (i64 p : prime_support(all))
    if (hasse_of_form(pos, p) != hasse_of_form(negpart, p)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Text grammar:  element := term (("+" | "-") term)*
//                term    := [n "*"] "<" a ">"
// Zero renders as "0"; a leading "-" is accepted so virtual classes with a
// negative first multiplicity stay expressible.
// ---------------------------------------------------------------------------

std::string GwElement::render() const {
  // Collect (rep, mult) in canonical order: |rep| ascending, positive first.
  std::vector<std::pair<i64, i64>> terms;
  switch (field_.kind()) {
    case FieldKind::QuadraticallyClosed:
      if (rank_) terms.push_back({1, rank_});
      break;
    case FieldKind::RealClosed:
      if (pos_) terms.push_back({1, pos_});
      if (neg_) terms.push_back({-1, neg_});
      break;
    case FieldKind::Finite:
      if (fa_) terms.push_back({1, fa_});
      if (fb_) terms.push_back({field_.canonical_nonsquare().value(), fb_});
      break;
    case FieldKind::Rational:
      for (auto& [d, m] : reps_) terms.push_back({d, m});
      std::sort(terms.begin(), terms.end(), [](auto& a, auto& b) {
        if (abs64(a.first) != abs64(b.first)) return abs64(a.first) < abs64(b.first);
        return a.first > b.first;
      });
      break;
  }
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [d, m] : terms) {
    if (first)
      os << (m < 0 ? "-" : "");
    else
      os << (m < 0 ? " - " : " + ");
    i64 am = abs64(m);
    if (am != 1) os << am << "*";
    os << "<" << d << ">";
    first = false;
  }
  return os.str();
}

namespace {

class GwParser {
 public:
  GwParser(const FieldSpec& f, const std::string& s) : field_(f), s_(s) {}

  GwElement parse() {
    skip_ws();
    if (peek() == '0') {
      ++pos_;
      skip_ws();
      if (pos_ != s_.size()) fail("unexpected input after 0");
      return GwElement::zero(field_);
    }
    GwElement acc = GwElement::zero(field_);
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    acc = acc.add(parse_term().scale(sign));
    skip_ws();
    while (pos_ < s_.size()) {
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      acc = acc.add(parse_term().scale(c == '-' ? -1 : 1));
      skip_ws();
    }
    return acc;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(1, (int)pos_ + 1, what); }

  i64 parse_uint() {
    if (!isdigit((unsigned char)peek())) fail("expected a digit");
    i64 v = 0;
    while (isdigit((unsigned char)peek())) {
      v = v * 10 + (peek() - '0');
      if (v > kFactorCap) fail("number too large");
      ++pos_;
    }
    return v;
  }

  GwElement parse_term() {
    skip_ws();
    i64 mult = 1;
    if (isdigit((unsigned char)peek())) {
      mult = parse_uint();
      if (mult == 0) fail("multiplicity must be positive");
      skip_ws();
      if (peek() != '*') fail("expected '*' after multiplicity");
      ++pos_;
      skip_ws();
    }
    if (peek() != '<') fail("expected '<'");
    ++pos_;
    skip_ws();
    i64 nsign = 1;
    if (peek() == '-') {
      nsign = -1;
      ++pos_;
    }
    size_t numpos = pos_;
    i64 num = nsign * parse_uint();
    if (num == 0) throw ParseError(1, (int)numpos + 1, "representative must be nonzero");
    i64 den = 1;
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      size_t dpos = pos_;
      den = parse_uint();
      if (den == 0) throw ParseError(1, (int)dpos + 1, "denominator must be nonzero");
    }
    skip_ws();
    if (peek() != '>') fail("expected '>'");
    ++pos_;
    return GwElement::unit_form(field_, {num, den}).scale(mult);
  }

  FieldSpec field_;
  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

GwElement GwElement::parse(const FieldSpec& f, const std::string& text) {
  return GwParser(f, text).parse();
}

}  // namespace motrace
