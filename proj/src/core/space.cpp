#include "core/space.hpp"

#include <cctype>
#include <sstream>

#include "core/errors.hpp"

namespace motrace {

namespace {

SpacePtr make(SpaceExpr e) { return std::make_shared<const SpaceExpr>(std::move(e)); }

}  // namespace

SpacePtr SpaceExpr::point() { return make({SpaceKind::Point}); }

SpacePtr SpaceExpr::affine(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidExpr, "A^n requires n >= 0");
  SpaceExpr e{SpaceKind::Affine};
  e.n = n;
  return make(std::move(e));
}

SpacePtr SpaceExpr::gm() { return make({SpaceKind::Gm}); }

SpacePtr SpaceExpr::torus(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidExpr, "Gm^n requires n >= 1");
  SpaceExpr e{SpaceKind::Torus};
  e.n = n;
  return make(std::move(e));
}

SpacePtr SpaceExpr::proj(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidExpr, "P^n requires n >= 0");
  SpaceExpr e{SpaceKind::Proj};
  e.n = n;
  return make(std::move(e));
}

SpacePtr SpaceExpr::flag(CartanType t) {
  SpaceExpr e{SpaceKind::Flag};
  e.type = std::move(t);
  return make(std::move(e));
}

SpacePtr SpaceExpr::partial_flag(CartanType t, std::set<int> I) {
  for (int i : I)
    if (i < 1 || i > t.rank())
      throw Error(ErrorCode::InvalidExpr, "parabolic index " + std::to_string(i) +
                                              " out of range for " + t.render());
  SpaceExpr e{SpaceKind::PartialFlag};
  e.type = std::move(t);
  e.parabolic = std::move(I);
  return make(std::move(e));
}

SpacePtr SpaceExpr::gmod_t(CartanType t) {
  SpaceExpr e{SpaceKind::GmodT};
  e.type = std::move(t);
  return make(std::move(e));
}

SpacePtr SpaceExpr::gmod_nt(CartanType t) {
  SpaceExpr e{SpaceKind::GmodNT};
  e.type = std::move(t);
  return make(std::move(e));
}

SpacePtr SpaceExpr::product(SpacePtr a, SpacePtr b) {
  if (!a || !b) throw Error(ErrorCode::InvalidExpr, "null product operand");
  SpaceExpr e{SpaceKind::Product};
  e.children = {std::move(a), std::move(b)};
  return make(std::move(e));
}

SpacePtr SpaceExpr::disjoint(std::vector<SpacePtr> parts) {
  if (parts.empty()) throw Error(ErrorCode::InvalidExpr, "Disjoint requires at least one part");
  SpaceExpr e{SpaceKind::Disjoint};
  e.children = std::move(parts);
  return make(std::move(e));
}

SpacePtr SpaceExpr::strat(std::vector<SpacePtr> strata) {
  if (strata.empty()) throw Error(ErrorCode::InvalidExpr, "Strat requires at least one stratum");
  SpaceExpr e{SpaceKind::Strat};
  e.children = std::move(strata);
  return make(std::move(e));
}

SpacePtr SpaceExpr::torus_action(std::vector<TorusStratum> strata) {
  if (strata.empty()) throw Error(ErrorCode::InvalidExpr, "TorusAction requires at least one stratum");
  for (auto& s : strata)
    if (!s.slice) throw Error(ErrorCode::InvalidExpr, "null TorusAction slice");
  SpaceExpr e{SpaceKind::TorusAction};
  e.strata = std::move(strata);
  return make(std::move(e));
}

bool space_equal(const SpacePtr& a, const SpacePtr& b) {
  if (a->kind != b->kind || a->n != b->n) return false;
  if (a->type.has_value() != b->type.has_value()) return false;
  if (a->type && !(*a->type == *b->type)) return false;
  if (a->parabolic != b->parabolic) return false;
  if (a->children.size() != b->children.size()) return false;
  for (size_t i = 0; i < a->children.size(); ++i)
    if (!space_equal(a->children[i], b->children[i])) return false;
  if (a->strata.size() != b->strata.size()) return false;
  for (size_t i = 0; i < a->strata.size(); ++i) {
    if (a->strata[i].gamma_is_full_torus != b->strata[i].gamma_is_full_torus) return false;
    if (!space_equal(a->strata[i].slice, b->strata[i].slice)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

namespace {

std::string render_indexset(const std::set<int>& I) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int i : I) {
    if (!first) os << ",";
    os << i;
    first = false;
  }
  os << "}";
  return os.str();
}

void render_rec(const SpacePtr& s, std::ostringstream& os) {
  auto render_factor = [&os](const SpacePtr& c, bool parens_if_product) {
    if (parens_if_product && c->kind == SpaceKind::Product) {
      os << "(";
      render_rec(c, os);
      os << ")";
    } else {
      render_rec(c, os);
    }
  };
  switch (s->kind) {
    case SpaceKind::Point: os << "pt"; break;
    case SpaceKind::Affine: os << "A^" << s->n; break;
    case SpaceKind::Gm: os << "Gm"; break;
    case SpaceKind::Torus: os << "Gm^" << s->n; break;
    case SpaceKind::Proj: os << "P^" << s->n; break;
    case SpaceKind::Flag: os << "Flag(" << s->type->render() << ")"; break;
    case SpaceKind::PartialFlag:
      os << "PartialFlag(" << s->type->render() << ";" << render_indexset(s->parabolic) << ")";
      break;
    case SpaceKind::GmodT: os << "GmodT(" << s->type->render() << ")"; break;
    case SpaceKind::GmodNT: os << "GmodNT(" << s->type->render() << ")"; break;
    case SpaceKind::Product:
      // products associate to the left; a product on the right needs parens
      render_factor(s->children[0], false);
      os << " * ";
      render_factor(s->children[1], true);
      break;
    case SpaceKind::Disjoint:
    case SpaceKind::Strat: {
      os << (s->kind == SpaceKind::Strat ? "Strat[" : "Disjoint[");
      for (size_t i = 0; i < s->children.size(); ++i) {
        if (i) os << ", ";
        render_rec(s->children[i], os);
      }
      os << "]";
      break;
    }
    case SpaceKind::TorusAction:
      throw Error(ErrorCode::InvalidExpr, "TorusAction has no concrete syntax");
  }
}

}  // namespace

std::string render_space(const SpacePtr& s) {
  std::ostringstream os;
  render_rec(s, os);
  return os.str();
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

class SpaceParser {
 public:
  explicit SpaceParser(const std::string& s) : s_(s) {}

  SpacePtr parse() {
    SpacePtr r = parse_space();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && isspace((unsigned char)s_[pos_])) {
      if (s_[pos_] == '\n') {
        ++line_;
        line_start_ = pos_ + 1;
      }
      ++pos_;
    }
  }
  int col() const { return (int)(pos_ - line_start_) + 1; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, col(), what); }

  bool eat(const std::string& tok) {
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(char c, const std::string& what) {
    skip_ws();
    if (peek() != c) fail(what);
    ++pos_;
  }

  int parse_uint() {
    skip_ws();
    if (!isdigit((unsigned char)peek())) fail("expected a number");
    long long v = 0;
    while (isdigit((unsigned char)peek())) {
      v = v * 10 + (peek() - '0');
      if (v > 1'000'000) fail("dimension too large");
      ++pos_;
    }
    return (int)v;
  }

  CartanType parse_cartan() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != ')' && s_[pos_] != ';') ++pos_;
    std::string text = s_.substr(start, pos_ - start);
    // trim trailing spaces inside the parenthesis
    while (!text.empty() && isspace((unsigned char)text.back())) text.pop_back();
    try {
      return CartanType::parse(text);
    } catch (const ParseError& pe) {
      throw ParseError(line_, (int)(start - line_start_) + pe.col(), "invalid Cartan type: " + text);
    } catch (const Error& e) {
      throw ParseError(line_, (int)(start - line_start_) + 1, e.what());
    }
  }

  std::set<int> parse_indexset() {
    expect('{', "expected '{'");
    std::set<int> I;
    skip_ws();
    if (peek() == '}') {
      ++pos_;
      return I;
    }
    while (true) {
      int v = parse_uint();
      if (!I.insert(v).second) fail("duplicate parabolic index");
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() == '}') {
        ++pos_;
        return I;
      }
      fail("expected ',' or '}'");
    }
  }

  SpacePtr parse_space() {
    SpacePtr left = parse_primary();
    while (true) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        SpacePtr right = parse_primary();
        left = SpaceExpr::product(std::move(left), std::move(right));
      } else {
        return left;
      }
    }
  }

  SpacePtr parse_list(bool is_strat) {
    expect('[', "expected '['");
    std::vector<SpacePtr> items;
    items.push_back(parse_space());
    while (true) {
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        items.push_back(parse_space());
        continue;
      }
      if (peek() == ']') {
        ++pos_;
        break;
      }
      fail("expected ',' or ']'");
    }
    return is_strat ? SpaceExpr::strat(std::move(items)) : SpaceExpr::disjoint(std::move(items));
  }

  SpacePtr parse_primary() {
    skip_ws();
    if (peek() == '\0') fail("expected a space expression");
    if (peek() == '(') {
      ++pos_;
      SpacePtr inner = parse_space();
      expect(')', "expected ')'");
      return inner;
    }
    if (eat("Strat")) return parse_list(true);
    if (eat("Disjoint")) return parse_list(false);
    if (eat("pt")) return SpaceExpr::point();
    if (eat("A^")) return SpaceExpr::affine(parse_uint());
    if (eat("P^")) return SpaceExpr::proj(parse_uint());
    // GmodT / GmodNT before the bare Gm
    if (eat("GmodT(")) {
      CartanType t = parse_cartan();
      expect(')', "expected ')'");
      return SpaceExpr::gmod_t(std::move(t));
    }
    if (eat("GmodNT(")) {
      CartanType t = parse_cartan();
      expect(')', "expected ')'");
      return SpaceExpr::gmod_nt(std::move(t));
    }
    if (eat("Gm")) {
      if (peek() == '^') {
        ++pos_;
        int n = parse_uint();
        if (n < 1) fail("Gm^n requires n >= 1");
        return SpaceExpr::torus(n);
      }
      return SpaceExpr::gm();
    }
    if (eat("Flag(")) {
      CartanType t = parse_cartan();
      expect(')', "expected ')'");
      return SpaceExpr::flag(std::move(t));
    }
    if (eat("PartialFlag(")) {
      CartanType t = parse_cartan();
      expect(';', "expected ';' before the index set");
      skip_ws();
      std::set<int> I = parse_indexset();
      expect(')', "expected ')'");
      try {
        return SpaceExpr::partial_flag(std::move(t), std::move(I));
      } catch (const Error& e) {
        fail(e.what());
      }
    }
    fail("unrecognized space atom");
  }

  const std::string& s_;
  size_t pos_ = 0;
  int line_ = 1;
  size_t line_start_ = 0;
};

}  // namespace

SpacePtr parse_space(const std::string& text) { return SpaceParser(text).parse(); }

}  // namespace motrace
