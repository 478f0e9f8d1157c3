#include "motrace/motrace.h"

#include <cstring>
#include <sstream>
#include <string>

#include "core/errors.hpp"
#include "core/euler.hpp"
#include "core/gw.hpp"
#include "core/smp.hpp"
#include "core/space.hpp"
#include "core/transfer.hpp"

using namespace motrace;

struct mtr_field {
  FieldSpec spec;
  std::string name;
};

struct mtr_gw {
  GwElement elem;
};

struct mtr_space {
  SpacePtr expr;
};

namespace {

thread_local std::string g_last_error;

mtr_status status_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError: return MTR_ERR_PARSE;
    case ErrorCode::FieldMismatch: return MTR_ERR_FIELD_MISMATCH;
    case ErrorCode::ZeroRepresentative: return MTR_ERR_ZERO_REPRESENTATIVE;
    case ErrorCode::InputTooLarge: return MTR_ERR_INPUT_TOO_LARGE;
    case ErrorCode::NotPrime: return MTR_ERR_NOT_PRIME;
    case ErrorCode::SqrtMinusOneRequired: return MTR_ERR_SQRT_MINUS_ONE_REQUIRED;
    case ErrorCode::InvalidExpr: return MTR_ERR_INVALID_EXPR;
    case ErrorCode::EnumerationCapExceeded: return MTR_ERR_ENUMERATION_CAP;
    case ErrorCode::DegreeCapExceeded: return MTR_ERR_DEGREE_CAP;
    case ErrorCode::CapExceeded: return MTR_ERR_CAP_EXCEEDED;
    case ErrorCode::DimensionMismatch: return MTR_ERR_DIMENSION_MISMATCH;
    case ErrorCode::IllTypedTerm: return MTR_ERR_ILL_TYPED_TERM;
    case ErrorCode::InvalidArgument: return MTR_ERR_INVALID_ARGUMENT;
  }
  return MTR_ERR_INTERNAL;
}

template <typename Fn>
mtr_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return MTR_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MTR_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::set<int> parse_parabolic(const char* text) {
  std::set<int> I;
  if (!text) return I;
  std::string s(text);
  // accept "1,3" or "{1,3}" or ""
  std::erase_if(s, [](char c) { return c == '{' || c == '}' || c == ' '; });
  if (s.empty()) return I;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::InvalidArgument, "invalid parabolic index '" + tok + "'");
    I.insert(std::stoi(tok));
  }
  return I;
}

}  // namespace

extern "C" {

const char* mtr_status_name(mtr_status st) {
  switch (st) {
    case MTR_OK: return "ok";
    case MTR_ERR_PARSE: return "parse_error";
    case MTR_ERR_FIELD_MISMATCH: return "field_mismatch";
    case MTR_ERR_ZERO_REPRESENTATIVE: return "zero_representative";
    case MTR_ERR_INPUT_TOO_LARGE: return "input_too_large";
    case MTR_ERR_NOT_PRIME: return "not_prime";
    case MTR_ERR_SQRT_MINUS_ONE_REQUIRED: return "sqrt_minus_one_required";
    case MTR_ERR_INVALID_EXPR: return "invalid_expr";
    case MTR_ERR_ENUMERATION_CAP: return "enumeration_cap_exceeded";
    case MTR_ERR_DEGREE_CAP: return "degree_cap_exceeded";
    case MTR_ERR_CAP_EXCEEDED: return "cap_exceeded";
    case MTR_ERR_DIMENSION_MISMATCH: return "dimension_mismatch";
    case MTR_ERR_ILL_TYPED_TERM: return "ill_typed_term";
    case MTR_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case MTR_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* mtr_last_error(void) { return g_last_error.c_str(); }

void mtr_string_free(char* s) { delete[] s; }

mtr_status mtr_field_create(const char* name, mtr_field** out) {
  return guarded([&] {
    if (!name || !out) throw Error(ErrorCode::InvalidArgument, "null argument");
    FieldSpec spec = FieldSpec::parse(name);
    *out = new mtr_field{spec, spec.name()};
  });
}

void mtr_field_free(mtr_field* f) { delete f; }

const char* mtr_field_name(const mtr_field* f) { return f ? f->name.c_str() : ""; }

int mtr_field_has_sqrt_minus_one(const mtr_field* f) {
  return f && f->spec.has_sqrt_minus_one() ? 1 : 0;
}

long long mtr_field_characteristic(const mtr_field* f) {
  return f ? f->spec.characteristic() : -1;
}

mtr_status mtr_gw_parse(const mtr_field* f, const char* text, mtr_gw** out) {
  return guarded([&] {
    if (!f || !text || !out) throw Error(ErrorCode::InvalidArgument, "null argument");
    *out = new mtr_gw{GwElement::parse(f->spec, text)};
  });
}

mtr_status mtr_gw_unit_form(const mtr_field* f, long long num, long long den, mtr_gw** out) {
  return guarded([&] {
    if (!f || !out) throw Error(ErrorCode::InvalidArgument, "null argument");
    *out = new mtr_gw{GwElement::unit_form(f->spec, {num, den})};
  });
}

mtr_status mtr_gw_render(const mtr_gw* x, char** out) {
  return guarded([&] {
    if (!x || !out) throw Error(ErrorCode::InvalidArgument, "null argument");
    *out = dup_string(x->elem.render());
  });
}

#define MTR_GW_BINOP(name, op)                                                      \
  mtr_status name(const mtr_gw* x, const mtr_gw* y, mtr_gw** out) {                 \
    return guarded([&] {                                                            \
      if (!x || !y || !out) throw Error(ErrorCode::InvalidArgument, "null argument"); \
      *out = new mtr_gw{x->elem.op(y->elem)};                                       \
    });                                                                             \
  }

MTR_GW_BINOP(mtr_gw_add, add)
MTR_GW_BINOP(mtr_gw_sub, sub)
MTR_GW_BINOP(mtr_gw_mul, mul)

#undef MTR_GW_BINOP

mtr_status mtr_gw_neg(const mtr_gw* x, mtr_gw** out) {
  return guarded([&] {
    if (!x || !out) throw Error(ErrorCode::InvalidArgument, "null argument");
    *out = new mtr_gw{x->elem.neg()};
  });
}

mtr_status mtr_gw_scale(long long n, const mtr_gw* x, mtr_gw** out) {
  return guarded([&] {
    if (!x || !out) throw Error(ErrorCode::InvalidArgument, "null argument");
    *out = new mtr_gw{x->elem.scale(n)};
  });
}

mtr_status mtr_gw_is_equal(const mtr_gw* x, const mtr_gw* y, int* out) {
  return guarded([&] {
    if (!x || !y || !out) throw Error(ErrorCode::InvalidArgument, "null argument");
    *out = x->elem.is_equal(y->elem) ? 1 : 0;
  });
}

mtr_status mtr_gw_invariants_json(const mtr_gw* x, char** out) {
  return guarded([&] {
    if (!x || !out) throw Error(ErrorCode::InvalidArgument, "null argument");
    GwInvariants inv = x->elem.invariants();
    std::ostringstream os;
    os << "{\"rank\":" << inv.rank << ",\"discriminant\":" << inv.discriminant;
    os << ",\"signature\":";
    if (inv.signature)
      os << *inv.signature;
    else
      os << "null";
    os << ",\"hasse\":";
    if (inv.hasse) {
      os << "{";
      bool first = true;
      for (auto& [p, v] : *inv.hasse) {
        if (!first) os << ",";
        os << "\"" << p << "\":" << v;
        first = false;
      }
      os << "}";
    } else {
      os << "null";
    }
    os << "}";
    *out = dup_string(os.str());
  });
}

void mtr_gw_free(mtr_gw* x) { delete x; }

mtr_status mtr_hilbert_symbol(long long a_num, long long a_den, long long b_num, long long b_den,
                              const char* place, int* out) {
  return guarded([&] {
    if (!place || !out) throw Error(ErrorCode::InvalidArgument, "null argument");
    Place v;
    std::string p(place);
    if (p == "real" || p == "oo") {
      v = Place::real_place();
    } else {
      if (p.empty() || p.find_first_not_of("0123456789") != std::string::npos)
        throw Error(ErrorCode::NotPrime, "'" + p + "' is neither a prime nor the real place");
      v = Place::prime(std::stoll(p));
    }
    *out = hilbert_symbol(a_num, a_den, b_num, b_den, v);
  });
}

mtr_status mtr_space_parse(const char* text, mtr_space** out) {
  return guarded([&] {
    if (!text || !out) throw Error(ErrorCode::InvalidArgument, "null argument");
    *out = new mtr_space{parse_space(text)};
  });
}

mtr_status mtr_space_render(const mtr_space* s, char** out) {
  return guarded([&] {
    if (!s || !out) throw Error(ErrorCode::InvalidArgument, "null argument");
    *out = dup_string(render_space(s->expr));
  });
}

mtr_status mtr_space_expand(const mtr_space* s, mtr_space** out) {
  return guarded([&] {
    if (!s || !out) throw Error(ErrorCode::InvalidArgument, "null argument");
    *out = new mtr_space{expand_cells(s->expr)};
  });
}

mtr_status mtr_euler_char(const mtr_space* s, const mtr_field* f, mtr_gw** out, int* p_inverted) {
  return guarded([&] {
    if (!s || !f || !out) throw Error(ErrorCode::InvalidArgument, "null argument");
    EulerResult r = euler_char(s->expr, f->spec);
    *out = new mtr_gw{r.value};
    if (p_inverted) *p_inverted = r.p_inverted ? 1 : 0;
  });
}

void mtr_space_free(mtr_space* s) { delete s; }

mtr_status mtr_weyl_order(const char* cartan, unsigned long long* out) {
  return guarded([&] {
    if (!cartan || !out) throw Error(ErrorCode::InvalidArgument, "null argument");
    *out = CartanType::parse(cartan).weyl_order();
  });
}

mtr_status mtr_weyl_length_spectrum(const char* cartan, char** out) {
  return guarded([&] {
    if (!cartan || !out) throw Error(ErrorCode::InvalidArgument, "null argument");
    WeylGroup w(CartanType::parse(cartan));
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto& [len, count] : w.length_spectrum()) {
      if (!first) os << ", ";
      os << len << ":" << count;
      first = false;
    }
    os << "}";
    *out = dup_string(os.str());
  });
}

mtr_status mtr_weyl_coset_reps(const char* cartan, const char* parabolic, char** out,
                               unsigned long long* count) {
  return guarded([&] {
    if (!cartan || !out) throw Error(ErrorCode::InvalidArgument, "null argument");
    WeylGroup w(CartanType::parse(cartan));
    auto reps = w.min_coset_reps(parse_parabolic(parabolic));
    std::ostringstream os;
    for (auto& r : reps) os << r.word << " : " << r.length << "\n";
    *out = dup_string(os.str());
    if (count) *count = (unsigned long long)reps.size();
  });
}

mtr_status mtr_dcoset_formula(const char* kind, const char* cartan, const char* parabolic,
                              char** out, unsigned long long* term_count) {
  return guarded([&] {
    if (!kind || !cartan || !out) throw Error(ErrorCode::InvalidArgument, "null argument");
    CartanType type = CartanType::parse(cartan);
    TransferFormula f = std::string(kind) == "torus"
                            ? torus_transfer_formula(type)
                            : std::string(kind) == "maxrank"
                                  ? maxrank_transfer_formula(type, parse_parabolic(parabolic))
                                  : throw Error(ErrorCode::InvalidArgument,
                                                "kind must be 'torus' or 'maxrank'");
    *out = dup_string(f.render());
    if (term_count) *term_count = (unsigned long long)f.terms.size();
  });
}

mtr_status mtr_invariants_check(const char* cartan, int degree, char** out_text, char** out_json) {
  return guarded([&] {
    if (!cartan) throw Error(ErrorCode::InvalidArgument, "null argument");
    ProjectorReport rep = averaging_projector_check(CartanType::parse(cartan), degree);
    if (out_text) *out_text = dup_string(rep.render_text());
    if (out_json) {
      std::ostringstream os;
      auto list = [&os](const std::vector<long long>& v) {
        os << "[";
        for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
        os << "]";
      };
      os << "{\"type\":\"" << rep.type.render() << "\",\"degree_cap\":" << rep.degree_cap
         << ",\"projector_idempotent\":" << (rep.projector_idempotent ? "true" : "false")
         << ",\"image_dims\":";
      list(rep.image_dims);
      os << ",\"molien_dims\":";
      list(rep.molien_dims);
      os << ",\"match\":" << (rep.match ? "true" : "false") << "}";
      *out_json = dup_string(os.str());
    }
  });
}

mtr_status mtr_gl_double_cosets(int i, int j, int r, int s, char** out) {
  return guarded([&] {
    if (!out) throw Error(ErrorCode::InvalidArgument, "null argument");
    auto cosets = smp::gl_double_cosets(i, j, r, s);
    std::ostringstream os;
    os << "[";
    for (size_t k = 0; k < cosets.size(); ++k)
      os << (k ? "," : "") << "(" << cosets[k].first << "," << cosets[k].second << ")";
    os << "]";
    *out = dup_string(os.str());
  });
}

mtr_status mtr_smp_verify(int n, char** out_certificate, int* triangular, int* diagonal) {
  return guarded([&] {
    auto cert = smp::verify_splitting(n);
    if (out_certificate) *out_certificate = dup_string(cert.render());
    if (triangular) *triangular = cert.triangular ? 1 : 0;
    if (diagonal) *diagonal = cert.diagonal_is_projection ? 1 : 0;
  });
}

}  // extern "C"
