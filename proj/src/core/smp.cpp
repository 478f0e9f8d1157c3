#include "core/smp.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "core/errors.hpp"

namespace motrace::smp {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::IllTypedTerm, what);
}

void require_param(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

Object ob(std::initializer_list<ObFactor> fs) {
  Object o;
  for (auto& f : fs)
    if (f.index > 0) o.push_back(f);  // BGL_0 and BGL_0/BGL_{-1} are S^0
  return o;
}

ObFactor bgl(int n) { return ObFactor{false, n}; }
ObFactor bar(int n) { return ObFactor{true, n}; }

}  // namespace

std::string render_object(const Object& o) {
  if (o.empty()) return "S0";
  std::ostringstream os;
  for (size_t i = 0; i < o.size(); ++i) {
    if (i) os << "^";
    if (o[i].bar)
      os << "BGL(" << o[i].index << ")/BGL(" << o[i].index - 1 << ")";
    else
      os << "BGL(" << o[i].index << ")";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Generator construction and normalization
// ---------------------------------------------------------------------------

Gen gen_Id(ObFactor f) {
  Gen g;
  g.kind = GenKind::Id;
  if (f.index > 0) {
    g.src = {f};
    g.dst = {f};
  }
  return g;
}

Gen gen_M(int r, int s) {
  require_param(r >= 0 && s >= 0, "M(r,s) requires r,s >= 0");
  if (r == 0 && s == 0) return gen_Id(bgl(0));
  if (r == 0) return gen_Id(bgl(s));
  if (s == 0) return gen_Id(bgl(r));
  Gen g;
  g.kind = GenKind::M;
  g.a = r;
  g.b = s;
  g.src = ob({bgl(r), bgl(s)});
  g.dst = ob({bgl(r + s)});
  return g;
}

Gen gen_Tr(int i, int j) {
  require_param(i >= 0 && j >= 0, "Tr(i,j) requires i,j >= 0");
  // tr along an identity projection is the identity
  if (i == 0 || j == 0) return gen_Id(bgl(i + j));
  Gen g;
  g.kind = GenKind::Tr;
  g.a = i;
  g.b = j;
  g.src = ob({bgl(i + j)});
  g.dst = ob({bgl(i), bgl(j)});
  return g;
}

Gen gen_Eps(int i) {
  require_param(i >= 0, "Eps(i) requires i >= 0");
  if (i == 0) return gen_Id(bgl(0));
  Gen g;
  g.kind = GenKind::Eps;
  g.a = i;
  g.src = ob({bgl(i)});
  return g;
}

Gen gen_Proj(int j) {
  require_param(j >= 0, "Proj(j) requires j >= 0");
  if (j == 0) return gen_Id(bgl(0));
  Gen g;
  g.kind = GenKind::Proj;
  g.a = j;
  g.src = ob({bgl(j)});
  g.dst = ob({bar(j)});
  return g;
}

Gen gen_F(int i, int j) {
  require_param(i >= 0 && j >= 0, "F(i,j) requires i,j >= 0");
  if (j == 0) return gen_Eps(i);  // f_{i,0} is the augmentation
  if (i == 0) return gen_Proj(j); // f_{0,j} is the projection
  Gen g;
  g.kind = GenKind::F;
  g.a = i;
  g.b = j;
  g.src = ob({bgl(i + j)});
  g.dst = ob({bar(j)});
  return g;
}

Gen gen_G(int j, int n) {
  require_param(0 <= j && j <= n, "G(j,n) requires 0 <= j <= n");
  if (j == n) return gen_Id(bgl(n));
  Gen g;
  g.kind = GenKind::G;
  g.a = j;
  g.b = n;
  g.src = ob({bgl(j)});
  g.dst = ob({bgl(n)});
  return g;
}

Gen gen_Pi(int i, int j) {
  require_param(i >= 0 && j >= 0, "Pi(i,j) requires i,j >= 0");
  if (i == 0) return gen_Proj(j);
  if (j == 0) return gen_Eps(i);
  Gen g;
  g.kind = GenKind::Pi;
  g.a = i;
  g.b = j;
  g.src = ob({bgl(i), bgl(j)});
  g.dst = ob({bar(j)});
  return g;
}

Gen gen_Mbar(int u, int v) {
  require_param(u >= 0 && v >= 0, "Mbar(u,v) requires u,v >= 0");
  if (u == 0 && v == 0) return gen_Id(bar(0));
  if (u == 0) return gen_Id(bar(v));
  if (v == 0) return gen_Id(bar(u));
  Gen g;
  g.kind = GenKind::Mbar;
  g.a = u;
  g.b = v;
  g.src = ob({bar(u), bar(v)});
  g.dst = ob({bar(u + v)});
  return g;
}

Gen gen_C(int a, int b, int r, int s) {
  require_param(a >= 0 && b >= 0 && a <= r && b <= s, "C(a,b) requires 0 <= a <= r, 0 <= b <= s");
  // trivial switches degenerate to multiplications
  if (a == r && b == s) return gen_M(r, s);
  if (a == 0 && b == 0) return gen_M(r, s);
  Gen g;
  g.kind = GenKind::C;
  g.a = a;
  g.b = b;
  g.r = r;
  g.s = s;
  g.src = ob({bgl(a), bgl(r - a), bgl(b), bgl(s - b)});
  g.dst = ob({bgl(a + b), bgl(r - a + s - b)});
  return g;
}

Gen gen_Unit(int r) {
  require_param(r >= 0, "Unit(r) requires r >= 0");
  if (r == 0) return gen_Id(bgl(0));
  Gen g;
  g.kind = GenKind::Unit;
  g.a = r;
  g.dst = ob({bgl(r)});
  return g;
}

std::string Gen::render() const {
  std::ostringstream os;
  switch (kind) {
    case GenKind::Id: return "id";
    case GenKind::M: os << "M(" << a << "," << b << ")"; break;
    case GenKind::Tr: os << "Tr(" << a << "," << b << ")"; break;
    case GenKind::F: os << "F(" << a << "," << b << ")"; break;
    case GenKind::G: os << "G(" << a << "," << b << ")"; break;
    case GenKind::Pi: os << "Pi(" << a << "," << b << ")"; break;
    case GenKind::Eps: os << "Eps(" << a << ")"; break;
    case GenKind::Proj: os << "Proj(" << a << ")"; break;
    case GenKind::Mbar: os << "Mbar(" << a << "," << b << ")"; break;
    case GenKind::C: os << "C(" << a << "," << b << ";" << r << "," << s << ")"; break;
    case GenKind::Unit: os << "Unit(" << a << ")"; break;
  }
  return os.str();
}

std::string Coeff::render() const {
  std::ostringstream os;
  if (integer != 1) os << integer << "*";
  for (auto& [k, e] : symbols) {
    os << "n[" << k.a << "," << k.b << ";" << k.r << "," << k.s << "]";
    if (e > 1) os << "^" << e;
    os << "*";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Composites
// ---------------------------------------------------------------------------

namespace {

Object layer_src(const Layer& l) {
  Object o;
  for (auto& g : l) o.insert(o.end(), g.src.begin(), g.src.end());
  return o;
}

Object layer_dst(const Layer& l) {
  Object o;
  for (auto& g : l) o.insert(o.end(), g.dst.begin(), g.dst.end());
  return o;
}

// Objects between layers; objects[0] = source, objects[k+1] = after layer k.
std::vector<Object> object_chain(const Composite& c) {
  std::vector<Object> objs{c.source};
  for (size_t k = 0; k < c.layers.size(); ++k) {
    if (layer_src(c.layers[k]) != objs.back())
      throw Error(ErrorCode::IllTypedTerm,
                  "layer " + std::to_string(k) + " expects " + render_object(layer_src(c.layers[k])) +
                      " but receives " + render_object(objs.back()));
    objs.push_back(layer_dst(c.layers[k]));
  }
  return objs;
}

// Offset of each gen's src (and dst) range within the layer's total objects.
std::vector<int> src_offsets(const Layer& l) {
  std::vector<int> off;
  int acc = 0;
  for (auto& g : l) {
    off.push_back(acc);
    acc += (int)g.src.size();
  }
  return off;
}

std::vector<int> dst_offsets(const Layer& l) {
  std::vector<int> off;
  int acc = 0;
  for (auto& g : l) {
    off.push_back(acc);
    acc += (int)g.dst.size();
  }
  return off;
}

// Finds the single gen of `l` whose dst is exactly the one factor at
// position `pos`; returns -1 if that factor is produced by a wider gen.
int producer_of(const Layer& l, int pos) {
  auto off = dst_offsets(l);
  for (size_t k = 0; k < l.size(); ++k) {
    int lo = off[k], hi = lo + (int)l[k].dst.size();
    if (pos >= lo && pos < hi) return (int)l[k].dst.size() == 1 ? (int)k : -1;
  }
  return -1;
}

void replace_gen(Layer& l, int pos, std::vector<Gen> with) {
  // drop footprint-free identities
  std::vector<Gen> cleaned;
  for (auto& g : with)
    if (!(g.is_identity() && g.src.empty())) cleaned.push_back(std::move(g));
  l.erase(l.begin() + pos);
  l.insert(l.begin() + pos, cleaned.begin(), cleaned.end());
}

bool all_id(const Layer& l) {
  for (auto& g : l)
    if (!g.is_identity()) return false;
  return true;
}

// Structural canonicalization: pack every gen as early as it can go, cancel
// Eps . Unit pairs, and drop identity layers. Deterministic.
void canonicalize_composite(Composite& c) {
  bool changed = true;
  while (changed) {
    changed = false;
    // drop pure-identity layers
    for (size_t k = 0; k < c.layers.size();) {
      if (all_id(c.layers[k]))
        c.layers.erase(c.layers.begin() + k), changed = true;
      else
        ++k;
    }
    // Eps(a) directly fed by Unit(a): the composite is the identity of S0
    for (size_t k = 1; k < c.layers.size() && !changed; ++k) {
      Layer& up = c.layers[k];
      Layer& down = c.layers[k - 1];
      auto soff = src_offsets(up);
      for (size_t t = 0; t < up.size() && !changed; ++t) {
        if (up[t].kind != GenKind::Eps) continue;
        int p = producer_of(down, soff[t]);
        if (p < 0 || down[p].kind != GenKind::Unit || down[p].a != up[t].a) continue;
        replace_gen(up, (int)t, {});
        replace_gen(down, p, {});
        changed = true;
      }
    }
    if (changed) continue;
    // pack: move a gen down through identity slots
    for (size_t k = 1; k < c.layers.size() && !changed; ++k) {
      Layer& up = c.layers[k];
      Layer& down = c.layers[k - 1];
      auto soff = src_offsets(up);
      for (size_t t = 0; t < up.size() && !changed; ++t) {
        const Gen& g = up[t];
        if (g.is_identity() || g.src.empty()) continue;
        int lo = soff[t], hi = lo + (int)g.src.size();
        // locate the producers of [lo, hi): all must be identities
        auto doff = dst_offsets(down);
        int first = -1, last = -1;
        bool movable = true;
        for (size_t p = 0; p < down.size(); ++p) {
          int plo = doff[p], phi = plo + (int)down[p].dst.size();
          if (phi <= lo || plo >= hi) continue;
          if (!down[p].is_identity()) {
            movable = false;
            break;
          }
          if (first < 0) first = (int)p;
          last = (int)p;
        }
        if (!movable || first < 0) continue;
        Gen moved = g;
        // replace the identity run by the gen itself
        down.erase(down.begin() + first, down.begin() + last + 1);
        down.insert(down.begin() + first, moved);
        // and leave identities for its outputs upstairs
        std::vector<Gen> ids;
        for (auto& f : moved.dst) ids.push_back(gen_Id(f));
        replace_gen(up, (int)t, ids);
        changed = true;
      }
    }
  }
}

}  // namespace

Object Composite::target() const { return layers.empty() ? source : layer_dst(layers.back()); }

Composite make_composite(Object source, std::vector<Layer> layers) {
  Composite c{std::move(source), std::move(layers)};
  object_chain(c);  // validates
  canonicalize_composite(c);
  object_chain(c);
  return c;
}

StableTerm make_term(Composite c) {
  StableTerm t;
  t.source = c.source;
  t.target = c.target();
  t.terms.push_back({Coeff{}, std::move(c)});
  return t;
}

// ---------------------------------------------------------------------------
// Rendering and canonical order
// ---------------------------------------------------------------------------

namespace {

std::string render_composite(const Composite& c) {
  if (c.layers.empty()) return "id";
  std::ostringstream os;
  for (size_t k = c.layers.size(); k-- > 0;) {
    bool outer = k + 1 == c.layers.size();
    if (!outer) os << " . ";
    const Layer& l = c.layers[k];
    for (size_t t = 0; t < l.size(); ++t) {
      if (t) os << " ^ ";
      os << l[t].render();
    }
  }
  return os.str();
}

std::string render_symbols(const Coeff& c) {
  std::ostringstream os;
  for (auto& [k, e] : c.symbols)
    os << "n[" << k.a << "," << k.b << ";" << k.r << "," << k.s << "]^" << e << ";";
  return os.str();
}

void canonicalize_sum(StableTerm& t) {
  std::sort(t.terms.begin(), t.terms.end(), [](const Term& x, const Term& y) {
    std::string cx = render_composite(x.comp), cy = render_composite(y.comp);
    if (cx != cy) return cx < cy;
    return render_symbols(x.coeff) < render_symbols(y.coeff);
  });
  std::vector<Term> merged;
  for (auto& term : t.terms) {
    if (!merged.empty() && render_composite(merged.back().comp) == render_composite(term.comp) &&
        merged.back().coeff.symbols == term.coeff.symbols) {
      merged.back().coeff.integer += term.coeff.integer;
    } else {
      merged.push_back(term);
    }
  }
  t.terms = std::move(merged);
}

}  // namespace

std::string render_stable(const StableTerm& t) {
  if (t.is_zero()) return "Zero";
  std::ostringstream os;
  for (size_t i = 0; i < t.terms.size(); ++i) {
    if (i) os << " + ";
    os << t.terms[i].coeff.render() << render_composite(t.terms[i].comp);
  }
  return os.str();
}

bool stable_equal(const StableTerm& x, const StableTerm& y) {
  return x.source == y.source && x.target == y.target && render_stable(x) == render_stable(y);
}

// ---------------------------------------------------------------------------
// Double cosets
// ---------------------------------------------------------------------------

std::vector<std::pair<int, int>> gl_double_cosets(int i, int j, int r, int s) {
  if (i < 0 || j < 0 || r < 0 || s < 0)
    throw Error(ErrorCode::DimensionMismatch, "block sizes must be nonnegative");
  if (i + j != r + s)
    throw Error(ErrorCode::DimensionMismatch,
                "i+j = " + std::to_string(i + j) + " differs from r+s = " + std::to_string(r + s));
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a <= r; ++a) {
    int b = i - a;
    if (b < 0 || b > s) continue;
    out.emplace_back(a, b);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rewriting
// ---------------------------------------------------------------------------

namespace {

enum class Rule { ExpandG, TrM, FM, EpsM, ProjM, UnitKill };

struct Redex {
  size_t term;
  Rule rule;
  size_t layer;  // layer of the consumer (or of G for ExpandG)
  size_t gpos;   // consumer position (or G position)
  size_t lower;  // producer position in layer-1 (unused for ExpandG)
};

std::vector<Redex> find_redexes(const StableTerm& t) {
  std::vector<Redex> out;
  for (size_t ti = 0; ti < t.terms.size(); ++ti) {
    const Composite& c = t.terms[ti].comp;
    for (size_t k = 0; k < c.layers.size(); ++k) {
      const Layer& l = c.layers[k];
      auto soff = src_offsets(l);
      for (size_t g = 0; g < l.size(); ++g) {
        if (l[g].kind == GenKind::G) {
          out.push_back({ti, Rule::ExpandG, k, g, 0});
          continue;
        }
        if (k == 0) continue;
        GenKind kk = l[g].kind;
        bool consumer =
            kk == GenKind::Tr || kk == GenKind::F || kk == GenKind::Eps || kk == GenKind::Proj;
        if (!consumer || l[g].src.size() != 1) continue;
        int p = producer_of(c.layers[k - 1], soff[g]);
        if (p < 0) continue;
        const Gen& prod = c.layers[k - 1][(size_t)p];
        if (prod.kind == GenKind::M) {
          Rule r = kk == GenKind::Tr  ? Rule::TrM
                   : kk == GenKind::F ? Rule::FM
                   : kk == GenKind::Eps ? Rule::EpsM
                                        : Rule::ProjM;
          out.push_back({ti, r, k, g, (size_t)p});
        } else if (prod.kind == GenKind::Unit &&
                   (kk == GenKind::F || kk == GenKind::Proj)) {
          // S^0 -> BGL -> BGL/BGL_{-1 lower} hits the basepoint
          out.push_back({ti, Rule::UnitKill, k, g, (size_t)p});
        }
      }
    }
  }
  return out;
}

// The double coset containing the identity: block pattern (min(r,i), i-min(r,i)).
bool is_aligned_coset(int a, int b, int i, int r) {
  int am = std::min(r, i);
  return a == am && b == i - am;
}

std::vector<Term> apply_redex(const Term& term, const Redex& rx) {
  const Composite& c = term.comp;
  std::vector<Term> out;

  if (rx.rule == Rule::UnitKill) return out;  // the whole summand is zero

  if (rx.rule == Rule::ExpandG) {
    const Gen& g = c.layers[rx.layer][rx.gpos];
    int j = g.a, n = g.b;
    // g_j = m_{n-j,j} . (unit ^ id)
    Composite next = c;
    Layer& l = next.layers[rx.layer];
    replace_gen(l, (int)rx.gpos, {gen_Unit(n - j), gen_Id(bgl(j))});
    // the Unit lands at rx.gpos; place M over its output range in a new layer
    int lo = dst_offsets(l)[rx.gpos];
    Object after = layer_dst(l);
    Layer mul;
    for (int q = 0; q < (int)after.size();) {
      if (q == lo) {
        Gen m = gen_M(n - j, j);
        int consumed = (int)m.src.size();
        mul.push_back(std::move(m));
        q += consumed;
      } else {
        mul.push_back(gen_Id(after[q]));
        ++q;
      }
    }
    next.layers.insert(next.layers.begin() + rx.layer + 1, std::move(mul));
    out.push_back({term.coeff, make_composite(next.source, next.layers)});
    return out;
  }

  // the remaining rules rewrite a producer M(r,s) under a consumer
  const Gen& consumer = c.layers[rx.layer][rx.gpos];
  const Gen& producer = c.layers[rx.layer - 1][rx.lower];
  int r = producer.a, s = producer.b;

  auto emit = [&](Coeff coeff, std::vector<Gen> lower_rep, std::vector<Gen> upper_rep) {
    Composite next = c;
    replace_gen(next.layers[rx.layer], (int)rx.gpos, std::move(upper_rep));
    replace_gen(next.layers[rx.layer - 1], (int)rx.lower, std::move(lower_rep));
    out.push_back({std::move(coeff), make_composite(next.source, next.layers)});
  };

  if (rx.rule == Rule::EpsM) {
    // eps . m = eps ^ eps
    emit(term.coeff, {gen_Eps(r), gen_Eps(s)}, {});
    return out;
  }
  if (rx.rule == Rule::ProjM) {
    // proj . m = mbar . (proj ^ proj)
    emit(term.coeff, {gen_Proj(r), gen_Proj(s)}, {gen_Mbar(r, s)});
    return out;
  }

  int i = consumer.a, j = consumer.b;
  for (auto [a, b] : gl_double_cosets(i, j, r, s)) {
    Coeff coeff = term.coeff;
    if (!is_aligned_coset(a, b, i, r)) ++coeff.symbols[SymKey{a, b, r, s}];
    if (rx.rule == Rule::TrM)
      emit(std::move(coeff), {gen_Tr(a, r - a), gen_Tr(b, s - b)}, {gen_C(a, b, r, s)});
    else  // FM
      emit(std::move(coeff), {gen_F(a, r - a), gen_F(b, s - b)}, {gen_Mbar(r - a, s - b)});
  }
  return out;
}

StableTerm normalize(const StableTerm& input, std::mt19937_64* rng) {
  StableTerm t = input;
  constexpr int kMaxSteps = 200000;  // every rule strictly shrinks a multiset
                                     // of generator ranks; this is a bug guard
  for (int step = 0;; ++step) {
    if (step > kMaxSteps) throw Error(ErrorCode::InvalidArgument, "internal: rewrite did not terminate");
    auto redexes = find_redexes(t);
    if (redexes.empty()) break;
    const Redex& rx = rng ? redexes[(*rng)() % redexes.size()] : redexes.front();
    std::vector<Term> replaced = apply_redex(t.terms[rx.term], rx);
    for (auto& nt : replaced) {
      if (nt.comp.source != t.source || nt.comp.target() != t.target)
        throw Error(ErrorCode::IllTypedTerm, "internal: rewrite changed domain/codomain labels");
    }
    t.terms.erase(t.terms.begin() + rx.term);
    t.terms.insert(t.terms.end(), replaced.begin(), replaced.end());
  }
  canonicalize_sum(t);
  return t;
}

}  // namespace

StableTerm expand(const StableTerm& t) { return normalize(t, nullptr); }

StableTerm expand_seeded(const StableTerm& t, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return normalize(t, &rng);
}

// ---------------------------------------------------------------------------
// Splitting certificate
// ---------------------------------------------------------------------------

namespace {

bool entry_is_projection(const StableTerm& t, int j) {
  if (t.terms.size() != 1) return false;
  const Term& term = t.terms[0];
  if (term.coeff.integer != 1 || !term.coeff.symbols.empty()) return false;
  if (j == 0) return term.comp.layers.empty();  // Proj(0) is the identity of S0
  return term.comp.layers.size() == 1 && term.comp.layers[0].size() == 1 &&
         term.comp.layers[0][0] == gen_Proj(j);
}

}  // namespace

SplitCertificate verify_splitting(int n) {
  if (n < 0 || n > 12)
    throw Error(ErrorCode::CapExceeded, "verify_splitting supports 0 <= n <= 12");
  SplitCertificate cert;
  cert.n = n;
  cert.triangular = true;
  cert.diagonal_is_projection = true;
  cert.entries.resize(n + 1);
  for (int j = 0; j <= n; ++j) {
    for (int jp = 0; jp <= n; ++jp) {
      Gen g = gen_G(jp, n);
      Gen f = gen_F(n - j, j);
      Composite c = make_composite(g.src, {{g}, {f}});
      StableTerm e = expand(make_term(std::move(c)));
      if (j > jp && !e.is_zero()) cert.triangular = false;
      if (j == jp && !entry_is_projection(e, j)) cert.diagonal_is_projection = false;
      cert.entries[j].push_back(std::move(e));
    }
  }
  return cert;
}

std::string SplitCertificate::render() const {
  std::ostringstream os;
  for (int j = 0; j <= n; ++j)
    for (int jp = 0; jp <= n; ++jp)
      os << "f(" << n - j << "," << j << ") . g(" << jp << "," << n
         << ") => " << render_stable(entries[j][jp]) << "\n";
  os << "TRIANGULAR: " << (triangular ? "yes" : "no") << "\n";
  os << "DIAGONAL: " << (diagonal_is_projection ? "yes" : "no") << "\n";
  return os.str();
}

}  // namespace motrace::smp
