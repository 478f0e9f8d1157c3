#include "core/transfer.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "core/errors.hpp"

namespace motrace {

namespace {

constexpr int kDegreeCap = 12;

std::vector<WeylElement> sorted_elements(const WeylGroup& w) {
  std::vector<WeylElement> es = w.elements();
  std::sort(es.begin(), es.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.word < b.word;
  });
  return es;
}

std::string indexset_str(const std::set<int>& I) {
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

}  // namespace

std::string TransferFormula::render() const {
  std::ostringstream os;
  if (!parabolic) {
    os << "torus transfer formula for " << type.render() << ": " << terms.size() << " terms\n";
    for (auto& t : terms) os << "  C[" << t.conjugator_word << "]\n";
  } else {
    os << "maximal-rank transfer formula for " << type.render() << ", I=" << indexset_str(*parabolic)
       << ": " << terms.size() << " terms\n";
    for (auto& t : terms)
      os << "  p*(T,P" << indexset_str(*t.restriction) << "^" << t.conjugator_word << ") . C["
         << t.conjugator_word << "]\n";
  }
  return os.str();
}

TransferFormula torus_transfer_formula(const CartanType& type) {
  WeylGroup w(type);
  TransferFormula f{type, std::nullopt, {}};
  for (auto& e : sorted_elements(w)) f.terms.push_back({e.word, e.length, std::nullopt, 1});
  if (f.terms.size() != w.order())
    throw Error(ErrorCode::InvalidArgument, "internal: torus formula term count mismatch");
  return f;
}

TransferFormula maxrank_transfer_formula(const CartanType& type, const std::set<int>& I) {
  WeylGroup w(type);
  TransferFormula f{type, I, {}};
  for (auto& e : w.min_coset_reps(I)) f.terms.push_back({e.word, e.length, I, 1});
  return f;
}

// ---------------------------------------------------------------------------
// Polynomial model: Q[x_1..x_r] with W acting through its reflection
// representation on the degree-1 part. Everything below is exact.
// ---------------------------------------------------------------------------

namespace {

using Expo = std::vector<int>;  // exponent vector, one entry per variable

std::vector<Expo> monomials_of_degree(int nvars, int deg) {
  std::vector<Expo> out;
  Expo cur(nvars, 0);
  // lexicographic enumeration of compositions of deg into nvars parts
  std::function<void(int, int)> rec = [&](int var, int rest) {
    if (var == nvars - 1) {
      cur[var] = rest;
      out.push_back(cur);
      return;
    }
    for (int e = rest; e >= 0; --e) {
      cur[var] = e;
      rec(var + 1, rest - e);
    }
  };
  if (nvars == 0) {
    if (deg == 0) out.push_back({});
    return out;
  }
  rec(0, deg);
  return out;
}

using Poly = std::map<Expo, mpz_class>;  // exponent vector -> coefficient

Poly poly_mul_linear(const Poly& p, const std::vector<mpz_class>& linear) {
  Poly out;
  for (auto& [e, c] : p)
    for (size_t v = 0; v < linear.size(); ++v) {
      if (linear[v] == 0) continue;
      Expo e2 = e;
      ++e2[(int)v];
      out[e2] += c * linear[v];
    }
  return out;
}

// Matrix of the substitution x_i -> sum_j m[i][j] x_j on the monomial basis
// of the given degree. Column k is the expansion of the image of basis
// monomial k.
std::vector<std::vector<mpz_class>> substitution_matrix(const Mat& m, int nvars,
                                                        const std::vector<Expo>& basis,
                                                        const std::map<Expo, int>& index) {
  size_t dim = basis.size();
  std::vector<std::vector<mpz_class>> out(dim, std::vector<mpz_class>(dim, 0));
  for (size_t k = 0; k < dim; ++k) {
    Poly p{{Expo(nvars, 0), 1}};
    for (int v = 0; v < nvars; ++v) {
      std::vector<mpz_class> linear(nvars);
      for (int j = 0; j < nvars; ++j) linear[j] = m[v * nvars + j];
      for (int rep = 0; rep < basis[k][v]; ++rep) p = poly_mul_linear(p, linear);
    }
    for (auto& [e, c] : p) out[index.at(e)][k] = c;
  }
  return out;
}

using QMat = std::vector<std::vector<mpq_class>>;

QMat qmat_mul(const QMat& a, const QMat& b) {
  size_t n = a.size();
  QMat c(n, std::vector<mpq_class>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < n; ++j)
        if (b[k][j] != 0) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

long long qmat_rank(QMat m) {
  size_t rows = m.size();
  if (rows == 0) return 0;
  size_t cols = m[0].size();
  long long rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t piv = row;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[row]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      mpq_class f = m[i][col] / m[row][col];
      for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

// Basis of the joint kernel of the given square matrices (each dim x dim).
std::vector<std::vector<mpq_class>> joint_nullspace(const std::vector<QMat>& mats, size_t dim) {
  // stack all matrices vertically and compute the nullspace by elimination
  QMat a;
  for (auto& m : mats)
    for (auto& r : m) a.push_back(r);
  if (a.empty()) a.push_back(std::vector<mpq_class>(dim, 0));
  size_t rows = a.size();
  std::vector<int> pivot_of_col(dim, -1);
  size_t row = 0;
  for (size_t col = 0; col < dim && row < rows; ++col) {
    size_t piv = row;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[row]);
    mpq_class d = a[row][col];
    for (size_t j = 0; j < dim; ++j) a[row][j] /= d;
    for (size_t i = 0; i < rows; ++i) {
      if (i == row || a[i][col] == 0) continue;
      mpq_class f = a[i][col];
      for (size_t j = 0; j < dim; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_of_col[col] = (int)row;
    ++row;
  }
  std::vector<std::vector<mpq_class>> basis;
  for (size_t col = 0; col < dim; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    std::vector<mpq_class> v(dim, 0);
    v[col] = 1;
    for (size_t c2 = 0; c2 < dim; ++c2)
      if (pivot_of_col[c2] >= 0) v[c2] = -a[pivot_of_col[c2]][col];
    basis.push_back(std::move(v));
  }
  return basis;
}

// det(I - t*m) as an integer polynomial of degree <= n, by permutation
// expansion (n is small).
std::vector<mpz_class> char_det_poly(const Mat& m, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<mpz_class> acc(n + 1, 0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    // product over i of ( [i==perm[i]] - t*m[i][perm[i]] )
    std::vector<mpz_class> prod{1};
    bool zero = false;
    for (int i = 0; i < n && !zero; ++i) {
      mpz_class c0 = (i == perm[i]) ? 1 : 0;
      mpz_class c1 = -m[i * n + perm[i]];
      if (c0 == 0 && c1 == 0) {
        zero = true;
        break;
      }
      std::vector<mpz_class> next(prod.size() + 1, 0);
      for (size_t k = 0; k < prod.size(); ++k) {
        next[k] += prod[k] * c0;
        next[k + 1] += prod[k] * c1;
      }
      prod = std::move(next);
    }
    if (zero) continue;
    for (size_t k = 0; k < prod.size(); ++k) acc[k] += (inversions & 1) ? -prod[k] : prod[k];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

// Power-series inverse of p (p[0] = 1) truncated at degree d.
std::vector<mpz_class> series_inverse(const std::vector<mpz_class>& p, int d) {
  std::vector<mpz_class> q(d + 1, 0);
  q[0] = 1;
  for (int k = 1; k <= d; ++k) {
    mpz_class s = 0;
    for (size_t i = 1; i < p.size() && (int)i <= k; ++i) s += p[i] * q[k - i];
    q[k] = -s;
  }
  return q;
}

}  // namespace

std::string ProjectorReport::render_text() const {
  std::ostringstream os;
  auto list = [](const std::vector<long long>& v) {
    std::ostringstream s;
    s << "[";
    for (size_t i = 0; i < v.size(); ++i) s << (i ? ", " : "") << v[i];
    s << "]";
    return s.str();
  };
  os << "type: " << type.render() << "\n";
  os << "degree_cap: " << degree_cap << "\n";
  os << "projector_idempotent: " << (projector_idempotent ? "yes" : "no") << "\n";
  os << "image_dims: " << list(image_dims) << "\n";
  os << "molien_dims: " << list(molien_dims) << "\n";
  os << "match: " << (match ? "yes" : "no") << "\n";
  return os.str();
}

ProjectorReport averaging_projector_check(const CartanType& type, int degree_cap) {
  if (degree_cap < 0 || degree_cap > kDegreeCap)
    throw Error(ErrorCode::DegreeCapExceeded,
                "degree cap " + std::to_string(degree_cap) + " outside supported range 0.." +
                    std::to_string(kDegreeCap));
  WeylGroup w(type);
  int n = w.rank();
  mpz_class order = (long)w.order();

  ProjectorReport rep{type, degree_cap, true, {}, {}, false};

  // Molien series (1/|W|) sum_w 1/det(1 - t w), truncated.
  std::vector<mpz_class> molien_sum(degree_cap + 1, 0);
  for (auto& e : w.elements()) {
    auto det = char_det_poly(e.mat, n);
    auto inv = series_inverse(det, degree_cap);
    for (int k = 0; k <= degree_cap; ++k) molien_sum[k] += inv[k];
  }
  for (int k = 0; k <= degree_cap; ++k) {
    mpq_class c(molien_sum[k], order);
    c.canonicalize();
    if (c.get_den() != 1)
      throw Error(ErrorCode::InvalidArgument, "internal: non-integral Molien coefficient");
    rep.molien_dims.push_back((long long)c.get_num().get_si());
  }

  for (int deg = 0; deg <= degree_cap; ++deg) {
    auto basis = monomials_of_degree(n, deg);
    std::map<Expo, int> index;
    for (size_t k = 0; k < basis.size(); ++k) index[basis[k]] = (int)k;
    size_t dim = basis.size();

    std::vector<std::vector<mpz_class>> sum(dim, std::vector<mpz_class>(dim, 0));
    for (auto& el : w.elements()) {
      auto t = substitution_matrix(el.mat, n, basis, index);
      for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) sum[i][j] += t[i][j];
    }
    QMat e(dim, std::vector<mpq_class>(dim));
    for (size_t i = 0; i < dim; ++i)
      for (size_t j = 0; j < dim; ++j) {
        e[i][j] = mpq_class(sum[i][j], order);
        e[i][j].canonicalize();
      }

    QMat e2 = qmat_mul(e, e);
    if (e2 != e) rep.projector_idempotent = false;

    rep.image_dims.push_back(qmat_rank(e));

    // Independent route to the invariants: the joint kernel of (T_s - I)
    // over the simple reflections. e must fix it pointwise, and its
    // dimension must agree with rank(e).
    std::vector<QMat> diffs;
    for (auto& s : w.simple_reflections()) {
      auto t = substitution_matrix(s, n, basis, index);
      QMat d(dim, std::vector<mpq_class>(dim));
      for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) d[i][j] = mpq_class(t[i][j]) - (i == j ? 1 : 0);
      diffs.push_back(std::move(d));
    }
    auto inv_basis = joint_nullspace(diffs, dim);
    if ((long long)inv_basis.size() != rep.image_dims.back())
      throw Error(ErrorCode::InvalidArgument,
                  "internal: invariant subspace dimension disagrees with projector rank");
    for (auto& v : inv_basis) {
      for (size_t i = 0; i < dim; ++i) {
        mpq_class acc = 0;
        for (size_t j = 0; j < dim; ++j)
          if (v[j] != 0) acc += e[i][j] * v[j];
        if (acc != v[i])
          throw Error(ErrorCode::InvalidArgument,
                      "internal: projector does not restrict to the identity on invariants");
      }
    }
  }

  rep.match = rep.projector_idempotent && rep.image_dims == rep.molien_dims;
  return rep;
}

}  // namespace motrace
