#include "core/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "core/errors.hpp"

namespace motrace {

namespace {

void check_factor(char fam, int rank) {
  auto bad = [&](const std::string& why) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(1, fam) + std::to_string(rank) + ": " + why);
  };
  switch (fam) {
    case 'A':
      if (rank < 1) bad("rank must be >= 1");
      break;
    case 'B':
    case 'C':
      if (rank < 2) bad("rank must be >= 2");
      break;
    case 'D':
      if (rank < 3) bad("rank must be >= 3");
      break;
    case 'E':
      if (rank < 6 || rank > 8) bad("rank must be 6, 7 or 8");
      break;
    case 'F':
      if (rank != 4) bad("rank must be 4");
      break;
    case 'G':
      if (rank != 2) bad("rank must be 2");
      break;
    default:
      bad("unknown family");
  }
}

}  // namespace

CartanType::CartanType(std::vector<Factor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw Error(ErrorCode::InvalidArgument, "empty Cartan type");
  for (auto& f : factors_) {
    check_factor(f.family, f.rank);
    if (f.family == 'D' && f.rank == 3) f.family = 'A';  // D3 = A3
  }
}

CartanType CartanType::parse(const std::string& text) {
  std::vector<Factor> fs;
  size_t i = 0;
  auto fail = [&](const std::string& what) { throw ParseError(1, (int)i + 1, what); };
  while (i < text.size()) {
    char fam = text[i];
    if (fam < 'A' || fam > 'G') fail("expected a Cartan family letter A..G");
    ++i;
    if (i >= text.size() || !isdigit((unsigned char)text[i])) fail("expected a rank");
    int rank = 0;
    while (i < text.size() && isdigit((unsigned char)text[i])) {
      rank = rank * 10 + (text[i] - '0');
      if (rank > 64) fail("rank too large");
      ++i;
    }
    fs.push_back({fam, rank});
    if (i < text.size()) {
      if (text[i] != 'x') fail("expected 'x' between factors");
      ++i;
      if (i >= text.size()) fail("trailing 'x'");
    }
  }
  if (fs.empty()) throw ParseError(1, 1, "empty Cartan type");
  return CartanType(std::move(fs));
}

int CartanType::rank() const {
  int r = 0;
  for (auto& f : factors_) r += f.rank;
  return r;
}

std::string CartanType::render() const {
  std::ostringstream os;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << "x";
    os << factors_[i].family << factors_[i].rank;
  }
  return os.str();
}

std::vector<std::vector<int>> CartanType::cartan_matrix() const {
  int n = rank();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  int off = 0;
  for (auto& f : factors_) {
    int r = f.rank;
    auto bond = [&](int i, int j, int aij, int aji) {
      a[off + i][off + j] = aij;
      a[off + j][off + i] = aji;
    };
    for (int i = 0; i < r; ++i) a[off + i][off + i] = 2;
    switch (f.family) {
      case 'A':
        for (int i = 0; i + 1 < r; ++i) bond(i, i + 1, -1, -1);
        break;
      case 'B':  // last simple root short
        for (int i = 0; i + 2 < r; ++i) bond(i, i + 1, -1, -1);
        bond(r - 2, r - 1, -1, -2);
        break;
      case 'C':  // last simple root long
        for (int i = 0; i + 2 < r; ++i) bond(i, i + 1, -1, -1);
        bond(r - 2, r - 1, -2, -1);
        break;
      case 'D':
        for (int i = 0; i + 3 < r; ++i) bond(i, i + 1, -1, -1);
        bond(r - 3, r - 2, -1, -1);
        bond(r - 3, r - 1, -1, -1);
        break;
      case 'E':
        // Bourbaki numbering: chain 1-3-4-5-6(-7)(-8), node 2 attached to 4.
        bond(0, 2, -1, -1);
        bond(1, 3, -1, -1);
        for (int i = 2; i + 1 < r; ++i) bond(i, i + 1, -1, -1);
        break;
      case 'F':
        bond(0, 1, -1, -1);
        bond(1, 2, -1, -2);
        bond(2, 3, -1, -1);
        break;
      case 'G':
        bond(0, 1, -1, -3);
        break;
    }
    off += r;
  }
  return a;
}

namespace {

std::vector<int> factor_degrees(char fam, int r) {
  std::vector<int> d;
  switch (fam) {
    case 'A':
      for (int i = 2; i <= r + 1; ++i) d.push_back(i);
      break;
    case 'B':
    case 'C':
      for (int i = 1; i <= r; ++i) d.push_back(2 * i);
      break;
    case 'D':
      for (int i = 1; i < r; ++i) d.push_back(2 * i);
      d.push_back(r);
      break;
    case 'E':
      if (r == 6) d = {2, 5, 6, 8, 9, 12};
      if (r == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (r == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case 'F':
      d = {2, 6, 8, 12};
      break;
    case 'G':
      d = {2, 6};
      break;
  }
  return d;
}

}  // namespace

std::vector<int> CartanType::degrees() const {
  std::vector<int> out;
  for (auto& f : factors_) {
    auto d = factor_degrees(f.family, f.rank);
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

unsigned long long CartanType::weyl_order() const {
  unsigned long long o = 1;
  for (int d : degrees()) o *= (unsigned long long)d;
  return o;
}

int CartanType::positive_root_count() const {
  int n = 0;
  for (int d : degrees()) n += d - 1;
  return n;
}

// --------------------------------------------------------------------------
// Subdiagram classification, used to get |W_I| without enumerating anything.
// --------------------------------------------------------------------------

namespace {

struct Component {
  std::vector<int> nodes;  // global 0-based indices
};

unsigned long long order_of_component(const std::vector<std::vector<int>>& a,
                                      const std::vector<int>& nodes) {
  int n = (int)nodes.size();
  if (n == 1) return 2;  // A1
  // adjacency with bond multiplicities a_ij * a_ji in {1,2,3}
  std::vector<std::vector<int>> adj(n);
  std::vector<int> deg(n, 0);
  int max_bond = 1;
  int double_edges = 0, triple_edges = 0;
  std::pair<int, int> marked_edge{-1, -1};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int m = a[nodes[i]][nodes[j]] * a[nodes[j]][nodes[i]];
      if (m == 0) continue;
      adj[i].push_back(j);
      adj[j].push_back(i);
      ++deg[i];
      ++deg[j];
      max_bond = std::max(max_bond, m);
      if (m == 2) {
        ++double_edges;
        marked_edge = {i, j};
      }
      if (m == 3) ++triple_edges;
    }
  auto degrees_product = [](char fam, int r) {
    unsigned long long o = 1;
    for (int d : factor_degrees(fam, r)) o *= (unsigned long long)d;
    return o;
  };
  auto unclassifiable = [&]() {
    throw Error(ErrorCode::InvalidArgument, "subdiagram is not of finite type");
  };
  if (triple_edges) {
    if (n != 2) unclassifiable();
    return degrees_product('G', 2);
  }
  int branch = -1;
  for (int i = 0; i < n; ++i) {
    if (deg[i] > 3) unclassifiable();
    if (deg[i] == 3) {
      if (branch >= 0) unclassifiable();
      branch = i;
    }
  }
  if (double_edges) {
    if (double_edges > 1 || branch >= 0) unclassifiable();
    // chain with one double bond: B/C if at an end, F4 if in the middle
    bool at_end = deg[marked_edge.first] == 1 || deg[marked_edge.second] == 1;
    if (at_end) return degrees_product('B', n);
    if (n == 4) return degrees_product('F', 4);
    unclassifiable();
  }
  if (branch < 0) return degrees_product('A', n);  // simply laced chain
  // one branch node: arm lengths decide D vs E
  std::vector<int> arms;
  for (int start : adj[branch]) {
    int len = 1, prev = branch, cur = start;
    while (true) {
      int next = -1;
      for (int nb : adj[cur])
        if (nb != prev) next = nb;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return degrees_product('D', n);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
    return degrees_product('E', n);
  unclassifiable();
  return 0;
}

}  // namespace

unsigned long long parabolic_order(const CartanType& type, const std::set<int>& I) {
  int n = type.rank();
  for (int i : I)
    if (i < 1 || i > n)
      throw Error(ErrorCode::InvalidArgument,
                  "parabolic index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
  if (I.empty()) return 1;
  auto a = type.cartan_matrix();
  std::vector<int> nodes(I.begin(), I.end());
  for (auto& v : nodes) --v;  // to 0-based
  // split into connected components of the induced subdiagram
  std::map<int, int> comp;
  int ncomp = 0;
  for (int v : nodes)
    if (!comp.count(v)) {
      std::vector<int> stack{v};
      comp[v] = ncomp;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : nodes)
          if (!comp.count(w) && a[u][w] != 0) {
            comp[w] = ncomp;
            stack.push_back(w);
          }
      }
      ++ncomp;
    }
  std::vector<std::vector<int>> groups(ncomp);
  for (int v : nodes) groups[comp[v]].push_back(v);
  unsigned long long order = 1;
  for (auto& g : groups) order *= order_of_component(a, g);
  return order;
}

}  // namespace motrace
