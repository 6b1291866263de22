#include "fusioncat/group.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>

namespace fusioncat {

FiniteGroup FiniteGroup::validate(std::string name, std::vector<std::vector<int>> table) {
  int n = static_cast<int>(table.size());
  if (n == 0) throw GroupValidationError(GroupDefect::NotClosed, {}, "empty table");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw GroupValidationError(GroupDefect::NotClosed, {i}, "table is not square");
    for (int j = 0; j < n; ++j)
      if (table[i][j] < 0 || table[i][j] >= n)
        throw GroupValidationError(GroupDefect::NotClosed, {i, j},
                                   "entry out of range at (" + std::to_string(i) + "," +
                                       std::to_string(j) + ")");
  }
  // rows and columns must be permutations
  for (int i = 0; i < n; ++i) {
    std::vector<bool> seen_row(n, false), seen_col(n, false);
    for (int j = 0; j < n; ++j) {
      if (seen_row[table[i][j]])
        throw GroupValidationError(GroupDefect::NotClosed, {i, j},
                                   "repeated entry in row " + std::to_string(i));
      seen_row[table[i][j]] = true;
      if (seen_col[table[j][i]])
        throw GroupValidationError(GroupDefect::NotClosed, {j, i},
                                   "repeated entry in column " + std::to_string(i));
      seen_col[table[j][i]] = true;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (table[0][i] != i || table[i][0] != i)
      throw GroupValidationError(GroupDefect::NoIdentityAtZero, {i},
                                 "identity is not at index 0");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          throw GroupValidationError(
              GroupDefect::NotAssociative, {i, j, k},
              "associativity fails at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                  std::to_string(k) + ")");
  FiniteGroup g;
  g.name_ = std::move(name);
  g.order_ = n;
  g.table_.resize(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.table_[i * n + j] = table[i][j];
  g.inv_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (g.mul(i, j) == 0) {
        g.inv_[i] = j;
        break;
      }
    if (g.inv_[i] < 0)
      throw GroupValidationError(GroupDefect::MissingInverse, {i},
                                 "no inverse for element " + std::to_string(i));
  }
  return g;
}

bool FiniteGroup::is_abelian() const {
  for (int i = 0; i < order_; ++i)
    for (int j = i + 1; j < order_; ++j)
      if (mul(i, j) != mul(j, i)) return false;
  return true;
}

int FiniteGroup::element_order(int g) const {
  int x = g, k = 1;
  while (x != 0) {
    x = mul(x, g);
    ++k;
  }
  return k;
}

int FiniteGroup::exponent() const {
  long e = 1;
  for (int g = 0; g < order_; ++g) e = std::lcm(e, static_cast<long>(element_order(g)));
  return static_cast<int>(e);
}

Subgroup::Subgroup(const FiniteGroup& g, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  elems = std::move(elements);
  pos.assign(g.order(), -1);
  for (int i = 0; i < size(); ++i) pos[elems[i]] = i;
  if (elems.empty() || elems[0] != 0)
    throw std::invalid_argument("Subgroup must contain the identity");
  for (int a : elems)
    for (int b : elems)
      if (pos[g.mul(a, b)] < 0) throw std::invalid_argument("Subgroup not closed");
  for (int a : elems)
    if (pos[g.inv(a)] < 0) throw std::invalid_argument("Subgroup not closed under inverse");
}

std::string Subgroup::id_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < elems.size(); ++i) {
    if (i) os << ",";
    os << elems[i];
  }
  return os.str();
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup(g, {0}); }
Subgroup full_subgroup(const FiniteGroup& g) {
  std::vector<int> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(g, all);
}

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<int>& gens) {
  std::set<int> members{0};
  std::vector<int> frontier{0};
  for (int x : gens)
    if (members.insert(x).second) frontier.push_back(x);
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int a : frontier) {
      for (int b : std::vector<int>(members.begin(), members.end())) {
        for (int p : {g.mul(a, b), g.mul(b, a), g.inv(a)}) {
          if (members.insert(p).second) next.push_back(p);
        }
      }
    }
    frontier = std::move(next);
  }
  return Subgroup(g, std::vector<int>(members.begin(), members.end()));
}

std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> out;
  std::vector<Subgroup> frontier{trivial_subgroup(g)};
  seen.insert(frontier[0].elems);
  out.push_back(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const Subgroup& s : frontier) {
      for (int x = 1; x < g.order(); ++x) {
        if (s.contains(x)) continue;
        std::vector<int> gens = s.elems;
        gens.push_back(x);
        Subgroup bigger = subgroup_generated(g, gens);
        if (seen.insert(bigger.elems).second) {
          out.push_back(bigger);
          next.push_back(bigger);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int conjugate_element(const FiniteGroup& g, int x, int s) { return g.conj(x, s); }

Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& s, int x) {
  std::vector<int> elems;
  elems.reserve(s.elems.size());
  for (int e : s.elems) elems.push_back(g.conj(x, e));
  return Subgroup(g, std::move(elems));
}

Subgroup intersect(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<int> elems;
  for (int e : a.elems)
    if (b.contains(e)) elems.push_back(e);
  return Subgroup(g, std::move(elems));
}

std::vector<DoubleCoset> double_cosets(const FiniteGroup& g, const Subgroup& k) {
  std::vector<bool> marked(g.order(), false);
  std::vector<DoubleCoset> out;
  for (int rep = 0; rep < g.order(); ++rep) {
    if (marked[rep]) continue;
    DoubleCoset dc;
    dc.rep = rep;
    std::set<int> cls;
    for (int a : k.elems)
      for (int b : k.elems) cls.insert(g.mul(g.mul(a, rep), b));
    for (int e : cls) {
      marked[e] = true;
      dc.elems.push_back(e);
    }
    out.push_back(std::move(dc));
  }
  return out;
}

Subgroup stabilizer(const FiniteGroup& g, const Subgroup& k, int gg) {
  // K^{g^-1} = K cap g^{-1} K g = {x in K : g x g^{-1} in K}
  std::vector<int> elems;
  int gi = g.inv(gg);
  for (int x : k.elems) {
    int c = g.mul(g.mul(gg, x), gi);
    if (k.contains(c)) elems.push_back(x);
  }
  return Subgroup(g, std::move(elems));
}

std::vector<int> left_coset_transversal(const FiniteGroup& g, const Subgroup& k,
                                        const Subgroup& h) {
  std::vector<bool> marked(g.order(), false);
  std::vector<int> reps;
  for (int x : k.elems) {
    if (marked[x]) continue;
    reps.push_back(x);
    for (int y : h.elems) marked[g.mul(x, y)] = true;
  }
  return reps;
}

std::vector<std::vector<int>> cyclic_table(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

std::vector<std::vector<int>> product_table(const std::vector<std::vector<int>>& a,
                                            const std::vector<std::vector<int>>& b) {
  int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
  int n = na * nb;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int ia = i / nb, ib = i % nb, ja = j / nb, jb = j % nb;
      t[i][j] = a[ia][ja] * nb + b[ib][jb];
    }
  return t;
}

std::vector<std::vector<int>> dihedral8_table() {
  // elements: r^i s^j with index i + 4j, i in 0..3, j in 0..1; s r s = r^-1
  auto idx = [](int i, int j) { return ((i % 4) + 4) % 4 + 4 * (j % 2); };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int i1 = 0; i1 < 4; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < 4; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          // (r^i1 s^j1)(r^i2 s^j2) = r^(i1 + s(j1) i2) s^(j1+j2), s(j)=(-1)^j
          int i = j1 == 0 ? i1 + i2 : i1 - i2;
          t[idx(i1, j1)][idx(i2, j2)] = idx(i, j1 + j2);
        }
  return t;
}

std::vector<std::vector<int>> quaternion8_table() {
  // elements 1,-1,i,-i,j,-j,k,-k as indices 0..7 via sign*unit
  // encode: unit u in {1,i,j,k} -> 0,1,2,3 ; index = u + 4*(sign<0)
  auto enc = [](int u, int s) { return u + 4 * (s < 0 ? 1 : 0); };
  // multiplication of units with sign: i*j=k, j*k=i, k*i=j, x*x=-1
  auto mulq = [&](int u1, int s1, int u2, int s2, int& u, int& s) {
    s = s1 * s2;
    if (u1 == 0) { u = u2; return; }
    if (u2 == 0) { u = u1; return; }
    if (u1 == u2) { u = 0; s = -s; return; }
    // distinct imaginary units
    static const int prod[4][4] = {{0, 0, 0, 0}, {0, 0, 3, 2}, {0, 3, 0, 1}, {0, 2, 1, 0}};
    static const int sign[4][4] = {{1, 1, 1, 1}, {1, 1, 1, -1}, {1, -1, 1, 1}, {1, 1, -1, 1}};
    u = prod[u1][u2];
    s *= sign[u1][u2];
  };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int u1 = a % 4, s1 = a < 4 ? 1 : -1;
      int u2 = b % 4, s2 = b < 4 ? 1 : -1;
      int u, s;
      mulq(u1, s1, u2, s2, u, s);
      t[a][b] = enc(u, s);
    }
  return t;
}

std::vector<std::vector<int>> symmetric3_table() {
  // permutations of {0,1,2} in lexicographic one-line order:
  // 0:(012) id, 1:(021), 2:(102), 3:(120), 4:(201), 5:(210)
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto find = [&](const std::array<int, 3>& q) {
    for (size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == q) return static_cast<int>(i);
    return -1;
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> comp;
      for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];  // i after j
      t[i][j] = find(comp);
    }
  return t;
}

}  // namespace fusioncat
