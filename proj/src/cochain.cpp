#include "fusioncat/cochain.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "fusioncat/cyclotomic.hpp"
#include "fusioncat/snf.hpp"

namespace fusioncat {

bool Cochain2::is_normalized() const {
  int s = L.size();
  for (int i = 0; i < s; ++i)
    if (at_pos(0, i) != 0 || at_pos(i, 0) != 0) return false;
  return true;
}

Cochain2 Cochain2::lifted(int m) const {
  if (m == n) return *this;
  if (m % n != 0) throw std::invalid_argument("Cochain2::lifted: bad modulus");
  Cochain2 out;
  out.L = L;
  out.n = m;
  out.e.resize(e.size());
  int f = m / n;
  for (size_t i = 0; i < e.size(); ++i) out.e[i] = e[i] * f;
  return out;
}

std::string Cochain2::hash() const {
  // FNV-1a over (n, exponents); deterministic across runs
  unsigned long long h = 1469598103934665603ull;
  auto mix = [&](unsigned long long v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<unsigned long long>(n));
  for (int v : e) mix(static_cast<unsigned long long>(v));
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

bool Cochain3::is_normalized() const {
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      if (at(0, a, b) != 0 || at(a, 0, b) != 0 || at(a, b, 0) != 0) return false;
  return true;
}

Cochain3 Cochain3::lifted(int m) const {
  if (m == n) return *this;
  if (m % n != 0) throw std::invalid_argument("Cochain3::lifted: bad modulus");
  Cochain3 out;
  out.order = order;
  out.n = m;
  out.e.resize(e.size());
  int f = m / n;
  for (size_t i = 0; i < e.size(); ++i) out.e[i] = e[i] * f;
  return out;
}

Cochain3 Cochain3::trivial(const FiniteGroup& g, int n) {
  Cochain3 w;
  w.order = g.order();
  w.n = n;
  w.e.assign(static_cast<size_t>(g.order()) * g.order() * g.order(), 0);
  return w;
}

CocycleWitness is_3cocycle(const FiniteGroup& g, const Cochain3& w) {
  int N = g.order();
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c)
        for (int d = 0; d < N; ++d) {
          long lhs = w.at(g.mul(a, b), c, d) + w.at(a, b, g.mul(c, d));
          long rhs = w.at(a, b, c) + w.at(a, g.mul(b, c), d) + w.at(b, c, d);
          if (((lhs - rhs) % w.n + w.n) % w.n != 0) return {false, {a, b, c, d}};
        }
  return {true, {}};
}

CocycleWitness is_2cocycle_on(const FiniteGroup& g, const Cochain2& psi) {
  const auto& L = psi.L;
  for (int i = 0; i < L.size(); ++i)
    for (int j = 0; j < L.size(); ++j)
      for (int k = 0; k < L.size(); ++k) {
        int a = L.elems[i], b = L.elems[j], c = L.elems[k];
        long v = psi.at(b, c) - psi.at(g.mul(a, b), c) + psi.at(a, g.mul(b, c)) - psi.at(a, b);
        if ((v % psi.n + psi.n) % psi.n != 0) return {false, {a, b, c}};
      }
  return {true, {}};
}

std::vector<int> d2(const FiniteGroup& g, const Cochain2& psi) {
  const auto& L = psi.L;
  int s = L.size();
  std::vector<int> out(static_cast<size_t>(s) * s * s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      for (int k = 0; k < s; ++k) {
        int a = L.elems[i], b = L.elems[j], c = L.elems[k];
        long v = psi.at(b, c) - psi.at(g.mul(a, b), c) + psi.at(a, g.mul(b, c)) - psi.at(a, b);
        out[(i * s + j) * s + k] = static_cast<int>((v % psi.n + psi.n) % psi.n);
      }
  return out;
}

Cochain2 d1(const FiniteGroup& g, const Cochain1& gamma) {
  Cochain2 out;
  out.L = gamma.L;
  out.n = gamma.n;
  int s = gamma.L.size();
  out.e.assign(static_cast<size_t>(s) * s, 0);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      int a = gamma.L.elems[i], b = gamma.L.elems[j];
      long v = gamma.at(a) + gamma.at(b) - gamma.at(g.mul(a, b));
      out.set_pos(i, j, static_cast<int>(v % gamma.n));
    }
  return out;
}

CocycleWitness trivializes_witness(const FiniteGroup& g, const Cochain2& psi,
                                   const Cochain3& omega) {
  const auto& L = psi.L;
  long m = lcm_long(psi.n, omega.n);
  long fp = m / psi.n, fo = m / omega.n;
  for (int f1 : L.elems)
    for (int f2 : L.elems)
      for (int f3 : L.elems) {
        long lhs = (psi.at(f1, g.mul(f2, f3)) + psi.at(f2, f3)) * fp;
        long rhs = omega.at(f1, f2, f3) * fo + (psi.at(g.mul(f1, f2), f3) + psi.at(f1, f2)) * fp;
        if (((lhs - rhs) % m + m) % m != 0) return {false, {f1, f2, f3}};
      }
  return {true, {}};
}

bool trivializes(const FiniteGroup& g, const Cochain2& psi, const Cochain3& omega) {
  return trivializes_witness(g, psi, omega).ok;
}

namespace {

// Index of the normalized free coordinates of a k-cochain on L: tuples of
// positions all != 0 (position 0 is the identity).
struct NormalizedCoords {
  int s;       // |L|
  int decode;  // s - 1 entries per slot
  int k;
  int count;
  NormalizedCoords(int size, int arity) : s(size), decode(size - 1), k(arity) {
    count = 1;
    for (int i = 0; i < k; ++i) count *= decode;
  }
  // positions (each in 1..s-1) -> coordinate index
  int index(const std::vector<int>& pos) const {
    int idx = 0;
    for (int i = 0; i < k; ++i) idx = idx * decode + (pos[i] - 1);
    return idx;
  }
};

// Coboundary matrix from normalized (k-1)-cochains to normalized k-cochains
// on L (positions), as an integer matrix (rows = k-tuples, cols = (k-1)-tuples).
IntMat coboundary_matrix(const FiniteGroup& g, const Subgroup& L, int k) {
  int s = L.size();
  NormalizedCoords dom(s, k - 1), cod(s, k);
  IntMat m(cod.count, dom.count);
  std::vector<int> tup(k);
  std::function<void(int)> rec = [&](int slot) {
    if (slot == k) {
      int row = cod.index(tup);
      // d(f)(x1..xk) = f(x2..xk) + sum (-1)^i f(..x_i x_{i+1}..) + (-1)^k f(x1..x_{k-1})
      auto add = [&](const std::vector<int>& positions, int sign) {
        for (int p : positions)
          if (p == 0) return;  // normalized lower cochain vanishes
        m.at(row, dom.index(positions)) += sign;
      };
      std::vector<int> sub(k - 1);
      for (int i = 1; i < k; ++i) sub[i - 1] = tup[i];
      add(sub, 1);
      int sign = -1;
      for (int i = 0; i < k - 1; ++i) {
        for (int j = 0, t = 0; j < k; ++j) {
          if (j == i) {
            sub[t++] = L.position(g.mul(L.elems[tup[i]], L.elems[tup[i + 1]]));
            ++j;  // skip the merged slot
          } else {
            sub[t++] = tup[j];
          }
        }
        add(sub, sign);
        sign = -sign;
      }
      for (int i = 0; i < k - 1; ++i) sub[i] = tup[i];
      add(sub, sign);
      return;
    }
    for (int p = 1; p < s; ++p) {
      tup[slot] = p;
      rec(slot + 1);
    }
  };
  rec(0);
  return m;
}

Cochain2 cochain2_from_coords(const Subgroup& L, int n, const std::vector<int>& coords) {
  int s = L.size();
  NormalizedCoords nc(s, 2);
  Cochain2 out;
  out.L = L;
  out.n = n;
  out.e.assign(static_cast<size_t>(s) * s, 0);
  for (int i = 1; i < s; ++i)
    for (int j = 1; j < s; ++j) out.set_pos(i, j, coords[nc.index({i, j})]);
  return out;
}

std::vector<int> coords_from_cochain2(const Cochain2& c) {
  int s = c.L.size();
  NormalizedCoords nc(s, 2);
  std::vector<int> coords(nc.count, 0);
  for (int i = 1; i < s; ++i)
    for (int j = 1; j < s; ++j) coords[nc.index({i, j})] = c.at_pos(i, j);
  return coords;
}

}  // namespace

std::optional<Cochain2> solve_trivializing_cochain(const FiniteGroup& g, const Cochain3& omega,
                                                   const Subgroup& L,
                                                   std::vector<EscalationEvent>* log) {
  int s = L.size();
  NormalizedCoords cod(s, 3);
  IntMat D = coboundary_matrix(g, L, 3);
  for (int m = 1; m <= g.order(); ++m) {
    if (m > 1 && log)
      log->push_back(
          {"trivializing cochain on {" + L.id_string() + "}", omega.n, omega.n * m});
    int n = omega.n * m;
    // rhs: omega restricted to L, lifted to modulus n
    std::vector<int> b(cod.count);
    int lift = n / omega.n;
    std::vector<int> tup(3);
    for (int i = 1; i < s; ++i)
      for (int j = 1; j < s; ++j)
        for (int k = 1; k < s; ++k) {
          tup = {i, j, k};
          b[cod.index(tup)] = omega.at(L.elems[i], L.elems[j], L.elems[k]) * lift % n;
        }
    auto x = solve_mod(D, b, n);
    if (x) {
      Cochain2 psi = cochain2_from_coords(L, n, *x);
      if (!trivializes(g, psi, omega))
        throw std::logic_error("solve_trivializing_cochain: solver output fails check");
      return psi;
    }
  }
  return std::nullopt;
}

std::vector<Cochain2> h2_class_representatives(const FiniteGroup& g, const Subgroup& L, int n) {
  if (L.size() == 1) {
    return {trivial_cochain2(L, n)};
  }
  IntMat D = coboundary_matrix(g, L, 3);  // d^2: C^2 -> C^3
  IntMat B = coboundary_matrix(g, L, 2);  // d^1: C^1 -> C^2
  KernelModN K = kernel_mod(D, n);
  std::vector<std::vector<int>> reps = quotient_class_representatives(K, B);
  std::vector<Cochain2> out;
  out.reserve(reps.size());
  for (const auto& r : reps) {
    Cochain2 c = cochain2_from_coords(L, n, r);
    if (!is_2cocycle_on(g, c).ok) throw std::logic_error("h2 representative is not a cocycle");
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Cochain3> h3_class_representatives(const FiniteGroup& g, int n) {
  Subgroup full = full_subgroup(g);
  int s = g.order();
  IntMat D = coboundary_matrix(g, full, 4);  // d^3: C^3 -> C^4
  IntMat B = coboundary_matrix(g, full, 3);  // d^2: C^2 -> C^3
  KernelModN K = kernel_mod(D, n);
  std::vector<std::vector<int>> reps = quotient_class_representatives(K, B);
  NormalizedCoords nc(s, 3);
  std::vector<Cochain3> out;
  for (const auto& r : reps) {
    Cochain3 w = Cochain3::trivial(g, n);
    for (int i = 1; i < s; ++i)
      for (int j = 1; j < s; ++j)
        for (int k = 1; k < s; ++k) w.set(i, j, k, r[nc.index({i, j, k})]);
    if (!is_3cocycle(g, w).ok) throw std::logic_error("h3 representative is not a cocycle");
    out.push_back(std::move(w));
  }
  return out;
}

std::optional<Cochain1> cohomologous(const FiniteGroup& g, const Cochain2& psi,
                                     const Cochain2& psi2) {
  if (!(psi.L == psi2.L)) throw std::invalid_argument("cohomologous: domain mismatch");
  const Subgroup& L = psi.L;
  int s = L.size();
  long base = lcm_long(psi.n, psi2.n);
  NormalizedCoords cod(s, 2), dom(s, 1);
  IntMat B = coboundary_matrix(g, L, 2);
  for (int m = 1; m <= g.order(); ++m) {
    long n = base * m;
    std::vector<int> b(cod.count);
    for (int i = 1; i < s; ++i)
      for (int j = 1; j < s; ++j) {
        long v = static_cast<long>(psi.at_pos(i, j)) * (n / psi.n) -
                 static_cast<long>(psi2.at_pos(i, j)) * (n / psi2.n);
        b[cod.index({i, j})] = static_cast<int>(((v % n) + n) % n);
      }
    auto x = solve_mod(B, b, static_cast<int>(n));
    if (x) {
      Cochain1 gamma;
      gamma.L = L;
      gamma.n = static_cast<int>(n);
      gamma.e.assign(s, 0);
      for (int i = 1; i < s; ++i) gamma.e[i] = (*x)[dom.index({i})];
      return gamma;
    }
  }
  return std::nullopt;
}

std::vector<Cochain2> h2_torsor_representatives(const FiniteGroup& g, const Cochain3& omega,
                                                const Subgroup& L,
                                                std::vector<EscalationEvent>* log) {
  auto base = solve_trivializing_cochain(g, omega, L, log);
  if (!base)
    throw NoTrivializingCochain("omega restricted to {" + L.id_string() +
                                "} admits no trivializing cochain");
  int exp = 1;
  for (int x : L.elems) exp = static_cast<int>(lcm_long(exp, g.element_order(x)));
  int N = exp * base->n;
  if (log && N != base->n) log->push_back({"H2 torsor modulus on {" + L.id_string() + "}", base->n, N});
  Cochain2 lifted = base->lifted(N);
  std::vector<Cochain2> classes = h2_class_representatives(g, L, N);
  std::vector<Cochain2> out;
  for (const auto& z : classes) {
    Cochain2 cand = add_cochains(g, lifted, z);
    bool dup = false;
    for (const auto& prev : out) {
      if (cohomologous(g, cand, prev)) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(std::move(cand));
  }
  return out;
}

Cochain2 omega_conjugation(const FiniteGroup& g, const Cochain3& omega, int x) {
  Cochain2 out;
  out.L = full_subgroup(g);
  out.n = omega.n;
  int s = g.order();
  out.e.assign(static_cast<size_t>(s) * s, 0);
  for (int h1 = 0; h1 < s; ++h1)
    for (int h2 = 0; h2 < s; ++h2) {
      int c1 = g.conj(x, h1), c2 = g.conj(x, h2);
      long v = omega.at(c1, c2, x) + omega.at(x, h1, h2) - omega.at(c1, x, h2);
      out.set_pos(h1, h2, static_cast<int>(v % omega.n));
    }
  return out;
}

Cochain2 conjugate_cochain(const FiniteGroup& g, const Cochain2& psi, int x) {
  // domain: x^-1 L x, value psi^x(h1,h2) = psi(x h1 x^-1, x h2 x^-1)
  Cochain2 out;
  out.L = conjugate_subgroup(g, psi.L, g.inv(x));
  out.n = psi.n;
  int s = out.L.size();
  out.e.assign(static_cast<size_t>(s) * s, 0);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      int h1 = out.L.elems[i], h2 = out.L.elems[j];
      out.set_pos(i, j, psi.at(g.conj(x, h1), g.conj(x, h2)));
    }
  return out;
}

Cochain2 restrict_to(const FiniteGroup& g, const Cochain2& big, const Subgroup& L) {
  Cochain2 out;
  out.L = L;
  out.n = big.n;
  int s = L.size();
  out.e.assign(static_cast<size_t>(s) * s, 0);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) out.set_pos(i, j, big.at(L.elems[i], L.elems[j]));
  return out;
}

Cochain2 trivial_cochain2(const Subgroup& L, int n) {
  Cochain2 out;
  out.L = L;
  out.n = n;
  out.e.assign(static_cast<size_t>(L.size()) * L.size(), 0);
  return out;
}

Cochain2 add_cochains(const FiniteGroup& g, const Cochain2& a, const Cochain2& b) {
  (void)g;
  if (!(a.L == b.L)) throw std::invalid_argument("add_cochains: domain mismatch");
  int n = static_cast<int>(lcm_long(a.n, b.n));
  Cochain2 out = a.lifted(n);
  Cochain2 bb = b.lifted(n);
  for (size_t i = 0; i < out.e.size(); ++i) out.e[i] = (out.e[i] + bb.e[i]) % n;
  return out;
}

Cochain2 negate_cochain(const Cochain2& a) {
  Cochain2 out = a;
  for (auto& v : out.e) v = (a.n - v) % a.n;
  return out;
}

Cochain3 standard_cyclic_omega(const FiniteGroup& g, int power) {
  int m = g.order();
  // assumes the cyclic_table layout: element i is a^i
  Cochain3 w = Cochain3::trivial(g, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) w.set(i, j, k, power * i * ((j + k) / m));
  return w;
}

}  // namespace fusioncat
