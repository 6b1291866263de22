#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fusioncat/group.hpp"

namespace fusioncat {

struct NoTrivializingCochain : std::runtime_error {
  explicit NoTrivializingCochain(const std::string& msg) : std::runtime_error(msg) {}
};

/// Normalized 1-cochain on a subgroup, valued in mu_n as additive exponents.
struct Cochain1 {
  Subgroup L;
  int n = 1;
  std::vector<int> e;  // indexed by position in L; e[pos(identity)] = 0

  int at_pos(int i) const { return e[i]; }
  int at(int g) const { return e[L.position(g)]; }
};

/// Normalized 2-cochain on a subgroup.
struct Cochain2 {
  Subgroup L;
  int n = 1;
  std::vector<int> e;  // size |L|^2, row-major over positions

  int at_pos(int i, int j) const { return e[i * L.size() + j]; }
  int at(int g, int h) const { return at_pos(L.position(g), L.position(h)); }
  void set_pos(int i, int j, int v) { e[i * L.size() + j] = ((v % n) + n) % n; }
  bool is_normalized() const;
  Cochain2 lifted(int m) const;  // to modulus m (n | m)
  std::string hash() const;      // deterministic content hash for reports
};

/// Normalized 3-cochain on the whole group.
struct Cochain3 {
  int order = 0;  // |G|
  int n = 1;
  std::vector<int> e;  // size |G|^3

  int at(int a, int b, int c) const { return e[(a * order + b) * order + c]; }
  void set(int a, int b, int c, int v) {
    e[(a * order + b) * order + c] = ((v % n) + n) % n;
  }
  bool is_normalized() const;
  Cochain3 lifted(int m) const;
  static Cochain3 trivial(const FiniteGroup& g, int n = 1);
};

struct CocycleWitness {
  bool ok = true;
  std::vector<int> tuple;  // first violated tuple, element ids
};

CocycleWitness is_3cocycle(const FiniteGroup& g, const Cochain3& w);
CocycleWitness is_2cocycle_on(const FiniteGroup& g, const Cochain2& psi);

/// d(psi) as an exponent table over L^3 (positions), at psi's modulus.
std::vector<int> d2(const FiniteGroup& g, const Cochain2& psi);

/// d(gamma) as a Cochain2 on gamma's domain.
Cochain2 d1(const FiniteGroup& g, const Cochain1& gamma);

/// dpsi = omega restricted to L^3, compared at the lcm modulus.
bool trivializes(const FiniteGroup& g, const Cochain2& psi, const Cochain3& omega);
CocycleWitness trivializes_witness(const FiniteGroup& g, const Cochain2& psi,
                                   const Cochain3& omega);

struct EscalationEvent {
  std::string what;
  int from = 0, to = 0;
};

/// Normalized psi with d(psi) = omega|_L, solving over mu_n and escalating the
/// modulus by factors 2..|G| before giving up. Escalations are appended to
/// `log` when given.
std::optional<Cochain2> solve_trivializing_cochain(const FiniteGroup& g, const Cochain3& omega,
                                                   const Subgroup& L,
                                                   std::vector<EscalationEvent>* log = nullptr);

/// Representatives of {psi : d psi = omega|_L} modulo k^x-coboundaries: the
/// base solution shifted by one representative per H^2 class (computed over
/// mu_N, N = exp(L) * solution modulus, then deduplicated through
/// `cohomologous`). Throws NoTrivializingCochain when there is no solution.
std::vector<Cochain2> h2_torsor_representatives(const FiniteGroup& g, const Cochain3& omega,
                                                const Subgroup& L,
                                                std::vector<EscalationEvent>* log = nullptr);

/// gamma with d(gamma) = psi - psi' (escalating modulus), or nullopt when the
/// classes differ in H^2(L, k^x).
std::optional<Cochain1> cohomologous(const FiniteGroup& g, const Cochain2& psi,
                                     const Cochain2& psi2);

/// Omega_x(h1,h2) = omega(xh1, xh2, x) + omega(x, h1, h2) - omega(xh1, x, h2)
/// as a 2-cochain on the full group (conjugation written as xh = x h x^-1).
Cochain2 omega_conjugation(const FiniteGroup& g, const Cochain3& omega, int x);

/// psi^x(h1,h2) = psi(xh1, xh2) on the transported domain x^-1 dom(psi) x.
Cochain2 conjugate_cochain(const FiniteGroup& g, const Cochain2& psi, int x);

Cochain2 restrict_to(const FiniteGroup& g, const Cochain2& big, const Subgroup& L);
Cochain2 trivial_cochain2(const Subgroup& L, int n = 1);
Cochain2 add_cochains(const FiniteGroup& g, const Cochain2& a, const Cochain2& b);
Cochain2 negate_cochain(const Cochain2& a);

/// H^2(L, mu_n) class representatives as normalized 2-cocycles (zero first).
std::vector<Cochain2> h2_class_representatives(const FiniteGroup& g, const Subgroup& L, int n);

/// H^3(G, mu_n) class representatives as normalized 3-cocycles (zero first).
std::vector<Cochain3> h3_class_representatives(const FiniteGroup& g, int n);

/// The standard generator omega(a^i, a^j, a^k) = zeta_m^{i*floor((j+k)/m)} on
/// the cyclic group of order m built by cyclic_table.
Cochain3 standard_cyclic_omega(const FiniteGroup& g, int power = 1);

}  // namespace fusioncat
