#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fusioncat/cochain.hpp"
#include "fusioncat/graded.hpp"

namespace fusioncat {

struct NotTrivializing : std::runtime_error {
  NotTrivializing(std::string msg, std::vector<int> w)
      : std::runtime_error(std::move(msg)), witness(std::move(w)) {}
  std::vector<int> witness;
};
struct NotSpecial : std::runtime_error {
  explicit NotSpecial(const std::string& msg) : std::runtime_error(msg) {}
};

/// Structured check report: per-axiom pass/fail with a witness on failure.
struct Report {
  struct Item {
    std::string name;
    bool ok = true;
    std::string witness;
  };
  std::vector<Item> items;

  void add(const std::string& name, bool ok, const std::string& witness = "");
  void add(const std::string& name, const std::optional<Mor::Witness>& diff);
  void merge(const Report& other, const std::string& prefix = "");
  bool ok() const;
  std::string str() const;  // one line per item
};

/// (Frobenius) algebra object in Vec_G^omega. Structure maps are explicit
/// morphisms over the canonical tensor bases; morphism equality means
/// entrywise scalar equality.
struct AlgebraObject {
  const PointedCat* C = nullptr;
  ObjPtr carrier;  // leaf
  Mor m;           // carrier (x) carrier -> carrier
  Mor u;           // 1 -> carrier
  std::optional<Mor> comult;     // carrier -> carrier (x) carrier
  std::optional<Mor> counit;     // carrier -> 1
  std::optional<Mor> pairing;    // carrier (x) carrier -> 1
  std::optional<Mor> copairing;  // 1 -> carrier (x) carrier
};

/// A(L, psi): requires trivializes(psi, omega, L); throws NotTrivializing with
/// the first violated triple otherwise. Comes with Delta, eps, p, q.
AlgebraObject twisted_group_algebra(const PointedCat& cat, const Subgroup& L,
                                    const Cochain2& psi);

/// p = eps . m and q = Delta . u.
std::pair<Mor, Mor> pairing_from_comult(const AlgebraObject& a);
/// Delta = (m (x) id) alpha^{-1} (id (x) q) r^{-1} and eps = p (u (x) id) l^{-1}.
std::pair<Mor, Mor> comult_from_pairing(const AlgebraObject& a);

Report check_algebra(const AlgebraObject& a);
Report check_frobenius(const AlgebraObject& a);   // coalgebra + Frobenius law
Report check_snake(const AlgebraObject& a);       // Snake Equation for (p, q)
std::optional<Cyc> check_special(const AlgebraObject& a);
int check_connected(const AlgebraObject& a);      // dim Hom(1, A)

struct SymmetricCheck {
  bool structural_ok = false;  // *A = A^* as graded objects
  bool symmetric = false;      // eps m = Omega_A, composed verbatim
  std::string witness;
};
SymmetricCheck check_symmetric(const AlgebraObject& a);
/// The closed criterion omega(g^{-1}, g, g^{-1}) = 1 for all carrier grades.
bool symmetric_criterion(const PointedCat& cat, const ObjPtr& carrier);

/// Returns Delta' = Delta with m Delta' = id and the two bimodule-map
/// equations verified; throws NotSpecial if check_special fails.
Mor separability_witness(const AlgebraObject& a);

/// (*V (x) S) (x) V for a simple V = delta_g, with multiplication contracting
/// through ev'_V in the middle. The carrier is flattened to a leaf whose
/// basis order is the tensor basis order.
AlgebraObject matrix_algebra(const AlgebraObject& s, int simple_grade);

/// Pretty structure constants "g g' -> coeff gg'" for reports.
std::string algebra_structure_constants(const AlgebraObject& a);

}  // namespace fusioncat
