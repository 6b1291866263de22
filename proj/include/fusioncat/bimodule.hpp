#pragma once

#include "fusioncat/algebra.hpp"
#include "fusioncat/graded.hpp"
#include "fusioncat/matrix.hpp"

namespace fusioncat {

/// A-bimodule in Vec_G^omega. The carrier may be any object tree.
struct Bimodule {
  const AlgebraObject* A = nullptr;
  ObjPtr carrier;
  Mor lambda;  // A.carrier (x) carrier -> carrier
  Mor rho;     // carrier (x) A.carrier -> carrier
};

/// Both module axioms plus the bimodule compatibility, by matrix composition.
Report bimodule_check(const Bimodule& m);

/// A over itself via its multiplication.
Bimodule regular_bimodule(const AlgebraObject& a);

/// M (x)_A N realized as the cokernel of rho_M (x) id - (id (x) lambda_N) alpha
/// through the generic quotient-with-section machinery (per grade). pi and
/// sigma satisfy pi sigma = id; the induced actions satisfy the two defining
/// equations, which are re-checked at construction time.
struct TensorOverA {
  ObjPtr object;   // quotient leaf
  ObjPtr ambient;  // pair(M.carrier, N.carrier)
  Mor pi;          // ambient -> object
  Mor sigma;       // object -> ambient
  Bimodule bimod;  // induced bimodule structure on object

  /// Reduce an ambient vector modulo the relation span (pivot normal form).
  SparseVec reduce(int grade, const SparseVec& v) const;
  std::shared_ptr<std::vector<QuotientBuilder>> reducers;  // per grade
};

TensorOverA tensor_over_A(const Bimodule& m, const Bimodule& n);

/// Lift a map defined on the ambient tensor through the quotient:
/// returns f with f pi = tilde, computed as tilde sigma and validated
/// against every ambient basis vector (well-definedness check).
Mor lift_through_quotient(const TensorOverA& t, const Mor& tilde);

/// alpha^A with its defining equation validated when `validate` is set
/// (the validation composes over the full triple tensor basis).
struct AssocA {
  TensorOverA xy, yz, xy_z, x_yz;
  Mor alpha;  // xy_z.object -> x_yz.object
};
AssocA assoc_A(const Bimodule& x, const Bimodule& y, const Bimodule& z,
               bool validate = true);

/// l^A = lambda sigma and r^A = rho sigma for the quotients A (x)_A X and
/// X (x)_A A; validated against l^A pi = lambda, r^A pi = rho.
Mor left_unitor_A(const Bimodule& x, const TensorOverA& ax);
Mor right_unitor_A(const Bimodule& x, const TensorOverA& xa);

/// Basis of Hom_{A,A}(M, N): grade-preserving maps commuting with both
/// actions, solved as a linear system; deterministic ordering.
std::vector<Mor> hom_bimodules(const Bimodule& m, const Bimodule& n);

}  // namespace fusioncat
