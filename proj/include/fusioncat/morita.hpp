#pragma once

#include "fusioncat/hecke.hpp"

namespace fusioncat {

struct NotAdmissibleBase : std::runtime_error {
  NotAdmissibleBase(std::string msg, std::vector<int> w)
      : std::runtime_error(std::move(msg)), witness(std::move(w)) {}
  std::vector<int> witness;
};

struct AdmissiblePair {
  Subgroup L;
  Cochain2 psi;  // normalized, d psi = omega|_L
};

/// Every subgroup with a trivializable restriction, paired with its torsor
/// representatives; deterministic order (subgroups lexicographic, then
/// representative order).
std::vector<AdmissiblePair> enumerate_admissible_pairs(const FiniteGroup& g,
                                                       const Cochain3& omega,
                                                       std::vector<EscalationEvent>* log =
                                                           nullptr);

struct ConjugacyWitness {
  int x = 0;
  Cochain1 gamma;
};

/// Searches x in element order with L = x L' x^{-1} and the class of
/// psi'^{-1} psi^x Omega_x|_{L'} trivial; returns the first witness.
std::optional<ConjugacyWitness> pairs_conjugate(const FiniteGroup& g, const Cochain3& omega,
                                                const AdmissiblePair& p,
                                                const AdmissiblePair& q);

/// Conjugacy class representatives (first pair of each class in enumeration
/// order), via greedy union-find over pairs_conjugate.
std::vector<AdmissiblePair> p_classes(const FiniteGroup& g, const Cochain3& omega,
                                      std::vector<EscalationEvent>* log = nullptr);

struct ClassificationReport {
  std::string group_name;
  std::string omega_hash;
  Subgroup K;
  std::string beta_hash;
  std::vector<AdmissiblePair> representatives;
  struct PerClass {
    bool connected = false;
    int rank_r = 0;
    bool checks_ok = false;
    std::string check_summary;
    std::string hecke_dump;
  };
  std::vector<PerClass> classes;
  std::vector<EscalationEvent> escalations;

  std::string str() const;  // deterministic, golden-file friendly
};

/// One twisted Hecke algebra per class of P(G, omega), each run through the
/// full verification suite. Throws NotAdmissibleBase when (K, beta) is not
/// admissible.
ClassificationReport classify(const PointedCat& cat, const Subgroup& k, const Cochain2& beta);

}  // namespace fusioncat
