#include "fusioncat/morita.hpp"

#include <map>
#include <sstream>

#include "fusioncat/io.hpp"

namespace fusioncat {

std::vector<AdmissiblePair> enumerate_admissible_pairs(const FiniteGroup& g,
                                                       const Cochain3& omega,
                                                       std::vector<EscalationEvent>* log) {
  std::vector<AdmissiblePair> out;
  for (const Subgroup& l : enumerate_subgroups(g)) {
    std::vector<Cochain2> reps;
    try {
      reps = h2_torsor_representatives(g, omega, l, log);
    } catch (const NoTrivializingCochain&) {
      continue;
    }
    for (Cochain2& psi : reps) out.push_back({l, std::move(psi)});
  }
  return out;
}

std::optional<ConjugacyWitness> pairs_conjugate(const FiniteGroup& g, const Cochain3& omega,
                                                const AdmissiblePair& p,
                                                const AdmissiblePair& q) {
  for (int x = 0; x < g.order(); ++x) {
    if (!(conjugate_subgroup(g, q.L, x) == p.L)) continue;
    // c = psi'^{-1} psi^x Omega_x restricted to L' = q.L (additive)
    Cochain2 psix = conjugate_cochain(g, p.psi, x);
    if (!(psix.L == q.L)) continue;  // defensive; implied by the subgroup check
    Cochain2 c = add_cochains(g, add_cochains(g, negate_cochain(q.psi), psix),
                              restrict_to(g, omega_conjugation(g, omega, x), q.L));
    auto gamma = cohomologous(g, c, trivial_cochain2(q.L, 1));
    if (gamma) return ConjugacyWitness{x, *gamma};
  }
  return std::nullopt;
}

std::vector<AdmissiblePair> p_classes(const FiniteGroup& g, const Cochain3& omega,
                                      std::vector<EscalationEvent>* log) {
  std::vector<AdmissiblePair> pairs = enumerate_admissible_pairs(g, omega, log);
  std::vector<int> cls(pairs.size(), -1);
  std::vector<AdmissiblePair> reps;
  for (size_t i = 0; i < pairs.size(); ++i) {
    bool merged = false;
    for (size_t r = 0; r < reps.size() && !merged; ++r) {
      if (pairs_conjugate(g, omega, reps[r], pairs[i])) {
        cls[i] = static_cast<int>(r);
        merged = true;
      }
    }
    if (!merged) {
      cls[i] = static_cast<int>(reps.size());
      reps.push_back(pairs[i]);
    }
  }
  return reps;
}

std::string ClassificationReport::str() const {
  std::ostringstream os;
  os << "classification group " << group_name << " omega " << omega_hash << " K "
     << K.id_string() << " beta " << beta_hash << "\n";
  os << "classes " << classes.size() << "\n";
  for (const auto& e : escalations)
    os << "escalation " << e.what << " " << e.from << " -> " << e.to << "\n";
  for (size_t i = 0; i < classes.size(); ++i) {
    os << "CLASS " << i << " L=" << representatives[i].L.id_string()
       << " psi=" << representatives[i].psi.hash()
       << " connected=" << (classes[i].connected ? "true" : "false")
       << " r=" << classes[i].rank_r << "\n";
    os << classes[i].hecke_dump;
  }
  return os.str();
}

ClassificationReport classify(const PointedCat& cat, const Subgroup& k,
                              const Cochain2& beta) {
  const FiniteGroup& g = *cat.G;
  CocycleWitness adm = trivializes_witness(g, beta, cat.omega);
  if (!adm.ok) {
    std::ostringstream os;
    os << "(K, beta) is not admissible: d beta != omega on {" << k.id_string() << "}";
    throw NotAdmissibleBase(os.str(), adm.tuple);
  }
  ClassificationReport rep;
  rep.group_name = g.name();
  rep.omega_hash = cochain3_hash(cat.omega);
  rep.K = k;
  rep.beta_hash = beta.hash();
  rep.representatives = p_classes(g, cat.omega, &rep.escalations);

  HeckeContext ctx(cat, k, beta);
  for (const AdmissiblePair& pr : rep.representatives) {
    HeckeAlgebra hk = hecke_closed_form(ctx, pr.L, pr.psi);
    ClassificationReport::PerClass pc;
    Report checks = hecke_checks(hk);
    pc.checks_ok = checks.ok();
    pc.check_summary = checks.str();
    ConnectednessData cd = connectedness_data(hk);
    pc.connected = cd.dim_hom == 1;
    pc.rank_r = cd.rank_r;
    pc.hecke_dump = hecke_dump(hk);
    rep.classes.push_back(std::move(pc));
  }
  return rep;
}

}  // namespace fusioncat
