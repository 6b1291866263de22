// Command-line front end: load groups and cocycles, verify the categorical
// axioms, build twisted group algebras and twisted Hecke algebras, and emit
// the Morita classification as a deterministic report.
//
// Exit codes: 0 success, 1 semantic failure (with a witness in the report),
// 2 input error.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "fusioncat/algebra.hpp"
#include "fusioncat/io.hpp"
#include "fusioncat/morita.hpp"

using namespace fusioncat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;

struct Session {
  FiniteGroup group;
  Cochain3 omega;
};

Session load_session(const std::string& group_file, const std::string& omega_file,
                     bool omega_trivial) {
  FiniteGroup group = parse_group_file(read_file(group_file));
  Cochain3 omega = Cochain3::trivial(group);
  if (!omega_trivial && !omega_file.empty()) {
    auto parsed = parse_cochain_file(read_file(omega_file), group);
    if (!std::holds_alternative<Cochain3>(parsed))
      throw ParseError("omega file must contain a 3-cochain");
    omega = std::get<Cochain3>(parsed);
  }
  return Session{std::move(group), std::move(omega)};
}

Subgroup parse_ids(const FiniteGroup& g, const std::string& ids) {
  std::vector<int> elems;
  std::stringstream ss(ids);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    int v = std::stoi(tok);
    if (v < 0 || v >= g.order()) throw ParseError("element id out of range: " + tok);
    elems.push_back(v);
  }
  try {
    return Subgroup(g, elems);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad subgroup: ") + e.what());
  }
}

Cochain2 load_psi(const Session& s, const Subgroup& l, const std::string& file, bool solve,
                  const std::string& what) {
  if (solve) {
    auto psi = solve_trivializing_cochain(s.group, s.omega, l);
    if (!psi)
      throw NotTrivializing(
          "no trivializing cochain for " + what + " on {" + l.id_string() + "}", {});
    return *psi;
  }
  if (file.empty()) throw ParseError(what + ": give a cochain file or --solve-" + what);
  auto parsed = parse_cochain_file(read_file(file), s.group);
  if (!std::holds_alternative<Cochain2>(parsed))
    throw ParseError(what + " file must contain a 2-cochain");
  return restrict_to(s.group, std::get<Cochain2>(parsed), l);
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    write_file(out_path, content);
}

int cmd_verify(const Session& s) {
  Report rep;
  rep.add("group axioms", true);  // validated while parsing
  rep.add("omega normalized", s.omega.is_normalized());
  CocycleWitness w = is_3cocycle(s.group, s.omega);
  std::ostringstream wit;
  if (!w.ok) {
    wit << "quadruple (";
    for (size_t i = 0; i < w.tuple.size(); ++i) wit << (i ? "," : "") << w.tuple[i];
    wit << ")";
  }
  rep.add("3-cocycle condition", w.ok, wit.str());
  bool pentagon = true;
  std::string pentagon_witness;
  if (w.ok) {
    PointedCat cat(s.group, s.omega);
    for (int a = 0; a < s.group.order() && pentagon; ++a)
      for (int b = 0; b < s.group.order() && pentagon; ++b)
        for (int c = 0; c < s.group.order() && pentagon; ++c)
          for (int d = 0; d < s.group.order() && pentagon; ++d) {
            ObjPtr xa = simple_object(cat, a), xb = simple_object(cat, b);
            ObjPtr xc = simple_object(cat, c), xd = simple_object(cat, d);
            Mor top = Mor::associator(Obj::tensor(xa, xb), xc, xd)
                          .then(Mor::associator(xa, xb, Obj::tensor(xc, xd)));
            Mor bottom =
                Mor::tensor(Mor::associator(xa, xb, xc), Mor::identity(xd))
                    .then(Mor::associator(xa, Obj::tensor(xb, xc), xd))
                    .then(Mor::tensor(Mor::identity(xa), Mor::associator(xb, xc, xd)));
            if (morphisms_differ(top, bottom)) {
              pentagon = false;
              std::ostringstream os;
              os << "simples (" << a << "," << b << "," << c << "," << d << ")";
              pentagon_witness = os.str();
            }
          }
  } else {
    pentagon = false;
    pentagon_witness = "skipped: not a 3-cocycle";
  }
  rep.add("pentagon axiom", pentagon, pentagon_witness);
  std::cout << rep.str();
  return rep.ok() ? kExitOk : kExitCheckFailure;
}

int cmd_build_group_algebra(const Session& s, const Subgroup& l, const Cochain2& psi,
                            const std::string& out) {
  PointedCat cat(s.group, s.omega);
  AlgebraObject a = twisted_group_algebra(cat, l, psi);
  Report rep;
  rep.merge(check_algebra(a), "algebra: ");
  rep.merge(check_frobenius(a), "frobenius: ");
  rep.merge(check_snake(a), "snake: ");
  auto phi = check_special(a);
  rep.add("special", phi.has_value(), phi ? "" : "m Delta != id or eps u not scalar");
  rep.add("connected", check_connected(a) == 1);
  std::ostringstream os;
  os << "group-algebra group " << s.group.name() << " L " << l.id_string() << " modulus "
     << psi.n << "\n";
  os << algebra_structure_constants(a);
  os << rep.str();
  emit(out, os.str());
  return rep.ok() ? kExitOk : kExitCheckFailure;
}

int cmd_build_hecke(const Session& s, const Subgroup& k, const Cochain2& beta,
                    const Subgroup& l, const Cochain2& psi, const std::string& out) {
  PointedCat cat(s.group, s.omega);
  HeckeContext ctx(cat, k, beta);
  HeckeAlgebra hk = hecke_closed_form(ctx, l, psi);
  Report rep = hecke_checks(hk);
  rep.merge(functor_oracle_check(ctx, hk), "functor oracle: ");
  ConnectednessData cd = connectedness_data(hk);
  std::ostringstream os;
  os << hecke_dump(hk);
  os << "dimHom " << cd.dim_hom << " rank " << cd.rank_r << "\n";
  os << rep.str();
  emit(out, os.str());
  return rep.ok() ? kExitOk : kExitCheckFailure;
}

int cmd_check_hecke(const Session& s, const Subgroup& k, const Cochain2& beta,
                    const Subgroup& l, const Cochain2& psi) {
  PointedCat cat(s.group, s.omega);
  HeckeContext ctx(cat, k, beta);
  HeckeAlgebra hk = hecke_closed_form(ctx, l, psi);
  Report rep = hecke_checks(hk);
  std::cout << rep.str();
  return rep.ok() ? kExitOk : kExitCheckFailure;
}

int cmd_classify(const Session& s, const Subgroup& k, const Cochain2& beta,
                 const std::string& out) {
  PointedCat cat(s.group, s.omega);
  ClassificationReport rep = classify(cat, k, beta);
  emit(out, rep.str());
  std::cout << rep.classes.size() << "\n";
  bool all_ok = true;
  for (const auto& c : rep.classes) all_ok = all_ok && c.checks_ok;
  return all_ok ? kExitOk : kExitCheckFailure;
}

int cmd_classify_sweep(const Session& s, const Subgroup& k, const std::string& out) {
  // one classification per H^3 representative for which (K, beta) is
  // admissible; prints a table of class counts
  std::ostringstream os;
  auto reps = h3_class_representatives(s.group, s.group.order());
  os << "sweep group " << s.group.name() << " K " << k.id_string() << " omegas "
     << reps.size() << "\n";
  for (size_t i = 0; i < reps.size(); ++i) {
    PointedCat cat(s.group, reps[i]);
    auto beta = solve_trivializing_cochain(s.group, reps[i], k);
    if (!beta) {
      os << "omega " << i << " hash " << cochain3_hash(reps[i]) << " inadmissible\n";
      continue;
    }
    auto classes = p_classes(s.group, reps[i]);
    os << "omega " << i << " hash " << cochain3_hash(reps[i]) << " P " << classes.size()
       << "\n";
  }
  emit(out, os.str());
  return kExitOk;
}

int cmd_simples(const Session& s, const Subgroup& k) {
  auto labels = simple_object_labels(s.group, k);
  for (const auto& lbl : labels) {
    std::cout << "coset " << lbl.rep << " stabilizer " << lbl.stabilizer.id_string()
              << " transversal ";
    for (size_t i = 0; i < lbl.transversal.size(); ++i)
      std::cout << (i ? "," : "") << lbl.transversal[i];
    std::cout << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with twisted group algebras and twisted Hecke algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string group_file, omega_file, out_file;
  bool omega_trivial = false;
  app.add_option("--group", group_file, "group Cayley table file")->required();
  app.add_option("--omega", omega_file, "3-cocycle file");
  app.add_flag("--omega-trivial", omega_trivial, "use the trivial 3-cocycle");
  app.add_option("--out", out_file, "output file (stdout if omitted)");

  auto* verify = app.add_subcommand("verify", "validate the group, cocycle and pentagon");

  auto* build = app.add_subcommand("build", "build an algebra and run its checks");
  std::string kind, l_ids, k_ids, psi_file, beta_file;
  bool solve_psi = false, solve_beta = false;
  build->add_option("kind", kind, "group-algebra | hecke")->required();
  build->add_option("--L", l_ids, "subgroup L as comma-separated ids")->required();
  build->add_option("--K", k_ids, "subgroup K as comma-separated ids");
  build->add_option("--psi", psi_file, "2-cochain file for psi");
  build->add_flag("--solve-psi", solve_psi, "solve for psi deterministically");
  build->add_option("--beta", beta_file, "2-cochain file for beta");
  build->add_flag("--solve-beta", solve_beta, "solve for beta deterministically");

  auto* check = app.add_subcommand("check-hecke", "run the verification suite only");
  std::string cl_ids, ck_ids, cpsi_file, cbeta_file;
  bool csolve_psi = false, csolve_beta = false;
  check->add_option("--L", cl_ids)->required();
  check->add_option("--K", ck_ids)->required();
  check->add_option("--psi", cpsi_file);
  check->add_flag("--solve-psi", csolve_psi);
  check->add_option("--beta", cbeta_file);
  check->add_flag("--solve-beta", csolve_beta);

  auto* classify_cmd = app.add_subcommand("classify", "emit the Morita classification");
  std::string mk_ids, mbeta_file;
  bool msolve_beta = false, sweep_omega = false;
  classify_cmd->add_option("--K", mk_ids)->required();
  classify_cmd->add_option("--beta", mbeta_file);
  classify_cmd->add_flag("--solve-beta", msolve_beta);
  classify_cmd->add_flag("--sweep-omega", sweep_omega,
                         "count classes for every H^3 representative");

  auto* simples = app.add_subcommand("simples", "simple-object labels for K");
  std::string sk_ids;
  simples->add_option("--K", sk_ids)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    Session s = load_session(group_file, omega_file, omega_trivial);
    if (app.got_subcommand(verify)) return cmd_verify(s);
    if (app.got_subcommand(build)) {
      Subgroup l = parse_ids(s.group, l_ids);
      Cochain2 psi = load_psi(s, l, psi_file, solve_psi, "psi");
      if (kind == "group-algebra") return cmd_build_group_algebra(s, l, psi, out_file);
      if (kind == "hecke") {
        if (k_ids.empty()) throw ParseError("hecke build requires --K");
        Subgroup k = parse_ids(s.group, k_ids);
        Cochain2 beta = load_psi(s, k, beta_file, solve_beta, "beta");
        return cmd_build_hecke(s, k, beta, l, psi, out_file);
      }
      throw ParseError("unknown build kind: " + kind);
    }
    if (app.got_subcommand(check)) {
      Subgroup l = parse_ids(s.group, cl_ids);
      Subgroup k = parse_ids(s.group, ck_ids);
      Cochain2 psi = load_psi(s, l, cpsi_file, csolve_psi, "psi");
      Cochain2 beta = load_psi(s, k, cbeta_file, csolve_beta, "beta");
      return cmd_check_hecke(s, k, beta, l, psi);
    }
    if (app.got_subcommand(classify_cmd)) {
      Subgroup k = parse_ids(s.group, mk_ids);
      if (sweep_omega) return cmd_classify_sweep(s, k, out_file);
      Cochain2 beta = load_psi(s, k, mbeta_file, msolve_beta, "beta");
      return cmd_classify(s, k, beta, out_file);
    }
    if (app.got_subcommand(simples)) return cmd_simples(s, parse_ids(s.group, sk_ids));
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const GroupValidationError& e) {
    std::cerr << "FAIL " << e.what() << "\n";
    return kExitCheckFailure;
  } catch (const NotTrivializing& e) {
    std::cerr << "FAIL NotTrivializing: " << e.what() << "\n";
    return kExitCheckFailure;
  } catch (const NotAdmissibleBase& e) {
    std::cerr << "FAIL NotAdmissibleBase: " << e.what() << "\n";
    return kExitCheckFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitOk;
}
