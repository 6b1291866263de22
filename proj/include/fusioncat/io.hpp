#pragma once

#include <string>
#include <variant>

#include "fusioncat/cochain.hpp"
#include "fusioncat/group.hpp"
#include "fusioncat/hecke.hpp"

namespace fusioncat {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

/// Group file: line 1 "group <name> order <N>", then N rows of N indices.
FiniteGroup parse_group_file(const std::string& text);
std::string group_to_string(const FiniteGroup& g);

/// Cocycle file: "cochain <arity> modulus <n> group <name>", then sparse
/// lines "i j k e" (arity 3) or "i j e" (arity 2); missing entries are 0.
/// 2-cochains are read on the full group and restricted by the caller.
std::variant<Cochain2, Cochain3> parse_cochain_file(const std::string& text,
                                                    const FiniteGroup& g);
std::string cochain3_to_string(const Cochain3& w, const std::string& group_name);
std::string cochain2_to_string(const Cochain2& c, const std::string& group_name);

std::string cochain3_hash(const Cochain3& w);

/// Deterministic structure-constant dump:
///   hecke group <name> K <ids> L <ids> modulus <n>
///   m f g k f' g' k' -> exp num den f'' g'' k''
/// plus u / Delta / eps sections. Coefficients print as (num/den) zeta_n^exp.
std::string hecke_dump(const HeckeAlgebra& hk);

/// Carrier basis helpers for the (A (x) B) (x) A indexing.
struct HeckeBasisLabel {
  int f, g, k;
};
HeckeBasisLabel hecke_basis_decode(const ObjPtr& carrier, int grade, int idx);
int hecke_basis_encode(const ObjPtr& carrier, const FiniteGroup& g, int f, int gg, int k);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace fusioncat
