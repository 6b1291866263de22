#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fusioncat {

enum class GroupDefect { NotClosed, NotAssociative, NoIdentityAtZero, MissingInverse };

struct GroupValidationError : std::runtime_error {
  GroupValidationError(GroupDefect d, std::vector<int> w, const std::string& msg)
      : std::runtime_error(msg), defect(d), witness(std::move(w)) {}
  GroupDefect defect;
  std::vector<int> witness;
};

/// Finite group given by its Cayley table. The identity sits at index 0.
class FiniteGroup {
 public:
  /// Validates the table (permutation rows/columns, identity at 0,
  /// associativity, inverses) and throws GroupValidationError naming the
  /// first violated axiom otherwise.
  static FiniteGroup validate(std::string name, std::vector<std::vector<int>> table);

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  int mul(int i, int j) const { return table_[i * order_ + j]; }
  int inv(int i) const { return inv_[i]; }
  int conj(int x, int s) const { return mul(mul(x, s), inv(x)); }  // x s x^-1
  bool is_abelian() const;
  int exponent() const;
  int element_order(int g) const;

 private:
  FiniteGroup() = default;
  std::string name_;
  int order_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
};

/// Subgroup as a strictly sorted element list containing 0.
struct Subgroup {
  std::vector<int> elems;
  std::vector<int> pos;  // element -> position in elems, or -1

  Subgroup() = default;
  Subgroup(const FiniteGroup& g, std::vector<int> elements);  // validates closure

  int size() const { return static_cast<int>(elems.size()); }
  bool contains(int x) const { return pos[x] >= 0; }
  int position(int x) const { return pos[x]; }
  bool operator==(const Subgroup& o) const { return elems == o.elems; }
  bool operator<(const Subgroup& o) const { return elems < o.elems; }
  std::string id_string() const;  // "0,1,3"
};

std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g);
Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& s, int x);
int conjugate_element(const FiniteGroup& g, int x, int s);
Subgroup full_subgroup(const FiniteGroup& g);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<int>& gens);
Subgroup intersect(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

struct DoubleCoset {
  int rep;                  // minimal element index in the class
  std::vector<int> elems;   // sorted
};

/// K \ G / K partition; one entry per class, reps ascending.
std::vector<DoubleCoset> double_cosets(const FiniteGroup& g, const Subgroup& k);

/// K intersected with g^{-1} K g.
Subgroup stabilizer(const FiniteGroup& g, const Subgroup& k, int gg);

/// Minimal-representative transversal of K / H for H <= K.
std::vector<int> left_coset_transversal(const FiniteGroup& g, const Subgroup& k,
                                        const Subgroup& h);

// Canonical Cayley tables used by the tests and the bundled data files.
std::vector<std::vector<int>> cyclic_table(int n);
std::vector<std::vector<int>> product_table(const std::vector<std::vector<int>>& a,
                                            const std::vector<std::vector<int>>& b);
std::vector<std::vector<int>> dihedral8_table();   // D8: r^4 = s^2 = e, srs = r^-1
std::vector<std::vector<int>> quaternion8_table();
std::vector<std::vector<int>> symmetric3_table();

}  // namespace fusioncat
