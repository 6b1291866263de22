#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fusioncat/cochain.hpp"
#include "fusioncat/group.hpp"
#include "fusioncat/matrix.hpp"

namespace fusioncat {

/// Object of Vec_G^omega: multiplicity per grade.
struct GradedObject {
  const FiniteGroup* G = nullptr;
  std::vector<int> mult;

  GradedObject() = default;
  GradedObject(const FiniteGroup& g, std::vector<int> m) : G(&g), mult(std::move(m)) {}
  static GradedObject zero(const FiniteGroup& g) { return {g, std::vector<int>(g.order(), 0)}; }
  static GradedObject simple(const FiniteGroup& g, int x);
  static GradedObject unit(const FiniteGroup& g) { return simple(g, 0); }
  static GradedObject from_subgroup(const FiniteGroup& g, const Subgroup& s);
  int dim() const;
  bool operator==(const GradedObject& o) const { return G == o.G && mult == o.mult; }
  std::string str() const;  // printed as {g: mult}
};

/// The pointed category data: a group with a normalized 3-cochain twisting
/// the associator by omega^{-1}.
struct PointedCat {
  const FiniteGroup* G = nullptr;
  Cochain3 omega;

  PointedCat(const FiniteGroup& g, Cochain3 w) : G(&g), omega(std::move(w)) {}
  Cyc w(int a, int b, int c) const { return Cyc::root(omega.n, omega.at(a, b, c)); }
  Cyc winv(int a, int b, int c) const {
    return Cyc::root(omega.n, (omega.n - omega.at(a, b, c)) % omega.n);
  }
};

class Obj;
using ObjPtr = std::shared_ptr<const Obj>;

/// Object expression tree: a leaf (plain graded object) or a tensor pair.
/// The basis of a pair at grade x is the list of (y, i, z, j) with yz = x,
/// ordered lexicographically; all higher structure indexes through it.
class Obj {
 public:
  static ObjPtr leaf(const PointedCat* cat, GradedObject o);
  static ObjPtr tensor(const ObjPtr& a, const ObjPtr& b);

  const PointedCat* cat() const { return cat_; }
  const FiniteGroup& group() const { return *flat_.G; }
  const GradedObject& graded() const { return flat_; }
  bool is_leaf() const { return !left_; }
  const ObjPtr& left() const { return left_; }
  const ObjPtr& right() const { return right_; }
  int mult(int g) const { return flat_.mult[g]; }
  long dim() const;

  struct Block {
    int y, z;      // left and right grade
    int base;      // starting index within the grade
    int my, mz;    // multiplicities
  };
  const std::vector<Block>& blocks_at(int grade) const { return blocks_[grade]; }

  struct PairIndex {
    int y, iy, z, iz;
  };
  PairIndex decode(int grade, int idx) const;
  int encode(int grade, int y, int iy, int iz) const;

 private:
  Obj() = default;
  const PointedCat* cat_ = nullptr;
  GradedObject flat_;
  ObjPtr left_, right_;
  std::vector<std::vector<Block>> blocks_;
};

bool same_shape(const ObjPtr& a, const ObjPtr& b);
bool same_tree(const ObjPtr& a, const ObjPtr& b);

/// Grade-preserving morphism, evaluated lazily column by column. Structural
/// nodes (tensor, associator, unitors) never materialize their matrices, so
/// composites over large iterated tensor products stay cheap.
class Mor {
 public:
  Mor() = default;

  const ObjPtr& src() const { return src_; }
  const ObjPtr& dst() const { return dst_; }

  /// Image of the basis vector (grade, idx) of src as a sparse vector in the
  /// same grade of dst.
  SparseVec column(int grade, int idx) const;
  SparseVec apply(int grade, const SparseVec& v) const;

  /// Allocation-free evaluation when the column has at most one term.
  /// Returns 0 for a zero column, 1 with (out_idx, coeff) filled for a
  /// single-term column, 2 when the column has several terms (caller falls
  /// back to column()). Structural morphisms and structure-constant maps
  /// stay single-term, which keeps the large verification sweeps cheap.
  int column_mono(int grade, int idx, int& out_idx, Cyc& coeff) const;

  static Mor identity(const ObjPtr& x);
  static Mor zero(const ObjPtr& s, const ObjPtr& d);
  static Mor scalar(const ObjPtr& x, const Cyc& c);
  static Mor from_columns(const ObjPtr& s, const ObjPtr& d,
                          std::function<SparseVec(int, int)> col);  // materializes
  static Mor compose(const Mor& f, const Mor& g);  // f after g
  static Mor tensor(const Mor& f, const Mor& g);
  static Mor associator(const ObjPtr& x, const ObjPtr& y, const ObjPtr& z);
  static Mor associator_inv(const ObjPtr& x, const ObjPtr& y, const ObjPtr& z);
  static Mor left_unitor(const ObjPtr& x);        // 1 (x) X -> X
  static Mor left_unitor_inv(const ObjPtr& x);    // X -> 1 (x) X
  static Mor right_unitor(const ObjPtr& x);       // X (x) 1 -> X
  static Mor right_unitor_inv(const ObjPtr& x);   // X -> X (x) 1
  /// Identity carrier between objects with equal flat dimensions but
  /// different tree shape (basis order is preserved positionally).
  static Mor recast(const Mor& f, const ObjPtr& new_src, const ObjPtr& new_dst);

  Mor then(const Mor& f) const { return compose(f, *this); }  // f after this
  Mor materialized() const;
  Mor operator*(const Cyc& c) const;
  Mor operator+(const Mor& o) const;

  struct Witness {
    int grade = -1, idx = -1;
    std::string detail;
  };

  struct Node;  // defined in graded.cpp

 private:
  static Mor build(ObjPtr s, ObjPtr d, std::shared_ptr<const Node> n);
  ObjPtr src_, dst_;
  std::shared_ptr<const Node> node_;
};

/// Exhaustive per-basis comparison; nullopt when equal, else the first
/// differing column (lexicographic in (grade, idx)).
std::optional<Mor::Witness> morphisms_differ(const Mor& f, const Mor& g);

/// Duals in Vec_G^omega: (X*)_g = X_{g^-1} with matching basis indices.
ObjPtr dual_object(const ObjPtr& x);
Mor ev_mor(const ObjPtr& x);        // X* (x) X -> 1, scalar omega(g, g^-1, g)
Mor coev_mor(const ObjPtr& x);      // 1 -> X (x) X*
Mor ev_prime_mor(const ObjPtr& x);  // X (x) *X -> 1, scalar omega^-1(g, g^-1, g)
Mor coev_prime_mor(const ObjPtr& x);  // 1 -> *X (x) X

ObjPtr unit_object(const PointedCat& cat);
ObjPtr simple_object(const PointedCat& cat, int g);

/// Flatten a tree into a leaf with the same graded dimensions (positional
/// basis carry-over).
ObjPtr flatten(const ObjPtr& x);

}  // namespace fusioncat
