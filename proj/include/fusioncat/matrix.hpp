#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fusioncat/cyclotomic.hpp"

namespace fusioncat {

/// Sparse vector: sorted (index, coefficient) pairs, no zero coefficients.
using SparseVec = std::vector<std::pair<int, Cyc>>;

SparseVec sparse_normalize(SparseVec v);           // sort, merge, drop zeros
SparseVec sparse_add(const SparseVec& a, const SparseVec& b);
SparseVec sparse_scale(const SparseVec& a, const Cyc& c);
SparseVec sparse_sub(const SparseVec& a, const SparseVec& b);

/// Exact matrix over Q(zeta_n), stored as sparse rows. Rank, solving and the
/// quotient construction use first-pivot Gaussian elimination; there is no
/// pivoting heuristic, so results are deterministic.
class CycMatrix {
 public:
  CycMatrix() : rows_(0), cols_(0) {}
  CycMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const SparseVec& row(int i) const { return data_[i]; }
  void set_row(int i, SparseVec v) { data_[i] = sparse_normalize(std::move(v)); }
  void set(int i, int j, const Cyc& c);
  Cyc at(int i, int j) const;

  static CycMatrix identity(int n);
  CycMatrix operator*(const CycMatrix& o) const;
  CycMatrix operator+(const CycMatrix& o) const;
  CycMatrix operator-(const CycMatrix& o) const;
  bool operator==(const CycMatrix& o) const;
  CycMatrix transpose() const;
  bool is_zero() const;

  SparseVec apply(const SparseVec& v) const;  // matrix * column vector

 private:
  int rows_, cols_;
  std::vector<SparseVec> data_;
};

int rank(const CycMatrix& m);

/// Some x with M x = b, or nullopt if the system is inconsistent. Free
/// variables are set to zero; deterministic.
std::optional<std::vector<Cyc>> solve(const CycMatrix& m, const std::vector<Cyc>& b);

/// Deterministic basis of {x : M x = 0} (one vector per free column of the
/// row-reduced form, ascending).
std::vector<std::vector<Cyc>> nullspace(const CycMatrix& m);

struct QuotientWithSection {
  CycMatrix proj;  // ambient_dim -> q
  CycMatrix sect;  // q -> ambient_dim, proj * sect = identity
  int q = 0;
};

/// Cokernel of the span of `relations` (given as columns in an ambient space
/// of dimension d) together with the pivot-complement section. proj annuls
/// every relation column and proj*sect is the identity on the quotient.
QuotientWithSection quotient_with_section(int ambient_dim, const CycMatrix& relations);

/// Streaming form of the same computation: relations are fed one at a time
/// (as sparse columns) and reduced incrementally. Pivot rows are kept lazily
/// reduced and resolved with path compression on demand, so chain-shaped
/// relation sets (the typical coequalizer input, at most two basis vectors
/// per relation) stay near-linear. The fully resolved rows form the unique
/// reduced echelon form, so results do not depend on resolution order.
class QuotientBuilder {
 public:
  explicit QuotientBuilder(int ambient_dim);
  void add_relation(const SparseVec& rel);
  QuotientWithSection finish();
  int ambient_dim() const { return dim_; }

  /// Reduce a vector modulo the relation span (pivot normal form).
  SparseVec reduce(const SparseVec& v) const;

  bool is_pivot(int col) const { return pivot_of_[col] >= 0; }
  /// Fully resolved echelon rows (forces resolution).
  const std::vector<std::pair<int, SparseVec>>& pivot_rows() const;

 private:
  void ensure_resolved(int col) const;
  SparseVec reduce_full(SparseVec row) const;
  int dim_;
  std::vector<int> pivot_of_;  // col -> pivot slot or -1
  mutable std::vector<std::pair<int, SparseVec>> pivots_;  // (col, row), lazily reduced
};

}  // namespace fusioncat
