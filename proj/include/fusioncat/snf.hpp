#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace fusioncat {

/// Dense integer matrix, row major.
struct IntMat {
  int rows = 0, cols = 0;
  std::vector<mpz_class> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, mpz_class(0)) {}
  mpz_class& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const mpz_class& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  static IntMat identity(int n);
};

struct SnfOptions {
  bool want_v = false;     // V with A*V column-reduced (U A V = D)
  bool want_vinv = false;  // V^{-1}
  bool want_uinv = false;  // U^{-1}
};

/// Smith normal form U A V = diag(d) with unimodular U, V. Row operations are
/// mirrored onto `co_rows` if given (each co_row transforms like a row of A,
/// i.e. co <- U co). The diagonal satisfies the divisibility chain and
/// entries are nonnegative.
struct Snf {
  std::vector<mpz_class> d;  // length min(rows, cols)
  int rank = 0;
  IntMat v, vinv, uinv;  // filled per options
};

Snf smith_normal_form(IntMat a, const SnfOptions& opt, IntMat* co_rows = nullptr);

/// Solve A x = b (mod n) over Z/n; components of the result lie in [0, n).
/// Deterministic (smallest nonnegative solution of each diagonal equation,
/// free variables zero).
std::optional<std::vector<int>> solve_mod(const IntMat& a, const std::vector<int>& b, int n);

/// Generators (with their orders) of the solution group {x : A x = 0 mod n}
/// inside (Z/n)^cols, plus the data needed to take coordinates of kernel
/// elements relative to those generators.
struct KernelModN {
  int n = 0;
  std::vector<std::vector<int>> gens;  // each of length cols, entries mod n
  std::vector<mpz_class> orders;       // same length as gens, each > 1
  // internals for coordinates:
  IntMat vinv;
  std::vector<int> vinv_mod;    // vinv reduced mod n, row major
  std::vector<mpz_class> lift;  // n / order_i scaling per generator
  std::vector<int> gen_col;     // column of V the generator came from

  /// Coordinates t with x = sum t_i * gens[i] (mod n); requires x in kernel.
  std::vector<mpz_class> coordinates(const std::vector<int>& x) const;
};

KernelModN kernel_mod(const IntMat& a, int n);

/// Representatives of coker(span of the columns of `image`) inside the group
/// generated by `kernel` (a finite abelian group): one representative per
/// class, deterministic order, the zero class first. Each representative is
/// returned as a vector in (Z/n)^dim.
std::vector<std::vector<int>> quotient_class_representatives(const KernelModN& kernel,
                                                             const IntMat& image_cols);

}  // namespace fusioncat
