#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

namespace fusioncat {

/// Root of unity zeta_n^e, stored as (modulus, exponent) with 0 <= e < n.
struct RootOfUnity {
  int n = 1;
  int e = 0;

  RootOfUnity() = default;
  RootOfUnity(int modulus, int exponent);

  RootOfUnity operator*(const RootOfUnity& o) const;
  RootOfUnity inverse() const;
  bool operator==(const RootOfUnity& o) const = default;
};

/// Shared immutable data for one cyclotomic field Q(zeta_n): the cyclotomic
/// polynomial Phi_n, reduction rows for x^k with k >= phi(n), and the
/// canonical coefficient vector of every power of zeta_n.
class CycField {
 public:
  static const CycField* get(int n);

  int n() const { return n_; }
  int degree() const { return phi_; }

  // x^k mod Phi_n as a vector of length phi(n), for 0 <= k < 2*phi(n).
  const std::vector<mpq_class>& power_row(int k) const { return rows_[k]; }
  // canonical coefficients of zeta_n^e, 0 <= e < n
  const std::vector<mpq_class>& root_vector(int e) const { return roots_[e]; }
  int root_support(int e) const { return root_nnz_[e]; }
  const std::vector<mpz_class>& cyclotomic_poly() const { return poly_; }

 private:
  explicit CycField(int n);
  int n_ = 1;
  int phi_ = 1;
  std::vector<mpz_class> poly_;  // monic, degree phi(n)
  std::vector<std::vector<mpq_class>> rows_;
  std::vector<std::vector<mpq_class>> roots_;
  std::vector<int> root_nnz_;
};

/// Exact element of a cyclotomic field Q(zeta_n).
///
/// Three internal forms, kept canonical so that operator== is structural:
///  - rational:  n == 1, value r
///  - monomial:  r * zeta_n^e with n >= 3, 1 <= e < n, gcd(e, n) = 1, r != 0
///  - general:   coefficient vector of length phi(n) modulo Phi_n, not
///               proportional to any single root of unity
/// Monomials are normalized to the primitive modulus, so equal values always
/// compare equal regardless of how they were produced.
class Cyc {
 public:
  Cyc() : n_(1), e_(0), r_(0) {}
  Cyc(long v) : n_(1), e_(0), r_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Cyc(const mpq_class& v) : n_(1), e_(0), r_(v) { r_.canonicalize(); }
  static Cyc rational(long num, long den);
  static Cyc root(int n, long e);              // zeta_n^e
  static Cyc root(const RootOfUnity& r);       // embed_root
  static Cyc monomial(const mpq_class& coeff, int n, long e);
  static Cyc zero() { return Cyc(); }
  static Cyc one() { return Cyc(1); }

  bool is_zero() const { return n_ == 1 && e_ == 0 && r_ == 0 && v_.empty(); }
  bool is_rational() const { return n_ == 1; }
  bool is_monomial() const { return v_.empty(); }  // includes rationals
  const mpq_class& rational_value() const { return r_; }
  int modulus() const { return n_; }
  int exponent() const { return e_; }
  const mpq_class& coeff() const { return r_; }

  Cyc operator+(const Cyc& o) const;
  Cyc operator-(const Cyc& o) const;
  Cyc operator*(const Cyc& o) const;
  Cyc operator-() const;
  Cyc inverse() const;
  Cyc& operator+=(const Cyc& o) { *this = *this + o; return *this; }
  Cyc& operator*=(const Cyc& o) { *this = *this * o; return *this; }

  bool operator==(const Cyc& o) const;
  bool operator!=(const Cyc& o) const { return !(*this == o); }

  /// Coefficient vector in Q(zeta_m); m must be a multiple of the modulus.
  std::vector<mpq_class> coeff_vector(int m) const;

  /// Exponent of this value as coeff * zeta_m^e at modulus m, if monomial.
  /// Requires modulus() | m.
  long exponent_at(int m) const;

  std::string str() const;

 private:
  Cyc(int n, int e, mpq_class r) : n_(n), e_(e), r_(std::move(r)) {}
  static Cyc make_monomial(int n, long e, mpq_class r);
  static Cyc make_general(int n, std::vector<mpq_class> v);
  int n_;                      // field modulus; 1 means rational
  int e_;                      // monomial exponent; -1 means general form
  mpq_class r_;                // rational value or monomial coefficient
  std::vector<mpq_class> v_;  // general form coefficients (size phi(n))
};

int euler_phi(int n);
long gcd_long(long a, long b);
long lcm_long(long a, long b);

}  // namespace fusioncat
