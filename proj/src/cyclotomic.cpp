#include "fusioncat/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace fusioncat {

long gcd_long(long a, long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long lcm_long(long a, long b) { return a / gcd_long(a, b) * b; }

int euler_phi(int n) {
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

RootOfUnity::RootOfUnity(int modulus, int exponent) : n(modulus) {
  if (modulus <= 0) throw std::invalid_argument("RootOfUnity: modulus must be positive");
  e = ((exponent % n) + n) % n;
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
  long m = lcm_long(n, o.n);
  return RootOfUnity(static_cast<int>(m),
                     static_cast<int>((static_cast<long>(e) * (m / n) +
                                       static_cast<long>(o.e) * (m / o.n)) % m));
}

RootOfUnity RootOfUnity::inverse() const { return RootOfUnity(n, n - e); }

namespace {

// Polynomial helpers over Z for the cyclotomic polynomial computation.
using ZPoly = std::vector<mpz_class>;  // coefficient i of x^i; trailing nonzero

ZPoly zpoly_div_exact(const ZPoly& num, const ZPoly& den) {
  ZPoly rem = num;
  ZPoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, mpz_class(0));
  for (int i = static_cast<int>(rem.size()) - 1; i >= static_cast<int>(den.size()) - 1; --i) {
    if (rem[i] == 0) continue;
    mpz_class q = rem[i] / den.back();
    int shift = i - static_cast<int>(den.size()) + 1;
    quot[shift] = q;
    for (size_t j = 0; j < den.size(); ++j) rem[shift + j] -= q * den[j];
  }
  for (const auto& c : rem)
    if (c != 0) throw std::logic_error("cyclotomic division not exact");
  while (quot.size() > 1 && quot.back() == 0) quot.pop_back();
  return quot;
}

ZPoly cyclotomic(int n, std::map<int, ZPoly>& cache) {
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  ZPoly num(n + 1, mpz_class(0));
  num[0] = -1;
  num[n] = 1;
  ZPoly den{mpz_class(1)};
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    ZPoly f = cyclotomic(d, cache);
    ZPoly prod(den.size() + f.size() - 1, mpz_class(0));
    for (size_t i = 0; i < den.size(); ++i)
      for (size_t j = 0; j < f.size(); ++j) prod[i + j] += den[i] * f[j];
    den = std::move(prod);
  }
  ZPoly result = zpoly_div_exact(num, den);
  cache[n] = result;
  return result;
}

std::map<int, std::unique_ptr<CycField>>& field_cache() {
  static std::map<int, std::unique_ptr<CycField>> cache;
  return cache;
}
std::mutex field_mutex;

}  // namespace

const CycField* CycField::get(int n) {
  std::lock_guard<std::mutex> lock(field_mutex);
  auto& cache = field_cache();
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, std::unique_ptr<CycField>(new CycField(n))).first;
  return it->second.get();
}

CycField::CycField(int n) : n_(n), phi_(euler_phi(n)) {
  std::map<int, ZPoly> cache;
  poly_ = cyclotomic(n, cache);
  if (static_cast<int>(poly_.size()) != phi_ + 1 || poly_.back() != 1)
    throw std::logic_error("bad cyclotomic polynomial");
  // power_row(k) = x^k mod Phi_n for k < 2*phi
  rows_.resize(2 * phi_);
  for (int k = 0; k < phi_; ++k) {
    rows_[k].assign(phi_, mpq_class(0));
    rows_[k][k] = 1;
  }
  for (int k = phi_; k < 2 * phi_; ++k) {
    // x^k = x * x^(k-1); reduce leading term via x^phi = -(poly_ - x^phi)
    std::vector<mpq_class> prev = rows_[k - 1];
    std::vector<mpq_class> cur(phi_, mpq_class(0));
    for (int i = 0; i + 1 < phi_; ++i) cur[i + 1] = prev[i];
    mpq_class lead = prev[phi_ - 1];
    if (lead != 0) {
      for (int i = 0; i < phi_; ++i) cur[i] -= lead * mpq_class(poly_[i]);
    }
    rows_[k] = std::move(cur);
  }
  roots_.resize(n);
  root_nnz_.assign(n, 0);
  for (int e = 0; e < n; ++e) {
    std::vector<mpq_class> v(phi_, mpq_class(0));
    if (e < phi_) {
      v[e] = 1;
    } else {
      // zeta^e: reduce x^e step by step (e < n <= small)
      v[0] = 1;
      for (int step = 0; step < e; ++step) {
        std::vector<mpq_class> nxt(phi_, mpq_class(0));
        for (int i = 0; i + 1 < phi_; ++i) nxt[i + 1] = v[i];
        mpq_class lead = v[phi_ - 1];
        if (lead != 0)
          for (int i = 0; i < phi_; ++i) nxt[i] -= lead * mpq_class(poly_[i]);
        v = std::move(nxt);
      }
    }
    int nnz = 0;
    for (const auto& c : v)
      if (c != 0) ++nnz;
    root_nnz_[e] = nnz;
    roots_[e] = std::move(v);
  }
}

Cyc Cyc::rational(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return Cyc(q);
}

Cyc Cyc::make_monomial(int n, long e, mpq_class r) {
  r.canonicalize();
  if (r == 0) return Cyc();
  e = ((e % n) + n) % n;
  long g = gcd_long(e, n);
  if (g > 1) {
    n = static_cast<int>(n / g);
    e /= g;
  }
  if (n == 1) return Cyc(std::move(r));
  if (n == 2) return Cyc(mpq_class(-r));  // zeta_2 = -1
  if (r < 0) {
    // canonical form has a positive coefficient; absorb -1 = zeta_2
    if (n % 2 == 0) return make_monomial(n, e + n / 2, mpq_class(-r));
    return make_monomial(2 * n, 2 * e + n, mpq_class(-r));
  }
  Cyc c(n, static_cast<int>(e), std::move(r));
  return c;
}

Cyc Cyc::root(int n, long e) { return make_monomial(n, e, mpq_class(1)); }
Cyc Cyc::root(const RootOfUnity& r) { return make_monomial(r.n, r.e, mpq_class(1)); }
Cyc Cyc::monomial(const mpq_class& coeff, int n, long e) { return make_monomial(n, e, coeff); }

Cyc Cyc::make_general(int n, std::vector<mpq_class> v) {
  const CycField* F = CycField::get(n);
  // Demote to monomial/rational when the vector is proportional to a root.
  int first = -1, nnz = 0;
  for (int i = 0; i < static_cast<int>(v.size()); ++i) {
    if (v[i] != 0) {
      if (first < 0) first = i;
      ++nnz;
    }
  }
  if (first < 0) return Cyc();
  for (int e = 0; e < n; ++e) {
    if (F->root_support(e) != nnz) continue;
    const auto& w = F->root_vector(e);
    if (w[first] == 0) continue;
    mpq_class scale = v[first] / w[first];
    bool match = true;
    for (int i = 0; i < static_cast<int>(v.size()); ++i) {
      if (v[i] != scale * w[i]) {
        match = false;
        break;
      }
    }
    if (match) return make_monomial(n, e, scale);
  }
  Cyc c(n, -1, mpq_class(0));
  c.v_ = std::move(v);
  return c;
}

std::vector<mpq_class> Cyc::coeff_vector(int m) const {
  const CycField* F = CycField::get(m);
  std::vector<mpq_class> out(F->degree(), mpq_class(0));
  if (is_zero()) return out;
  if (n_ == 1) {
    out[0] = r_;
    return out;
  }
  if (m % n_ != 0) throw std::invalid_argument("coeff_vector: modulus not a multiple");
  int lift = m / n_;
  if (v_.empty()) {
    const auto& w = F->root_vector(static_cast<int>(static_cast<long>(e_) * lift % m));
    for (int i = 0; i < F->degree(); ++i) out[i] = r_ * w[i];
    return out;
  }
  // general: sum of coefficient * zeta_m^(i*lift)
  for (int i = 0; i < static_cast<int>(v_.size()); ++i) {
    if (v_[i] == 0) continue;
    const auto& w = F->root_vector(static_cast<int>(static_cast<long>(i) * lift % m));
    for (int j = 0; j < F->degree(); ++j) out[j] += v_[i] * w[j];
  }
  return out;
}

long Cyc::exponent_at(int m) const {
  if (is_zero() || n_ == 1) return 0;
  if (v_.empty()) {
    if (m % n_ != 0) throw std::invalid_argument("exponent_at: modulus not a multiple");
    return static_cast<long>(e_) * (m / n_) % m;
  }
  throw std::invalid_argument("exponent_at: not a monomial");
}

Cyc Cyc::operator*(const Cyc& o) const {
  if (is_zero() || o.is_zero()) return Cyc();
  if (n_ == 1 && o.n_ == 1) return Cyc(mpq_class(r_ * o.r_));
  if (n_ == 1) {
    if (o.v_.empty()) return make_monomial(o.n_, o.e_, r_ * o.r_);
    std::vector<mpq_class> v = o.v_;
    for (auto& c : v) c *= r_;
    return make_general(o.n_, std::move(v));
  }
  if (o.n_ == 1) return o * *this;
  if (v_.empty() && o.v_.empty()) {
    long m = lcm_long(n_, o.n_);
    long e = (static_cast<long>(e_) * (m / n_) + static_cast<long>(o.e_) * (m / o.n_)) % m;
    return make_monomial(static_cast<int>(m), e, r_ * o.r_);
  }
  // general multiplication at the lcm modulus
  int m = static_cast<int>(lcm_long(n_, o.n_));
  const CycField* F = CycField::get(m);
  std::vector<mpq_class> a = coeff_vector(m);
  std::vector<mpq_class> b = o.coeff_vector(m);
  int d = F->degree();
  std::vector<mpq_class> prod(2 * d - 1, mpq_class(0));
  for (int i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (b[j] == 0) continue;
      prod[i + j] += a[i] * b[j];
    }
  }
  std::vector<mpq_class> out(d, mpq_class(0));
  for (int k = 0; k < 2 * d - 1; ++k) {
    if (prod[k] == 0) continue;
    const auto& row = F->power_row(k);
    for (int i = 0; i < d; ++i) out[i] += prod[k] * row[i];
  }
  return make_general(m, std::move(out));
}

Cyc Cyc::operator+(const Cyc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (n_ == 1 && o.n_ == 1) return Cyc(mpq_class(r_ + o.r_));
  if (v_.empty() && o.v_.empty() && n_ == o.n_ && e_ == o.e_)
    return make_monomial(n_, e_, r_ + o.r_);
  int m = static_cast<int>(lcm_long(n_, o.n_));
  std::vector<mpq_class> a = coeff_vector(m);
  std::vector<mpq_class> b = o.coeff_vector(m);
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return make_general(m, std::move(a));
}

Cyc Cyc::operator-() const {
  Cyc c = *this;
  if (c.is_zero()) return c;
  if (c.v_.empty()) {
    c.r_ = -c.r_;
    return c;
  }
  for (auto& x : c.v_) x = -x;
  return c;
}

Cyc Cyc::operator-(const Cyc& o) const { return *this + (-o); }

namespace {

// Extended Euclid over Q[x]: returns s with s*a = gcd (mod modpoly), where a
// is invertible mod the irreducible modpoly.
std::vector<mpq_class> poly_inverse(const std::vector<mpq_class>& a,
                                    const std::vector<mpz_class>& modpoly) {
  using QPoly = std::vector<mpq_class>;
  auto deg = [](const QPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
      if (p[i] != 0) return i;
    return -1;
  };
  auto trim = [&](QPoly& p) { p.resize(std::max(deg(p) + 1, 1)); };
  QPoly r0(modpoly.size());
  for (size_t i = 0; i < modpoly.size(); ++i) r0[i] = mpq_class(modpoly[i]);
  QPoly r1 = a;
  trim(r1);
  QPoly s0{mpq_class(0)}, s1{mpq_class(1)};
  while (deg(r1) > 0) {
    // divide r0 by r1
    QPoly q(std::max(deg(r0) - deg(r1) + 1, 1), mpq_class(0));
    QPoly rem = r0;
    int d1 = deg(r1);
    mpq_class lead1 = r1[d1];
    for (int i = deg(rem); i >= d1; --i) {
      if (rem[i] == 0) continue;
      mpq_class c = rem[i] / lead1;
      q[i - d1] = c;
      for (int j = 0; j <= d1; ++j) rem[i - d1 + j] -= c * r1[j];
    }
    trim(rem);
    // s2 = s0 - q*s1
    QPoly qs(q.size() + s1.size() - 1, mpq_class(0));
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
    }
    QPoly s2(std::max(s0.size(), qs.size()), mpq_class(0));
    for (size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (deg(r1) != 0 || r1[0] == 0) throw std::domain_error("poly_inverse: not invertible");
  mpq_class lead = r1[0];
  for (auto& c : s1) c /= lead;
  return s1;
}

}  // namespace

Cyc Cyc::inverse() const {
  if (is_zero()) throw std::domain_error("Cyc: division by zero");
  if (n_ == 1) return Cyc(mpq_class(1 / r_));
  if (v_.empty()) return make_monomial(n_, n_ - e_, mpq_class(1 / r_));
  const CycField* F = CycField::get(n_);
  std::vector<mpq_class> inv = poly_inverse(v_, F->cyclotomic_poly());
  inv.resize(F->degree(), mpq_class(0));
  return make_general(n_, std::move(inv));
}

bool Cyc::operator==(const Cyc& o) const {
  if (n_ == o.n_ && e_ == o.e_ && v_.empty() == o.v_.empty()) {
    if (v_.empty()) return r_ == o.r_;
    return v_ == o.v_;
  }
  // Mixed forms are canonical within one modulus, so values can only agree
  // when the moduli differ; compare at the lcm.
  if (v_.empty() && o.v_.empty()) return false;
  int m = static_cast<int>(lcm_long(n_, o.n_));
  return coeff_vector(m) == o.coeff_vector(m);
}

std::string Cyc::str() const {
  std::ostringstream os;
  if (is_zero()) return "0";
  if (n_ == 1) {
    os << r_;
    return os.str();
  }
  if (v_.empty()) {
    if (r_ != 1) os << r_ << "*";
    os << "z" << n_ << "^" << e_;
    return os.str();
  }
  bool firstterm = true;
  for (size_t i = 0; i < v_.size(); ++i) {
    if (v_[i] == 0) continue;
    if (!firstterm) os << " + ";
    os << v_[i];
    if (i > 0) os << "*z" << n_ << "^" << i;
    firstterm = false;
  }
  return os.str();
}

}  // namespace fusioncat
