#include "fusioncat/snf.hpp"

#include <stdexcept>

namespace fusioncat {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

namespace {

void swap_rows(IntMat& m, int i, int j) {
  if (i == j) return;
  for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}
void swap_cols(IntMat& m, int i, int j) {
  if (i == j) return;
  for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}
// row_i -= q * row_j
void row_sub(IntMat& m, int i, int j, const mpz_class& q) {
  if (q == 0) return;
  for (int c = 0; c < m.cols; ++c) m.at(i, c) -= q * m.at(j, c);
}
// col_i -= q * col_j
void col_sub(IntMat& m, int i, int j, const mpz_class& q) {
  if (q == 0) return;
  for (int r = 0; r < m.rows; ++r) m.at(r, i) -= q * m.at(r, j);
}

}  // namespace

Snf smith_normal_form(IntMat a, const SnfOptions& opt, IntMat* co_rows) {
  int rows = a.rows, cols = a.cols;
  Snf out;
  if (opt.want_v) out.v = IntMat::identity(cols);
  if (opt.want_vinv) out.vinv = IntMat::identity(cols);
  if (opt.want_uinv) out.uinv = IntMat::identity(rows);

  auto do_row_swap = [&](int i, int j) {
    swap_rows(a, i, j);
    if (co_rows) swap_rows(*co_rows, i, j);
    if (opt.want_uinv) swap_cols(out.uinv, i, j);  // Uinv <- Uinv * P
  };
  auto do_row_sub = [&](int i, int j, const mpz_class& q) {
    row_sub(a, i, j, q);
    if (co_rows) row_sub(*co_rows, i, j, q);
    if (opt.want_uinv) col_sub(out.uinv, j, i, -q);  // Uinv <- Uinv * E^{-1}
  };
  auto do_col_swap = [&](int i, int j) {
    swap_cols(a, i, j);
    if (opt.want_v) swap_cols(out.v, i, j);
    if (opt.want_vinv) swap_rows(out.vinv, i, j);
  };
  auto do_col_sub = [&](int i, int j, const mpz_class& q) {
    col_sub(a, i, j, q);
    if (opt.want_v) col_sub(out.v, i, j, q);
    if (opt.want_vinv) row_sub(out.vinv, j, i, -q);  // Vinv <- F^{-1} Vinv
  };
  auto do_row_negate = [&](int i) {
    for (int c = 0; c < cols; ++c) a.at(i, c) = -a.at(i, c);
    if (co_rows)
      for (int c = 0; c < co_rows->cols; ++c) co_rows->at(i, c) = -co_rows->at(i, c);
    if (opt.want_uinv)
      for (int r = 0; r < rows; ++r) out.uinv.at(r, i) = -out.uinv.at(r, i);
  };

  int mn = std::min(rows, cols);
  int t = 0;
  for (; t < mn; ++t) {
    // find a pivot: smallest nonzero |entry| in the trailing submatrix,
    // stopping at the first +-1 (no coefficient growth possible then)
    int pi = -1, pj = -1;
    mpz_class best;
    for (int i = t; i < rows && !(pi >= 0 && best == 1); ++i)
      for (int j = t; j < cols; ++j) {
        if (a.at(i, j) == 0) continue;
        mpz_class v = abs(a.at(i, j));
        if (pi < 0 || v < best) {
          best = v;
          pi = i;
          pj = j;
          if (best == 1) break;
        }
      }
    if (pi < 0) break;
    do_row_swap(t, pi);
    do_col_swap(t, pj);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (a.at(i, t) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a.at(i, t).get_mpz_t(), a.at(t, t).get_mpz_t());
        do_row_sub(i, t, q);
        if (a.at(i, t) != 0) {
          do_row_swap(t, i);
          clean = false;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (a.at(t, j) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a.at(t, j).get_mpz_t(), a.at(t, t).get_mpz_t());
        do_col_sub(j, t, q);
        if (a.at(t, j) != 0) {
          do_col_swap(t, j);
          clean = false;
        }
      }
      if (clean) {
        // divisibility: pivot must divide every remaining entry
        bool restart = false;
        for (int i = t + 1; i < rows && !restart; ++i)
          for (int j = t + 1; j < cols && !restart; ++j) {
            if (a.at(i, j) % a.at(t, t) != 0) {
              do_row_sub(t, i, mpz_class(-1));  // row_t += row_i
              restart = true;
            }
          }
        if (restart) clean = false;
      }
    }
    if (a.at(t, t) < 0) do_row_negate(t);
  }
  out.d.assign(mn, mpz_class(0));
  for (int i = 0; i < t; ++i) out.d[i] = a.at(i, i);
  out.rank = t;
  return out;
}

std::optional<std::vector<int>> solve_mod(const IntMat& a, const std::vector<int>& b, int n) {
  if (static_cast<int>(b.size()) != a.rows) throw std::invalid_argument("solve_mod: size");
  IntMat co(a.rows, 1);
  for (int i = 0; i < a.rows; ++i) co.at(i, 0) = b[i];
  SnfOptions opt;
  opt.want_v = true;
  Snf s = smith_normal_form(a, opt, &co);
  mpz_class N(n);
  int mn = std::min(a.rows, a.cols);
  std::vector<mpz_class> y(a.cols, mpz_class(0));
  for (int i = 0; i < a.rows; ++i) {
    mpz_class c = co.at(i, 0) % N;
    if (c < 0) c += N;
    if (i >= mn || s.d[i] == 0) {
      if (c != 0) return std::nullopt;
      continue;
    }
    mpz_class g = gcd(s.d[i], N);
    if (c % g != 0) return std::nullopt;
    // (d/g) y = (c/g) mod (N/g); d/g invertible mod N/g
    mpz_class dg = s.d[i] / g, cg = c / g, Ng = N / g;
    if (Ng == 1) {
      y[i] = 0;
    } else {
      mpz_class inv;
      if (mpz_invert(inv.get_mpz_t(), dg.get_mpz_t(), Ng.get_mpz_t()) == 0)
        throw std::logic_error("solve_mod: inverse must exist");
      y[i] = (cg * inv) % Ng;
    }
  }
  std::vector<int> x(a.cols, 0);
  for (int j = 0; j < a.cols; ++j) {
    mpz_class acc(0);
    for (int k = 0; k < a.cols; ++k) acc += s.v.at(j, k) * y[k];
    mpz_class r = acc % N;
    if (r < 0) r += N;
    x[j] = static_cast<int>(r.get_si());
  }
  return x;
}

KernelModN kernel_mod(const IntMat& a, int n) {
  // the kernel depends only on the row space: drop zero rows and duplicates
  // (up to sign) before the expensive normal form
  std::vector<std::vector<mpz_class>> kept;
  for (int i = 0; i < a.rows; ++i) {
    std::vector<mpz_class> row(a.cols);
    bool zero = true;
    int first_sign = 0;
    for (int j = 0; j < a.cols; ++j) {
      row[j] = a.at(i, j);
      if (zero && row[j] != 0) {
        zero = false;
        first_sign = sgn(row[j]);
      }
    }
    if (zero) continue;
    if (first_sign < 0)
      for (auto& v : row) v = -v;
    kept.push_back(std::move(row));
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  IntMat dedup(static_cast<int>(kept.size()), a.cols);
  for (size_t i = 0; i < kept.size(); ++i)
    for (int j = 0; j < a.cols; ++j) dedup.at(static_cast<int>(i), j) = kept[i][j];

  SnfOptions opt;
  opt.want_v = true;
  opt.want_vinv = true;
  Snf s = smith_normal_form(dedup, opt, nullptr);
  KernelModN out;
  out.n = n;
  out.vinv = s.vinv;
  out.vinv_mod.resize(static_cast<size_t>(a.cols) * a.cols);
  for (int i = 0; i < a.cols; ++i)
    for (int j = 0; j < a.cols; ++j) {
      mpz_class v = s.vinv.at(i, j) % n;
      if (v < 0) v += n;
      out.vinv_mod[static_cast<size_t>(i) * a.cols + j] = static_cast<int>(v.get_si());
    }
  mpz_class N(n);
  int mn = std::min(dedup.rows, a.cols);
  for (int j = 0; j < a.cols; ++j) {
    mpz_class dj = j < mn && j < static_cast<int>(s.d.size()) ? s.d[j] : mpz_class(0);
    mpz_class g = gcd(dj, N);  // gcd(0, N) = N
    if (g == 1) continue;
    mpz_class lift = N / g;
    std::vector<int> gen(a.cols, 0);
    for (int i = 0; i < a.cols; ++i) {
      mpz_class v = (s.v.at(i, j) * lift) % N;
      if (v < 0) v += N;
      gen[i] = static_cast<int>(v.get_si());
    }
    out.gens.push_back(std::move(gen));
    out.orders.push_back(g);
    out.lift.push_back(lift);
    out.gen_col.push_back(j);
  }
  return out;
}

std::vector<mpz_class> KernelModN::coordinates(const std::vector<int>& x) const {
  int dim = vinv.cols;
  std::vector<mpz_class> y(dim, mpz_class(0));
  for (int i = 0; i < dim; ++i) {
    long acc = 0;
    for (int k = 0; k < dim; ++k)
      acc = (acc + static_cast<long>(vinv_mod[static_cast<size_t>(i) * dim + k]) * x[k]) % n;
    y[i] = acc;
  }
  std::vector<mpz_class> t(gens.size(), mpz_class(0));
  for (size_t g = 0; g < gens.size(); ++g) {
    int col = gen_col[g];
    if (y[col] % lift[g] != 0)
      throw std::logic_error("KernelModN::coordinates: vector not in kernel span");
    t[g] = (y[col] / lift[g]) % orders[g];
  }
  // columns of V not attached to a generator must carry no residue
  for (int col = 0; col < dim; ++col) {
    bool attached = false;
    for (int c : gen_col)
      if (c == col) attached = true;
    if (!attached && y[col] != 0) {
      // y[col] is only defined mod N; a non-generator column has g = 1,
      // meaning lift = N, so any multiple of N is fine -- but y is already
      // reduced mod N, so it must vanish.
      throw std::logic_error("KernelModN::coordinates: vector not in kernel");
    }
  }
  return t;
}

std::vector<std::vector<int>> quotient_class_representatives(const KernelModN& kernel,
                                                             const IntMat& image_cols) {
  int k = static_cast<int>(kernel.gens.size());
  int dim = kernel.vinv.cols;
  // Relation matrix in generator coordinates: image columns plus the orders.
  int m = image_cols.cols;
  IntMat rel(k, m + k);
  for (int c = 0; c < m; ++c) {
    std::vector<int> col(dim);
    mpz_class N(kernel.n);
    for (int i = 0; i < dim; ++i) {
      mpz_class v = image_cols.at(i, c) % N;
      if (v < 0) v += N;
      col[i] = static_cast<int>(v.get_si());
    }
    std::vector<mpz_class> t = kernel.coordinates(col);
    for (int i = 0; i < k; ++i) rel.at(i, c) = t[i];
  }
  for (int i = 0; i < k; ++i) rel.at(i, m + i) = kernel.orders[i];

  SnfOptions opt;
  opt.want_uinv = true;
  Snf s = smith_normal_form(rel, opt, nullptr);
  // coker = (+) Z/s_j (all s_j > 0 because the order columns give full rank)
  std::vector<mpz_class> inv(k, mpz_class(1));
  for (int i = 0; i < std::min(k, static_cast<int>(s.d.size())); ++i)
    if (s.d[i] != 0) inv[i] = s.d[i];
  for (int i = 0; i < k; ++i)
    if (inv[i] == 0) throw std::logic_error("quotient has infinite part");

  // enumerate class tuples lexicographically; representative z = Uinv * t
  std::vector<std::vector<int>> reps;
  std::vector<mpz_class> t(k, mpz_class(0));
  mpz_class total(1);
  for (int i = 0; i < k; ++i) total *= inv[i];
  if (total > 100000) throw std::runtime_error("quotient too large to enumerate");
  long count = total.get_si();
  for (long idx = 0; idx < count; ++idx) {
    long rest = idx;
    for (int i = k - 1; i >= 0; --i) {
      long oi = inv[i].get_si();
      t[i] = rest % oi;
      rest /= oi;
    }
    // z = Uinv * t in Z^k, then cochain = sum z_i * gen_i mod n
    std::vector<int> rep(dim, 0);
    mpz_class N(kernel.n);
    for (int i = 0; i < k; ++i) {
      mpz_class zi(0);
      for (int j = 0; j < k; ++j) zi += s.uinv.at(i, j) * t[j];
      zi %= N;
      if (zi < 0) zi += N;
      long z = zi.get_si();
      if (z == 0) continue;
      for (int c = 0; c < dim; ++c)
        rep[c] = static_cast<int>((rep[c] + static_cast<long>(kernel.gens[i][c]) * z) %
                                  kernel.n);
    }
    reps.push_back(std::move(rep));
  }
  return reps;
}

}  // namespace fusioncat
