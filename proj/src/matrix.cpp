#include "fusioncat/matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fusioncat {

SparseVec sparse_normalize(SparseVec v) {
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  out.reserve(v.size());
  for (auto& [i, c] : v) {
    if (!out.empty() && out.back().first == i) {
      out.back().second += c;
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!c.is_zero()) {
      out.emplace_back(i, std::move(c));
    }
  }
  return out;
}

SparseVec sparse_add(const SparseVec& a, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j >= b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i >= a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      Cyc c = a[i].second + b[j].second;
      if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec sparse_scale(const SparseVec& a, const Cyc& c) {
  if (c.is_zero()) return {};
  SparseVec out;
  out.reserve(a.size());
  for (const auto& [i, x] : a) {
    Cyc y = x * c;
    if (!y.is_zero()) out.emplace_back(i, std::move(y));
  }
  return out;
}

SparseVec sparse_sub(const SparseVec& a, const SparseVec& b) {
  return sparse_add(a, sparse_scale(b, Cyc(-1)));
}

void CycMatrix::set(int i, int j, const Cyc& c) {
  auto& r = data_[i];
  auto it = std::lower_bound(r.begin(), r.end(), j,
                             [](const auto& p, int col) { return p.first < col; });
  if (it != r.end() && it->first == j) {
    if (c.is_zero())
      r.erase(it);
    else
      it->second = c;
  } else if (!c.is_zero()) {
    r.insert(it, {j, c});
  }
}

Cyc CycMatrix::at(int i, int j) const {
  const auto& r = data_[i];
  auto it = std::lower_bound(r.begin(), r.end(), j,
                             [](const auto& p, int col) { return p.first < col; });
  if (it != r.end() && it->first == j) return it->second;
  return Cyc();
}

CycMatrix CycMatrix::identity(int n) {
  CycMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.data_[i] = {{i, Cyc(1)}};
  return m;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("CycMatrix: size mismatch in *");
  CycMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    SparseVec acc;
    for (const auto& [k, c] : data_[i]) acc = sparse_add(acc, sparse_scale(o.data_[k], c));
    out.data_[i] = std::move(acc);
  }
  return out;
}

CycMatrix CycMatrix::operator+(const CycMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("CycMatrix: size mismatch in +");
  CycMatrix out(rows_, cols_);
  for (int i = 0; i < rows_; ++i) out.data_[i] = sparse_add(data_[i], o.data_[i]);
  return out;
}

CycMatrix CycMatrix::operator-(const CycMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("CycMatrix: size mismatch in -");
  CycMatrix out(rows_, cols_);
  for (int i = 0; i < rows_; ++i) out.data_[i] = sparse_sub(data_[i], o.data_[i]);
  return out;
}

bool CycMatrix::operator==(const CycMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

CycMatrix CycMatrix::transpose() const {
  CycMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (const auto& [j, c] : data_[i]) out.data_[j].emplace_back(i, c);
  return out;
}

bool CycMatrix::is_zero() const {
  for (const auto& r : data_)
    if (!r.empty()) return false;
  return true;
}

SparseVec CycMatrix::apply(const SparseVec& v) const {
  // (this * v) where v is a sparse column of length cols_
  SparseVec out;
  for (int i = 0; i < rows_; ++i) {
    Cyc dot;
    const auto& r = data_[i];
    size_t a = 0, b = 0;
    while (a < r.size() && b < v.size()) {
      if (r[a].first < v[b].first) {
        ++a;
      } else if (v[b].first < r[a].first) {
        ++b;
      } else {
        dot += r[a].second * v[b].second;
        ++a;
        ++b;
      }
    }
    if (!dot.is_zero()) out.emplace_back(i, std::move(dot));
  }
  return out;
}

namespace {

// Reduce `row` by the current pivot rows until no pivot column remains, then
// normalize the leading coefficient to 1. Returns empty if reduced to zero.
SparseVec reduce_row(SparseVec row, const std::vector<int>& pivot_of,
                     const std::vector<std::pair<int, SparseVec>>& pivots) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t k = 0; k < row.size(); ++k) {
      int slot = pivot_of[row[k].first];
      if (slot >= 0) {
        row = sparse_sub(row, sparse_scale(pivots[slot].second, row[k].second));
        changed = true;
        break;
      }
    }
  }
  return row;
}

}  // namespace

QuotientBuilder::QuotientBuilder(int ambient_dim)
    : dim_(ambient_dim), pivot_of_(ambient_dim, -1) {}

// Substitute every pivot-column term of `row` by the resolved pivot rows.
// Resolved rows carry only free columns in their tails, so each substitution
// strictly removes one pivot column.
SparseVec QuotientBuilder::reduce_full(SparseVec row) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t k = 0; k < row.size(); ++k) {
      int slot = pivot_of_[row[k].first];
      if (slot < 0) continue;
      ensure_resolved(row[k].first);
      row = sparse_sub(row, sparse_scale(pivots_[slot].second, row[k].second));
      changed = true;
      break;
    }
  }
  return row;
}

void QuotientBuilder::ensure_resolved(int col) const {
  // iterative resolution with path compression; pivot rows reference only
  // pivots created later, so the dependency chain is acyclic
  std::vector<int> stack{col};
  while (!stack.empty()) {
    int p = stack.back();
    auto& [pc, row] = pivots_[pivot_of_[p]];
    int pending = -1;
    for (const auto& [j, c] : row) {
      if (j != pc && pivot_of_[j] >= 0) {
        // needs that pivot resolved first (or substitution if already clean)
        const auto& dep = pivots_[pivot_of_[j]];
        bool dep_clean = true;
        for (const auto& [jj, cc] : dep.second)
          if (jj != dep.first && pivot_of_[jj] >= 0) dep_clean = false;
        if (!dep_clean) {
          pending = j;
          break;
        }
      }
    }
    if (pending >= 0) {
      stack.push_back(pending);
      continue;
    }
    // all pivot deps clean: substitute them into this row
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t k = 0; k < row.size(); ++k) {
        int j = row[k].first;
        if (j == pc || pivot_of_[j] < 0) continue;
        row = sparse_sub(row, sparse_scale(pivots_[pivot_of_[j]].second, row[k].second));
        changed = true;
        break;
      }
    }
    stack.pop_back();
  }
}

void QuotientBuilder::add_relation(const SparseVec& rel) {
  SparseVec row = reduce_full(rel);
  if (row.empty()) return;
  int pc = row.front().first;
  row = sparse_scale(row, row.front().second.inverse());
  pivot_of_[pc] = static_cast<int>(pivots_.size());
  pivots_.emplace_back(pc, std::move(row));
}

SparseVec QuotientBuilder::reduce(const SparseVec& v) const { return reduce_full(v); }

const std::vector<std::pair<int, SparseVec>>& QuotientBuilder::pivot_rows() const {
  for (const auto& [pc, row] : pivots_) ensure_resolved(pc);
  return pivots_;
}

QuotientWithSection QuotientBuilder::finish() {
  pivot_rows();  // force resolution
  std::vector<int> free_cols;
  for (int j = 0; j < dim_; ++j)
    if (pivot_of_[j] < 0) free_cols.push_back(j);
  int q = static_cast<int>(free_cols.size());
  std::vector<int> quot_index(dim_, -1);
  for (int k = 0; k < q; ++k) quot_index[free_cols[k]] = k;

  QuotientWithSection out;
  out.q = q;
  out.proj = CycMatrix(q, dim_);
  out.sect = CycMatrix(dim_, q);
  for (int k = 0; k < q; ++k) out.sect.set(free_cols[k], k, Cyc(1));
  // proj(e_f) = e_{quot(f)}; proj(e_p) = -sum over free part of the pivot row
  std::vector<SparseVec> proj_rows(q);
  for (int k = 0; k < q; ++k) proj_rows[k].emplace_back(free_cols[k], Cyc(1));
  for (const auto& [pc, prow] : pivots_) {
    for (const auto& [j, c] : prow) {
      if (j == pc) continue;
      proj_rows[quot_index[j]].emplace_back(pc, -c);
    }
  }
  for (int k = 0; k < q; ++k) out.proj.set_row(k, std::move(proj_rows[k]));
  return out;
}

QuotientWithSection quotient_with_section(int ambient_dim, const CycMatrix& relations) {
  if (relations.rows() != ambient_dim)
    throw std::invalid_argument("quotient_with_section: relations must have ambient_dim rows");
  QuotientBuilder qb(ambient_dim);
  CycMatrix cols = relations.transpose();
  for (int j = 0; j < cols.rows(); ++j) qb.add_relation(cols.row(j));
  return qb.finish();
}

std::vector<std::vector<Cyc>> nullspace(const CycMatrix& m) {
  QuotientBuilder qb(m.cols());
  for (int i = 0; i < m.rows(); ++i) qb.add_relation(m.row(i));
  // RREF rows have the form e_p + sum_{free f} c_f e_f; for each free column
  // f the kernel vector is e_f - sum_p c_{p,f} e_p.
  std::vector<std::vector<Cyc>> out;
  for (int f = 0; f < m.cols(); ++f) {
    if (qb.is_pivot(f)) continue;
    std::vector<Cyc> x(m.cols(), Cyc());
    x[f] = Cyc(1);
    for (const auto& [p, row] : qb.pivot_rows()) {
      for (const auto& [j, c] : row) {
        if (j == f) x[p] = -c;
      }
    }
    out.push_back(std::move(x));
  }
  return out;
}

int rank(const CycMatrix& m) {
  std::vector<int> pivot_of(m.cols(), -1);
  std::vector<std::pair<int, SparseVec>> pivots;
  for (int i = 0; i < m.rows(); ++i) {
    SparseVec row = reduce_row(m.row(i), pivot_of, pivots);
    if (row.empty()) continue;
    int pc = row.front().first;
    row = sparse_scale(row, row.front().second.inverse());
    pivot_of[pc] = static_cast<int>(pivots.size());
    pivots.emplace_back(pc, std::move(row));
  }
  return static_cast<int>(pivots.size());
}

std::optional<std::vector<Cyc>> solve(const CycMatrix& m, const std::vector<Cyc>& b) {
  if (static_cast<int>(b.size()) != m.rows())
    throw std::invalid_argument("solve: rhs size mismatch");
  // Eliminate over the augmented rows [m | b], tracking the rhs separately.
  std::vector<int> pivot_of(m.cols(), -1);
  std::vector<std::pair<int, SparseVec>> pivots;
  std::vector<Cyc> pivot_rhs;
  for (int i = 0; i < m.rows(); ++i) {
    SparseVec row = m.row(i);
    Cyc rhs = b[i];
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t k = 0; k < row.size(); ++k) {
        int slot = pivot_of[row[k].first];
        if (slot >= 0) {
          Cyc c = row[k].second;
          row = sparse_sub(row, sparse_scale(pivots[slot].second, c));
          rhs = rhs - c * pivot_rhs[slot];
          changed = true;
          break;
        }
      }
    }
    if (row.empty()) {
      if (!rhs.is_zero()) return std::nullopt;
      continue;
    }
    Cyc inv = row.front().second.inverse();
    int pc = row.front().first;
    row = sparse_scale(row, inv);
    rhs = rhs * inv;
    pivot_of[pc] = static_cast<int>(pivots.size());
    pivots.emplace_back(pc, std::move(row));
    pivot_rhs.push_back(rhs);
  }
  // Back-substitute with free variables at zero, in descending pivot order.
  std::vector<Cyc> x(m.cols(), Cyc());
  std::vector<int> order(pivots.size());
  for (size_t s = 0; s < pivots.size(); ++s) order[s] = static_cast<int>(s);
  std::sort(order.begin(), order.end(),
            [&](int a, int c) { return pivots[a].first > pivots[c].first; });
  for (int s : order) {
    const auto& [pc, row] = pivots[s];
    Cyc val = pivot_rhs[s];
    for (const auto& [j, c] : row) {
      if (j == pc) continue;
      val = val - c * x[j];
    }
    x[pc] = val;
  }
  return x;
}

}  // namespace fusioncat
