#include "fusioncat/bimodule.hpp"

#include <sstream>

namespace fusioncat {

Report bimodule_check(const Bimodule& m) {
  Report r;
  const ObjPtr& A = m.A->carrier;
  const ObjPtr& M = m.carrier;
  Mor idA = Mor::identity(A);
  Mor idM = Mor::identity(M);
  // right module: rho (rho (x) id) = rho (id (x) m_A) alpha_{M,A,A}
  Mor rl = Mor::tensor(m.rho, idA).then(m.rho);
  Mor rr = Mor::associator(M, A, A).then(Mor::tensor(idM, m.A->m)).then(m.rho);
  r.add("right action associativity", morphisms_differ(rl, rr));
  // right unit: rho (id (x) u) = r_M
  r.add("right action unit",
        morphisms_differ(Mor::tensor(idM, m.A->u).then(m.rho), Mor::right_unitor(M)));
  // left module: lambda (m_A (x) id) = lambda (id (x) lambda) alpha_{A,A,M}
  Mor ll = Mor::tensor(m.A->m, idM).then(m.lambda);
  Mor lr = Mor::associator(A, A, M).then(Mor::tensor(idA, m.lambda)).then(m.lambda);
  r.add("left action associativity", morphisms_differ(ll, lr));
  r.add("left action unit",
        morphisms_differ(Mor::tensor(m.A->u, idM).then(m.lambda), Mor::left_unitor(M)));
  // compatibility: lambda (id (x) rho) alpha_{A,M,A} = rho (lambda (x) id)
  Mor cl = Mor::associator(A, M, A).then(Mor::tensor(idA, m.rho)).then(m.lambda);
  Mor cr = Mor::tensor(m.lambda, idA).then(m.rho);
  r.add("bimodule compatibility", morphisms_differ(cl, cr));
  return r;
}

Bimodule regular_bimodule(const AlgebraObject& a) {
  return Bimodule{&a, a.carrier, a.m, a.m};
}

SparseVec TensorOverA::reduce(int grade, const SparseVec& v) const {
  return (*reducers)[grade].reduce(v);
}

TensorOverA tensor_over_A(const Bimodule& m, const Bimodule& n) {
  const PointedCat& cat = *m.carrier->cat();
  const FiniteGroup& G = *cat.G;
  if (m.A != n.A) throw std::invalid_argument("tensor_over_A: different base algebras");
  const ObjPtr& A = m.A->carrier;
  ObjPtr M = m.carrier, N = n.carrier;
  ObjPtr ambient = Obj::tensor(M, N);

  // relation source (M (x) A) (x) N; each basis vector contributes
  // rho_M (x) id - (id (x) lambda_N) alpha as a (at most 2-sparse) column
  ObjPtr MA = Obj::tensor(M, A);
  ObjPtr rel_src = Obj::tensor(MA, N);
  Mor rel_pos = Mor::tensor(m.rho, Mor::identity(N));
  Mor rel_neg =
      Mor::associator(M, A, N).then(Mor::tensor(Mor::identity(M), n.lambda));

  auto reducers = std::make_shared<std::vector<QuotientBuilder>>();
  reducers->reserve(G.order());
  for (int g = 0; g < G.order(); ++g) reducers->emplace_back(ambient->mult(g));
  {
    int ia, ib;
    Cyc ca, cb;
    SparseVec col;
    for (int g = 0; g < G.order(); ++g) {
      int d = rel_src->mult(g);
      for (int i = 0; i < d; ++i) {
        int ra = rel_pos.column_mono(g, i, ia, ca);
        int rb = rel_neg.column_mono(g, i, ib, cb);
        col.clear();
        if (ra != 2 && rb != 2) {
          if (ra == 1) col.emplace_back(ia, ca);
          if (rb == 1) col.emplace_back(ib, -cb);
          col = sparse_normalize(std::move(col));
        } else {
          col = sparse_sub(rel_pos.column(g, i), rel_neg.column(g, i));
        }
        if (!col.empty()) (*reducers)[g].add_relation(col);
      }
    }
  }
  GradedObject qobj = GradedObject::zero(G);
  auto qs = std::make_shared<std::vector<QuotientWithSection>>();
  qs->reserve(G.order());
  for (int g = 0; g < G.order(); ++g) {
    qs->push_back((*reducers)[g].finish());
    qobj.mult[g] = qs->back().q;
  }
  TensorOverA out;
  out.object = Obj::leaf(&cat, qobj);
  out.ambient = ambient;
  out.reducers = reducers;
  std::vector<CycMatrix> projT, sectT;
  projT.reserve(G.order());
  sectT.reserve(G.order());
  for (int g = 0; g < G.order(); ++g) {
    projT.push_back((*qs)[g].proj.transpose());
    sectT.push_back((*qs)[g].sect.transpose());
  }
  out.pi = Mor::from_columns(ambient, out.object,
                             [&](int g, int i) -> SparseVec { return projT[g].row(i); });
  out.sigma = Mor::from_columns(out.object, ambient,
                                [&](int g, int k) -> SparseVec { return sectT[g].row(k); });

  // induced actions: lambda_q = pi (lambda_M (x) id) alpha^{-1} (id (x) sigma)
  //                  rho_q    = pi (id (x) rho_N) alpha (sigma (x) id)
  Mor idA = Mor::identity(A);
  Mor lam = Mor::tensor(idA, out.sigma)
                .then(Mor::associator_inv(A, M, N))
                .then(Mor::tensor(m.lambda, Mor::identity(N)))
                .then(out.pi)
                .materialized();
  Mor rho = Mor::tensor(out.sigma, idA)
                .then(Mor::associator(M, N, A))
                .then(Mor::tensor(Mor::identity(M), n.rho))
                .then(out.pi)
                .materialized();
  out.bimod = Bimodule{m.A, out.object, lam, rho};

  // defining equations (runtime validation):
  //   lambda_q (id (x) pi) = pi (lambda_M (x) id) alpha^{-1}
  //   pi (id (x) rho_N) alpha = rho_q (pi (x) id)
  Mor l_lhs = Mor::tensor(idA, out.pi).then(lam);
  Mor l_rhs = Mor::associator_inv(A, M, N)
                  .then(Mor::tensor(m.lambda, Mor::identity(N)))
                  .then(out.pi);
  if (auto w = morphisms_differ(l_lhs, l_rhs))
    throw std::logic_error("tensor_over_A: induced left action ill-defined: " + w->detail);
  Mor r_lhs = Mor::associator(M, N, A)
                  .then(Mor::tensor(Mor::identity(M), n.rho))
                  .then(out.pi);
  Mor r_rhs = Mor::tensor(out.pi, idA).then(rho);
  if (auto w = morphisms_differ(r_lhs, r_rhs))
    throw std::logic_error("tensor_over_A: induced right action ill-defined: " + w->detail);
  return out;
}

Mor lift_through_quotient(const TensorOverA& t, const Mor& tilde) {
  Mor lifted = t.sigma.then(tilde).materialized();
  Mor back = t.pi.then(lifted);
  if (auto w = morphisms_differ(back, tilde))
    throw std::logic_error("lift_through_quotient: map does not factor through pi: " +
                           w->detail);
  return lifted;
}

AssocA assoc_A(const Bimodule& x, const Bimodule& y, const Bimodule& z, bool validate) {
  AssocA out;
  out.xy = tensor_over_A(x, y);
  out.yz = tensor_over_A(y, z);
  out.xy_z = tensor_over_A(out.xy.bimod, z);
  out.x_yz = tensor_over_A(x, out.yz.bimod);
  // alpha^A = pi(id (x) pi) alpha (sigma_{X,Y} (x) id) sigma_{XY,Z}
  Mor idz = Mor::identity(z.carrier);
  Mor idx = Mor::identity(x.carrier);
  out.alpha = out.xy_z.sigma
                  .then(Mor::tensor(out.xy.sigma, idz))
                  .then(Mor::associator(x.carrier, y.carrier, z.carrier))
                  .then(Mor::tensor(idx, out.yz.pi))
                  .then(out.x_yz.pi)
                  .materialized();
  if (validate) {
    // alpha^A pi (pi (x) id) = pi (id (x) pi) alpha on (X (x) Y) (x) Z
    Mor lhs = Mor::tensor(out.xy.pi, idz).then(out.xy_z.pi).then(out.alpha);
    Mor rhs = Mor::associator(x.carrier, y.carrier, z.carrier)
                  .then(Mor::tensor(idx, out.yz.pi))
                  .then(out.x_yz.pi);
    if (auto w = morphisms_differ(lhs, rhs))
      throw std::logic_error("assoc_A: defining equation fails: " + w->detail);
  }
  return out;
}

Mor left_unitor_A(const Bimodule& x, const TensorOverA& ax) {
  Mor l = ax.sigma.then(x.lambda).materialized();
  if (auto w = morphisms_differ(ax.pi.then(l), x.lambda))
    throw std::logic_error("left_unitor_A: l pi != lambda: " + w->detail);
  return l;
}

Mor right_unitor_A(const Bimodule& x, const TensorOverA& xa) {
  Mor r = xa.sigma.then(x.rho).materialized();
  if (auto w = morphisms_differ(xa.pi.then(r), x.rho))
    throw std::logic_error("right_unitor_A: r pi != rho: " + w->detail);
  return r;
}

std::vector<Mor> hom_bimodules(const Bimodule& m, const Bimodule& n) {
  const PointedCat& cat = *m.carrier->cat();
  const FiniteGroup& G = *cat.G;
  const ObjPtr& A = m.A->carrier;
  ObjPtr M = m.carrier, N = n.carrier;
  // unknowns: per grade g, block entries f_{j,i}: N_g x M_g
  std::vector<int> offset(G.order() + 1, 0);
  for (int g = 0; g < G.order(); ++g)
    offset[g + 1] = offset[g] + M->mult(g) * N->mult(g);
  int unknowns = offset[G.order()];
  auto unk = [&](int g, int i, int j) { return offset[g] + i * N->mult(g) + j; };

  std::vector<SparseVec> rows;
  ObjPtr AM = Obj::tensor(A, M);
  ObjPtr MA = Obj::tensor(M, A);
  ObjPtr AN = Obj::tensor(A, N);
  ObjPtr NA = Obj::tensor(N, A);
  // f lambda_M = lambda_N (id (x) f)
  for (int g = 0; g < G.order(); ++g) {
    for (int s = 0; s < AM->mult(g); ++s) {
      Obj::PairIndex p = AM->decode(g, s);
      SparseVec lm = m.lambda.column(g, s);  // terms in M_g
      for (int j = 0; j < N->mult(g); ++j) {
        SparseVec row;
        for (const auto& [i2, c] : lm) row.emplace_back(unk(g, i2, j), c);
        for (int j2 = 0; j2 < N->mult(p.z); ++j2) {
          SparseVec ln = n.lambda.column(g, AN->encode(g, p.y, p.iy, j2));
          for (const auto& [jt, c] : ln)
            if (jt == j) row.emplace_back(unk(p.z, p.iz, j2), Cyc(-1) * c);
        }
        row = sparse_normalize(std::move(row));
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
  }
  // f rho_M = rho_N (f (x) id)
  for (int g = 0; g < G.order(); ++g) {
    for (int s = 0; s < MA->mult(g); ++s) {
      Obj::PairIndex p = MA->decode(g, s);
      SparseVec rm = m.rho.column(g, s);
      for (int j = 0; j < N->mult(g); ++j) {
        SparseVec row;
        for (const auto& [i2, c] : rm) row.emplace_back(unk(g, i2, j), c);
        for (int j2 = 0; j2 < N->mult(p.y); ++j2) {
          SparseVec rn = n.rho.column(g, NA->encode(g, p.y, j2, p.iz));
          for (const auto& [jt, c] : rn)
            if (jt == j) row.emplace_back(unk(p.y, p.iy, j2), Cyc(-1) * c);
        }
        row = sparse_normalize(std::move(row));
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
  }
  CycMatrix sys(static_cast<int>(rows.size()), unknowns);
  for (size_t r = 0; r < rows.size(); ++r) sys.set_row(static_cast<int>(r), rows[r]);
  std::vector<std::vector<Cyc>> basis = nullspace(sys);
  std::vector<Mor> out;
  for (const auto& vec : basis) {
    out.push_back(Mor::from_columns(M, N, [&](int g, int i) -> SparseVec {
      SparseVec col;
      for (int j = 0; j < N->mult(g); ++j) {
        const Cyc& c = vec[unk(g, i, j)];
        if (!c.is_zero()) col.emplace_back(j, c);
      }
      return col;
    }));
  }
  return out;
}

}  // namespace fusioncat
