#include "fusioncat/graded.hpp"

#include <sstream>
#include <stdexcept>

namespace fusioncat {

GradedObject GradedObject::simple(const FiniteGroup& g, int x) {
  GradedObject o = zero(g);
  o.mult[x] = 1;
  return o;
}

GradedObject GradedObject::from_subgroup(const FiniteGroup& g, const Subgroup& s) {
  GradedObject o = zero(g);
  for (int e : s.elems) o.mult[e] = 1;
  return o;
}

int GradedObject::dim() const {
  int d = 0;
  for (int m : mult) d += m;
  return d;
}

std::string GradedObject::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (size_t g = 0; g < mult.size(); ++g) {
    if (!mult[g]) continue;
    if (!first) os << ", ";
    os << g << ": " << mult[g];
    first = false;
  }
  os << "}";
  return os.str();
}

ObjPtr Obj::leaf(const PointedCat* cat, GradedObject o) {
  auto p = std::shared_ptr<Obj>(new Obj());
  p->cat_ = cat;
  p->flat_ = std::move(o);
  return p;
}

ObjPtr Obj::tensor(const ObjPtr& a, const ObjPtr& b) {
  if (a->cat_ != b->cat_) throw std::invalid_argument("Obj::tensor: category mismatch");
  const FiniteGroup& g = a->group();
  auto p = std::shared_ptr<Obj>(new Obj());
  p->cat_ = a->cat_;
  p->left_ = a;
  p->right_ = b;
  GradedObject flat = GradedObject::zero(g);
  p->blocks_.resize(g.order());
  for (int x = 0; x < g.order(); ++x) {
    int base = 0;
    for (int y = 0; y < g.order(); ++y) {
      int my = a->mult(y);
      if (!my) continue;
      int z = g.mul(g.inv(y), x);
      int mz = b->mult(z);
      if (!mz) continue;
      p->blocks_[x].push_back({y, z, base, my, mz});
      base += my * mz;
    }
    flat.mult[x] = base;
  }
  p->flat_ = std::move(flat);
  return p;
}

long Obj::dim() const { return flat_.dim(); }

Obj::PairIndex Obj::decode(int grade, int idx) const {
  const auto& bl = blocks_[grade];
  for (const Block& b : bl) {
    if (idx < b.base + b.my * b.mz) {
      int off = idx - b.base;
      return {b.y, off / b.mz, b.z, off % b.mz};
    }
  }
  throw std::out_of_range("Obj::decode");
}

int Obj::encode(int grade, int y, int iy, int iz) const {
  for (const Block& b : blocks_[grade]) {
    if (b.y == y) return b.base + iy * b.mz + iz;
  }
  throw std::out_of_range("Obj::encode");
}

bool same_shape(const ObjPtr& a, const ObjPtr& b) { return a->graded() == b->graded(); }

bool same_tree(const ObjPtr& a, const ObjPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->is_leaf() != b->is_leaf()) return false;
  if (a->is_leaf()) return a->graded() == b->graded();
  return same_tree(a->left(), b->left()) && same_tree(a->right(), b->right());
}

// ---------------------------------------------------------------------------

struct Mor::Node {
  enum Kind {
    kColumns,
    kIdentity,
    kScalar,
    kCompose,
    kTensor,
    kAssoc,
    kAssocInv,
    kUnitL,
    kUnitLInv,
    kUnitR,
    kUnitRInv,
    kRecast,
  } kind = kIdentity;
  std::vector<std::vector<SparseVec>> cols;  // kColumns: [grade][idx]
  Cyc c;                                     // kScalar
  std::shared_ptr<const Mor> f, g;           // children
};

namespace {
std::shared_ptr<Mor::Node> new_node(Mor::Node::Kind k) {
  auto n = std::make_shared<Mor::Node>();
  n->kind = k;
  return n;
}
}  // namespace

Mor Mor::build(ObjPtr s, ObjPtr d, std::shared_ptr<const Node> n) {
  Mor m;
  m.src_ = std::move(s);
  m.dst_ = std::move(d);
  m.node_ = std::move(n);
  return m;
}

SparseVec Mor::column(int grade, int idx) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Node::kColumns:
      return n.cols[grade][idx];
    case Node::kIdentity:
      return {{idx, Cyc(1)}};
    case Node::kScalar:
      if (n.c.is_zero()) return {};
      return {{idx, n.c}};
    case Node::kCompose: {
      SparseVec mid = n.g->column(grade, idx);
      return n.f->apply(grade, mid);
    }
    case Node::kTensor: {
      Obj::PairIndex p = src_->decode(grade, idx);
      SparseVec a = n.f->column(p.y, p.iy);
      if (a.empty()) return {};
      SparseVec b = n.g->column(p.z, p.iz);
      if (b.empty()) return {};
      SparseVec out;
      out.reserve(a.size() * b.size());
      for (const auto& [ia, ca] : a)
        for (const auto& [ib, cb] : b) {
          Cyc cc = ca * cb;
          if (!cc.is_zero()) out.emplace_back(dst_->encode(grade, p.y, ia, ib), cc);
        }
      return sparse_normalize(std::move(out));
    }
    case Node::kAssoc: {
      // ((X (x) Y) (x) Z) -> (X (x) (Y (x) Z)), scalar omega^{-1}(y, z, w)
      Obj::PairIndex outer = src_->decode(grade, idx);
      const ObjPtr& xy = src_->left();
      Obj::PairIndex inner = xy->decode(outer.y, outer.iy);
      const ObjPtr& yz = dst_->right();
      int yzgrade = src_->group().mul(inner.z, outer.z);
      int inner_idx = yz->encode(yzgrade, inner.z, inner.iz, outer.iz);
      int out_idx = dst_->encode(grade, inner.y, inner.iy, inner_idx);
      return {{out_idx, src_->cat()->winv(inner.y, inner.z, outer.z)}};
    }
    case Node::kAssocInv: {
      // (X (x) (Y (x) Z)) -> ((X (x) Y) (x) Z), scalar omega(y, z, w)
      Obj::PairIndex outer = src_->decode(grade, idx);
      const ObjPtr& yz = src_->right();
      Obj::PairIndex inner = yz->decode(outer.z, outer.iz);
      const ObjPtr& xy = dst_->left();
      int xygrade = src_->group().mul(outer.y, inner.y);
      int xy_idx = xy->encode(xygrade, outer.y, outer.iy, inner.iy);
      int out_idx = dst_->encode(grade, xygrade, xy_idx, inner.iz);
      return {{out_idx, src_->cat()->w(outer.y, inner.y, inner.z)}};
    }
    case Node::kUnitL: {
      Obj::PairIndex p = src_->decode(grade, idx);
      return {{p.iz, src_->cat()->winv(0, 0, grade)}};
    }
    case Node::kUnitLInv:
      return {{dst_->encode(grade, 0, 0, idx), src_->cat()->w(0, 0, grade)}};
    case Node::kUnitR: {
      Obj::PairIndex p = src_->decode(grade, idx);
      return {{p.iy, src_->cat()->w(grade, 0, 0)}};
    }
    case Node::kUnitRInv:
      return {{dst_->encode(grade, grade, idx, 0), src_->cat()->winv(grade, 0, 0)}};
    case Node::kRecast:
      return n.f->column(grade, idx);
  }
  throw std::logic_error("Mor::column: bad node");
}

int Mor::column_mono(int grade, int idx, int& out_idx, Cyc& coeff) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Node::kColumns: {
      const SparseVec& col = n.cols[grade][idx];
      if (col.empty()) return 0;
      if (col.size() > 1) return 2;
      out_idx = col[0].first;
      coeff = col[0].second;
      return 1;
    }
    case Node::kIdentity:
      out_idx = idx;
      coeff = Cyc(1);
      return 1;
    case Node::kScalar:
      if (n.c.is_zero()) return 0;
      out_idx = idx;
      coeff = n.c;
      return 1;
    case Node::kCompose: {
      int mid;
      Cyc c1;
      int r = n.g->column_mono(grade, idx, mid, c1);
      if (r != 1) return r;
      int out;
      Cyc c2;
      r = n.f->column_mono(grade, mid, out, c2);
      if (r != 1) return r;
      out_idx = out;
      coeff = c1 * c2;
      return 1;
    }
    case Node::kTensor: {
      Obj::PairIndex p = src_->decode(grade, idx);
      int ia, ib;
      Cyc ca, cb;
      int r = n.f->column_mono(p.y, p.iy, ia, ca);
      if (r != 1) return r;
      r = n.g->column_mono(p.z, p.iz, ib, cb);
      if (r != 1) return r;
      out_idx = dst_->encode(grade, p.y, ia, ib);
      coeff = ca * cb;
      return 1;
    }
    case Node::kAssoc:
    case Node::kAssocInv:
    case Node::kUnitL:
    case Node::kUnitLInv:
    case Node::kUnitR:
    case Node::kUnitRInv: {
      SparseVec col = column(grade, idx);
      out_idx = col[0].first;
      coeff = col[0].second;
      return 1;
    }
    case Node::kRecast:
      return n.f->column_mono(grade, idx, out_idx, coeff);
  }
  return 2;
}

SparseVec Mor::apply(int grade, const SparseVec& v) const {
  if (v.empty()) return {};
  if (v.size() == 1 && v[0].second == Cyc(1)) return column(grade, v[0].first);
  SparseVec out;
  int oi;
  Cyc oc;
  for (const auto& [i, c] : v) {
    int r = column_mono(grade, i, oi, oc);
    if (r == 0) continue;
    if (r == 1) {
      Cyc prod = oc * c;
      if (!prod.is_zero()) out.emplace_back(oi, std::move(prod));
      continue;
    }
    SparseVec col = column(grade, i);
    for (auto& [j, cc] : col) {
      Cyc prod = cc * c;
      if (!prod.is_zero()) out.emplace_back(j, std::move(prod));
    }
  }
  return sparse_normalize(std::move(out));
}

Mor Mor::identity(const ObjPtr& x) { return build(x, x, new_node(Node::kIdentity)); }

Mor Mor::zero(const ObjPtr& s, const ObjPtr& d) {
  auto cn = new_node(Node::kColumns);
  cn->cols.resize(s->group().order());
  for (int g = 0; g < s->group().order(); ++g) cn->cols[g].resize(s->mult(g));
  return build(s, d, cn);
}

Mor Mor::scalar(const ObjPtr& x, const Cyc& c) {
  auto n = new_node(Node::kScalar);
  n->c = c;
  return build(x, x, n);
}

Mor Mor::from_columns(const ObjPtr& s, const ObjPtr& d,
                      std::function<SparseVec(int, int)> col) {
  auto n = new_node(Node::kColumns);
  int N = s->group().order();
  n->cols.resize(N);
  for (int g = 0; g < N; ++g) {
    n->cols[g].resize(s->mult(g));
    for (int i = 0; i < s->mult(g); ++i) n->cols[g][i] = sparse_normalize(col(g, i));
  }
  return build(s, d, n);
}

Mor Mor::compose(const Mor& f, const Mor& g) {
  if (!same_tree(f.src(), g.dst()))
    throw std::invalid_argument("Mor::compose: shape mismatch");
  auto n = new_node(Node::kCompose);
  n->f = std::make_shared<Mor>(f);
  n->g = std::make_shared<Mor>(g);
  return build(g.src(), f.dst(), n);
}

Mor Mor::tensor(const Mor& f, const Mor& g) {
  auto n = new_node(Node::kTensor);
  n->f = std::make_shared<Mor>(f);
  n->g = std::make_shared<Mor>(g);
  return build(Obj::tensor(f.src(), g.src()), Obj::tensor(f.dst(), g.dst()), n);
}

Mor Mor::associator(const ObjPtr& x, const ObjPtr& y, const ObjPtr& z) {
  return build(Obj::tensor(Obj::tensor(x, y), z), Obj::tensor(x, Obj::tensor(y, z)),
               new_node(Node::kAssoc));
}

Mor Mor::associator_inv(const ObjPtr& x, const ObjPtr& y, const ObjPtr& z) {
  return build(Obj::tensor(x, Obj::tensor(y, z)), Obj::tensor(Obj::tensor(x, y), z),
               new_node(Node::kAssocInv));
}

Mor Mor::left_unitor(const ObjPtr& x) {
  return build(Obj::tensor(unit_object(*x->cat()), x), x, new_node(Node::kUnitL));
}
Mor Mor::left_unitor_inv(const ObjPtr& x) {
  return build(x, Obj::tensor(unit_object(*x->cat()), x), new_node(Node::kUnitLInv));
}
Mor Mor::right_unitor(const ObjPtr& x) {
  return build(Obj::tensor(x, unit_object(*x->cat())), x, new_node(Node::kUnitR));
}
Mor Mor::right_unitor_inv(const ObjPtr& x) {
  return build(x, Obj::tensor(x, unit_object(*x->cat())), new_node(Node::kUnitRInv));
}

Mor Mor::recast(const Mor& f, const ObjPtr& new_src, const ObjPtr& new_dst) {
  if (!same_shape(f.src(), new_src) || !same_shape(f.dst(), new_dst))
    throw std::invalid_argument("Mor::recast: shape mismatch");
  auto n = new_node(Node::kRecast);
  n->f = std::make_shared<Mor>(f);
  return build(new_src, new_dst, n);
}

Mor Mor::materialized() const {
  Mor self = *this;
  return from_columns(src_, dst_, [&](int g, int i) { return self.column(g, i); });
}

Mor Mor::operator*(const Cyc& c) const { return compose(Mor::scalar(dst_, c), *this); }

Mor Mor::operator+(const Mor& o) const {
  if (!same_shape(src_, o.src_) || !same_shape(dst_, o.dst_))
    throw std::invalid_argument("Mor::operator+: shape mismatch");
  Mor a = *this, b = o;
  return from_columns(src_, dst_,
                      [&](int g, int i) { return sparse_add(a.column(g, i), b.column(g, i)); });
}

std::optional<Mor::Witness> morphisms_differ(const Mor& f, const Mor& g) {
  if (!same_tree(f.src(), g.src()) || !same_tree(f.dst(), g.dst()))
    return Mor::Witness{-1, -1, "shape mismatch"};
  int N = f.src()->group().order();
  int fa, fb;
  Cyc ca, cb;
  for (int grade = 0; grade < N; ++grade) {
    int d = f.src()->mult(grade);
    for (int i = 0; i < d; ++i) {
      int ra = f.column_mono(grade, i, fa, ca);
      if (ra != 2) {
        int rb = g.column_mono(grade, i, fb, cb);
        if (rb != 2) {
          if (ra == rb && (ra == 0 || (fa == fb && ca == cb))) continue;
          std::ostringstream os;
          os << "columns differ at grade " << grade << " index " << i;
          return Mor::Witness{grade, i, os.str()};
        }
      }
      SparseVec a = f.column(grade, i);
      SparseVec b = g.column(grade, i);
      if (a != b) {
        std::ostringstream os;
        os << "columns differ at grade " << grade << " index " << i;
        return Mor::Witness{grade, i, os.str()};
      }
    }
  }
  return std::nullopt;
}

ObjPtr dual_object(const ObjPtr& x) {
  if (!x->is_leaf()) throw std::invalid_argument("dual_object: leaf expected");
  const FiniteGroup& g = x->group();
  GradedObject o = GradedObject::zero(g);
  for (int i = 0; i < g.order(); ++i) o.mult[i] = x->mult(g.inv(i));
  return Obj::leaf(x->cat(), std::move(o));
}

Mor ev_mor(const ObjPtr& x) {
  ObjPtr d = dual_object(x);
  ObjPtr src = Obj::tensor(d, x);
  ObjPtr unit = unit_object(*x->cat());
  const FiniteGroup& gr = x->group();
  return Mor::from_columns(src, unit, [&](int grade, int idx) -> SparseVec {
    if (grade != 0) return {};
    Obj::PairIndex p = src->decode(grade, idx);
    if (p.iy != p.iz) return {};
    int g = p.z;
    return {{0, x->cat()->w(g, gr.inv(g), g)}};
  });
}

Mor ev_prime_mor(const ObjPtr& x) {
  ObjPtr d = dual_object(x);
  ObjPtr src = Obj::tensor(x, d);
  ObjPtr unit = unit_object(*x->cat());
  const FiniteGroup& gr = x->group();
  return Mor::from_columns(src, unit, [&](int grade, int idx) -> SparseVec {
    if (grade != 0) return {};
    Obj::PairIndex p = src->decode(grade, idx);
    if (p.iy != p.iz) return {};
    int g = p.y;
    return {{0, x->cat()->winv(g, gr.inv(g), g)}};
  });
}

Mor coev_mor(const ObjPtr& x) {
  ObjPtr d = dual_object(x);
  ObjPtr dst = Obj::tensor(x, d);
  ObjPtr unit = unit_object(*x->cat());
  const FiniteGroup& gr = x->group();
  return Mor::from_columns(unit, dst, [&](int grade, int) -> SparseVec {
    if (grade != 0) return {};
    SparseVec out;
    for (int g = 0; g < gr.order(); ++g)
      for (int i = 0; i < x->mult(g); ++i) out.emplace_back(dst->encode(0, g, i, i), Cyc(1));
    return out;
  });
}

Mor coev_prime_mor(const ObjPtr& x) {
  ObjPtr d = dual_object(x);
  ObjPtr dst = Obj::tensor(d, x);
  ObjPtr unit = unit_object(*x->cat());
  const FiniteGroup& gr = x->group();
  return Mor::from_columns(unit, dst, [&](int grade, int) -> SparseVec {
    if (grade != 0) return {};
    SparseVec out;
    for (int g = 0; g < gr.order(); ++g)
      for (int i = 0; i < x->mult(g); ++i)
        out.emplace_back(dst->encode(0, gr.inv(g), i, i), Cyc(1));
    return out;
  });
}

ObjPtr unit_object(const PointedCat& cat) {
  return Obj::leaf(&cat, GradedObject::unit(*cat.G));
}

ObjPtr simple_object(const PointedCat& cat, int g) {
  return Obj::leaf(&cat, GradedObject::simple(*cat.G, g));
}

ObjPtr flatten(const ObjPtr& x) {
  if (x->is_leaf()) return x;
  return Obj::leaf(x->cat(), x->graded());
}

}  // namespace fusioncat
