#include "fusioncat/io.hpp"

#include <fstream>
#include <sstream>

namespace fusioncat {

FiniteGroup parse_group_file(const std::string& text) {
  std::istringstream in(text);
  std::string word, name;
  int order = 0;
  if (!(in >> word) || word != "group") throw ParseError("group file: expected 'group'");
  if (!(in >> name)) throw ParseError("group file: missing name");
  if (!(in >> word) || word != "order") throw ParseError("group file: expected 'order'");
  if (!(in >> order) || order <= 0) throw ParseError("group file: bad order");
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j)
      if (!(in >> table[i][j])) throw ParseError("group file: truncated table");
  return FiniteGroup::validate(name, table);
}

std::string group_to_string(const FiniteGroup& g) {
  std::ostringstream os;
  os << "group " << g.name() << " order " << g.order() << "\n";
  for (int i = 0; i < g.order(); ++i) {
    for (int j = 0; j < g.order(); ++j) os << (j ? " " : "") << g.mul(i, j);
    os << "\n";
  }
  return os.str();
}

std::variant<Cochain2, Cochain3> parse_cochain_file(const std::string& text,
                                                    const FiniteGroup& g) {
  std::istringstream in(text);
  std::string word, name;
  int arity = 0, modulus = 0;
  if (!(in >> word) || word != "cochain") throw ParseError("cochain file: expected 'cochain'");
  if (!(in >> arity) || (arity != 2 && arity != 3))
    throw ParseError("cochain file: arity must be 2 or 3");
  if (!(in >> word) || word != "modulus") throw ParseError("cochain file: expected 'modulus'");
  if (!(in >> modulus) || modulus <= 0) throw ParseError("cochain file: bad modulus");
  if (!(in >> word) || word != "group") throw ParseError("cochain file: expected 'group'");
  if (!(in >> name)) throw ParseError("cochain file: missing group name");
  if (name != g.name())
    throw ParseError("cochain file: group name mismatch (" + name + " vs " + g.name() + ")");
  int N = g.order();
  auto in_range = [&](int v) { return v >= 0 && v < N; };
  if (arity == 3) {
    Cochain3 w = Cochain3::trivial(g, modulus);
    int i, j, k, e;
    while (in >> i) {
      if (!(in >> j >> k >> e)) throw ParseError("cochain file: truncated 3-cochain line");
      if (!in_range(i) || !in_range(j) || !in_range(k))
        throw ParseError("cochain file: index out of range");
      w.set(i, j, k, e);
    }
    if (!w.is_normalized()) throw ParseError("cochain file: 3-cochain not normalized");
    return w;
  }
  Cochain2 c = trivial_cochain2(full_subgroup(g), modulus);
  int i, j, e;
  while (in >> i) {
    if (!(in >> j >> e)) throw ParseError("cochain file: truncated 2-cochain line");
    if (!in_range(i) || !in_range(j)) throw ParseError("cochain file: index out of range");
    c.set_pos(i, j, e);
  }
  if (!c.is_normalized()) throw ParseError("cochain file: 2-cochain not normalized");
  return c;
}

std::string cochain3_to_string(const Cochain3& w, const std::string& group_name) {
  std::ostringstream os;
  os << "cochain 3 modulus " << w.n << " group " << group_name << "\n";
  for (int i = 0; i < w.order; ++i)
    for (int j = 0; j < w.order; ++j)
      for (int k = 0; k < w.order; ++k)
        if (w.at(i, j, k)) os << i << " " << j << " " << k << " " << w.at(i, j, k) << "\n";
  return os.str();
}

std::string cochain2_to_string(const Cochain2& c, const std::string& group_name) {
  std::ostringstream os;
  os << "cochain 2 modulus " << c.n << " group " << group_name << "\n";
  for (int i = 0; i < c.L.size(); ++i)
    for (int j = 0; j < c.L.size(); ++j)
      if (c.at_pos(i, j))
        os << c.L.elems[i] << " " << c.L.elems[j] << " " << c.at_pos(i, j) << "\n";
  return os.str();
}

std::string cochain3_hash(const Cochain3& w) {
  unsigned long long h = 1469598103934665603ull;
  auto mix = [&](unsigned long long v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<unsigned long long>(w.n));
  for (int v : w.e) mix(static_cast<unsigned long long>(v));
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

HeckeBasisLabel hecke_basis_decode(const ObjPtr& carrier, int grade, int idx) {
  Obj::PairIndex outer = carrier->decode(grade, idx);
  Obj::PairIndex inner = carrier->left()->decode(outer.y, outer.iy);
  return {inner.y, inner.z, outer.z};
}

int hecke_basis_encode(const ObjPtr& carrier, const FiniteGroup& g, int f, int gg, int k) {
  int fg = g.mul(f, gg);
  int grade = g.mul(fg, k);
  int inner = carrier->left()->encode(fg, f, 0, 0);
  return carrier->encode(grade, fg, inner, 0);
}

namespace {

struct DumpLine {
  std::vector<int> in_labels;
  std::vector<int> out_labels;
  Cyc coeff;
};

void collect_lcm(const std::vector<DumpLine>& lines, int& m) {
  for (const auto& l : lines) m = static_cast<int>(lcm_long(m, l.coeff.modulus()));
}

void print_lines(std::ostringstream& os, const std::string& tag,
                 const std::vector<DumpLine>& lines, int m) {
  for (const auto& l : lines) {
    os << tag;
    for (int v : l.in_labels) os << " " << v;
    os << " ->";
    const Cyc& c = l.coeff;
    long e = c.exponent_at(m);
    const mpq_class& r = c.coeff();
    os << " " << e << " " << r.get_num() << " " << r.get_den();
    for (int v : l.out_labels) os << " " << v;
    os << "\n";
  }
}

}  // namespace

std::string hecke_dump(const HeckeAlgebra& hk) {
  const HeckeContext& ctx = *hk.ctx;
  const FiniteGroup& g = *ctx.C->G;
  const ObjPtr& H = hk.H.carrier;
  ObjPtr HHpair = hk.m_tilde.src();

  std::vector<DumpLine> mlines, ulines, dlines, elines;
  // m section: lexicographic over (f, g, k, f', g', k')
  for (int f : ctx.K.elems)
    for (int gg : hk.L.elems)
      for (int k : ctx.K.elems) {
        int li = hecke_basis_encode(H, g, f, gg, k);
        int lg = g.mul(g.mul(f, gg), k);
        for (int f2 : ctx.K.elems)
          for (int g2 : hk.L.elems)
            for (int k2 : ctx.K.elems) {
              int ri = hecke_basis_encode(H, g, f2, g2, k2);
              int rg = g.mul(g.mul(f2, g2), k2);
              int grade = g.mul(lg, rg);
              int idx = HHpair->encode(grade, lg, li, ri);
              SparseVec col = hk.m_tilde.column(grade, idx);
              for (const auto& [j, c] : col) {
                HeckeBasisLabel out = hecke_basis_decode(H, grade, j);
                mlines.push_back({{f, gg, k, f2, g2, k2}, {out.f, out.g, out.k}, c});
              }
            }
      }
  for (int d : ctx.K.elems) {
    SparseVec col = hk.u.column(d, 0);
    for (const auto& [j, c] : col) {
      HeckeBasisLabel out = hecke_basis_decode(H, d, j);
      ulines.push_back({{d}, {out.f, out.g, out.k}, c});
    }
  }
  for (int f : ctx.K.elems)
    for (int gg : hk.L.elems)
      for (int k : ctx.K.elems) {
        int grade = g.mul(g.mul(f, gg), k);
        int idx = hecke_basis_encode(H, g, f, gg, k);
        SparseVec col = hk.delta_tilde.column(grade, idx);
        for (const auto& [j, c] : col) {
          Obj::PairIndex p = HHpair->decode(grade, j);
          HeckeBasisLabel a = hecke_basis_decode(H, p.y, p.iy);
          HeckeBasisLabel b = hecke_basis_decode(H, p.z, p.iz);
          dlines.push_back({{f, gg, k}, {a.f, a.g, a.k, b.f, b.g, b.k}, c});
        }
        SparseVec ecol = hk.eps.column(grade, idx);
        for (const auto& [j, c] : ecol) {
          (void)j;
          elines.push_back({{f, gg, k}, {grade}, c});
        }
      }

  int m = 1;
  collect_lcm(mlines, m);
  collect_lcm(ulines, m);
  collect_lcm(dlines, m);
  collect_lcm(elines, m);
  std::ostringstream os;
  os << "hecke group " << g.name() << " K " << ctx.K.id_string() << " L "
     << hk.L.id_string() << " modulus " << m << "\n";
  print_lines(os, "m", mlines, m);
  print_lines(os, "u", ulines, m);
  print_lines(os, "Delta", dlines, m);
  print_lines(os, "eps", elines, m);
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << content;
  out.close();
}

}  // namespace fusioncat
