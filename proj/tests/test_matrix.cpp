#include <doctest.h>

#include <random>

#include "fusioncat/matrix.hpp"

using namespace fusioncat;

namespace {

CycMatrix random_invertible_rational(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> val(-5, 5);
  while (true) {
    CycMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.set(i, j, Cyc(val(rng)));
    if (rank(m) == n) return m;
  }
}

}  // namespace

TEST_CASE("rank basics") {
  CycMatrix ones(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) ones.set(i, j, Cyc(1));
  CHECK(rank(ones) == 1);
  CHECK(rank(CycMatrix::identity(3)) == 3);
}

TEST_CASE("rank is invariant under permutations and row scaling") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> val(-3, 3);
  for (int iter = 0; iter < 20; ++iter) {
    CycMatrix m(5, 4);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 4; ++j) m.set(i, j, Cyc(val(rng)));
    int r = rank(m);
    // permute rows (reverse) and columns (rotate)
    CycMatrix p(5, 4);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 4; ++j) p.set(4 - i, (j + 1) % 4, m.at(i, j));
    CHECK(rank(p) == r);
    // scale a row by a nonzero cyclotomic scalar
    CycMatrix s = m;
    for (int j = 0; j < 4; ++j) s.set(2, j, m.at(2, j) * Cyc::root(8, 3));
    CHECK(rank(s) == r);
  }
}

TEST_CASE("solve identity and inconsistent systems") {
  CycMatrix id = CycMatrix::identity(3);
  std::vector<Cyc> b{Cyc(2), Cyc::root(4, 1), Cyc::rational(1, 3)};
  auto x = solve(id, b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  CycMatrix zero(2, 2);
  auto none = solve(zero, {Cyc(1), Cyc(0)});
  CHECK(!none.has_value());
}

TEST_CASE("solve random invertible systems, re-verified by multiplication") {
  std::mt19937 rng(99);
  for (int iter = 0; iter < 10; ++iter) {
    CycMatrix m = random_invertible_rational(rng, 5);
    std::uniform_int_distribution<int> val(-5, 5);
    std::vector<Cyc> b;
    for (int i = 0; i < 5; ++i) b.push_back(Cyc(val(rng)));
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    for (int i = 0; i < 5; ++i) {
      Cyc acc;
      for (int j = 0; j < 5; ++j) acc += m.at(i, j) * (*x)[j];
      CHECK(acc == b[i]);
    }
  }
}

TEST_CASE("quotient_with_section trivial cases") {
  SUBCASE("no relations") {
    CycMatrix r(3, 0);
    auto q = quotient_with_section(3, r);
    CHECK(q.q == 3);
    CHECK(q.proj == CycMatrix::identity(3));
    CHECK(q.sect == CycMatrix::identity(3));
  }
  SUBCASE("kill first basis vector") {
    CycMatrix r(2, 1);
    r.set(0, 0, Cyc(1));
    auto q = quotient_with_section(2, r);
    CHECK(q.q == 1);
    CHECK(q.proj.at(0, 0) == Cyc(0));
    CHECK(q.proj.at(0, 1) == Cyc(1));
    CHECK(q.sect.at(1, 0) == Cyc(1));
  }
}

TEST_CASE("quotient invariants: proj*sect = id, proj*R = 0") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> val(-2, 2), dim(3, 8);
  for (int iter = 0; iter < 25; ++iter) {
    int d = dim(rng);
    int nrel = dim(rng);
    CycMatrix r(d, nrel);
    for (int j = 0; j < nrel; ++j)
      for (int i = 0; i < d; ++i)
        if (val(rng) > 0) r.set(i, j, Cyc(val(rng)) * Cyc::root(4, iter % 4));
    auto q = quotient_with_section(d, r);
    CHECK(q.q == d - rank(r));
    CHECK(q.proj * q.sect == CycMatrix::identity(q.q));
    CHECK((q.proj * r).is_zero());
  }
}

TEST_CASE("quotient builder reduce agrees with proj kernel") {
  QuotientBuilder qb(4);
  // relations: e0 - 2 e1, e2
  qb.add_relation({{0, Cyc(1)}, {1, Cyc(-2)}});
  qb.add_relation({{2, Cyc(1)}});
  SparseVec v{{0, Cyc(4)}, {2, Cyc(7)}};
  SparseVec red = qb.reduce(v);
  // e0 -> 2 e1, e2 -> 0; expect 8 e1
  REQUIRE(red.size() == 1);
  CHECK(red[0].first == 1);
  CHECK(red[0].second == Cyc(8));
  auto q = qb.finish();
  CHECK(q.q == 2);
}
