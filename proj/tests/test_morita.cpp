#include <doctest.h>

#include <random>

#include "fusioncat/io.hpp"
#include "fusioncat/morita.hpp"

using namespace fusioncat;

namespace {
FiniteGroup make_z1() { return FiniteGroup::validate("Z1", {{0}}); }
FiniteGroup make_z2() { return FiniteGroup::validate("Z2", cyclic_table(2)); }
FiniteGroup make_v4() {
  return FiniteGroup::validate("Z2xZ2", product_table(cyclic_table(2), cyclic_table(2)));
}
}  // namespace

TEST_CASE("admissible pair enumeration counts") {
  auto z1 = make_z1();
  CHECK(enumerate_admissible_pairs(z1, Cochain3::trivial(z1)).size() == 1);

  auto z2 = make_z2();
  CHECK(enumerate_admissible_pairs(z2, Cochain3::trivial(z2)).size() == 2);

  auto v4 = make_v4();
  // brute force: 5 subgroups; the full group carries |H^2(V4, k^x)| = 2
  // torsor classes, every proper subgroup exactly one
  auto pairs = enumerate_admissible_pairs(v4, Cochain3::trivial(v4));
  CHECK(pairs.size() == 6);
}

TEST_CASE("pairs_conjugate basics") {
  auto v4 = make_v4();
  Cochain3 triv = Cochain3::trivial(v4);
  auto pairs = enumerate_admissible_pairs(v4, triv);

  SUBCASE("reflexive with witness (e, 0)") {
    for (const auto& p : pairs) {
      auto w = pairs_conjugate(v4, triv, p, p);
      REQUIRE(w.has_value());
      CHECK(w->x == 0);
      for (int v : w->gamma.e) CHECK(v == 0);
    }
  }
  SUBCASE("symmetric on all pairs") {
    for (const auto& p : pairs)
      for (const auto& q : pairs)
        CHECK(pairs_conjugate(v4, triv, p, q).has_value() ==
              pairs_conjugate(v4, triv, q, p).has_value());
  }
  SUBCASE("transitive at desk scale") {
    for (const auto& p : pairs)
      for (const auto& q : pairs)
        for (const auto& r : pairs) {
          if (pairs_conjugate(v4, triv, p, q) && pairs_conjugate(v4, triv, q, r))
            CHECK(pairs_conjugate(v4, triv, p, r).has_value());
        }
  }
  SUBCASE("the two H^2 classes on the full group are not conjugate") {
    std::vector<const AdmissiblePair*> full;
    for (const auto& p : pairs)
      if (p.L.size() == 4) full.push_back(&p);
    REQUIRE(full.size() == 2);
    CHECK(!pairs_conjugate(v4, triv, *full[0], *full[1]).has_value());
  }
  SUBCASE("coboundary shifts merge with x = e") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> val(0, 1);
    for (const auto& p : pairs) {
      Cochain1 gamma0;
      gamma0.L = p.L;
      gamma0.n = 2;
      gamma0.e.assign(p.L.size(), 0);
      for (int i = 1; i < p.L.size(); ++i) gamma0.e[i] = val(rng);
      AdmissiblePair shifted{p.L, add_cochains(v4, p.psi, d1(v4, gamma0))};
      auto w = pairs_conjugate(v4, triv, p, shifted);
      REQUIRE(w.has_value());
      CHECK(w->x == 0);
    }
  }
}

TEST_CASE("synthetic conjugates are detected") {
  auto d8 = FiniteGroup::validate("D8", dihedral8_table());
  Cochain3 triv = Cochain3::trivial(d8);
  // reflection subgroup {e, s}; conjugate by the rotation r
  Subgroup refl(d8, {0, 4});
  AdmissiblePair p{refl, trivial_cochain2(refl)};
  int x = 1;
  Subgroup conj = conjugate_subgroup(d8, refl, d8.inv(x));
  Cochain2 psix = conjugate_cochain(d8, p.psi, x);
  REQUIRE(psix.L == conj);
  AdmissiblePair q{conj,
                   add_cochains(d8, psix, restrict_to(d8, omega_conjugation(d8, triv, x), conj))};
  REQUIRE(trivializes(d8, q.psi, triv));
  auto w = pairs_conjugate(d8, triv, p, q);
  REQUIRE(w.has_value());
  // and a genuinely different subgroup shape is not conjugate
  Subgroup center(d8, {0, 2});
  AdmissiblePair c{center, trivial_cochain2(center)};
  CHECK(!pairs_conjugate(d8, triv, p, c).has_value());
}

TEST_CASE("p_classes counts") {
  auto z1 = make_z1();
  CHECK(p_classes(z1, Cochain3::trivial(z1)).size() == 1);
  auto z2 = make_z2();
  CHECK(p_classes(z2, Cochain3::trivial(z2)).size() == 2);
  auto v4 = make_v4();
  CHECK(p_classes(v4, Cochain3::trivial(v4)).size() == 6);
}

TEST_CASE("class count is invariant under reversed enumeration") {
  auto v4 = make_v4();
  Cochain3 triv = Cochain3::trivial(v4);
  auto pairs = enumerate_admissible_pairs(v4, triv);
  std::reverse(pairs.begin(), pairs.end());
  std::vector<AdmissiblePair> reps;
  for (const auto& p : pairs) {
    bool merged = false;
    for (const auto& r : reps)
      if (pairs_conjugate(v4, triv, r, p)) {
        merged = true;
        break;
      }
    if (!merged) reps.push_back(p);
  }
  CHECK(reps.size() == p_classes(v4, triv).size());
}

TEST_CASE("classify on Z2xZ2 with trivial omega") {
  auto v4 = make_v4();
  PointedCat cat(v4, Cochain3::trivial(v4));
  Subgroup triv_k(v4, {0});
  ClassificationReport r0 = classify(cat, triv_k, trivial_cochain2(triv_k));
  CHECK(r0.classes.size() == 6);
  for (const auto& c : r0.classes) {
    CHECK(c.checks_ok);
    CHECK(c.connected);  // K = {e}: every Hecke algebra is a twisted group algebra
    CHECK(c.rank_r == 1);
  }
  // a different admissible base gives the same count
  Subgroup k2(v4, {0, 1});
  ClassificationReport r1 = classify(cat, k2, trivial_cochain2(k2));
  CHECK(r1.classes.size() == 6);
  for (const auto& c : r1.classes) CHECK(c.checks_ok);
  // deterministic report
  CHECK(classify(cat, triv_k, trivial_cochain2(triv_k)).str() == r0.str());
}

TEST_CASE("classify rejects a non-admissible base") {
  auto z4 = FiniteGroup::validate("Z4", cyclic_table(4));
  PointedCat cat(z4, standard_cyclic_omega(z4));
  Subgroup full = full_subgroup(z4);
  CHECK_THROWS_AS(classify(cat, full, trivial_cochain2(full, 4)), NotAdmissibleBase);
}
