#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "alcove/levi.hpp"
#include "oracles.hpp"

using namespace alcove;

TEST_CASE("levi subsystem classification") {
  RootSystem a2(CartanType('A', 2));
  LeviDatum h = levi_subsystem(a2, {1});
  CHECK(h.type_str() == "A1");
  CHECK(h.sub.pos_roots == std::vector<int>{1});

  RootSystem a3(CartanType('A', 3));
  CHECK(levi_subsystem(a3, {0, 2}).type_str() == "A1xA1");
  CHECK(levi_subsystem(a3, {1, 2}).type_str() == "A2");
  CHECK(levi_subsystem(a3, {}).type_str() == "trivial");

  RootSystem c3(CartanType('C', 3));
  CHECK(levi_subsystem(c3, {1, 2}).type_str() == "C2");
  CHECK(levi_subsystem(c3, {0, 2}).type_str() == "A1xA1");
  CHECK(levi_subsystem(c3, {0, 1}).type_str() == "A2");

  CHECK_THROWS_AS(levi_subsystem(a2, {5}), std::invalid_argument);
}

TEST_CASE("levi order") {
  RootSystem rs(CartanType('A', 2));
  std::vector<int> all{0, 1};
  CHECK(order_leq(rs, Weight({0, 0}), Weight({3, 0}), all));
  CHECK(order_leq_full(rs, Weight({0, 0}), Weight({3, 0})));
  CHECK(order_leq(rs, Weight({1, 0}), Weight({1, 0}), {1}));  // reflexive
  // varpi_1 + alpha_1 - varpi_1 = alpha_1, not in the span of alpha_2.
  CHECK(!order_leq(rs, Weight({1, 0}), Weight({3, -1}), {1}));
  CHECK(in_levi_root_lattice(rs, Weight({2, -1}), {0}));
  CHECK(!in_levi_root_lattice(rs, Weight({2, -1}), {1}));
  CHECK(in_levi_root_lattice(rs, Weight({0, 0}), {}));
  CHECK(!in_levi_root_lattice(rs, Weight({1, 0}), {0, 1}));
}

TEST_CASE("ideals of dominant weights") {
  RootSystem rs(CartanType('A', 2));
  CHECK(ideal_generated(rs, {Weight({0, 0})}) ==
        std::vector<Weight>{Weight({0, 0})});
  CHECK(ideal_generated(rs, {Weight({3, 0})}) ==
        std::vector<Weight>{Weight({0, 0}), Weight({1, 1}), Weight({3, 0})});
  // Union over generators: {0, (1,1), (3,0)} with {0, (1,1), (0,3)}.
  auto both = ideal_generated(rs, {Weight({3, 0}), Weight({0, 3})});
  CHECK(both.size() == 4);
}

TEST_CASE("coset members") {
  RootSystem rs(CartanType('A', 2));
  std::vector<Weight> gamma = ideal_generated(rs, {Weight({1, 1})});
  CHECK(gamma == std::vector<Weight>{Weight({0, 0}), Weight({1, 1})});

  LeviDatum h = levi_subsystem(rs, {1});
  CosetResult res = coset_members(rs, h, Weight({1, 1}), gamma);
  CHECK(res.members == std::vector<Weight>{Weight({1, 1})});
  CHECK(res.coideal_in_gamma);
  CHECK(res.ideal_in_levi_order);

  // Full Levi: the whole coset is the root-lattice coset, here all of gamma.
  LeviDatum full = levi_subsystem(rs, {0, 1});
  CosetResult all = coset_members(rs, full, Weight({0, 0}), gamma);
  CHECK(all.members == gamma);
  CHECK(all.coideal_in_gamma);
  CHECK(all.ideal_in_levi_order);

  // Empty Levi: the coset of omega is just omega.
  LeviDatum none = levi_subsystem(rs, {});
  CosetResult solo = coset_members(rs, none, Weight({1, 1}), gamma);
  CHECK(solo.members == std::vector<Weight>{Weight({1, 1})});
}

TEST_CASE("truncation") {
  RootSystem rs(CartanType('A', 2));
  LeviDatum h = levi_subsystem(rs, {1});
  FormalCharacter chi = weyl_character(rs, Weight({1, 1}));
  FormalCharacter tr = truncate_character(rs, chi, h, Weight({1, 1}));
  FormalCharacter expect;
  expect[{1, 1}] = 1;
  expect[{2, -1}] = 1;
  CHECK(tr == expect);

  // Truncating at the full Levi is the identity.
  LeviDatum full = levi_subsystem(rs, {0, 1});
  CHECK(truncate_character(rs, chi, full, Weight({1, 1})) == chi);

  // Disjoint coset: empty result.
  CHECK(truncate_character(rs, chi, h, Weight({0, 1})).empty());

  // Idempotent and linear.
  CHECK(truncate_character(rs, tr, h, Weight({1, 1})) == tr);
  FormalCharacter sum = chi;
  for (const auto& [w, m] : weyl_character(rs, Weight({2, 2}))) sum[w] += m;
  FormalCharacter tr2 =
      truncate_character(rs, weyl_character(rs, Weight({2, 2})), h,
                         Weight({1, 1}));
  FormalCharacter expect_sum = tr;
  for (const auto& [w, m] : tr2) expect_sum[w] += m;
  CHECK(truncate_character(rs, sum, h, Weight({1, 1})) == expect_sum);
}

TEST_CASE("donkin check on sample pairs") {
  RootSystem a2(CartanType('A', 2));
  LeviDatum h = levi_subsystem(a2, {1});
  CHECK(donkin_check(a2, h, Weight({1, 1})));
  CHECK(donkin_check(a2, h, Weight({0, 0})));
  CHECK(donkin_check(a2, levi_subsystem(a2, {0, 1}), Weight({2, 1})));
  CHECK_THROWS_AS(donkin_check(a2, h, Weight({-1, 0})), std::invalid_argument);

  RootSystem c2(CartanType('C', 2));
  LeviDatum hc = levi_subsystem(c2, {0});
  for (const Weight& lam : oracles::dominant_weights_with_level(c2, 8))
    CHECK(donkin_check(c2, hc, lam));
}

TEST_CASE("coset structure when the generators lie in the coset") {
  // The structural claim (coideal in (Gamma, <=), ideal in (X^{(H)+}, <=_H))
  // is for ideals generated by F contained in Omega^+ = (omega + Z Phi_H)
  // cap X+.
  for (const char* name : {"A2", "A3", "C2", "C3", "B3"}) {
    CAPTURE(name);
    RootSystem rs(CartanType::parse(name));
    std::vector<int> J;
    for (int i = 0; i < rs.rank(); i += 2) J.push_back(i);
    LeviDatum h = levi_subsystem(rs, J);
    for (const Weight& om : oracles::dominant_weights_with_level(rs, 6)) {
      std::vector<Weight> F;
      for (const Weight& f : oracles::dominant_weights_with_level(rs, 8))
        if (in_levi_root_lattice(rs, f - om, h.sub.simple)) F.push_back(f);
      std::vector<Weight> gamma = ideal_generated(rs, F);
      CosetResult res = coset_members(rs, h, om, gamma);
      CHECK(res.coideal_in_gamma);
      CHECK(res.ideal_in_levi_order);
      CHECK(!res.members.empty());  // omega itself
      for (const Weight& m : res.members) CHECK(rs.is_dominant(m));
    }
  }
}

TEST_CASE("dominant weights form an ideal for the levi order") {
  // mu <=_H lambda with lambda dominant and mu H-dominant forces mu dominant.
  for (const char* name : {"A2", "A3", "C3"}) {
    CAPTURE(name);
    RootSystem rs(CartanType::parse(name));
    std::vector<int> J;
    for (int i = 0; i < rs.rank(); i += 2) J.push_back(i);
    LeviDatum h = levi_subsystem(rs, J);
    for (const Weight& lam : oracles::dominant_weights_with_level(rs, 7)) {
      std::vector<int> c(J.size(), 0);
      for (;;) {
        Weight mu = lam;
        for (size_t t = 0; t < J.size(); ++t)
          mu -= c[t] * rs.simple_root_weight(J[t]);
        if (is_dominant_sub(rs, h.sub, mu)) CHECK(rs.is_dominant(mu));
        size_t t = 0;
        while (t < J.size() && c[t] == 4) c[t++] = 0;
        if (t == J.size()) break;
        ++c[t];
      }
    }
  }
}
