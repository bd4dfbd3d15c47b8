#include <doctest.h>

#include <stdexcept>

#include "alcove/charring.hpp"
#include "oracles.hpp"

using namespace alcove;

namespace {

FormalCharacter make_char(std::vector<std::pair<std::vector<int>, int>> terms) {
  FormalCharacter c;
  for (auto& [w, m] : terms) c[w] = m;
  return c;
}

}  // namespace

TEST_CASE("weyl characters in A1") {
  RootSystem rs(CartanType('A', 1));
  CHECK(weyl_character(rs, Weight({1})) == make_char({{{1}, 1}, {{-1}, 1}}));
  CHECK(weyl_character(rs, Weight({3})) ==
        make_char({{{3}, 1}, {{1}, 1}, {{-1}, 1}, {{-3}, 1}}));
  CHECK(char_dimension(weyl_character(rs, Weight({3}))) == 4);
  CHECK_THROWS_AS(weyl_character(rs, Weight({-1})), std::invalid_argument);
}

TEST_CASE("adjoint character of A2") {
  RootSystem rs(CartanType('A', 2));
  FormalCharacter chi = weyl_character(rs, Weight({1, 1}));
  CHECK(char_dimension(chi) == 8);
  CHECK(chi.at({0, 0}) == 2);
  CHECK(chi.at({1, 1}) == 1);
  CHECK(chi.at({2, -1}) == 1);  // the root alpha_1
  CHECK(weyl_dimension(rs, Weight({1, 1})) == 8);
}

TEST_CASE("freudenthal agrees with the alternating sum") {
  for (const char* name : {"A1", "A2", "C2"}) {
    CAPTURE(name);
    RootSystem rs(CartanType::parse(name));
    for (const Weight& lam : oracles::dominant_weights_with_level(rs, 8)) {
      FormalCharacter chi = weyl_character(rs, lam);
      CHECK(chi == oracles::weyl_character_altsum(rs, lam));
      CHECK(char_dimension(chi) == weyl_dimension(rs, lam));
    }
  }
}

TEST_CASE("character products and decomposition") {
  RootSystem rs(CartanType('A', 1));
  FormalCharacter sq =
      char_mul(weyl_character(rs, Weight({1})), weyl_character(rs, Weight({1})));
  CHECK(sq == make_char({{{2}, 1}, {{0}, 2}, {{-2}, 1}}));
  DeltaVector dv = brauer_decompose(rs, sq);
  CHECK(dv == DeltaVector{{{0}, 1}, {{2}, 1}});

  // Virtual coefficients: e^3 + e^{-3} = ch Delta(3) - ch Delta(1).
  DeltaVector virt =
      brauer_decompose(rs, make_char({{{3}, 1}, {{-3}, 1}}));
  CHECK(virt == DeltaVector{{{1}, -1}, {{3}, 1}});
  CHECK(delta_expand(rs, virt) == make_char({{{3}, 1}, {{-3}, 1}}));

  CHECK_THROWS_AS(brauer_decompose(rs, make_char({{{1}, 1}})),
                  std::domain_error);  // not W-invariant
}

TEST_CASE("decompose round trip at small rank") {
  for (const char* name : {"A1", "A2", "A3", "C2", "C3", "B3", "G2"}) {
    CAPTURE(name);
    RootSystem rs(CartanType::parse(name));
    for (const Weight& lam : oracles::dominant_weights_with_level(rs, 6)) {
      DeltaVector dv = brauer_decompose(rs, weyl_character(rs, lam));
      CHECK(dv == DeltaVector{{lam.v, 1}});
    }
    // A small product decomposes with nonnegative coefficients summing in
    // dimension.
    Weight a = oracles::dominant_weights_with_level(rs, 6).back();
    FormalCharacter prod =
        char_mul(weyl_character(rs, a), weyl_character(rs, a));
    DeltaVector dv = brauer_decompose(rs, prod);
    Int dim = 0;
    for (const auto& [w, c] : dv) {
      CHECK(c > 0);
      dim += c * weyl_dimension(rs, Weight(w));
    }
    CHECK(dim == char_dimension(prod));
    CHECK(delta_expand(rs, dv) == prod);
  }
}

TEST_CASE("frobenius twist") {
  FormalCharacter chi = make_char({{{1, 0}, 1}, {{-1, 1}, 2}});
  CHECK(frobenius_twist(chi, 3) == make_char({{{3, 0}, 1}, {{-3, 3}, 2}}));
  CHECK(frobenius_twist(chi, 1) == chi);
}

TEST_CASE("lusztig character in A1") {
  RootSystem rs(CartanType('A', 1));
  KLTable table(rs, 3);
  LusztigResult res = lusztig_character(rs, Weight({3}), 3, table);
  CHECK(res.delta == DeltaVector{{{1}, -1}, {{3}, 1}});
  CHECK(res.expansion == make_char({{{3}, 1}, {{-3}, 1}}));
  CHECK(res.is_character);
  CHECK(res.base == Weight({-3}));

  // Lowest-alcove weights collapse to a single Weyl character.
  LusztigResult triv = lusztig_character(rs, Weight({0}), 3, table);
  CHECK(triv.delta == DeltaVector{{{0}, 1}});
  CHECK(triv.is_character);

  CHECK_THROWS_AS(lusztig_character(rs, Weight({2}), 3, table),
                  std::domain_error);  // singular
}

TEST_CASE("lusztig character in A2") {
  RootSystem rs(CartanType('A', 2));
  KLTable table(rs, 3);
  LusztigResult res = lusztig_character(rs, Weight({1, 1}), 3, table);
  CHECK(res.delta == DeltaVector{{{0, 0}, -1}, {{1, 1}, 1}});
  CHECK(char_dimension(res.expansion) == 7);
  CHECK(res.is_character);
}

TEST_CASE("A1 steinberg factorization inside the jantzen region") {
  RootSystem rs(CartanType('A', 1));
  for (int p : {2, 3, 5}) {
    KLTable table(rs, p);
    // Jantzen region: m + 1 <= p(p - h + 2) = p^2.
    for (int m = 0; m < p * p; ++m) {
      Weight lam({m});
      if (!is_regular(rs, lam, p)) continue;
      LusztigResult res = lusztig_character(rs, lam, p, table);
      CHECK(res.is_character);
      CHECK(res.expansion == oracles::sl2_simple_character(rs, m, p));
    }
  }
}

TEST_CASE("twist identity") {
  RootSystem a1(CartanType('A', 1));
  KLTable t2(a1, 2);
  TwistReport r = verify_twist_identity(a1, Weight({1}), 2, t2);
  CHECK(r.within_hypotheses);
  CHECK(r.verdict);
  CHECK(r.lhs == DeltaVector{{{0}, -1}, {{2}, 1}});
  CHECK(r.lhs == r.rhs);

  KLTable t3(a1, 3);
  TwistReport r3 = verify_twist_identity(a1, Weight({0}), 3, t3);
  CHECK(r3.verdict);
  CHECK(r3.lhs == DeltaVector{{{0}, 1}});

  // Non-simply-laced types are flagged as outside the hypotheses.
  RootSystem c2(CartanType('C', 2));
  KLTable tc(c2, 5);
  TwistReport rc = verify_twist_identity(c2, Weight({0, 0}), 5, tc);
  CHECK(!rc.within_hypotheses);
}
