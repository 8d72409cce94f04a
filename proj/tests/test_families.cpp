#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eqdeg/dimension.hpp"
#include "eqdeg/families.hpp"
#include "eqdeg/rootdata.hpp"
#include "eqdeg/search.hpp"

using namespace eqdeg;

namespace {

Weight weight_of(int rank, std::initializer_list<std::pair<int, BigInt>> entries) {
  Weight w(rank);
  for (int i = 0; i < rank; ++i) w(i) = 0;
  for (const auto& [i, v] : entries) w(i) = v;
  return w;
}

void check_witness(const FamilyWitness& w) {
  const RootDatum datum = RootDatum::build({w.type});
  CHECK(w.lambda != w.mu);
  CHECK(weyl_dim(datum, w.lambda) == w.degree);
  CHECK(weyl_dim(datum, w.mu) == w.degree);
  CHECK(canonical_form(datum, w.lambda) != canonical_form(datum, w.mu));
}

}  // namespace

TEST_CASE("family_A") {
  const FamilyWitness w3 = family_A(3);
  CHECK(w3.type == make_type(Family::A, 3));
  CHECK(w3.lambda == weight_of(3, {{1, 2}}));
  CHECK(w3.mu == weight_of(3, {{0, 1}, {1, 1}}));
  CHECK(w3.degree == 20);

  CHECK(family_A(4).degree == 175);
  CHECK(family_A(4).lambda == weight_of(4, {{1, 3}}));
  CHECK(family_A(4).mu == weight_of(4, {{0, 1}, {1, 2}}));

  for (int l = 3; l <= 12; ++l) check_witness(family_A(l));

  CHECK_THROWS_AS(family_A(2), std::invalid_argument);
  CHECK_THROWS_AS(family_A(1), std::invalid_argument);
}

TEST_CASE("family_B") {
  const FamilyWitness w3 = family_B(3);
  CHECK(w3.type == make_type(Family::B, 3));
  CHECK(w3.lambda == weight_of(3, {{1, 4}}));
  CHECK(w3.mu == weight_of(3, {{0, 1}, {1, 3}}));
  CHECK(w3.degree == 3003);

  CHECK(family_B(4).degree == 383724);
  CHECK(family_B(4).lambda == weight_of(4, {{1, 6}}));
  CHECK(family_B(4).mu == weight_of(4, {{0, 1}, {1, 5}}));

  for (int l = 3; l <= 12; ++l) check_witness(family_B(l));

  CHECK_THROWS_AS(family_B(2), std::invalid_argument);
}

TEST_CASE("family_D") {
  const FamilyWitness w4 = family_D(4);
  CHECK(w4.type == make_type(Family::D, 4));
  CHECK(w4.lambda == weight_of(4, {{1, 5}}));
  CHECK(w4.mu == weight_of(4, {{0, 1}, {1, 4}}));
  CHECK(w4.degree == 32928);

  CHECK(family_D(5).degree == 4671810);
  CHECK(family_D(5).lambda == weight_of(5, {{1, 7}}));
  CHECK(family_D(5).mu == weight_of(5, {{0, 1}, {1, 6}}));

  for (int l = 4; l <= 12; ++l) check_witness(family_D(l));

  CHECK_THROWS_AS(family_D(3), std::invalid_argument);
}

TEST_CASE("ratio_C examples") {
  CHECK(ratio_C(9, 5, 3) == 1);
  CHECK(ratio_C(3, 0, 3) == BigRat(7, 8));
  CHECK(ratio_C(15, 14, 4) == 1);
  CHECK(ratio_C(4, 1, 3) == BigRat(5 * 2 * 9, 3 * 6 * 5));

  CHECK_THROWS_AS(ratio_C(2, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(ratio_C(3, -1, 3), std::invalid_argument);
  CHECK_THROWS_AS(ratio_C(3, 0, 2), std::invalid_argument);
}

TEST_CASE("ratio_C matches the quotient of Weyl dimensions") {
  std::mt19937_64 rng(20260815);
  std::uniform_int_distribution<int> pick_a(3, 20), pick_b(0, 10), pick_l(3, 5);
  for (int trial = 0; trial < 30; ++trial) {
    const int a = pick_a(rng), b = pick_b(rng), l = pick_l(rng);
    const RootDatum datum = RootDatum::build({make_type(Family::C, l)});
    const BigInt top = weyl_dim(datum, weight_of(l, {{0, a}, {1, b}}));
    const BigInt bottom = weyl_dim(datum, weight_of(l, {{0, a - 2}, {1, b + 1}}));
    CHECK(ratio_C(a, b, l) == BigRat(top, bottom));
  }
}

TEST_CASE("degree_C") {
  CHECK(degree_C(9, 5, 3) == 548352);
  CHECK(degree_C(7, 6, 3) == 548352);
  for (int l = 3; l <= 8; ++l) CHECK(degree_C(0, 0, l) == 1);

  // Closed form agrees with the Weyl dimension across a box of highest weights.
  for (int l = 3; l <= 8; ++l) {
    const RootDatum datum = RootDatum::build({make_type(Family::C, l)});
    for (int a = 0; a <= 6; ++a)
      for (int b = 0; b <= 6; ++b)
        CHECK(degree_C(a, b, l) == weyl_dim(datum, weight_of(l, {{0, a}, {1, b}})));
  }

  CHECK_THROWS_AS(degree_C(1, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(degree_C(-1, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(degree_C(0, -1, 3), std::invalid_argument);
}

TEST_CASE("ratio_C is 1 exactly on the star solutions") {
  // ratio==1 forces both the quadratic's discriminant to be a square and b to be
  // the root it determines.
  for (int l = 3; l <= 5; ++l) {
    for (int a = 3; a <= 30; ++a) {
      BigInt c;
      const bool square = is_perfect_square(BigInt(4 * l - 5) * a * a +
                                                BigInt(2 * l - 3) * (2 * l - 3),
                                            &c);
      for (int b = 0; b <= 30; ++b) {
        const bool star = square && (c + 1 - a - 2 * l) % 2 == 0 &&
                          (c + 1 - a - 2 * l) / 2 == b;
        CHECK((ratio_C(a, b, l) == 1) == star);
      }
    }
  }
}

TEST_CASE("family_C") {
  const auto one = family_C(3, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].type == make_type(Family::C, 3));
  CHECK(one[0].lambda == weight_of(3, {{0, 9}, {1, 5}}));
  CHECK(one[0].mu == weight_of(3, {{0, 7}, {1, 6}}));
  CHECK(one[0].degree == 548352);
  check_witness(one[0]);

  const auto two = family_C(3, 2);
  REQUIRE(two.size() == 2);
  CHECK(two[1].lambda == weight_of(3, {{0, 144}, {1, 116}}));
  CHECK(two[1].mu == weight_of(3, {{0, 142}, {1, 117}}));
  check_witness(two[1]);

  const auto four = family_C(4, 1);
  REQUIRE(four.size() == 1);
  CHECK(four[0].lambda == weight_of(4, {{0, 15}, {1, 14}}));
  CHECK(four[0].mu == weight_of(4, {{0, 13}, {1, 15}}));
  check_witness(four[0]);

  CHECK_THROWS_AS(family_C(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(family_C(3, 0), std::invalid_argument);
}
