#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "eqdeg/search.hpp"
#include "oracles.hpp"

using namespace eqdeg;

namespace {

RootDatum simple(Family f, int rank) { return RootDatum::build({make_type(f, rank)}); }

std::vector<long long> coords(const Weight& w) {
  std::vector<long long> out;
  for (Eigen::Index i = 0; i < w.size(); ++i) out.push_back(w(i).convert_to<long long>());
  return out;
}

using Listing = std::vector<std::pair<std::vector<long long>, long long>>;

Listing listing_of(const std::vector<std::pair<Weight, BigInt>>& enumerated) {
  Listing out;
  for (const auto& [w, d] : enumerated) out.emplace_back(coords(w), d.convert_to<long long>());
  return out;
}

// Degree -> set of canonical forms with that degree, derived from the box oracle.
std::map<BigInt, std::set<std::vector<long long>>> grouped_by_oracle(const RootDatum& datum,
                                                                     long long bound) {
  std::map<BigInt, std::set<std::vector<long long>>> groups;
  for (const auto& [w, d] : oracles::box_enumerate(datum, bound, bound))
    groups[d].insert(coords(canonical_form(datum, w)));
  std::erase_if(groups, [](const auto& entry) { return entry.second.size() < 2; });
  return groups;
}

}  // namespace

TEST_CASE("enumerate_dominant on small examples") {
  const Listing a2 = listing_of(enumerate_dominant(simple(Family::A, 2), 10));
  const Listing a2_expected = {{{0, 0}, 1}, {{0, 1}, 3}, {{0, 2}, 6},  {{0, 3}, 10},
                               {{1, 0}, 3}, {{1, 1}, 8}, {{2, 0}, 6},  {{3, 0}, 10}};
  CHECK(a2 == a2_expected);

  const Listing a1 = listing_of(enumerate_dominant(simple(Family::A, 1), 4));
  const Listing a1_expected = {{{0}, 1}, {{1}, 2}, {{2}, 3}, {{3}, 4}};
  CHECK(a1 == a1_expected);

  // The two 27-dimensional representations of E6 sit at the ends of the long
  // arms; nothing else appears below the adjoint representation.
  const Listing e6 = listing_of(enumerate_dominant(simple(Family::E, 6), 27));
  const Listing e6_expected = {
      {{0, 0, 0, 0, 0, 0}, 1}, {{0, 0, 0, 0, 0, 1}, 27}, {{1, 0, 0, 0, 0, 0}, 27}};
  CHECK(e6 == e6_expected);

  CHECK_THROWS_AS(enumerate_dominant(simple(Family::A, 2), 0), std::invalid_argument);
}

TEST_CASE("enumerate_dominant is sorted, complete, and consistent") {
  for (auto [f, rank, bound] : {std::tuple{Family::A, 2, 200}, {Family::B, 2, 200},
                                {Family::G, 2, 500}, {Family::A, 3, 50}}) {
    const RootDatum datum = simple(f, rank);
    const auto listed = enumerate_dominant(datum, bound);
    for (std::size_t i = 0; i < listed.size(); ++i) {
      CHECK(listed[i].second == weyl_dim(datum, listed[i].first));
      CHECK(listed[i].second <= bound);
      if (i > 0) CHECK(lex_less(listed[i - 1].first, listed[i].first));
    }
    // Against the rectangular-box oracle: same weights, same degrees.
    CHECK(listing_of(listed) == listing_of(oracles::box_enumerate(datum, bound, bound)));
  }
}

TEST_CASE("canonical_form on simple types") {
  const RootDatum a2 = simple(Family::A, 2);
  CHECK(coords(canonical_form(a2, make_weight({1, 2}))) == std::vector<long long>{1, 2});
  CHECK(coords(canonical_form(a2, make_weight({2, 1}))) == std::vector<long long>{1, 2});
  CHECK(coords(canonical_form(a2, make_weight({4, 0}))) == std::vector<long long>{0, 4});

  const RootDatum b2 = simple(Family::B, 2);  // no diagram symmetry
  CHECK(coords(canonical_form(b2, make_weight({2, 1}))) == std::vector<long long>{2, 1});

  const RootDatum d4 = simple(Family::D, 4);  // triality permutes nodes 0, 2, 3
  CHECK(coords(canonical_form(d4, make_weight({1, 0, 0, 0}))) ==
        std::vector<long long>{0, 0, 0, 1});
  CHECK(coords(canonical_form(d4, make_weight({0, 1, 0, 0}))) ==
        std::vector<long long>{0, 1, 0, 0});
  CHECK(coords(canonical_form(d4, make_weight({2, 0, 1, 0}))) ==
        std::vector<long long>{0, 0, 1, 2});

  const RootDatum e6 = simple(Family::E, 6);
  const Weight two_w1 = make_weight({2, 0, 0, 0, 0, 0});
  const Weight two_w6 = make_weight({0, 0, 0, 0, 0, 2});
  CHECK(canonical_form(e6, two_w1) == two_w6);
  CHECK(canonical_form(e6, two_w6) == two_w6);
}

TEST_CASE("canonical_form on products") {
  const RootDatum two_sl2 = RootDatum::build({make_type(Family::A, 1), make_type(Family::A, 1)});
  CHECK(coords(canonical_form(two_sl2, make_weight({2, 1}))) == std::vector<long long>{1, 2});
  CHECK(coords(canonical_form(two_sl2, make_weight({1, 2}))) == std::vector<long long>{1, 2});

  const RootDatum two_a2 = RootDatum::build({make_type(Family::A, 2), make_type(Family::A, 2)});
  // Each factor canonicalizes, then the identical factors sort.
  CHECK(coords(canonical_form(two_a2, make_weight({3, 0, 1, 0}))) ==
        std::vector<long long>{0, 1, 0, 3});

  const RootDatum mixed = RootDatum::build({make_type(Family::A, 1), make_type(Family::A, 2)});
  CHECK(coords(canonical_form(mixed, make_weight({5, 2, 0}))) ==
        std::vector<long long>{5, 0, 2});
}

TEST_CASE("canonical_form is idempotent and degree-preserving") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coord(0, 5);
  for (const RootDatum& datum :
       {simple(Family::A, 3), simple(Family::D, 4), simple(Family::E, 6),
        RootDatum::build({make_type(Family::A, 2), make_type(Family::A, 2)})}) {
    for (int trial = 0; trial < 25; ++trial) {
      Weight w(datum.total_rank());
      for (int i = 0; i < datum.total_rank(); ++i) w(i) = coord(rng);
      const Weight canon = canonical_form(datum, w);
      CHECK(canonical_form(datum, canon) == canon);
      CHECK(!lex_less(w, canon));  // canonical form is the least orbit element
      CHECK(weyl_dim(datum, canon) == weyl_dim(datum, w));
    }
  }
}

TEST_CASE("find_coincidences, modulo automorphisms") {
  const auto a2 = find_coincidences(simple(Family::A, 2), {.max_degree = 15});
  REQUIRE(a2.size() == 1);
  CHECK(a2[0].degree == 15);
  REQUIRE(a2[0].weights.size() == 2);
  CHECK(a2[0].weights[0] == make_weight({0, 4}));
  CHECK(a2[0].weights[1] == make_weight({1, 2}));

  CHECK(find_coincidences(simple(Family::A, 2), {.max_degree = 14}).empty());

  const auto b2 = find_coincidences(simple(Family::B, 2), {.max_degree = 35});
  REQUIRE(b2.size() == 1);
  CHECK(b2[0].degree == 35);
  REQUIRE(b2[0].weights.size() == 2);
  CHECK(b2[0].weights[0] == make_weight({0, 4}));
  CHECK(b2[0].weights[1] == make_weight({1, 2}));
  CHECK(find_coincidences(simple(Family::B, 2), {.max_degree = 34}).empty());

  // The dual pair of 27-dimensional representations is a single orbit, so it
  // is not a coincidence modulo automorphisms.
  CHECK(find_coincidences(simple(Family::E, 6), {.max_degree = 80}).empty());

  // Degrees factor as (a+1)(b+1) here, so coincidences are products written
  // two ways: 4 = 1*4 = 2*2 and 6 = 1*6 = 2*3.
  const auto torus = find_coincidences(
      RootDatum::build({make_type(Family::A, 1), make_type(Family::A, 1)}),
      {.max_degree = 6});
  REQUIRE(torus.size() == 2);
  CHECK(torus[0].degree == 4);
  REQUIRE(torus[0].weights.size() == 2);
  CHECK(torus[0].weights[0] == make_weight({0, 3}));
  CHECK(torus[0].weights[1] == make_weight({1, 1}));
  CHECK(torus[1].degree == 6);
  REQUIRE(torus[1].weights.size() == 2);
  CHECK(torus[1].weights[0] == make_weight({0, 5}));
  CHECK(torus[1].weights[1] == make_weight({1, 2}));

  CHECK_THROWS_AS(find_coincidences(simple(Family::A, 2), {.max_degree = 0}),
                  std::invalid_argument);
}

TEST_CASE("find_coincidences, raw") {
  const SearchConfig raw{.max_degree = 15, .modulo_automorphisms = false};
  const auto groups = find_coincidences(simple(Family::A, 2), raw);
  REQUIRE(groups.size() == 4);

  auto weights_at = [&](std::size_t i) {
    std::vector<std::vector<long long>> out;
    for (const Weight& w : groups[i].weights) out.push_back(coords(w));
    return out;
  };
  CHECK(groups[0].degree == 3);
  CHECK(weights_at(0) == std::vector<std::vector<long long>>{{0, 1}, {1, 0}});
  CHECK(groups[1].degree == 6);
  CHECK(weights_at(1) == std::vector<std::vector<long long>>{{0, 2}, {2, 0}});
  CHECK(groups[2].degree == 10);
  CHECK(weights_at(2) == std::vector<std::vector<long long>>{{0, 3}, {3, 0}});
  CHECK(groups[3].degree == 15);
  CHECK(weights_at(3) ==
        std::vector<std::vector<long long>>{{0, 4}, {1, 2}, {2, 1}, {4, 0}});

  const auto e6 = find_coincidences(simple(Family::E, 6),
                                    {.max_degree = 27, .modulo_automorphisms = false});
  REQUIRE(e6.size() == 1);
  CHECK(e6[0].degree == 27);
  CHECK(e6[0].weights.size() == 2);
}

TEST_CASE("find_coincidences groups are sound and complete") {
  for (auto [f, rank, bound] :
       {std::tuple{Family::A, 2, 100}, {Family::B, 2, 100}, {Family::G, 2, 500}}) {
    const RootDatum datum = simple(f, rank);
    const auto groups = find_coincidences(datum, {.max_degree = bound});

    BigInt last = 0;
    std::map<BigInt, std::set<std::vector<long long>>> seen;
    for (const CoincidenceGroup& g : groups) {
      CHECK(g.degree > last);
      last = g.degree;
      CHECK(g.weights.size() >= 2);
      for (std::size_t i = 0; i < g.weights.size(); ++i) {
        CHECK(weyl_dim(datum, g.weights[i]) == g.degree);
        CHECK(g.weights[i] == canonical_form(datum, g.weights[i]));
        if (i > 0) CHECK(lex_less(g.weights[i - 1], g.weights[i]));
        seen[g.degree].insert(coords(g.weights[i]));
      }
    }
    CHECK(seen == grouped_by_oracle(datum, bound));
  }
}

TEST_CASE("prop2_table") {
  const auto& rows = prop2_table();
  REQUIRE(rows.size() == 7);
  const std::vector<std::string> names = {"A2", "B2", "G2", "F4", "E6", "E7", "E8"};
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(to_string(rows[i].type) == names[i]);
  CHECK(rows[0].degree == 15);
  CHECK(rows[2].degree == 77);
  CHECK(rows[3].degree == 1053);
  CHECK(rows[4].degree == 351);
  CHECK(rows[5].degree == BigInt("1903725824"));
  CHECK(rows[6].degree == BigInt("8634368000"));
}

TEST_CASE("verify_prop2, recomputation only") {
  for (const TableRow& row : prop2_table()) {
    const Report report = verify_prop2(row, false);
    CHECK(report.ok);
    CHECK(report.checks.size() >= 3);
    for (const Check& c : report.checks) {
      CHECK(c.pass);
      CHECK(c.detail.empty());
    }
  }
}

TEST_CASE("verify_prop2, bounded search") {
  for (std::size_t i : {0, 1, 2, 3, 4}) {  // A2, B2, G2, F4, E6
    const Report report = verify_prop2(prop2_table()[i], true);
    CHECK(report.ok);
    bool saw_no_smaller = false, saw_exact_group = false;
    for (const Check& c : report.checks) {
      saw_no_smaller |= c.name.find("no coincidence below") != std::string::npos;
      saw_exact_group |= c.name.find("exactly the table pair") != std::string::npos;
    }
    CHECK(saw_no_smaller);
    CHECK(saw_exact_group);
  }
}
