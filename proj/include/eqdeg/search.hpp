#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "eqdeg/bigint.hpp"
#include "eqdeg/dimension.hpp"
#include "eqdeg/rootdata.hpp"

namespace eqdeg {

struct SearchConfig {
  BigInt max_degree;                 // >= 1
  bool modulo_automorphisms = true;  // group orbit-mates together when true
};

// Weights of equal degree in pairwise-distinct automorphism orbits (canonical
// forms when produced modulo automorphisms), lex-sorted.
struct CoincidenceGroup {
  BigInt degree;
  std::vector<Weight> weights;
};

// Visits every dominant weight with weyl_dim <= max_degree exactly once
// (including the zero weight), in lexicographic coordinate order.  Termination
// rests on coordinate monotonicity of the Weyl formula: the search increments
// coordinates depth-first and prunes as soon as the bound is exceeded.
void for_each_dominant(const RootDatum& datum, const BigInt& max_degree,
                       const std::function<void(const Weight&, const BigInt&)>& visit);

std::vector<std::pair<Weight, BigInt>> enumerate_dominant(const RootDatum& datum,
                                                          const BigInt& max_degree);

// Lexicographically smallest element of the orbit of lambda under the datum's
// automorphisms: per-factor diagram automorphisms plus arbitrary permutations
// of identical factors.
Weight canonical_form(const RootDatum& datum, const Weight& lambda);

// Enumerates up to config.max_degree, groups by exact degree (after
// canonicalization when modulo_automorphisms), and returns all groups with at
// least two distinct members, sorted by degree.
std::vector<CoincidenceGroup> find_coincidences(const RootDatum& datum,
                                                const SearchConfig& config);

// One row of the sporadic equal-degree table: the smallest coincidence pair of
// a simple type.
struct TableRow {
  LieType type;
  Weight lambda;
  Weight mu;
  BigInt degree;
};

// The seven rows: A2, B2, G2, F4, E6, E7, E8.
const std::vector<TableRow>& prop2_table();

struct Check {
  std::string name;
  bool pass;
  std::string detail;  // empty when passing
};

struct Report {
  std::vector<Check> checks;
  bool ok = true;
  void add(std::string name, bool pass, std::string detail = "");
};

// Re-verifies one table row from first principles: recomputes both degrees,
// asserts they match the tabulated value, asserts distinct canonical forms,
// and in bounded mode runs the full search up to the degree, asserting that
// no smaller coincidence group exists and that the group at the degree is
// exactly the canonicalized pair.  For E6 the verification also covers the
// twisted companion pair (dim V(2w6) = dim V(w5) = 351, with 2w6 in the orbit
// of 2w1).
Report verify_prop2(const TableRow& row, bool bounded);

}  // namespace eqdeg
