#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "eqdeg/bigint.hpp"

namespace eqdeg {

// Dense integer linear algebra; Cartan data and root coefficients always fit
// comfortably in 64 bits.
using IntMat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

// A Dynkin diagram automorphism as an image table: node i maps to perm[i]
// (0-based node indices).
using NodePerm = std::vector<int>;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// One simple type, e.g. C3 or E8.  Construct through make_type/parse_type so
// the (family, rank) combination is always valid.
struct LieType {
  Family family;
  int rank;
};

bool operator==(const LieType& a, const LieType& b);
bool operator!=(const LieType& a, const LieType& b);
bool operator<(const LieType& a, const LieType& b);  // by (family, rank)

// Validates the rank ranges A_l (l>=1), B_l (l>=2), C_l (l>=3), D_l (l>=4),
// E6/E7/E8, F4, G2; throws std::invalid_argument otherwise.
LieType make_type(Family family, int rank);

// "C159" -> {C, 159}.  Throws std::invalid_argument on malformed input.
LieType parse_type(std::string_view text);

// "A1+A1" -> {A1, A1}; a single type parses as a one-element list.
std::vector<LieType> parse_type_list(std::string_view text);

std::string to_string(const LieType& type);
std::string to_string(const std::vector<LieType>& types);  // joined with '+'

// Cartan matrix in the convention c(i,j) = <alpha_i, alpha_j^vee>, Bourbaki
// node numbering.  For B_l the last simple root is short, for C_l it is long.
IntMat cartan_matrix(const LieType& type);

// Number of positive roots: A_l l(l+1)/2, B_l/C_l l^2, D_l l(l-1), G2 6,
// F4 24, E6 36, E7 63, E8 120.
std::int64_t positive_root_count(const LieType& type);

// All positive roots of the root system with the given Cartan matrix, as
// coefficient vectors over the simple roots, produced by closure from the
// simple roots using root strings.  Sorted by (height, lexicographic).
std::vector<IntVec> generate_positive_roots(const IntMat& cartan);

// Positive coroots of `type`, i.e. positive roots of the dual system (the one
// with the transposed Cartan matrix), as coefficient vectors over the simple
// coroots.  Sorted by (height, lexicographic).
std::vector<IntVec> positive_coroots(const LieType& type);

// The same set for a classical type (A/B/C/D), written out from the explicit
// closed-form tables instead of generated by closure.  Serves as an
// independent cross-check of generate_positive_roots.
std::vector<IntVec> classical_coroot_table(const LieType& type);

// All Dynkin diagram automorphisms, identity first: A_l (l>=2) has the node
// reversal, D4 the full S3 on its three outer nodes, D_l (l>=5) the swap of
// the two fork nodes, E6 its order-2 symmetry; everything else only id.
std::vector<NodePerm> diagram_automorphisms(const LieType& type);

// One simple factor with all derived data cached at construction.
struct Component {
  LieType type;
  IntMat cartan;
  std::vector<IntVec> coroots;  // positive coroots, (height, lex) order
  IntVec heights;               // heights[k] = coroots[k].sum() = <rho, coroot k>
  BigInt rho_product;           // prod_k heights[k]: the Weyl denominator
  std::vector<NodePerm> automorphisms;
};

// Root datum of a semisimple simply connected group: an ordered product of
// simple factors.  Immutable after build().
class RootDatum {
 public:
  // Throws std::invalid_argument for an empty type list and std::logic_error
  // if a construction invariant fails (coroot count, simple coroots present,
  // duplicates, or an automorphism not permuting the coroot set).
  static RootDatum build(std::vector<LieType> types);

  const std::vector<Component>& components() const { return components_; }
  int total_rank() const { return total_rank_; }
  std::int64_t positive_count() const { return positive_count_; }
  int component_offset(std::size_t ci) const { return offsets_[ci]; }
  std::string label() const;  // e.g. "A1+A1"

 private:
  RootDatum() = default;

  std::vector<Component> components_;
  std::vector<int> offsets_;
  int total_rank_ = 0;
  std::int64_t positive_count_ = 0;
};

}  // namespace eqdeg
