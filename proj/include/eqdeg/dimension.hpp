#pragma once

#include <initializer_list>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "eqdeg/bigint.hpp"
#include "eqdeg/rootdata.hpp"

namespace eqdeg {

// Dominant weights in fundamental-weight coordinates.  Entries are exact
// integers of arbitrary size so that scaled families never overflow.
using Weight = Eigen::Matrix<BigInt, Eigen::Dynamic, 1>;

Weight make_weight(std::initializer_list<long long> coords);

bool operator==(const Weight& a, const Weight& b);
bool operator!=(const Weight& a, const Weight& b);

// Lexicographic comparison of coordinate vectors.
bool lex_less(const Weight& a, const Weight& b);

// <lambda + rho, beta^vee> = sum_i (lambda_i + 1) * b_i for a weight block
// lambda and a coroot beta^vee = sum_i b_i alpha_i^vee over one simple factor.
// Accepts arbitrary Eigen expressions of matching length.
template <typename DerivedW, typename DerivedC>
BigInt pairing_plus_rho(const Eigen::MatrixBase<DerivedW>& lambda,
                        const Eigen::MatrixBase<DerivedC>& coroot) {
  if (lambda.size() != coroot.size() || lambda.cols() != 1 || coroot.cols() != 1)
    throw std::invalid_argument("pairing_plus_rho: mismatched shapes");
  BigInt acc = 0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    const auto c = coroot(i);
    if (c != 0) acc += (BigInt(lambda(i)) + 1) * BigInt(c);
  }
  return acc;
}

// Degree of the irreducible representation with highest weight `lambda` for
// the system with the given positive coroots, by the Weyl dimension formula
//   dim = prod_beta <lambda + rho, beta^vee> / prod_beta <rho, beta^vee>.
// The denominator is recomputed from the coroot heights.  Throws
// std::logic_error if the product fails to divide exactly (which certifies a
// corrupt coroot set, since exactness is a theorem for genuine ones).
BigInt weyl_dim_over(const std::vector<IntVec>& coroots, const Weight& lambda);

// Weyl dimension over a full root datum (product over the simple factors,
// with the cached per-factor denominators).  `lambda` must have
// datum.total_rank() non-negative coordinates.
BigInt weyl_dim(const RootDatum& datum, const Weight& lambda);

// k*lambda + (k-1)*rho in fundamental-weight coordinates: coordinate i maps
// to k*lambda_i + k - 1.  Requires k >= 1.
Weight scaled_weight(const Weight& lambda, const BigInt& k);

struct ScaledPair {
  Weight lambda;
  Weight mu;
  BigInt degree;
};

// Given two weights of equal degree d, returns for k = 1..k_max the scaled
// pair (k(lambda+rho)-rho, k(mu+rho)-rho) together with its common degree
// d * k^N, N the number of positive roots.  Throws std::invalid_argument if
// the input degrees differ.
std::vector<ScaledPair> scaled_pair_family(const RootDatum& datum, const Weight& lambda,
                                           const Weight& mu, int k_max);

// Number of decimal digits of a degree (d >= 1).
int digit_count(const BigInt& d);

}  // namespace eqdeg
