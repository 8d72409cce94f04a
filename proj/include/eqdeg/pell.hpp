#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "eqdeg/bigint.hpp"

namespace eqdeg {

// Continued fraction of sqrt(d) for a non-square d >= 2:
//   sqrt(d) = [a0; period...] with the period ending in 2*a0.
struct ContinuedFraction {
  BigInt d;
  BigInt a0;
  std::vector<BigInt> period;
};

// Throws std::invalid_argument if d < 2 or d is a perfect square.
ContinuedFraction cf_sqrt(const BigInt& d);

// m-th convergent h_m / k_m (m >= 0) of the expansion, with the period
// repeated cyclically; convergent(cf, 0) = (a0, 1).
std::pair<BigInt, BigInt> convergent(const ContinuedFraction& cf, std::int64_t m);

// A solution of x^2 - d y^2 = 1 in positive integers.
struct PellSolution {
  BigInt d;
  BigInt x;
  BigInt y;
};

// The fundamental (minimal) solution, read off the convergent at index r-1
// for even period length r and 2r-1 for odd r.
PellSolution fundamental_pell(const BigInt& d);

// k-th power of a solution in the Pell group:
//   x_{j+1} = x1 x_j + d y1 y_j,  y_{j+1} = x1 y_j + y1 x_j.   Requires k >= 1.
PellSolution pell_power(const PellSolution& fundamental, std::int64_t k);

// A solution of c^2 - (4l-5) a^2 = (2l-3)^2 with the induced second weight
// coordinate b = (c + 1 - a - 2l)/2.
struct StarSolution {
  int l;
  BigInt c;
  BigInt a;
  BigInt b;
};

// The first `count` solutions obtained by scaling the powers of the
// fundamental solution of x^2 - (4l-5) y^2 = 1 by 2l-3, in increasing order.
// Requires l >= 3.
std::vector<StarSolution> star_solutions(int l, int count);

// Exhaustive scan over 3 <= a <= a_max for solutions of
// c^2 = (4l-5) a^2 + (2l-3)^2 with c > 0 and b = (c + 1 - a - 2l)/2 >= 0,
// sorted by a.  Parallelized across EQDEG_THREADS threads (default: hardware
// concurrency).
std::vector<StarSolution> brute_force_star(int l, std::int64_t a_max);

}  // namespace eqdeg
