#pragma once

#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace eqdeg {

// Exact arbitrary-precision scalars.  Degrees of representations and Pell
// solution entries overflow any fixed-width type almost immediately, so the
// whole library computes over these.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Floor of the square root of a non-negative integer.
inline BigInt isqrt(const BigInt& n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative argument");
  return boost::multiprecision::sqrt(n);
}

// True iff n is a perfect square; on success *root (if given) receives sqrt(n).
inline bool is_perfect_square(const BigInt& n, BigInt* root = nullptr) {
  if (n < 0) return false;
  const BigInt r = boost::multiprecision::sqrt(n);
  if (r * r != n) return false;
  if (root != nullptr) *root = r;
  return true;
}

}  // namespace eqdeg
