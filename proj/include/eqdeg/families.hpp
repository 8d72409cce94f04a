#pragma once

#include <vector>

#include "eqdeg/bigint.hpp"
#include "eqdeg/dimension.hpp"
#include "eqdeg/pell.hpp"
#include "eqdeg/rootdata.hpp"

namespace eqdeg {

// An equal-degree pair from one of the closed-form families: two dominant
// weights over one simple type, in distinct automorphism orbits, with their
// common degree.
struct FamilyWitness {
  LieType type;
  Weight lambda;
  Weight mu;
  BigInt degree;
};

// A_l, l >= 3: V((l-1) w2) and V(w1 + (l-2) w2) of degree
//   (2l-1) prod_{k=l+1}^{2l-2} k^2 / ((l-1)!)^2.
// l = 2 is rejected: there the two weights are exchanged by the diagram
// reversal, so the pair carries no information.
FamilyWitness family_A(int l);

// B_l, l >= 3: V((2l-2) w2) and V(w1 + (2l-3) w2) of degree
//   3 (4l-5)(6l-5)(6l-7) prod_{k=2l}^{4l-6} k^2 / ((2l-3)!)^2.
FamilyWitness family_B(int l);

// D_l, l >= 4: V((2l-3) w2) and V(w1 + (2l-4) w2) of degree
//   3 (3l-4)(3l-5)(4l-7) prod_{k=2l-1}^{4l-8} k^2 / ((l-2)^2 ((2l-5)!)^2).
FamilyWitness family_D(int l);

// dim V(a w1 + b w2) / dim V((a-2) w1 + (b+1) w2) over C_l as an exact
// reduced fraction:  (a+1)(b+1)(a+b+2l-2) / ((a-1)(a+b+1)(b+2l-2)).
// Requires l >= 3, a >= 3, b >= 0.
BigRat ratio_C(const BigInt& a, const BigInt& b, int l);

// dim V(a w1 + b w2) over C_l in closed form:
//   (a+1)(a+2b+2l-1) prod_{k=a+b+2}^{a+b+2l-2} k prod_{k=b+1}^{b+2l-3} k
//   / ((2l-1)! (2l-3)!).
// Requires l >= 3, a >= 0, b >= 0.
BigInt degree_C(const BigInt& a, const BigInt& b, int l);

// The first `count` equal-degree pairs over C_l: for each generalized Pell
// solution (c, a, b) from star_solutions, the pair
//   lambda = a w1 + b w2,  mu = (a-2) w1 + (b+1) w2
// of common degree degree_C(a, b, l).  All solvability logic lives in the
// pell module.
std::vector<FamilyWitness> family_C(int l, int count);

}  // namespace eqdeg
