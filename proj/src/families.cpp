#include "eqdeg/families.hpp"

#include <stdexcept>
#include <string>

namespace eqdeg {

namespace {

// prod_{k=from}^{to} k; empty product for to < from.
BigInt runprod(const BigInt& from, const BigInt& to) {
  BigInt p = 1;
  for (BigInt k = from; k <= to; ++k) p *= k;
  return p;
}

BigInt factorial(int n) { return runprod(2, n); }

// Exact quotient with loud failure: the closed forms below are transcribed
// formulas, and any typo must not round silently.
BigInt exact_quotient(const BigInt& num, const BigInt& den, const char* who) {
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw std::logic_error(std::string(who) + ": non-exact division in closed form");
  return q;
}

// Weight a*w1 + b*w2 over rank l.
Weight two_param_weight(const BigInt& a, const BigInt& b, int l) {
  Weight w = Weight::Zero(l);
  w(0) = a;
  w(1) = b;
  return w;
}

}  // namespace

FamilyWitness family_A(int l) {
  if (l < 3)
    throw std::invalid_argument(
        "family_A: need l >= 3 (for l = 2 the two weights are related by the "
        "diagram automorphism)");
  Weight lambda = Weight::Zero(l);
  lambda(1) = l - 1;
  Weight mu = Weight::Zero(l);
  mu(0) = 1;
  mu(1) = l - 2;
  const BigInt sq = runprod(l + 1, 2 * l - 2);
  const BigInt fact = factorial(l - 1);
  const BigInt degree = exact_quotient((2 * l - 1) * sq * sq, fact * fact, "family_A");
  return {make_type(Family::A, l), std::move(lambda), std::move(mu), degree};
}

FamilyWitness family_B(int l) {
  if (l < 3) throw std::invalid_argument("family_B: need l >= 3");
  Weight lambda = Weight::Zero(l);
  lambda(1) = 2 * l - 2;
  Weight mu = Weight::Zero(l);
  mu(0) = 1;
  mu(1) = 2 * l - 3;
  const BigInt sq = runprod(2 * l, 4 * l - 6);
  const BigInt fact = factorial(2 * l - 3);
  const BigInt num = BigInt(3) * (4 * l - 5) * (6 * l - 5) * (6 * l - 7) * sq * sq;
  const BigInt degree = exact_quotient(num, fact * fact, "family_B");
  return {make_type(Family::B, l), std::move(lambda), std::move(mu), degree};
}

FamilyWitness family_D(int l) {
  if (l < 4) throw std::invalid_argument("family_D: need l >= 4");
  Weight lambda = Weight::Zero(l);
  lambda(1) = 2 * l - 3;
  Weight mu = Weight::Zero(l);
  mu(0) = 1;
  mu(1) = 2 * l - 4;
  const BigInt sq = runprod(2 * l - 1, 4 * l - 8);
  const BigInt fact = factorial(2 * l - 5);
  const BigInt num = BigInt(3) * (3 * l - 4) * (3 * l - 5) * (4 * l - 7) * sq * sq;
  const BigInt den = BigInt(l - 2) * (l - 2) * fact * fact;
  const BigInt degree = exact_quotient(num, den, "family_D");
  return {make_type(Family::D, l), std::move(lambda), std::move(mu), degree};
}

BigRat ratio_C(const BigInt& a, const BigInt& b, int l) {
  if (l < 3 || a < 3 || b < 0)
    throw std::invalid_argument("ratio_C: need l >= 3, a >= 3, b >= 0");
  const BigInt num = (a + 1) * (b + 1) * (a + b + 2 * l - 2);
  const BigInt den = (a - 1) * (a + b + 1) * (b + 2 * l - 2);
  return BigRat(num, den);  // normalized by construction of cpp_rational
}

BigInt degree_C(const BigInt& a, const BigInt& b, int l) {
  if (l < 3 || a < 0 || b < 0)
    throw std::invalid_argument("degree_C: need l >= 3, a >= 0, b >= 0");
  const BigInt num = (a + 1) * (a + 2 * b + 2 * l - 1) * runprod(a + b + 2, a + b + 2 * l - 2) *
                     runprod(b + 1, b + 2 * l - 3);
  const BigInt den = factorial(2 * l - 1) * factorial(2 * l - 3);
  return exact_quotient(num, den, "degree_C");
}

std::vector<FamilyWitness> family_C(int l, int count) {
  // preconditions checked by star_solutions (l >= 3, count >= 1)
  std::vector<FamilyWitness> out;
  for (StarSolution& s : star_solutions(l, count)) {
    const BigRat ratio = ratio_C(s.a, s.b, l);
    if (ratio != 1)
      throw std::logic_error("family_C: Pell solution does not give an equal-degree pair");
    out.push_back({make_type(Family::C, l), two_param_weight(s.a, s.b, l),
                   two_param_weight(s.a - 2, s.b + 1, l), degree_C(s.a, s.b, l)});
  }
  return out;
}

}  // namespace eqdeg
