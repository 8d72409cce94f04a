#include "eqdeg/dimension.hpp"

#include <algorithm>
#include <sstream>

namespace eqdeg {

namespace {

// Exact quotient; throws std::logic_error if `den` does not divide `num`.
BigInt exact_quotient(const BigInt& num, const BigInt& den, const char* who) {
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) {
    std::ostringstream os;
    os << who << ": Weyl numerator not divisible by denominator";
    throw std::logic_error(os.str());
  }
  return q;
}

BigInt weyl_numerator(const std::vector<IntVec>& coroots, const Eigen::Ref<const Weight>& block) {
  BigInt num = 1;
  for (const IntVec& beta : coroots) num *= pairing_plus_rho(block, beta);
  return num;
}

}  // namespace

Weight make_weight(std::initializer_list<long long> coords) {
  Weight w(coords.size());
  Eigen::Index i = 0;
  for (long long c : coords) w(i++) = c;
  return w;
}

bool operator==(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }

bool lex_less(const Weight& a, const Weight& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                      b.data() + b.size());
}

BigInt weyl_dim_over(const std::vector<IntVec>& coroots, const Weight& lambda) {
  BigInt den = 1;
  for (const IntVec& beta : coroots) den *= BigInt(beta.sum());
  return exact_quotient(weyl_numerator(coroots, lambda), den, "weyl_dim_over");
}

BigInt weyl_dim(const RootDatum& datum, const Weight& lambda) {
  if (lambda.size() != datum.total_rank())
    throw std::invalid_argument("weyl_dim: weight has wrong rank for " + datum.label());
  for (Eigen::Index i = 0; i < lambda.size(); ++i)
    if (lambda(i) < 0)
      throw std::invalid_argument("weyl_dim: weight must be dominant (coordinates >= 0)");

  BigInt dim = 1;
  const auto& comps = datum.components();
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const Component& comp = comps[ci];
    const auto block = lambda.segment(datum.component_offset(ci), comp.type.rank);
    dim *= exact_quotient(weyl_numerator(comp.coroots, block), comp.rho_product, "weyl_dim");
  }
  return dim;
}

Weight scaled_weight(const Weight& lambda, const BigInt& k) {
  if (k < 1) throw std::invalid_argument("scaled_weight: k must be >= 1");
  Weight out(lambda.size());
  for (Eigen::Index i = 0; i < lambda.size(); ++i) out(i) = k * lambda(i) + k - 1;
  return out;
}

std::vector<ScaledPair> scaled_pair_family(const RootDatum& datum, const Weight& lambda,
                                           const Weight& mu, int k_max) {
  if (k_max < 1) throw std::invalid_argument("scaled_pair_family: k_max must be >= 1");
  const BigInt d = weyl_dim(datum, lambda);
  if (d != weyl_dim(datum, mu))
    throw std::invalid_argument("scaled_pair_family: input weights have different degrees");

  // dim V(k(lambda+rho)-rho) = k^N dim V(lambda): every Weyl factor picks up
  // exactly one factor k.
  std::vector<ScaledPair> out;
  out.reserve(k_max);
  for (int k = 1; k <= k_max; ++k) {
    const BigInt kk = k;
    out.push_back({scaled_weight(lambda, kk), scaled_weight(mu, kk),
                   d * boost::multiprecision::pow(kk, static_cast<unsigned>(datum.positive_count()))});
  }
  return out;
}

int digit_count(const BigInt& d) {
  if (d < 1) throw std::invalid_argument("digit_count: argument must be >= 1");
  return static_cast<int>(d.str().size());
}

}  // namespace eqdeg
