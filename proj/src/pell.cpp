#include "eqdeg/pell.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

namespace eqdeg {

ContinuedFraction cf_sqrt(const BigInt& d) {
  if (d < 2) throw std::invalid_argument("cf_sqrt: need d >= 2");
  const BigInt a0 = isqrt(d);
  if (a0 * a0 == d) throw std::invalid_argument("cf_sqrt: d must not be a perfect square");

  // Standard quadratic-surd recurrence; every intermediate stays integral and
  // the period closes exactly when the partial quotient reaches 2*a0.
  ContinuedFraction cf{d, a0, {}};
  BigInt m = 0, q = 1, a = a0;
  do {
    m = a * q - m;
    q = (d - m * m) / q;
    a = (a0 + m) / q;
    cf.period.push_back(a);
  } while (a != 2 * a0);
  return cf;
}

std::pair<BigInt, BigInt> convergent(const ContinuedFraction& cf, std::int64_t m) {
  if (m < 0) throw std::invalid_argument("convergent: index must be >= 0");
  BigInt h_prev = 1, h = cf.a0;  // h_{-1}, h_0
  BigInt k_prev = 0, k = 1;      // k_{-1}, k_0
  const std::size_t r = cf.period.size();
  for (std::int64_t i = 1; i <= m; ++i) {
    const BigInt& t = cf.period[static_cast<std::size_t>(i - 1) % r];
    BigInt h_next = t * h + h_prev;
    BigInt k_next = t * k + k_prev;
    h_prev = std::move(h);
    k_prev = std::move(k);
    h = std::move(h_next);
    k = std::move(k_next);
  }
  return {h, k};
}

PellSolution fundamental_pell(const BigInt& d) {
  const ContinuedFraction cf = cf_sqrt(d);
  const std::int64_t r = static_cast<std::int64_t>(cf.period.size());
  const std::int64_t m = (r % 2 == 0) ? r - 1 : 2 * r - 1;
  auto [x, y] = convergent(cf, m);
  if (x * x - d * y * y != 1)
    throw std::logic_error("fundamental_pell: convergent is not a solution for d = " + d.str());
  return {d, std::move(x), std::move(y)};
}

PellSolution pell_power(const PellSolution& fundamental, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("pell_power: k must be >= 1");
  const BigInt &x1 = fundamental.x, &y1 = fundamental.y, &d = fundamental.d;
  BigInt x = x1, y = y1;
  for (std::int64_t j = 1; j < k; ++j) {
    BigInt xn = x1 * x + d * y1 * y;
    BigInt yn = x1 * y + y1 * x;
    x = std::move(xn);
    y = std::move(yn);
  }
  return {d, std::move(x), std::move(y)};
}

namespace {

StarSolution star_from_ca(int l, BigInt c, BigInt a) {
  // c and a have opposite parity whenever c^2 - (4l-5)a^2 = (2l-3)^2, so the
  // numerator below is even.
  BigInt num = c + 1 - a - 2 * l;
  if (num % 2 != 0)
    throw std::logic_error("star solution with non-integral b for l = " + std::to_string(l));
  return {l, std::move(c), std::move(a), num / 2};
}

int thread_count() {
  if (const char* env = std::getenv("EQDEG_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Full invariant bundle for an emitted solution; all are theorems for l >= 3,
// a >= 3, so any failure certifies an arithmetic bug.
void assert_star(const StarSolution& s) {
  const BigInt d = 4 * s.l - 5, scale = 2 * s.l - 3;
  if (s.c * s.c - d * s.a * s.a != scale * scale)
    throw std::logic_error("star solution violates the generalized Pell equation");
  if ((s.c + s.a) % 2 == 0) throw std::logic_error("star solution with even c + a");
  if (s.b < 1) throw std::logic_error("star solution with non-positive b");
}

}  // namespace

std::vector<StarSolution> star_solutions(int l, int count) {
  if (l < 3) throw std::invalid_argument("star_solutions: need l >= 3");
  if (count < 1) throw std::invalid_argument("star_solutions: count must be >= 1");

  const BigInt d = 4 * l - 5;  // = 3 mod 4, hence never a perfect square
  const BigInt scale = 2 * l - 3;
  const PellSolution fund = fundamental_pell(d);
  std::vector<StarSolution> out;
  out.reserve(count);
  for (std::int64_t k = 1; std::ssize(out) < count; ++k) {
    const PellSolution p = k == 1 ? fund : pell_power(fund, k);
    if (scale * p.y < 3) continue;  // cannot happen for l >= 3, guarded anyway
    StarSolution s = star_from_ca(l, scale * p.x, scale * p.y);
    assert_star(s);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<StarSolution> brute_force_star(int l, std::int64_t a_max) {
  if (l < 3) throw std::invalid_argument("brute_force_star: need l >= 3");
  if (a_max < 1) throw std::invalid_argument("brute_force_star: need a_max >= 1");
  const BigInt d = 4 * l - 5;
  const BigInt shift = BigInt(2 * l - 3) * (2 * l - 3);

  const int threads = std::max(1, std::min<int>(thread_count(), 64));
  std::vector<std::vector<StarSolution>> found(threads);
  auto scan = [&](int t) {
    // a = 1, 2 can never reach the a >= 3 filter, so the scan starts at 3.
    for (std::int64_t a = 3 + t; a <= a_max; a += threads) {
      BigInt c;
      if (!is_perfect_square(d * a * a + shift, &c)) continue;
      StarSolution s = star_from_ca(l, std::move(c), a);
      assert_star(s);
      found[t].push_back(std::move(s));
    }
  };
  if (threads == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(scan, t);
    for (std::thread& th : pool) th.join();
  }

  std::vector<StarSolution> out;
  for (auto& part : found)
    for (StarSolution& s : part) out.push_back(std::move(s));
  std::sort(out.begin(), out.end(),
            [](const StarSolution& p, const StarSolution& q) { return p.a < q.a; });
  return out;
}

}  // namespace eqdeg
