#include "eqdeg/search.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace eqdeg {

namespace {

std::string coords(const Weight& w) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < w.size(); ++i) os << (i ? "," : "") << w(i);
  os << ")";
  return os.str();
}

}  // namespace

void for_each_dominant(const RootDatum& datum, const BigInt& max_degree,
                       const std::function<void(const Weight&, const BigInt&)>& visit) {
  if (max_degree < 1) throw std::invalid_argument("for_each_dominant: max_degree must be >= 1");
  const int rank = datum.total_rank();
  Weight w = Weight::Zero(rank);

  // Depth-first over coordinate positions.  At entry to position i the weight
  // has dim <= max_degree (its suffix is zero); each factor of the Weyl
  // product is non-decreasing in every coordinate, so once a value of w(i)
  // pushes the degree above the bound, larger values are hopeless too.
  auto descend = [&](auto&& self, int i, const BigInt& dim_here) -> void {
    if (i == rank) {
      visit(w, dim_here);
      return;
    }
    self(self, i + 1, dim_here);
    for (w(i) = 1;; ++w(i)) {
      const BigInt d = weyl_dim(datum, w);
      if (d > max_degree) break;
      self(self, i + 1, d);
    }
    w(i) = 0;
  };
  descend(descend, 0, 1);
}

std::vector<std::pair<Weight, BigInt>> enumerate_dominant(const RootDatum& datum,
                                                          const BigInt& max_degree) {
  std::vector<std::pair<Weight, BigInt>> out;
  for_each_dominant(datum, max_degree,
                    [&](const Weight& w, const BigInt& d) { out.emplace_back(w, d); });
  return out;
}

Weight canonical_form(const RootDatum& datum, const Weight& lambda) {
  if (lambda.size() != datum.total_rank())
    throw std::invalid_argument("canonical_form: weight has wrong rank for " + datum.label());
  const auto& comps = datum.components();

  // Lex-minimize each block over its factor's diagram automorphisms.  The
  // blocks of identical factors may additionally be permuted arbitrarily;
  // since all candidate slots are interchangeable, sorting the minimized
  // blocks within each class of equal type yields the global lex minimum.
  std::vector<std::vector<BigInt>> blocks(comps.size());
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const Component& comp = comps[ci];
    const int rank = comp.type.rank;
    const int off = datum.component_offset(ci);
    std::vector<BigInt> best;
    for (const NodePerm& perm : comp.automorphisms) {
      std::vector<BigInt> image(rank);
      for (int i = 0; i < rank; ++i) image[perm[i]] = lambda(off + i);
      if (best.empty() || image < best) best = std::move(image);
    }
    blocks[ci] = std::move(best);
  }

  std::map<LieType, std::vector<std::size_t>> classes;
  for (std::size_t ci = 0; ci < comps.size(); ++ci) classes[comps[ci].type].push_back(ci);
  for (auto& [type, slots] : classes) {
    if (slots.size() < 2) continue;
    std::vector<std::vector<BigInt>> sorted;
    for (std::size_t ci : slots) sorted.push_back(std::move(blocks[ci]));
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < slots.size(); ++k) blocks[slots[k]] = std::move(sorted[k]);
  }

  Weight out(lambda.size());
  Eigen::Index pos = 0;
  for (const std::vector<BigInt>& block : blocks)
    for (const BigInt& c : block) out(pos++) = c;
  return out;
}

std::vector<CoincidenceGroup> find_coincidences(const RootDatum& datum,
                                                const SearchConfig& config) {
  std::vector<std::pair<BigInt, Weight>> keyed;
  for_each_dominant(datum, config.max_degree, [&](const Weight& w, const BigInt& d) {
    keyed.emplace_back(d, config.modulo_automorphisms ? canonical_form(datum, w) : w);
  });
  std::sort(keyed.begin(), keyed.end(), [](const auto& p, const auto& q) {
    if (p.first != q.first) return p.first < q.first;
    return lex_less(p.second, q.second);
  });

  std::vector<CoincidenceGroup> groups;
  for (std::size_t i = 0; i < keyed.size();) {
    std::size_t j = i;
    CoincidenceGroup g{keyed[i].first, {}};
    for (; j < keyed.size() && keyed[j].first == g.degree; ++j)
      if (g.weights.empty() || g.weights.back() != keyed[j].second)
        g.weights.push_back(keyed[j].second);  // orbit-mates canonicalize equal: dedupe
    if (g.weights.size() >= 2) groups.push_back(std::move(g));
    i = j;
  }
  return groups;
}

const std::vector<TableRow>& prop2_table() {
  static const std::vector<TableRow> rows = [] {
    std::vector<TableRow> t;
    auto row = [&](Family f, int rank, std::initializer_list<long long> lambda,
                   std::initializer_list<long long> mu, long long degree) {
      t.push_back({make_type(f, rank), make_weight(lambda), make_weight(mu), BigInt(degree)});
    };
    row(Family::A, 2, {1, 2}, {0, 4}, 15);
    row(Family::B, 2, {1, 2}, {0, 4}, 35);
    row(Family::G, 2, {2, 0}, {0, 3}, 77);
    row(Family::F, 4, {1, 0, 0, 1}, {2, 0, 0, 0}, 1053);
    row(Family::E, 6, {2, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, 351);
    row(Family::E, 7, {0, 0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 0, 2, 3}, 1903725824LL);
    row(Family::E, 8, {1, 0, 1, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 1, 1}, 8634368000LL);
    return t;
  }();
  return rows;
}

void Report::add(std::string name, bool pass, std::string detail) {
  ok = ok && pass;
  checks.push_back({std::move(name), pass, std::move(detail)});
}

Report verify_prop2(const TableRow& row, bool bounded) {
  Report report;
  const std::string label = to_string(row.type);
  const RootDatum datum = RootDatum::build({row.type});

  const BigInt dim_lambda = weyl_dim(datum, row.lambda);
  const BigInt dim_mu = weyl_dim(datum, row.mu);
  report.add(label + ": dim V(lambda) = " + row.degree.str(), dim_lambda == row.degree,
             dim_lambda == row.degree ? "" : "got " + dim_lambda.str());
  report.add(label + ": dim V(mu) = " + row.degree.str(), dim_mu == row.degree,
             dim_mu == row.degree ? "" : "got " + dim_mu.str());

  const Weight can_lambda = canonical_form(datum, row.lambda);
  const Weight can_mu = canonical_form(datum, row.mu);
  report.add(label + ": lambda, mu in distinct automorphism orbits", can_lambda != can_mu);

  if (row.type == make_type(Family::E, 6)) {
    // The twisted companions: 2w6 and w5 also realize 351, and 2w6 is the
    // automorphism image of 2w1.
    const Weight two_w6 = make_weight({0, 0, 0, 0, 0, 2});
    const Weight w5 = make_weight({0, 0, 0, 0, 1, 0});
    report.add("E6: dim V(2w6) = 351", weyl_dim(datum, two_w6) == 351);
    report.add("E6: dim V(w5) = 351", weyl_dim(datum, w5) == 351);
    report.add("E6: 2w6 in the orbit of 2w1",
               canonical_form(datum, two_w6) == canonical_form(datum, row.lambda));
  }

  if (bounded) {
    const auto groups = find_coincidences(datum, {row.degree, true});
    bool none_smaller = true;
    std::string smaller;
    for (const CoincidenceGroup& g : groups)
      if (g.degree < row.degree) {
        none_smaller = false;
        smaller = "group at degree " + g.degree.str();
        break;
      }
    report.add(label + ": no coincidence below " + row.degree.str(), none_smaller, smaller);

    const auto at = std::find_if(groups.begin(), groups.end(),
                                 [&](const CoincidenceGroup& g) { return g.degree == row.degree; });
    bool exact = at != groups.end() && at->weights.size() == 2;
    if (exact) {
      const Weight& lo = lex_less(can_lambda, can_mu) ? can_lambda : can_mu;
      const Weight& hi = lex_less(can_lambda, can_mu) ? can_mu : can_lambda;
      exact = at->weights[0] == lo && at->weights[1] == hi;
    }
    std::string detail;
    if (at == groups.end())
      detail = "no group at the table degree";
    else if (!exact)
      detail = "group has " + std::to_string(at->weights.size()) + " weights, first " +
               coords(at->weights[0]);
    report.add(label + ": group at " + row.degree.str() + " is exactly the table pair", exact,
               detail);
  }
  return report;
}

}  // namespace eqdeg
