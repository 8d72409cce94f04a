#include "eqdeg/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace eqdeg {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

struct VecHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;  // FNV-1a
    for (std::int64_t x : v) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::vector<std::int64_t> to_std(const IntVec& v) {
  return {v.data(), v.data() + v.size()};
}

bool lex_less_vec(const IntVec& a, const IntVec& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                      b.data() + b.size());
}

void sort_by_height_lex(std::vector<IntVec>& roots) {
  std::sort(roots.begin(), roots.end(), [](const IntVec& a, const IntVec& b) {
    const std::int64_t ha = a.sum(), hb = b.sum();
    if (ha != hb) return ha < hb;
    return lex_less_vec(a, b);
  });
}

IntVec unit(int rank, int i) {
  IntVec e = IntVec::Zero(rank);
  e(i) = 1;
  return e;
}

}  // namespace

bool operator==(const LieType& a, const LieType& b) {
  return a.family == b.family && a.rank == b.rank;
}
bool operator!=(const LieType& a, const LieType& b) { return !(a == b); }
bool operator<(const LieType& a, const LieType& b) {
  if (a.family != b.family) return a.family < b.family;
  return a.rank < b.rank;
}

LieType make_type(Family family, int rank) {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 3; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok) {
    std::ostringstream os;
    os << "unsupported simple type " << static_cast<char>(family) << rank;
    bad(os.str());
  }
  return LieType{family, rank};
}

LieType parse_type(std::string_view text) {
  if (text.size() < 2) bad("type must look like 'C3': got '" + std::string(text) + "'");
  const char f = text[0];
  if (f < 'A' || f > 'G') bad("unknown family letter in '" + std::string(text) + "'");
  int rank = 0;
  const char* first = text.data() + 1;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, rank);
  if (ec != std::errc{} || ptr != last || rank <= 0)
    bad("malformed rank in type '" + std::string(text) + "'");
  return make_type(static_cast<Family>(f), rank);
}

std::vector<LieType> parse_type_list(std::string_view text) {
  std::vector<LieType> types;
  std::size_t pos = 0;
  while (true) {
    const std::size_t plus = text.find('+', pos);
    const std::string_view piece =
        text.substr(pos, plus == std::string_view::npos ? plus : plus - pos);
    types.push_back(parse_type(piece));
    if (plus == std::string_view::npos) break;
    pos = plus + 1;
  }
  return types;
}

std::string to_string(const LieType& type) {
  return std::string(1, static_cast<char>(type.family)) + std::to_string(type.rank);
}

std::string to_string(const std::vector<LieType>& types) {
  std::string s;
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (i) s += '+';
    s += to_string(types[i]);
  }
  return s;
}

IntMat cartan_matrix(const LieType& type) {
  make_type(type.family, type.rank);  // re-validate
  const int l = type.rank;
  IntMat c = IntMat::Identity(l, l) * 2;
  auto chain = [&](int i, int j) { c(i, j) = c(j, i) = -1; };
  switch (type.family) {
    case Family::A:
      for (int i = 0; i + 1 < l; ++i) chain(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 2 < l; ++i) chain(i, i + 1);
      c(l - 2, l - 1) = -2;  // <alpha_{l-1}, alpha_l^vee>: last root short
      c(l - 1, l - 2) = -1;
      break;
    case Family::C:
      for (int i = 0; i + 2 < l; ++i) chain(i, i + 1);
      c(l - 2, l - 1) = -1;
      c(l - 1, l - 2) = -2;  // last root long
      break;
    case Family::D:
      for (int i = 0; i + 2 < l; ++i) chain(i, i + 1);
      chain(l - 3, l - 1);
      break;
    case Family::E: {
      // Bourbaki: chain 1-3-4-5-6(-7)(-8) with node 2 hanging off node 4.
      const int chain_nodes[] = {0, 2, 3, 4, 5, 6, 7};
      for (int i = 0; i + 1 < l - 1; ++i) chain(chain_nodes[i], chain_nodes[i + 1]);
      chain(1, 3);
      break;
    }
    case Family::F:
      chain(0, 1);
      chain(2, 3);
      c(1, 2) = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      c(2, 1) = -1;
      break;
    case Family::G:
      c(0, 1) = -3;  // alpha_1 long
      c(1, 0) = -1;
      break;
  }
  return c;
}

std::int64_t positive_root_count(const LieType& type) {
  const std::int64_t l = type.rank;
  switch (type.family) {
    case Family::A: return l * (l + 1) / 2;
    case Family::B:
    case Family::C: return l * l;
    case Family::D: return l * (l - 1);
    case Family::E: return l == 6 ? 36 : (l == 7 ? 63 : 120);
    case Family::F: return 24;
    case Family::G: return 6;
  }
  bad("unknown family");
}

std::vector<IntVec> generate_positive_roots(const IntMat& cartan) {
  const auto rank = cartan.rows();
  if (rank == 0 || cartan.cols() != rank)
    bad("generate_positive_roots: Cartan matrix must be square and non-empty");
  for (Eigen::Index i = 0; i < rank; ++i)
    if (cartan(i, i) != 2) bad("generate_positive_roots: diagonal entries must be 2");

  std::vector<IntVec> roots;
  std::unordered_set<std::vector<std::int64_t>, VecHash> seen;
  for (int i = 0; i < rank; ++i) {
    roots.push_back(unit(static_cast<int>(rank), i));
    seen.insert(to_std(roots.back()));
  }

  // Breadth-first closure by height: beta + alpha_i is a root iff the
  // alpha_i-string through beta satisfies p = q - <beta, alpha_i^vee> > 0,
  // where q is the number of steps the string extends downward.  Processing
  // in discovery (= height) order guarantees all lower roots are present.
  std::vector<std::int64_t> probe;
  for (std::size_t head = 0; head < roots.size(); ++head) {
    const IntVec beta = roots[head];
    const IntVec pairings = cartan.transpose() * beta;  // <beta, alpha_i^vee>
    probe = to_std(beta);
    for (int i = 0; i < rank; ++i) {
      std::int64_t q = 0;
      while (true) {
        probe[i] -= 1;
        if (probe[i] < 0 || !seen.count(probe)) break;
        ++q;
      }
      probe[i] = beta(i);
      if (q - pairings(i) <= 0) continue;
      probe[i] += 1;
      if (seen.insert(probe).second)
        roots.push_back(Eigen::Map<const IntVec>(probe.data(), rank));
      probe[i] = beta(i);
    }
  }

  sort_by_height_lex(roots);
  return roots;
}

std::vector<IntVec> positive_coroots(const LieType& type) {
  const IntMat dual = cartan_matrix(type).transpose();
  std::vector<IntVec> coroots = generate_positive_roots(dual);
  if (std::ssize(coroots) != positive_root_count(type))
    throw std::logic_error("positive_coroots: generated count disagrees with closed form for " +
                           to_string(type));
  return coroots;
}

std::vector<IntVec> classical_coroot_table(const LieType& type) {
  const int l = type.rank;
  std::vector<IntVec> out;
  // span(i, j) = e_i + ... + e_j (0-based, inclusive; empty when j < i).
  auto span = [&](int i, int j) {
    IntVec v = IntVec::Zero(l);
    for (int k = i; k <= j; ++k) v(k) = 1;
    return v;
  };
  switch (type.family) {
    case Family::A:
      // beta_{ij} = alpha_i^vee + ... + alpha_j^vee, 1 <= i <= j <= l.
      for (int i = 0; i < l; ++i)
        for (int j = i; j < l; ++j) out.push_back(span(i, j));
      break;
    case Family::B:
      // Coroots of B_l form a system of type C_l:
      //   beta_{ij} = sum_{i..j-1} + 2 sum_{j..l-1} + e_l, 1 <= i <= j <= l
      //   gamma_{ij} = sum_{i..j},                        1 <= i <= j <= l-1.
      for (int i = 0; i < l; ++i)
        for (int j = i; j < l; ++j) {
          IntVec v = span(i, j - 1) + 2 * span(j, l - 2);
          v(l - 1) += 1;
          out.push_back(std::move(v));
        }
      for (int i = 0; i + 1 < l; ++i)
        for (int j = i; j + 1 < l; ++j) out.push_back(span(i, j));
      break;
    case Family::C:
      // Coroots of C_l form a system of type B_l:
      //   beta_{ij} = sum_{i..j},                 1 <= i <= j <= l-1
      //   eta_i     = sum_{i..l},                 1 <= i <= l
      //   gamma_{ij} = sum_{i..j-1} + 2 sum_{j..l}, 1 <= i < j <= l.
      for (int i = 0; i + 1 < l; ++i)
        for (int j = i; j + 1 < l; ++j) out.push_back(span(i, j));
      for (int i = 0; i < l; ++i) out.push_back(span(i, l - 1));
      for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j)
          out.push_back(span(i, j - 1) + 2 * span(j, l - 1));
      break;
    case Family::D:
      // beta_{ij} = sum_{i..j},                               1 <= i <= j <= l-1
      // eta_i     = sum_{i..l-2} + e_l,                       1 <= i <= l-1
      // gamma_{ij} = sum_{i..j-1} + 2 sum_{j..l-2} + e_{l-1} + e_l, 1 <= i < j <= l-1.
      for (int i = 0; i + 1 < l; ++i)
        for (int j = i; j + 1 < l; ++j) out.push_back(span(i, j));
      for (int i = 0; i + 1 < l; ++i) {
        IntVec v = span(i, l - 3);
        v(l - 1) += 1;
        out.push_back(std::move(v));
      }
      for (int i = 0; i + 1 < l; ++i)
        for (int j = i + 1; j + 1 < l; ++j) {
          IntVec v = span(i, j - 1) + 2 * span(j, l - 3);
          v(l - 2) += 1;
          v(l - 1) += 1;
          out.push_back(std::move(v));
        }
      break;
    default:
      bad("classical_coroot_table: only families A, B, C, D have one: got " + to_string(type));
  }
  sort_by_height_lex(out);
  if (std::ssize(out) != positive_root_count(type))
    throw std::logic_error("classical_coroot_table: wrong count for " + to_string(type));
  return out;
}

std::vector<NodePerm> diagram_automorphisms(const LieType& type) {
  const int l = type.rank;
  NodePerm id(l);
  std::iota(id.begin(), id.end(), 0);
  std::vector<NodePerm> perms{id};
  switch (type.family) {
    case Family::A:
      if (l >= 2) {
        NodePerm rev(l);
        for (int i = 0; i < l; ++i) rev[i] = l - 1 - i;
        perms.push_back(rev);
      }
      break;
    case Family::D:
      if (l == 4) {
        // Full S3 on the outer nodes {0, 2, 3} around the centre node 1.
        const int outer[3] = {0, 2, 3};
        int images[3] = {0, 1, 2};  // indices into `outer`
        std::vector<NodePerm> all;
        do {
          NodePerm p = id;
          for (int k = 0; k < 3; ++k) p[outer[k]] = outer[images[k]];
          all.push_back(p);
        } while (std::next_permutation(images, images + 3));
        std::sort(all.begin(), all.end());
        // identity is lexicographically first already
        perms = std::move(all);
      } else {
        NodePerm swap_fork = id;
        std::swap(swap_fork[l - 2], swap_fork[l - 1]);
        perms.push_back(swap_fork);
      }
      break;
    case Family::E:
      if (l == 6) {
        NodePerm s = id;
        std::swap(s[0], s[5]);
        std::swap(s[2], s[4]);
        perms.push_back(s);
      }
      break;
    default:
      break;
  }
  return perms;
}

RootDatum RootDatum::build(std::vector<LieType> types) {
  if (types.empty()) bad("RootDatum: type list must not be empty");
  RootDatum datum;
  for (const LieType& raw : types) {
    const LieType type = make_type(raw.family, raw.rank);
    Component comp;
    comp.type = type;
    comp.cartan = cartan_matrix(type);
    comp.coroots = positive_coroots(type);
    comp.automorphisms = diagram_automorphisms(type);

    const int rank = type.rank;
    comp.heights = IntVec(comp.coroots.size());
    comp.rho_product = 1;
    std::unordered_set<std::vector<std::int64_t>, VecHash> seen;
    for (std::size_t k = 0; k < comp.coroots.size(); ++k) {
      comp.heights(static_cast<Eigen::Index>(k)) = comp.coroots[k].sum();
      comp.rho_product *= comp.heights(static_cast<Eigen::Index>(k));
      if (!seen.insert(to_std(comp.coroots[k])).second)
        throw std::logic_error("RootDatum: duplicate coroot in " + to_string(type));
    }
    for (int i = 0; i < rank; ++i)
      if (!seen.count(to_std(unit(rank, i))))
        throw std::logic_error("RootDatum: simple coroot missing in " + to_string(type));
    for (const NodePerm& perm : comp.automorphisms) {
      for (const IntVec& beta : comp.coroots) {
        IntVec image(rank);
        for (int i = 0; i < rank; ++i) image(perm[i]) = beta(i);
        if (!seen.count(to_std(image)))
          throw std::logic_error("RootDatum: automorphism does not permute coroots of " +
                                 to_string(type));
      }
    }

    datum.offsets_.push_back(datum.total_rank_);
    datum.total_rank_ += rank;
    datum.positive_count_ += std::ssize(comp.coroots);
    datum.components_.push_back(std::move(comp));
  }
  return datum;
}

std::string RootDatum::label() const {
  std::vector<LieType> types;
  for (const Component& c : components_) types.push_back(c.type);
  return to_string(types);
}

}  // namespace eqdeg
