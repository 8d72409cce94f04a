#include "eqdeg/cli.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eqdeg/dimension.hpp"
#include "eqdeg/families.hpp"
#include "eqdeg/pell.hpp"
#include "eqdeg/rootdata.hpp"
#include "eqdeg/search.hpp"

namespace eqdeg {

namespace {

BigInt parse_bigint(const std::string& text, const char* what) {
  const std::size_t digits_from = text.empty() || text[0] != '-' ? 0 : 1;
  if (text.size() == digits_from ||
      text.find_first_not_of("0123456789", digits_from) != std::string::npos)
    throw std::invalid_argument(std::string(what) + ": not a decimal integer: '" + text + "'");
  return BigInt(text);
}

Weight parse_weight(const std::string& text, int rank) {
  std::vector<BigInt> coords;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    coords.push_back(parse_bigint(
        text.substr(pos, comma == std::string::npos ? comma : comma - pos), "weight coordinate"));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (std::ssize(coords) != rank) {
    std::ostringstream os;
    os << "weight has " << coords.size() << " coordinates but the type has rank " << rank;
    throw std::invalid_argument(os.str());
  }
  Weight w(rank);
  for (int i = 0; i < rank; ++i) w(i) = std::move(coords[static_cast<std::size_t>(i)]);
  return w;
}

std::string json_coords(const IntVec& v) {
  std::ostringstream os;
  os << "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v(i);
  os << "]";
  return os.str();
}

std::string json_coords(const Weight& w) {
  std::ostringstream os;
  os << "[";
  for (Eigen::Index i = 0; i < w.size(); ++i) os << (i ? "," : "") << w(i);
  os << "]";
  return os.str();
}

std::string pretty_coords(const Weight& w) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < w.size(); ++i) os << (i ? "," : "") << w(i);
  os << ")";
  return os.str();
}

void emit_witness(const FamilyWitness& w, bool pretty, std::ostream& out) {
  if (pretty) {
    out << to_string(w.type) << ": lambda = " << pretty_coords(w.lambda)
        << ", mu = " << pretty_coords(w.mu) << ", degree = " << w.degree << "\n";
  } else {
    out << "{\"type\":\"" << to_string(w.type) << "\",\"lambda\":" << json_coords(w.lambda)
        << ",\"mu\":" << json_coords(w.mu) << ",\"degree\":\"" << w.degree << "\"}\n";
  }
}

void emit_star(const StarSolution& s, bool pretty, std::ostream& out) {
  if (pretty) {
    out << "l=" << s.l << ": c=" << s.c << " a=" << s.a << " b=" << s.b << "\n";
  } else {
    out << "{\"l\":" << s.l << ",\"c\":\"" << s.c << "\",\"a\":\"" << s.a << "\",\"b\":\"" << s.b
        << "\"}\n";
  }
}

int print_report(const Report& report, std::ostream& out) {
  int passed = 0;
  for (const Check& c : report.checks) {
    if (c.pass) {
      ++passed;
      out << "[PASS] " << c.name << "\n";
    } else {
      out << "[FAIL] " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    }
  }
  out << passed << "/" << report.checks.size() << " checks passed\n";
  return report.ok ? 0 : 1;
}

// --- verification bundles ---------------------------------------------------

Report bundle_prop2(bool extended, std::ostream& err) {
  Report report;
  for (const TableRow& row : prop2_table()) {
    const bool small = row.type.family != Family::E || row.type.rank == 6;
    bool bounded = small;
    if (!small && extended) {
      err << "[info] extended scan: " << to_string(row.type) << " up to " << row.degree << "\n";
      bounded = true;
    }
    const Report sub = verify_prop2(row, bounded);
    for (const Check& c : sub.checks) report.add(c.name, c.pass, c.detail);
  }
  return report;
}

Report bundle_thm3() {
  Report report;
  auto check_witness = [&](const FamilyWitness& w) {
    const RootDatum datum = RootDatum::build({w.type});
    const bool ok = weyl_dim(datum, w.lambda) == w.degree && weyl_dim(datum, w.mu) == w.degree;
    report.add(to_string(w.type) + ": closed form = dim V(lambda) = dim V(mu) = " +
                   w.degree.str(),
               ok);
  };
  for (int l = 3; l <= 12; ++l) check_witness(family_A(l));
  for (int l = 3; l <= 12; ++l) check_witness(family_B(l));
  for (int l = 4; l <= 12; ++l) check_witness(family_D(l));

  const auto star3 = star_solutions(3, 1);
  report.add("star_solutions(3,1) = (24,9,5)",
             star3.size() == 1 && star3[0].c == 24 && star3[0].a == 9 && star3[0].b == 5);
  report.add("ratio_C(9,5,3) = 1", ratio_C(9, 5, 3) == 1);
  const RootDatum c3 = RootDatum::build({make_type(Family::C, 3)});
  report.add("C3: dim V(9w1+5w2) = dim V(7w1+6w2) = 548352",
             weyl_dim(c3, make_weight({9, 5, 0})) == 548352 &&
                 weyl_dim(c3, make_weight({7, 6, 0})) == 548352 &&
                 degree_C(9, 5, 3) == 548352);
  const auto fc4 = family_C(4, 1);
  report.add("family_C(4,1) witness has (a,b) = (15,14)",
             fc4.size() == 1 && fc4[0].lambda(0) == 15 && fc4[0].lambda(1) == 14);
  return report;
}

Report bundle_remark159(std::ostream& err) {
  Report report;
  const BigInt a_star("613975804336172576474505");
  const BigInt b_star("7404460209629201092363289");

  report.add("cf_sqrt(631) has period length 48", cf_sqrt(631).period.size() == 48);

  const auto star = star_solutions(159, 1);
  report.add("star_solutions(159,1) yields the 24-digit a and 25-digit b",
             star.size() == 1 && star[0].a == a_star && star[0].b == b_star);

  err << "[info] computing the C159 degree twice (25281-factor Weyl products)\n";
  const RootDatum c159 = RootDatum::build({make_type(Family::C, 159)});
  Weight lambda = Weight::Zero(159), mu = Weight::Zero(159);
  lambda(0) = a_star;
  lambda(1) = b_star;
  mu(0) = a_star - 2;
  mu(1) = b_star + 1;
  const BigInt dim_lambda = weyl_dim(c159, lambda);
  const BigInt dim_mu = weyl_dim(c159, mu);
  report.add("C159: dim V(a w1 + b w2) = dim V((a-2) w1 + (b+1) w2)", dim_lambda == dim_mu);
  report.add("C159: Weyl product equals the closed form", dim_lambda == degree_C(a_star, b_star, 159));
  const int digits = digit_count(dim_lambda);
  report.add("C159: the common degree has 15728 decimal digits", digits == 15728,
             digits == 15728 ? "" : "got " + std::to_string(digits));

  const auto brute = brute_force_star(159, 100);
  const bool has_87 = std::any_of(brute.begin(), brute.end(), [](const StarSolution& s) {
    return s.a == 87 && s.b == 902;
  });
  report.add("brute_force_star(159,100) contains (a,b) = (87,902)", has_87);
  report.add("C159: dim V(87w1+902w2) = dim V(85w1+903w2)",
             degree_C(87, 902, 159) == degree_C(85, 903, 159) &&
                 ratio_C(87, 902, 159) == 1);
  return report;
}

// --- subcommand handlers -----------------------------------------------------

void run_dim(const std::string& type_text, const std::string& weight_text, std::ostream& out) {
  const RootDatum datum = RootDatum::build(parse_type_list(type_text));
  out << weyl_dim(datum, parse_weight(weight_text, datum.total_rank())) << "\n";
}

void run_roots(const std::string& type_text, bool pretty, std::ostream& out) {
  const RootDatum datum = RootDatum::build(parse_type_list(type_text));
  for (const Component& comp : datum.components()) {
    const std::string label = to_string(comp.type);
    for (const IntVec& beta : comp.coroots) {
      if (pretty) {
        out << label << "  [";
        for (Eigen::Index i = 0; i < beta.size(); ++i) out << (i ? " " : "") << beta(i);
        out << "]  height " << beta.sum() << "\n";
      } else {
        out << "{\"type\":\"" << label << "\",\"coroot\":" << json_coords(beta) << "}\n";
      }
    }
  }
}

void run_search(const std::string& type_text, const std::string& max_dim, bool raw, bool pretty,
                std::ostream& out) {
  const RootDatum datum = RootDatum::build(parse_type_list(type_text));
  const SearchConfig config{parse_bigint(max_dim, "--max-dim"), !raw};
  for (const CoincidenceGroup& g : find_coincidences(datum, config)) {
    if (pretty) {
      out << "degree " << g.degree << ":";
      for (const Weight& w : g.weights) out << " " << pretty_coords(w);
      out << "\n";
    } else {
      out << "{\"degree\":\"" << g.degree << "\",\"weights\":[";
      for (std::size_t i = 0; i < g.weights.size(); ++i)
        out << (i ? "," : "") << json_coords(g.weights[i]);
      out << "]}\n";
    }
  }
}

void run_family(const std::string& letter, int rank, int count, bool pretty, std::ostream& out) {
  if (letter == "A") {
    emit_witness(family_A(rank), pretty, out);
  } else if (letter == "B") {
    emit_witness(family_B(rank), pretty, out);
  } else if (letter == "C") {
    for (const FamilyWitness& w : family_C(rank, count)) emit_witness(w, pretty, out);
  } else if (letter == "D") {
    emit_witness(family_D(rank), pretty, out);
  } else {
    throw std::invalid_argument("family must be one of A, B, C, D: got '" + letter + "'");
  }
}

void run_pell(int rank, int count, std::int64_t brute_max, bool pretty, std::ostream& out) {
  const auto solutions =
      brute_max > 0 ? brute_force_star(rank, brute_max) : star_solutions(rank, count);
  for (const StarSolution& s : solutions) emit_star(s, pretty, out);
}

int run_verify(const std::string& bundle, bool extended, std::ostream& out, std::ostream& err) {
  Report report;
  if (bundle == "prop2") {
    report = bundle_prop2(extended, err);
  } else if (bundle == "thm3") {
    report = bundle_thm3();
  } else if (bundle == "remark159") {
    report = bundle_remark159(err);
  } else {
    throw std::invalid_argument("unknown verification bundle '" + bundle +
                                "' (expected prop2, thm3 or remark159)");
  }
  return print_report(report, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact degrees of irreducible representations of simple algebraic groups,\n"
               "equal-degree searches, and the Pell machinery behind the C_l families."};
  app.require_subcommand(1);

  std::string type_text, weight_text, max_dim, family_letter, bundle;
  int rank = 0, count = 1;
  std::int64_t brute_max = 0;
  bool raw = false, pretty = false, extended = false;

  CLI::App* dim = app.add_subcommand("dim", "Degree of V(lambda): dim A2 1,2");
  dim->add_option("type", type_text, "simple type or product, e.g. C3 or A1+A1")->required();
  dim->add_option("weight", weight_text, "comma-separated coordinates")->required();

  CLI::App* roots = app.add_subcommand("roots", "Positive coroot table");
  roots->add_option("type", type_text)->required();
  roots->add_flag("--pretty", pretty, "human-readable table");

  CLI::App* search = app.add_subcommand("search", "Equal-degree coincidence groups");
  search->add_option("type", type_text)->required();
  search->add_option("--max-dim", max_dim, "degree bound")->required();
  search->add_flag("--raw", raw, "do not identify weights related by automorphisms");
  search->add_flag("--pretty", pretty);

  CLI::App* family = app.add_subcommand("family", "Closed-form equal-degree families");
  family->add_option("family", family_letter, "A, B, C or D")->required();
  family->add_option("--rank", rank, "rank l")->required();
  family->add_option("--count", count, "number of witnesses (family C)");
  family->add_flag("--pretty", pretty);

  CLI::App* pell = app.add_subcommand("pell", "Solutions of c^2 - (4l-5)a^2 = (2l-3)^2");
  pell->add_option("--rank", rank, "rank l of C_l")->required();
  pell->add_option("--count", count, "number of scaled solutions");
  pell->add_option("--brute-max", brute_max, "scan 3 <= a <= bound instead");
  pell->add_flag("--pretty", pretty);

  CLI::App* verify = app.add_subcommand("verify", "Re-run a verification bundle");
  verify->add_option("bundle", bundle, "prop2, thm3 or remark159")->required();
  verify->add_flag("--extended", extended, "include the long E7/E8 minimality scans");

  std::vector<const char*> argv{"eqdeg"};
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (dim->parsed()) {
      run_dim(type_text, weight_text, out);
    } else if (roots->parsed()) {
      run_roots(type_text, pretty, out);
    } else if (search->parsed()) {
      run_search(type_text, max_dim, raw, pretty, out);
    } else if (family->parsed()) {
      run_family(family_letter, rank, count, pretty, out);
    } else if (pell->parsed()) {
      run_pell(rank, count, brute_max, pretty, out);
    } else if (verify->parsed()) {
      return run_verify(bundle, extended, out, err);
    }
    return 0;
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace eqdeg
