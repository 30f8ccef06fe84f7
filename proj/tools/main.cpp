// Copyright 2026 The haros-graphs Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// haros: build Haros graphs, sweep their entropy functionals, and verify
// the closed forms against brute-force construction. Data goes to stdout
// or --out; logs (the only place with timestamps) go to stderr.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "haros/analytics.hpp"
#include "haros/io.hpp"
#include "haros/oracle.hpp"

namespace {

using namespace haros;

enum class LogLevel { debug = 0, info = 1, warn = 2, error = 3, off = 4 };

LogLevel g_log_level = LogLevel::warn;

void log_at(LogLevel level, const std::string& message) {
  if (level < g_log_level) return;
  const char* names[] = {"debug", "info", "warn", "error"};
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char stamp[32];
  std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%S", std::gmtime(&t));
  std::cerr << stamp << "Z " << names[static_cast<int>(level)] << " " << message << "\n";
}

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Data sink: --out file or stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct GraphInput {
  std::string fraction;
  std::string path;
  std::string cf;
};

// Resolve the mutually exclusive fraction/path/cf forms to a tree path.
FareyPath resolve_path(const GraphInput& input) {
  const int given = int(!input.fraction.empty()) + int(!input.path.empty()) +
                    int(!input.cf.empty());
  if (given != 1) {
    throw CLI::ValidationError("input", "give exactly one of a fraction, --path, or --cf");
  }
  if (!input.path.empty()) return FareyPath(input.path);
  if (!input.cf.empty()) {
    const CFSpec spec = parse_cf_spec(input.cf);
    if (!spec.rational()) {
      throw CLI::ValidationError("input", "graphs of irrational numbers are infinite; "
                                          "use `irrational` for periodic expansions");
    }
    return cf_to_path(ContinuedFraction(spec.transient));
  }
  const Rational x = parse_rational(input.fraction);
  if (!in_unit_interval(x)) {
    throw CLI::ValidationError("input", "fraction must lie in [0,1], got " + input.fraction);
  }
  if (!is_interior(x)) return FareyPath{};  // endpoints collapse to the atom
  return rational_to_path(x);
}

int run_graph(const GraphInput& input, bool with_dist, bool collapsed_only, Output& out) {
  const FareyPath path = resolve_path(input);
  HarosGraph g = build(path);
  if (!input.fraction.empty()) g.label = parse_rational(input.fraction);  // keep 0/1 vs 1/1
  if (collapsed_only) {
    const CollapsedSequence seq = collapse(g);
    std::string line = "[";
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (i) line += ",";
      line += std::to_string(seq[i]);
    }
    out.stream() << line << "]\n";
    return 0;
  }
  out.stream() << graph_json(g, with_dist) << "\n";
  return 0;
}

int run_entropy(unsigned order, std::size_t thin, bool reduced, bool means,
                NodeBudget& budget, Output& out) {
  log_at(LogLevel::info, "sweeping F_" + std::to_string(order));
  const auto samples = entropy_curve(order, budget, thin);
  write_entropy_csv(out.stream(), samples, reduced, means);
  log_at(LogLevel::info, std::to_string(samples.size()) + " rows");
  return 0;
}

int run_verify(const std::string& check, unsigned max_q, unsigned max_k, unsigned max_len,
               unsigned count, unsigned depth, Degree k_min, Degree k_max, unsigned m_min,
               unsigned m_max, const std::string& format, NodeBudget& budget, Output& out) {
  std::vector<oracle::CheckReport> reports;
  if (check == "theorem1") {
    reports.push_back(oracle::check_theorem1(max_q, budget));
  } else if (check == "holes") {
    reports.push_back(oracle::check_holes(max_len, budget));
  } else if (check == "conjecture1") {
    reports.push_back(oracle::check_conjecture1(max_q, max_k, budget));
  } else if (check == "scaling") {
    reports.push_back(oracle::check_scaling(max_q, k_min, k_max, m_min, m_max, budget));
  } else if (check == "derham") {
    reports.push_back(oracle::check_derham(max_q, budget));
  } else if (check == "families") {
    reports.push_back(oracle::check_families(count, budget));
  } else if (check == "noble") {
    reports.push_back(oracle::check_noble(depth, budget));
  } else if (check == "metallic") {
    reports.push_back(oracle::check_metallic(depth, budget));
  } else if (check == "all") {
    reports = oracle::check_all(budget);
  } else {
    throw CLI::ValidationError(
        "check", "unknown check '" + check +
                     "'; available: theorem1, holes, conjecture1, scaling, derham, "
                     "families, noble, metallic, all");
  }

  bool any_failure = false;
  if (format == "csv") {
    out.stream() << "check,instance,status,lhs,rhs\n";
    for (const auto& report : reports) {
      if (report.passed()) {
        out.stream() << report.check_id << ",summary,pass,,\n";
      } else {
        for (const auto& row : report.failures) {
          out.stream() << report.check_id << "," << row.instance << ",fail," << row.lhs << ","
                       << row.rhs << "\n";
        }
      }
      any_failure |= !report.passed();
    }
  } else {
    for (const auto& report : reports) {
      out.stream() << oracle::to_json_line(report) << "\n";
      any_failure |= !report.passed();
    }
  }
  return any_failure ? 1 : 0;
}

std::optional<TheoreticalFamily> recognize_family(const CFSpec& spec) {
  if (spec.period.size() == 1 && spec.period.front() == 1) {
    if (spec.transient.empty()) return TheoreticalFamily::golden();
    if (spec.transient.size() == 1 && spec.transient.front() >= 2 &&
        spec.transient.front() <= 1'000'000) {
      return TheoreticalFamily::noble_c1(spec.transient.front().convert_to<unsigned>());
    }
    if (spec.transient.size() == 3 && spec.transient[0] >= 2 && spec.transient[0] <= 1'000'000 &&
        spec.transient[1] == 1 && spec.transient[2] == 2) {
      return TheoreticalFamily::noble_c3n12(spec.transient[0].convert_to<unsigned>());
    }
    return std::nullopt;
  }
  if (spec.metallic() && spec.period.front() <= 1'000'000) {
    return TheoreticalFamily::metallic(spec.period.front().convert_to<unsigned>());
  }
  return std::nullopt;
}

int run_irrational(const std::string& cf, const std::string& decimal, std::size_t depth,
                   Output& out) {
  if (cf.empty() == decimal.empty()) {
    throw CLI::ValidationError("input", "give exactly one of --cf or --decimal");
  }
  CFSpec spec({}, {});
  if (!cf.empty()) {
    spec = parse_cf_spec(cf);
  } else {
    const Rational x = parse_decimal(decimal);
    if (!is_interior(x)) {
      throw CLI::ValidationError("input", "decimal must lie strictly inside (0,1)");
    }
    std::vector<BigInt> terms = rational_to_cf(x).terms();
    if (terms.size() > depth) terms.resize(depth);
    spec = CFSpec(std::move(terms), {});
    log_at(LogLevel::warn, "decimal input approximated by a continued fraction of " +
                               std::to_string(spec.transient.size()) + " terms");
  }

  const DegreeDistribution dist =
      degree_distribution(build_tally(convergent_path(spec, depth)));
  const auto family = recognize_family(spec);
  out.stream() << "k,p_exact,p_float" << (family ? ",p_theory" : "") << "\n";
  for (Degree k = 2; k <= dist.max_degree(); ++k) {
    const Rational p = dist.at(k);
    out.stream() << k << "," << format_rational(p) << "," << fmt17(to_double(p));
    if (family) out.stream() << "," << fmt17(theoretical_dist(*family, k));
    out.stream() << "\n";
  }
  return 0;
}

int run_families(unsigned count, NodeBudget& budget, Output& out) {
  out.stream() << "family,n,label,x,H,H_over_x,slope\n";
  struct RationalFamily {
    const char* name;
    SlopeFamily slope;
    Rational (*member)(unsigned n);
  };
  const RationalFamily rational_families[] = {
      {"1/n", SlopeFamily::one_over_n, [](unsigned n) { return Rational(1, n); }},
      {"2/(2n+1)", SlopeFamily::two_over_2n1, [](unsigned n) { return Rational(2, 2 * n + 1); }},
      {"3/(3n+2)", SlopeFamily::three_over_3n2, [](unsigned n) { return Rational(3, 3 * n + 2); }},
      {"3/(3n+1)", SlopeFamily::three_over_3n1, [](unsigned n) { return Rational(3, 3 * n + 1); }},
  };
  for (const auto& family : rational_families) {
    const double slope = family_slope(family.slope);
    for (unsigned n = 2; n < 2 + count; ++n) {
      const Rational x = family.member(n);
      const HarosGraph g = build(rational_to_path(x));
      budget.charge(g.q());
      const double H = reduced_H(x, entropy_S(degree_distribution(g)));
      out.stream() << family.name << "," << n << "," << format_rational(x) << ","
                   << fmt17(to_double(x)) << "," << fmt17(H) << ","
                   << fmt17(H / to_double(x)) << "," << fmt17(slope) << "\n";
    }
  }
  // Noble families from their closed-form distributions.
  struct NobleFamily {
    const char* name;
    SlopeFamily slope;
    TheoreticalFamily (*member)(unsigned n);
  };
  const NobleFamily noble_families[] = {
      {"C1(n)", SlopeFamily::noble_c1, TheoreticalFamily::noble_c1},
      {"C3(n,1,2)", SlopeFamily::noble_c3n12, TheoreticalFamily::noble_c3n12},
  };
  for (const auto& family : noble_families) {
    const double slope = family_slope(family.slope);
    for (unsigned n = 2; n < 2 + count; ++n) {
      const TheoreticalFamily member = family.member(n);
      const double x = family_value(member);
      double S = 0.0;
      for (Degree k = 2; k < 600; ++k) {
        const double p = theoretical_dist(member, k);
        if (p > 0) S -= p * std::log(p);
      }
      const double H = S + 2 * x * std::log(x) + (1 - 2 * x) * std::log(1 - 2 * x);
      const CFSpec label = member.kind == TheoreticalFamily::Kind::noble_c1
                               ? CFSpec({BigInt(n)}, {BigInt(1)})
                               : CFSpec({BigInt(n), BigInt(1), BigInt(2)}, {BigInt(1)});
      out.stream() << family.name << "," << n << "," << format_cf_spec(label) << ","
                   << fmt17(x) << "," << fmt17(H) << "," << fmt17(H / x) << ","
                   << fmt17(slope) << "\n";
    }
  }
  return 0;
}

int run_means(unsigned order, NodeBudget& budget, Output& out) {
  budget.require(farey_sweep_nodes(order));
  out.stream() << "p,q,x,k_mean,k_geo,cf_mean,cf_geo\n";
  for_each_farey_graph(order, budget, [&](const HarosGraph& g) {
    const ContinuedFraction cf = rational_to_cf(g.label);
    BigInt term_sum = 0;
    for (const BigInt& a : cf.terms()) term_sum += a;
    const Rational cf_mean(term_sum, BigInt(cf.size()));
    out.stream() << num(g.label).str() << "," << den(g.label).str() << ","
                 << fmt17(to_double(g.label)) << "," << format_rational(mean_degree(g)) << ","
                 << fmt17(geometric_mean_degree(g)) << "," << format_rational(cf_mean) << ","
                 << fmt17(cf_geometric_mean(g.label)) << "\n";
  });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Haros graphs: exact construction, entropy sweeps, and verification"};
  app.require_subcommand(1);

  std::string out_path;
  std::uint64_t budget_limit = 1'000'000'000;
  std::string log_level = "warn";
  app.add_option("--out", out_path, "write data to a file instead of stdout");
  app.add_option("--budget", budget_limit, "work budget in constructed nodes")
      ->check(CLI::PositiveNumber);
  app.add_option("--log-level", log_level, "stderr logging: debug|info|warn|error|off");

  GraphInput graph_input;
  bool graph_dist = false, graph_collapsed = false;
  auto* graph_cmd = app.add_subcommand("graph", "dump one Haros graph as JSON");
  graph_cmd->add_option("fraction", graph_input.fraction, "rational label p/q in [0,1]");
  graph_cmd->add_option("--path", graph_input.path, "Farey-tree path such as LLR");
  graph_cmd->add_option("--cf", graph_input.cf, "finite continued fraction such as [2,2]");
  graph_cmd->add_flag("--dist", graph_dist, "include the exact degree distribution");
  graph_cmd->add_flag("--collapsed", graph_collapsed, "print only the collapsed sequence");

  unsigned entropy_order = 0;
  std::size_t entropy_thin = 1;
  bool entropy_reduced = false, entropy_means = false;
  auto* entropy_cmd = app.add_subcommand("entropy", "entropy curve over a Farey sequence");
  entropy_cmd->add_option("--order", entropy_order, "Farey order N (samples the interior of F_N)")
      ->required();
  entropy_cmd->add_option("--thin", entropy_thin, "keep every thin-th sample");
  entropy_cmd->add_flag("--reduced", entropy_reduced, "add the reduced entropy column H");
  entropy_cmd->add_flag("--means", entropy_means, "add k_mean and k_geo columns");

  std::string verify_check;
  unsigned verify_max_q = 200, verify_max_k = 20, verify_max_len = 14, verify_count = 30,
           verify_depth = 40;
  Degree verify_k_min = 5, verify_k_max = 15;
  unsigned verify_m_min = 1, verify_m_max = 3;
  std::string verify_format = "jsonl";
  auto* verify_cmd = app.add_subcommand("verify", "run brute-force checks of the closed forms");
  verify_cmd->add_option("check", verify_check,
                         "theorem1|holes|conjecture1|scaling|derham|families|noble|metallic|all")
      ->required();
  verify_cmd->add_option("--max-q", verify_max_q, "largest denominator to sweep");
  verify_cmd->add_option("--max-k", verify_max_k, "largest degree for conjecture1");
  verify_cmd->add_option("--max-len", verify_max_len, "path length cap for holes");
  verify_cmd->add_option("--count", verify_count, "members per family");
  verify_cmd->add_option("--depth", verify_depth, "convergent depth for noble/metallic");
  verify_cmd->add_option("--k-min", verify_k_min, "scaling: first degree");
  verify_cmd->add_option("--k-max", verify_k_max, "scaling: last degree");
  verify_cmd->add_option("--m-min", verify_m_min, "scaling: first shift");
  verify_cmd->add_option("--m-max", verify_m_max, "scaling: last shift");
  verify_cmd->add_option("--format", verify_format, "jsonl (default) or csv")
      ->check(CLI::IsMember({"jsonl", "csv"}));

  std::string irr_cf, irr_decimal;
  std::size_t irr_depth = 40;
  auto* irr_cmd = app.add_subcommand("irrational",
                                     "distribution of a deep convergent of a CF spec");
  irr_cmd->add_option("--cf", irr_cf, "spec such as [3,(1)] or [(2)]");
  irr_cmd->add_option("--decimal", irr_decimal, "decimal in (0,1), converted to a CF");
  irr_cmd->add_option("--depth", irr_depth, "convergent depth (also the decimal CF cutoff)");

  unsigned families_count = 30;
  auto* families_cmd = app.add_subcommand("families", "reduced-entropy family table");
  families_cmd->add_option("--count", families_count, "members per family");

  unsigned means_order = 100;
  auto* means_cmd = app.add_subcommand("means", "degree and CF means over a Farey sequence");
  means_cmd->add_option("--order", means_order, "Farey order N");

  CLI11_PARSE(app, argc, argv);

  if (log_level == "debug") g_log_level = LogLevel::debug;
  else if (log_level == "info") g_log_level = LogLevel::info;
  else if (log_level == "warn") g_log_level = LogLevel::warn;
  else if (log_level == "error") g_log_level = LogLevel::error;
  else if (log_level == "off") g_log_level = LogLevel::off;
  else {
    std::cerr << "error: unknown log level '" << log_level << "'\n";
    return 2;
  }

  NodeBudget budget{.limit = budget_limit};
  try {
    Output out(out_path);
    if (graph_cmd->parsed()) return run_graph(graph_input, graph_dist, graph_collapsed, out);
    if (entropy_cmd->parsed()) {
      return run_entropy(entropy_order, entropy_thin, entropy_reduced, entropy_means, budget,
                         out);
    }
    if (verify_cmd->parsed()) {
      return run_verify(verify_check, verify_max_q, verify_max_k, verify_max_len, verify_count,
                        verify_depth, verify_k_min, verify_k_max, verify_m_min, verify_m_max,
                        verify_format, budget, out);
    }
    if (irr_cmd->parsed()) return run_irrational(irr_cf, irr_decimal, irr_depth, out);
    if (families_cmd->parsed()) return run_families(families_count, budget, out);
    if (means_cmd->parsed()) return run_means(means_order, budget, out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
