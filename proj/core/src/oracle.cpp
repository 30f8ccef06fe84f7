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

#include "haros/oracle.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "haros/io.hpp"

namespace haros::oracle {

namespace {

using Clock = std::chrono::steady_clock;

class Timer {
 public:
  explicit Timer(CheckReport& report) : report_(report), start_(Clock::now()) {}
  ~Timer() {
    report_.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
  }

 private:
  CheckReport& report_;
  Clock::time_point start_;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Entropy of a closed-form family distribution, tail summed to convergence.
double theoretical_entropy(const TheoreticalFamily& family) {
  double acc = 0.0;
  for (Degree k = 2; k < 4000; ++k) {
    const double p = theoretical_dist(family, k);
    if (p > 0) acc -= p * std::log(p);
    if (k > 10 && p > 0 && p < 1e-19) break;
  }
  return acc;
}

double theoretical_reduced_H(const TheoreticalFamily& family) {
  const double x = family_value(family);
  const double s = theoretical_entropy(family);
  return s + 2 * x * std::log(x) + (1 - 2 * x) * std::log(1 - 2 * x);
}

}  // namespace

void expect_equal(CheckReport& report, const std::string& instance, const Rational& lhs,
                  const Rational& rhs) {
  if (lhs != rhs) report.add_failure(instance, format_rational(lhs), format_rational(rhs));
}

void expect_close(CheckReport& report, const std::string& instance, double lhs, double rhs,
                  double tolerance) {
  if (!(std::abs(lhs - rhs) < tolerance)) report.add_failure(instance, fmt(lhs), fmt(rhs));
}

void CheckReport::add_failure(std::string instance, std::string lhs, std::string rhs) {
  ++total_failures;
  if (failures.size() < kFailureRowCap) {
    failures.push_back({std::move(instance), std::move(lhs), std::move(rhs)});
  }
}

CheckReport check_theorem1(unsigned max_q, NodeBudget& budget) {
  if (max_q < 2) throw std::invalid_argument("theorem1 needs max_q >= 2");
  CheckReport report{.check_id = "theorem1"};
  Timer timer(report);
  for_each_farey_graph(max_q, budget, [&](const HarosGraph& g) {
    ++report.instances_tested;
    const DegreeDistribution dist = degree_distribution(g);
    const std::string tag = "x=" + format_rational(g.label);
    const std::vector<Rational> table = closed_form_P_range(2, 4, g.label);
    expect_equal(report, tag + ",k=2", dist.at(2), table[0]);
    expect_equal(report, tag + ",k=3", dist.at(3), table[1]);
    expect_equal(report, tag + ",k=4", dist.at(4), table[2]);
    // Thomae mean degree rides along on the same sweep.
    expect_equal(report, tag + ",mean", mean_degree(g),
                 Rational(4) - Rational(2, den(g.label)));
  });
  return report;
}

CheckReport check_holes(unsigned max_len, NodeBudget& budget) {
  if (max_len > 20) {
    throw std::invalid_argument("hole enumeration is capped at path length 20 (2^20 paths)");
  }
  CheckReport report{.check_id = "holes"};
  Timer timer(report);
  for_each_path_graph(max_len, budget, [&](const FareyPath& path, const HarosGraph& left,
                                           const HarosGraph& node, const HarosGraph& right) {
    ++report.instances_tested;
    if (node.q() < 2) return;  // the root has no boundary identity
    const std::string tag = "path=" + path.str();
    const Degree boundary = node.open_degrees.front() + node.open_degrees.back();
    if (boundary != path.size() + 3) {
      report.add_failure(tag + ",boundary", std::to_string(boundary),
                         std::to_string(path.size() + 3));
    }
    const Degree merged = left.open_degrees.back() + right.open_degrees.front();
    if (!(merged < boundary)) {
      report.add_failure(tag + ",merged<boundary", std::to_string(merged),
                         std::to_string(boundary));
    }
    const DegreeDistribution dist = degree_distribution(node);
    for (Degree kappa = 5; kappa <= path.size() + 2; ++kappa) {
      const bool absent = hole_predicate(path, kappa);
      const bool brute_absent = dist.at(kappa) == 0;
      if (absent != brute_absent) {
        report.add_failure(tag + ",kappa=" + std::to_string(kappa),
                           absent ? "hole" : "present", brute_absent ? "hole" : "present");
      }
    }
  });
  return report;
}

CheckReport check_conjecture1(unsigned max_q, Degree max_k, NodeBudget& budget) {
  if (max_k < 5) throw std::invalid_argument("the conjecture's domain is k >= 5");
  if (max_q < 2) throw std::invalid_argument("conjecture1 needs max_q >= 2");
  CheckReport report{.check_id = "conjecture1"};
  Timer timer(report);
  for_each_farey_graph(max_q, budget, [&](const HarosGraph& g) {
    const DegreeDistribution dist = degree_distribution(g);
    const std::vector<Rational> closed = closed_form_P_range(5, max_k, g.label);
    const std::string tag = "x=" + format_rational(g.label);
    for (Degree k = 5; k <= max_k; ++k) {
      ++report.instances_tested;
      expect_equal(report, tag + ",k=" + std::to_string(k), dist.at(k), closed[k - 5]);
    }
  });
  return report;
}

CheckReport check_scaling(unsigned max_q, Degree k_min, Degree k_max, unsigned m_min,
                          unsigned m_max, NodeBudget& budget) {
  if (k_min < 5 || k_max < k_min) throw std::invalid_argument("scaling needs 5 <= k_min <= k_max");
  if (m_min < 1 || m_max < m_min) throw std::invalid_argument("scaling needs 1 <= m_min <= m_max");
  CheckReport report{.check_id = "scaling"};
  Timer timer(report);
  const Rational half(1, 2);
  for_each_farey_graph(max_q, budget, [&](const HarosGraph& g) {
    const Rational& x = g.label;
    const DegreeDistribution dist_x = degree_distribution(g);
    const std::string tag = "x=" + format_rational(x);
    for (unsigned m = m_min; m <= m_max; ++m) {
      const Rational y = apply_F(x, m);
      const HarosGraph gy = build(rational_to_path(y));
      budget.charge(gy.q());
      const DegreeDistribution dist_y = degree_distribution(gy);
      const Rational factor = Rational(1) + Rational(m) * x;
      for (Degree k = k_min; k <= k_max; ++k) {
        ++report.instances_tested;
        expect_equal(report, tag + ",k=" + std::to_string(k) + ",m=" + std::to_string(m),
                     dist_x.at(k), factor * dist_y.at(k + m));
      }
      if (m == 1 && x != half) {
        ++report.instances_tested;
        expect_equal(report, tag + ",P5-after-F", dist_y.at(5), p5_after_F(x));
      }
    }
  });
  return report;
}

CheckReport check_derham(unsigned max_q, NodeBudget& budget) {
  CheckReport report{.check_id = "derham"};
  Timer timer(report);
  const Rational half(1, 2);
  for (const Rational& z : farey_sequence(max_q)) {
    if (z < half) continue;
    budget.charge((num(z) + 3 * den(z)).convert_to<std::uint64_t>());  // q(z) + q(1/(z+2))
    ++report.instances_tested;
    const DeRhamPair pair = derham_check(z);
    expect_close(report, "z=" + format_rational(z), pair.lhs, pair.rhs, 1e-9);
  }
  return report;
}

CheckReport check_families(unsigned count, NodeBudget& budget) {
  if (count < 1) throw std::invalid_argument("families needs count >= 1");
  CheckReport report{.check_id = "families"};
  Timer timer(report);
  struct Family {
    const char* name;
    SlopeFamily slope;
    Rational (*member)(unsigned n);
  };
  const Family families[] = {
      {"1/n", SlopeFamily::one_over_n, [](unsigned n) { return Rational(1, n); }},
      {"2/(2n+1)", SlopeFamily::two_over_2n1, [](unsigned n) { return Rational(2, 2 * n + 1); }},
      {"3/(3n+2)", SlopeFamily::three_over_3n2, [](unsigned n) { return Rational(3, 3 * n + 2); }},
      {"3/(3n+1)", SlopeFamily::three_over_3n1, [](unsigned n) { return Rational(3, 3 * n + 1); }},
  };
  for (const Family& family : families) {
    const double slope = family_slope(family.slope);
    for (unsigned n = 2; n < 2 + count; ++n) {
      ++report.instances_tested;
      const Rational x = family.member(n);
      const HarosGraph g = build(rational_to_path(x));
      budget.charge(g.q());
      const double H = reduced_H(x, entropy_S(degree_distribution(g)));
      expect_close(report,
                   std::string("family=") + family.name + ",n=" + std::to_string(n),
                   H / to_double(x), slope, 1e-10);
    }
  }
  return report;
}

CheckReport check_noble(std::size_t depth, NodeBudget& budget) {
  if (depth < 2) throw std::invalid_argument("noble check needs depth >= 2");
  CheckReport report{.check_id = "noble"};
  Timer timer(report);

  // Closed-form distributions of C1(n) against deep convergents.
  for (unsigned n = 2; n <= 4; ++n) {
    const CFSpec spec({BigInt(n)}, {BigInt(1)});
    const GraphTally tally = build_tally(convergent_path(spec, depth));
    const DegreeDistribution dist = degree_distribution(tally);
    const TheoreticalFamily family = TheoreticalFamily::noble_c1(n);
    const Degree top = std::max<Degree>(dist.max_degree(), 60);
    for (Degree k = 2; k <= top; ++k) {
      ++report.instances_tested;
      expect_close(report, "C1(" + std::to_string(n) + "),k=" + std::to_string(k),
                   dist.at_double(k), theoretical_dist(family, k), 1e-6);
    }
  }

  // Slope identities straight from the closed-form distributions.
  for (unsigned n = 2; n <= 31; ++n) {
    ++report.instances_tested;
    const TheoreticalFamily c1 = TheoreticalFamily::noble_c1(n);
    expect_close(report, "slope C1(" + std::to_string(n) + ")",
                 theoretical_reduced_H(c1) / family_value(c1),
                 family_slope(SlopeFamily::noble_c1), 1e-10);
    ++report.instances_tested;
    const TheoreticalFamily c3 = TheoreticalFamily::noble_c3n12(n);
    expect_close(report, "slope C3(" + std::to_string(n) + ",1,2)",
                 theoretical_reduced_H(c3) / family_value(c3),
                 family_slope(SlopeFamily::noble_c3n12), 1e-10);
  }

  // Golden tail: convergent ratios approach 1/phi.
  {
    const CFSpec golden({}, {BigInt(1)});
    const std::size_t golden_depth = std::min<std::size_t>(depth, 25);
    const DegreeDistribution dist =
        degree_distribution(build_tally(convergent_path(golden, golden_depth)));
    const double phi_inv = family_value(TheoreticalFamily::golden());
    for (Degree k = 5; k <= 12; ++k) {
      ++report.instances_tested;
      const double ratio = to_double(dist.at(k + 1) / dist.at(k));
      expect_close(report, "golden tail k=" + std::to_string(k), ratio, phi_inv, 1e-3);
    }
  }

  // The argmax of S over F_144 sits on a golden convergent (or mirror).
  {
    ++report.instances_tested;
    const auto samples = entropy_curve(144, budget);
    const ExtremaScan scan = scan_extrema(samples, Rational(0), Rational(1));
    bool golden_argmax = false;
    BigInt a = 1, b = 1;
    while (b <= 144) {
      const Rational convergent(a, b);
      if (scan.argmax.x == convergent || scan.argmax.x == 1 - convergent) golden_argmax = true;
      a = std::exchange(b, a + b);
    }
    if (!golden_argmax) {
      report.add_failure("argmax over F_144", format_rational(scan.argmax.x),
                         "a golden convergent or mirror");
    }
  }
  return report;
}

CheckReport check_metallic(std::size_t depth, NodeBudget& budget) {
  (void)budget;  // tally cost is O(len^2) in the path length, not O(q)
  if (depth < 2) throw std::invalid_argument("metallic check needs depth >= 2");
  CheckReport report{.check_id = "metallic"};
  Timer timer(report);
  for (unsigned b = 2; b <= 3; ++b) {
    const CFSpec spec({}, {BigInt(b)});
    const DegreeDistribution dist = degree_distribution(build_tally(convergent_path(spec, depth)));
    const TheoreticalFamily family = TheoreticalFamily::metallic(b);
    const std::string tag = "metallic(" + std::to_string(b) + ")";
    for (Degree k = 2; k <= dist.max_degree(); ++k) {
      ++report.instances_tested;
      expect_close(report, tag + ",k=" + std::to_string(k), dist.at_double(k),
                   theoretical_dist(family, k), 1e-6);
    }
    // Support exactness: everything off {2,3} and the bn+3 ladder is
    // truncation residue, bounded by the tolerance.
    double stray = 0.0;
    for (const auto& [k, count] : dist.counts) {
      if (k == 2 || k == 3) continue;
      if (k >= b + 3 && (k - 3) % b == 0) continue;
      stray += to_double(Rational(count, dist.node_count));
    }
    ++report.instances_tested;
    expect_close(report, tag + ",off-support mass", stray, 0.0, 1e-6);
  }
  return report;
}

std::vector<CheckReport> check_all(NodeBudget& budget) {
  std::vector<CheckReport> reports;
  reports.push_back(check_theorem1(200, budget));
  reports.push_back(check_holes(14, budget));
  reports.push_back(check_conjecture1(200, 20, budget));
  reports.push_back(check_scaling(100, 5, 15, 1, 3, budget));
  reports.push_back(check_derham(100, budget));
  reports.push_back(check_families(30, budget));
  reports.push_back(check_noble(40, budget));
  reports.push_back(check_metallic(40, budget));
  return reports;
}

std::string to_json_line(const CheckReport& report) {
  nlohmann::json j;
  j["check"] = report.check_id;
  j["instances_tested"] = report.instances_tested;
  j["status"] = report.passed() ? "pass" : "fail";
  j["total_failures"] = report.total_failures;
  j["elapsed_seconds"] = report.elapsed_seconds;
  nlohmann::json rows = nlohmann::json::array();
  for (const FailureRow& row : report.failures) {
    rows.push_back({{"instance", row.instance}, {"lhs", row.lhs}, {"rhs", row.rhs}});
  }
  j["failures"] = rows;
  return j.dump();
}

}  // namespace haros::oracle
