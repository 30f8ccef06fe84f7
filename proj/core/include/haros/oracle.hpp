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

#ifndef HAROS_ORACLE_HPP
#define HAROS_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "haros/analytics.hpp"
#include "haros/sweep.hpp"

// Brute-force verification harness. Every check rebuilds graphs from first
// principles and compares them against the closed forms; the construction
// side is always the source of truth, never the formula under test.

namespace haros::oracle {

struct FailureRow {
  std::string instance;
  std::string lhs;
  std::string rhs;
};

struct CheckReport {
  std::string check_id;
  std::uint64_t instances_tested = 0;
  std::uint64_t total_failures = 0;
  std::vector<FailureRow> failures;  // capped, total_failures stays exact
  double elapsed_seconds = 0.0;

  bool passed() const { return total_failures == 0; }
  void add_failure(std::string instance, std::string lhs, std::string rhs);

  static constexpr std::size_t kFailureRowCap = 100;
};

/// Record a failure row unless the two sides agree exactly.
void expect_equal(CheckReport& report, const std::string& instance, const Rational& lhs,
                  const Rational& rhs);

/// Record a failure row unless |lhs - rhs| < tolerance.
void expect_close(CheckReport& report, const std::string& instance, double lhs, double rhs,
                  double tolerance);

/// P(2), P(3), P(4) against the closed table, and the arithmetic mean
/// degree against 4 - 2/q, for every interior fraction with q <= max_q.
/// Exact rational comparisons.
CheckReport check_theorem1(unsigned max_q, NodeBudget& budget);

/// Full path enumeration to max_len (<= 20): hole predicate against
/// brute-force zeros, boundary identity k1 + k_{q+1} = len + 3, and the
/// merging node staying below the boundary degree.
CheckReport check_holes(unsigned max_len, NodeBudget& budget);

/// closed_form_P against brute force for k in [5, max_k], exact, over the
/// interior of F_max_q.
CheckReport check_conjecture1(unsigned max_q, Degree max_k, NodeBudget& budget);

/// P(k,x) = (1+mx) P(k+m, x/(1+mx)) with both sides brute-forced, plus the
/// corollary value P(5, F(x)).
CheckReport check_scaling(unsigned max_q, Degree k_min, Degree k_max, unsigned m_min,
                          unsigned m_max, NodeBudget& budget);

/// |S(z) - (z+2) H(1/(z+2))| < 1e-9 over F_max_q intersected with [1/2, 1].
CheckReport check_derham(unsigned max_q, NodeBudget& budget);

/// |H(x)/x - slope| < 1e-10 for the first `count` members of the four
/// rational families 1/n, 2/(2n+1), 3/(3n+2), 3/(3n+1).
CheckReport check_families(unsigned count, NodeBudget& budget);

/// Noble numbers: depth-`depth` convergents of C1(n), n in {2,3,4}, match
/// the closed-form distribution to 1e-6; the noble slope identity holds to
/// 1e-10 against the closed-form distributions of C1 and C3(n,1,2); golden
/// convergent tails decay with ratio 1/phi (1e-3 at depth 25) and the
/// argmax of S over F_144 is a golden convergent or its mirror.
CheckReport check_noble(std::size_t depth, NodeBudget& budget);

/// Metallic ratios: depth-`depth` convergents of [period b], b in {2,3},
/// have support {2,3} union {bn+3} and match the closed form to 1e-6.
CheckReport check_metallic(std::size_t depth, NodeBudget& budget);

/// The desk-scale default suite, in a fixed order.
std::vector<CheckReport> check_all(NodeBudget& budget);

/// JSON-lines serialization (one report per line).
std::string to_json_line(const CheckReport& report);

}  // namespace haros::oracle

#endif  // HAROS_ORACLE_HPP
