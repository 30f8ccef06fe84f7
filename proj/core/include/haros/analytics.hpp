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

#ifndef HAROS_ANALYTICS_HPP
#define HAROS_ANALYTICS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "haros/graph.hpp"
#include "haros/sweep.hpp"

// Closed forms for the degree distribution P(k, x) of Haros graphs, the
// entropy functionals S and H built on it, and the family formulas they
// organize into. All logarithms are natural; every quoted slope identity
// (log 2, log 3, ...) is base-covariant, so nats are used throughout.

namespace haros {

/// Exact P(k, x). Degrees 2..4 follow the closed table (with the isolated
/// values at 0, 1/2 and 1); degrees k >= 5 evaluate the piecewise-linear
/// cell bracketing x between two level-(k-2) fractions with a level-(k-3)
/// apex. Cell location walks x's descent in O(k); tree levels are never
/// materialized. Cell-endpoint rationals take the isolated value 1/q.
Rational closed_form_P(Degree k, const Rational& x);

/// P(k, x) for every k in [k_min, k_max] off a single descent.
std::vector<Rational> closed_form_P_range(Degree k_min, Degree k_max, const Rational& x);

/// True iff degree kappa is absent from G_x (P(kappa, x) = 0), decided by
/// a symbol repetition at positions kappa-3 and kappa-2 (1-based) of the
/// path. Valid for 5 <= kappa <= len + 2.
bool hole_predicate(const FareyPath& path, Degree kappa);

struct ScalingPair {
  Rational lhs;  // P(k, x)
  Rational rhs;  // (1 + m x) P(k + m, x / (1 + m x))
};

/// Both sides of the scaling law, each computed from brute-force
/// distributions; they agree exactly for k >= 5.
ScalingPair verify_scaling(const Rational& x, Degree k, unsigned m);

/// The one value scaling cannot transport: P(5, F(x)) for interior x,
/// zero below 1/2 and (2x-1)/(x+1) above.
Rational p5_after_F(const Rational& x);

/// Arithmetic mean degree of the collapsed graph; equals 4 - 2/q exactly
/// (a Thomae function over the unit interval).
Rational mean_degree(const HarosGraph& g);

/// exp(<ln k>) over the collapsed degrees.
double geometric_mean_degree(const HarosGraph& g);

/// Geometric mean of the continued-fraction terms of x.
double cf_geometric_mean(const Rational& x);

/// Khinchin's constant from its product formula, truncated with an
/// integral tail correction; good to ~1e-10.
double khinchin_constant();

/// Shannon entropy of a degree distribution in nats, 0 log 0 = 0.
double entropy_S(const DegreeDistribution& dist);

/// Reduced entropy H(x) = S(x) + 2x ln x + (1-2x) ln(1-2x) for x <= 1/2,
/// mirrored above; vanishes identically on the 1/n family.
double reduced_H(const Rational& x, double entropy);

struct DeRhamPair {
  double lhs;  // S(z)
  double rhs;  // (z + 2) H(1/(z + 2))
};

/// Self-affinity anchor S(z) = (z+2) H(1/(z+2)) on z in [1/2, 1], both
/// sides from brute-force graphs.
DeRhamPair derham_check(const Rational& z);

enum class SlopeFamily {
  one_over_n,       // x = 1/n, slope 0
  two_over_2n1,     // x = 2/(2n+1), slope ln 2
  three_over_3n2,   // x = 3/(3n+2), slope ln 3
  three_over_3n1,   // x = 3/(3n+1), slope ln 3 - (2/3) ln 2
  noble_c1,         // x = 1/(n + 1/phi), slope -ln(1/phi) (3 + 1/phi)
  noble_c3n12,      // x = [n,1,2,(1)], slope ln(3+1/phi) - ln(1-1/phi)/(3+1/phi)
};

/// Slope of the straight line H(x) = a x interpolating the family.
double family_slope(SlopeFamily family);

/// Families with a fully closed-form degree distribution.
struct TheoreticalFamily {
  enum class Kind { golden, noble_c1, noble_c3n12, metallic } kind;
  unsigned param = 0;  // n for the noble families, b for metallic

  static TheoreticalFamily golden() { return {Kind::golden, 0}; }
  static TheoreticalFamily noble_c1(unsigned n) { return {Kind::noble_c1, n}; }
  static TheoreticalFamily noble_c3n12(unsigned n) { return {Kind::noble_c3n12, n}; }
  static TheoreticalFamily metallic(unsigned b) { return {Kind::metallic, b}; }
};

/// Limit value P(k) for the family member; declared holes return exactly 0.
double theoretical_dist(const TheoreticalFamily& family, Degree k);

/// Value of the family member in (0,1).
double family_value(const TheoreticalFamily& family);

/// Exact distribution of the Fibonacci quotient graph G_{F(n-1)/F(n)},
/// obtained by building the zigzag descent.
DegreeDistribution fibonacci_convergent_dist(unsigned n);

struct EntropySample {
  Rational x;
  double x_float;
  double S;        // nats
  double H;        // nats
  Rational k_mean; // exactly 4 - 2/q
  double k_geo;
};

/// One sample per interior fraction of F_order, ascending; `thin` keeps
/// every thin-th sample. Deterministic regardless of execution environment.
std::vector<EntropySample> entropy_curve(unsigned order, NodeBudget& budget,
                                         std::size_t thin = 1);

struct ExtremaScan {
  EntropySample argmax;
  std::vector<EntropySample> local_minima;
};

/// Argmax of S over the window [lo, hi] plus strictly-local minima inside
/// it. Samples must be sorted by x.
ExtremaScan scan_extrema(std::span<const EntropySample> samples, const Rational& lo,
                         const Rational& hi);

/// Box-counting slope of log N(eps) against log(1/eps) over the graph of
/// S. Requires >= 1e4 samples and >= 4 dyadic scales. A soft estimate.
double box_counting_dimension(std::span<const EntropySample> samples,
                              std::span<const double> scales);

}  // namespace haros

#endif  // HAROS_ANALYTICS_HPP
