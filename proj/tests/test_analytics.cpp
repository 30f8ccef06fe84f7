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

#include "haros/analytics.hpp"

#include <cmath>
#include <numbers>

#include <doctest.h>

using namespace haros;

namespace {

Rational rat(long p, long q) { return Rational(BigInt(p), BigInt(q)); }

constexpr double kPhiInv = 0.6180339887498949;

}  // namespace

TEST_SUITE_BEGIN("analytics");

TEST_CASE("closed_form_P head values") {
  CHECK(closed_form_P(2, rat(2, 5)) == rat(2, 5));
  CHECK(closed_form_P(3, rat(2, 5)) == rat(1, 5));
  CHECK(closed_form_P(4, rat(1, 4)) == 0);
  CHECK(closed_form_P(2, rat(3, 5)) == rat(2, 5));  // mirror
  CHECK(closed_form_P(3, rat(3, 5)) == rat(1, 5));
  CHECK(closed_form_P(2, rat(1, 2)) == rat(1, 2));
  CHECK(closed_form_P(4, rat(1, 2)) == rat(1, 2));
  CHECK(closed_form_P(2, rat(0, 1)) == 1);
  CHECK(closed_form_P(2, rat(1, 1)) == 1);
  CHECK(closed_form_P(3, rat(0, 1)) == 0);
}

TEST_CASE("closed_form_P piecewise cells") {
  CHECK(closed_form_P(5, rat(2, 5)) == rat(1, 5));   // 3x - 1 on (1/3, 1/2)
  CHECK(closed_form_P(6, rat(2, 7)) == rat(1, 7));   // 4x - 1 on (1/4, 1/3)
  CHECK(closed_form_P(5, rat(1, 3)) == rat(1, 3));   // isolated value at a cell endpoint
  CHECK(closed_form_P(5, rat(7, 16)) == rat(5, 16)); // 3x - 1 again
  CHECK(closed_form_P(5, rat(1, 2)) == 0);
  CHECK(closed_form_P(5, rat(1, 4)) == 0);           // hole below 1/3
  CHECK(closed_form_P(6, rat(1, 4)) == rat(1, 4));   // boundary degree of a shallow rational
  CHECK(closed_form_P(7, rat(1, 4)) == 0);
  CHECK(closed_form_P(7, rat(2, 5)) == 0);
  CHECK(closed_form_P(9, rat(0, 1)) == 0);
  CHECK_THROWS_AS(closed_form_P(1, rat(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_P(5, Rational(2)), std::invalid_argument);
}

TEST_CASE("closed_form_P_range equals repeated single calls") {
  const Rational x = rat(5, 13);
  const auto range = closed_form_P_range(2, 12, x);
  for (Degree k = 2; k <= 12; ++k) CHECK(range[k - 2] == closed_form_P(k, x));
}

TEST_CASE("hole_predicate") {
  CHECK(hole_predicate(FareyPath("LLL"), 5));        // degree 5 absent in G_{1/4}
  CHECK_FALSE(hole_predicate(FareyPath("LLR"), 5));  // degree 5 present in G_{2/5}
  CHECK_FALSE(hole_predicate(FareyPath("LLLR"), 6));
  CHECK(hole_predicate(FareyPath("LLLR"), 5));
  CHECK_THROWS_AS(hole_predicate(FareyPath("LLR"), 4), std::invalid_argument);
  CHECK_THROWS_AS(hole_predicate(FareyPath("LLR"), 6), std::invalid_argument);
}

TEST_CASE("verify_scaling") {
  const ScalingPair a = verify_scaling(rat(2, 5), 5, 1);
  CHECK(a.lhs == rat(1, 5));
  CHECK(a.rhs == rat(1, 5));

  const ScalingPair b = verify_scaling(rat(3, 5), 5, 1);
  CHECK(b.lhs == rat(1, 5));
  CHECK(b.rhs == rat(1, 5));
  CHECK(p5_after_F(rat(3, 5)) == rat(1, 8));
  CHECK(degree_distribution(build(rational_to_path(rat(3, 8)))).at(5) == rat(1, 8));

  const ScalingPair c = verify_scaling(rat(1, 3), 5, 2);
  CHECK(c.lhs == c.rhs);
  const ScalingPair d = verify_scaling(rat(1, 3), 6, 2);
  CHECK(d.lhs == 0);
  CHECK(d.rhs == 0);

  CHECK(p5_after_F(rat(2, 5)) == 0);
  CHECK_THROWS_AS(p5_after_F(rat(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(verify_scaling(rat(2, 5), 4, 1), std::invalid_argument);
}

TEST_CASE("mean degrees") {
  const HarosGraph g12 = build(FareyPath("L"));
  CHECK(mean_degree(g12) == 3);
  CHECK(geometric_mean_degree(g12) == doctest::Approx(std::sqrt(8.0)).epsilon(1e-12));

  CHECK(mean_degree(build(FareyPath("LLR"))) == rat(18, 5));
  CHECK(mean_degree(build(FareyPath("LLRR"))) == rat(26, 7));
}

TEST_CASE("thomae identity on all of F_60") {
  NodeBudget budget;
  for_each_farey_graph(60, budget, [](const HarosGraph& g) {
    CHECK(mean_degree(g) == Rational(4) - Rational(2, den(g.label)));
  });
}

TEST_CASE("continued-fraction geometric means") {
  CHECK(cf_geometric_mean(rat(8, 13)) == doctest::Approx(std::pow(2.0, 0.2)).epsilon(1e-12));
  CHECK(cf_geometric_mean(rat(1, 5)) == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(khinchin_constant() == doctest::Approx(2.685452).epsilon(1e-6));
}

TEST_CASE("entropy_S") {
  CHECK(entropy_S(degree_distribution(build(FareyPath("L")))) ==
        doctest::Approx(std::numbers::ln2).epsilon(1e-12));
  // G_{1/n}: S = -(2/n) ln(1/n) - (1 - 2/n) ln(1 - 2/n)
  const double n = 5;
  const double expected = -(2 / n) * std::log(1 / n) - (1 - 2 / n) * std::log(1 - 2 / n);
  CHECK(entropy_S(degree_distribution(build(FareyPath("LLLL")))) ==
        doctest::Approx(expected).epsilon(1e-12));
  CHECK(entropy_S(degree_distribution(atom())) == 0.0);
}

TEST_CASE("reduced_H") {
  auto brute_H = [](const Rational& x) {
    return reduced_H(x, entropy_S(degree_distribution(build(rational_to_path(x)))));
  };
  CHECK(std::abs(brute_H(rat(1, 4))) < 1e-12);
  CHECK(brute_H(rat(2, 5)) == doctest::Approx(0.2772588722239781).epsilon(1e-9));
  CHECK(brute_H(rat(3, 7)) == doctest::Approx(0.2727917864120626).epsilon(1e-9));
  // orange-family identity: H(3/7) = (3/7)(ln 3 - (2/3) ln 2)
  CHECK(brute_H(rat(3, 7)) ==
        doctest::Approx((3.0 / 7.0) * (std::log(3.0) - (2.0 / 3.0) * std::numbers::ln2))
            .epsilon(1e-12));
  for (unsigned n = 2; n <= 100; ++n) CHECK(std::abs(brute_H(Rational(1, n))) < 1e-12);
}

TEST_CASE("derham_check") {
  const DeRhamPair at_half = derham_check(rat(1, 2));
  CHECK(at_half.lhs == doctest::Approx(std::numbers::ln2).epsilon(1e-12));
  CHECK(std::abs(at_half.lhs - at_half.rhs) < 1e-9);

  const DeRhamPair at_one = derham_check(rat(1, 1));
  CHECK(at_one.lhs == 0.0);
  CHECK(std::abs(at_one.rhs) < 1e-12);

  const DeRhamPair mid = derham_check(rat(2, 3));
  CHECK(std::abs(mid.lhs - mid.rhs) < 1e-9);
  CHECK_THROWS_AS(derham_check(rat(1, 3)), std::invalid_argument);
}

TEST_CASE("family slopes") {
  CHECK(family_slope(SlopeFamily::one_over_n) == 0.0);
  CHECK(family_slope(SlopeFamily::two_over_2n1) ==
        doctest::Approx(std::numbers::ln2).epsilon(1e-15));
  CHECK(family_slope(SlopeFamily::three_over_3n2) ==
        doctest::Approx(std::log(3.0)).epsilon(1e-15));
  CHECK(family_slope(SlopeFamily::three_over_3n1) ==
        doctest::Approx(std::log(3.0) - 2.0 / 3.0 * std::numbers::ln2).epsilon(1e-15));
  // -ln(1/phi) (3 + 1/phi)
  CHECK(family_slope(SlopeFamily::noble_c1) == doctest::Approx(1.7410407388540134).epsilon(1e-10));
  CHECK(family_slope(SlopeFamily::noble_c3n12) ==
        doctest::Approx(1.5519381358542550).epsilon(1e-10));
}

TEST_CASE("theoretical distributions") {
  const auto golden = TheoreticalFamily::golden();
  CHECK(theoretical_dist(golden, 5) == doctest::Approx(0.14589803375031546).epsilon(1e-12));
  CHECK(theoretical_dist(golden, 4) == 0.0);
  CHECK(theoretical_dist(golden, 2) == doctest::Approx(1 - kPhiInv).epsilon(1e-12));

  CHECK(theoretical_dist(TheoreticalFamily::noble_c1(3), 6) ==
        doctest::Approx(0.10557280900008413).epsilon(1e-10));
  CHECK(theoretical_dist(TheoreticalFamily::noble_c1(3), 5) == 0.0);

  CHECK(theoretical_dist(TheoreticalFamily::metallic(2), 5) ==
        doctest::Approx(0.24264068711928516).epsilon(1e-10));
  CHECK(theoretical_dist(TheoreticalFamily::metallic(2), 4) == 0.0);
  CHECK(theoretical_dist(TheoreticalFamily::metallic(2), 6) == 0.0);
  CHECK(theoretical_dist(TheoreticalFamily::metallic(1), 7) ==
        doctest::Approx(theoretical_dist(golden, 7)).epsilon(1e-15));

  CHECK_THROWS_AS(theoretical_dist(TheoreticalFamily::noble_c1(1), 5), std::invalid_argument);
  CHECK_THROWS_AS(theoretical_dist(TheoreticalFamily::metallic(0), 5), std::invalid_argument);
}

TEST_CASE("theoretical families normalize") {
  for (const TheoreticalFamily family :
       {TheoreticalFamily::golden(), TheoreticalFamily::noble_c1(2),
        TheoreticalFamily::noble_c1(5), TheoreticalFamily::noble_c3n12(3),
        TheoreticalFamily::metallic(2), TheoreticalFamily::metallic(3)}) {
    double total = 0.0;
    for (Degree k = 2; k <= 400; ++k) total += theoretical_dist(family, k);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("fibonacci_convergent_dist") {
  const DegreeDistribution d35 = fibonacci_convergent_dist(4);  // x = 3/5
  CHECK(d35.at(2) == rat(2, 5));
  CHECK(d35.at(3) == rat(1, 5));
  CHECK(d35.at(5) == rat(1, 5));
  CHECK(d35.at(6) == rat(1, 5));

  const DegreeDistribution d58 = fibonacci_convergent_dist(5);  // x = 5/8
  CHECK(d58.at(2) == rat(3, 8));
  CHECK(d58.at(3) == rat(2, 8));

  // P(2) = F(n-2)/F(n), P(3) = F(n-3)/F(n)
  for (unsigned n = 5; n <= 20; ++n) {
    const DegreeDistribution d = fibonacci_convergent_dist(n);
    CHECK(d.at(2) == Rational(fibonacci(n - 2), fibonacci(n)));
    CHECK(d.at(3) == Rational(fibonacci(n - 3), fibonacci(n)));
  }

  const DegreeDistribution deep = fibonacci_convergent_dist(25);
  for (Degree k = 5; k <= 12; ++k) {
    CHECK(to_double(deep.at(k + 1) / deep.at(k)) == doctest::Approx(kPhiInv).epsilon(1e-3));
  }
  CHECK_THROWS_AS(fibonacci_convergent_dist(2), std::invalid_argument);
}

TEST_CASE("entropy_curve") {
  NodeBudget budget;
  const auto order3 = entropy_curve(3, budget);
  REQUIRE(order3.size() == 3);
  CHECK(order3[0].x == rat(1, 3));
  CHECK(order3[1].x == rat(1, 2));
  CHECK(order3[2].x == rat(2, 3));
  CHECK(order3[1].S == doctest::Approx(std::numbers::ln2).epsilon(1e-12));
  CHECK(order3[0].S == order3[2].S);  // mirror symmetry, identical multisets
  CHECK(order3[1].k_mean == 3);

  const auto order5 = entropy_curve(5, budget);
  const auto at = std::find_if(order5.begin(), order5.end(),
                               [](const EntropySample& s) { return s.x == rat(2, 5); });
  REQUIRE(at != order5.end());
  CHECK(at->S == doctest::Approx(1.33218).epsilon(1e-5));
  CHECK(at->H == doctest::Approx(0.27726).epsilon(1e-4));

  CHECK_THROWS_AS(entropy_curve(1, budget), std::invalid_argument);

  const auto thinned = entropy_curve(5, budget, 2);
  CHECK(thinned.size() == (order5.size() + 1) / 2);

  NodeBudget tiny{.limit = 5};
  CHECK_THROWS_AS(entropy_curve(100, tiny), BudgetExceeded);
}

TEST_CASE("mirror symmetry of S and H over F_200") {
  NodeBudget budget;
  const auto samples = entropy_curve(200, budget);
  for (std::size_t i = 0, j = samples.size() - 1; i < j; ++i, --j) {
    CHECK(samples[i].x == 1 - samples[j].x);
    CHECK(std::abs(samples[i].S - samples[j].S) < 1e-12);
    CHECK(std::abs(samples[i].H - samples[j].H) < 1e-12);
  }
}

TEST_CASE("scan_extrema") {
  NodeBudget budget;
  const auto samples = entropy_curve(200, budget);

  // Global argmax sits next to 1/phi (or its mirror).
  const ExtremaScan full = scan_extrema(samples, Rational(0), Rational(1));
  const double x = full.argmax.x_float;
  CHECK(std::min(std::abs(x - kPhiInv), std::abs(x - (1 - kPhiInv))) < 0.01);

  // Within I_3 = (1/4, 1/3] the maximum hugs C1(3) = 1/(3 + 1/phi).
  const ExtremaScan in_i3 = scan_extrema(samples, rat(1, 4), rat(1, 3));
  CHECK(std::abs(in_i3.argmax.x_float - 0.27639320225) < 0.01);

  // 1/n members show up as local minima (H vanishes there, so S sits on the floor).
  bool third_is_minimum = false;
  for (const EntropySample& s : full.local_minima) {
    if (s.x == rat(1, 3)) third_is_minimum = true;
  }
  CHECK(third_is_minimum);
  CHECK(!in_i3.local_minima.empty());

  CHECK_THROWS_AS(scan_extrema(samples, rat(1, 3), rat(1, 4)), std::invalid_argument);

  std::vector<EntropySample> endpoints(2);
  endpoints[0] = EntropySample{rat(0, 1), 0.0, 0.0, 0.0, Rational(2), 2.0};
  endpoints[1] = EntropySample{rat(1, 1), 1.0, 0.0, 0.0, Rational(2), 2.0};
  const ExtremaScan degenerate = scan_extrema(endpoints, Rational(0), Rational(1));
  CHECK(degenerate.argmax.S == 0.0);
}

TEST_CASE("box_counting_dimension") {
  // A flat curve is one-dimensional.
  std::vector<EntropySample> flat;
  for (int i = 0; i < 20000; ++i) {
    EntropySample s{};
    s.x_float = i / 20000.0;
    s.S = 0.7;
    flat.push_back(s);
  }
  const double scales[] = {1.0 / 16, 1.0 / 32, 1.0 / 64, 1.0 / 128, 1.0 / 256};
  CHECK(box_counting_dimension(flat, scales) == doctest::Approx(1.0).epsilon(0.05));

  const double two_scales[] = {0.5, 0.25};
  CHECK_THROWS_AS(box_counting_dimension(flat, two_scales), std::invalid_argument);
  const double bad_scales[] = {0.3, 0.15, 0.075, 0.0375};
  CHECK_THROWS_AS(box_counting_dimension(flat, bad_scales), std::invalid_argument);
  std::vector<EntropySample> few(flat.begin(), flat.begin() + 100);
  CHECK_THROWS_AS(box_counting_dimension(few, scales), std::invalid_argument);
}

TEST_SUITE_END();
