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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace haros {

namespace {

constexpr double kPhiInv = 0.6180339887498948482;  // (sqrt(5) - 1) / 2

Rational head_P(Degree k, const Rational& x) {
  const Rational half(1, 2);
  if (x == 0 || x == 1) return k == 2 ? Rational(1) : Rational(0);
  if (x == half) {
    if (k == 2 || k == 4) return half;
    return Rational(0);
  }
  const Rational lo = std::min(x, Rational(1) - x);  // fold the mirror
  switch (k) {
    case 2: return lo;
    case 3: return Rational(1) - 2 * lo;
    default: return Rational(0);  // k == 4
  }
}

}  // namespace

std::vector<Rational> closed_form_P_range(Degree k_min, Degree k_max, const Rational& x) {
  if (k_min < 2 || k_max < k_min) throw std::invalid_argument("need 2 <= k_min <= k_max");
  if (!in_unit_interval(x)) throw std::invalid_argument("x must lie in [0,1]");
  std::vector<Rational> out(k_max - k_min + 1, Rational(0));
  auto slot = [&](Degree k) -> Rational& { return out[k - k_min]; };
  for (Degree k = k_min; k <= std::min<Degree>(4, k_max); ++k) slot(k) = head_P(k, x);
  if (k_max < 5 || x == 0 || x == 1) return out;

  // Walk x's descent. At level j the node `m` is the apex of the cell
  // whose two level-(j+1) children carry the support of P(j+3, .).
  Rational left(0), m(1, 2), right(1);
  for (Degree level = 2; level + 3 <= k_max; ++level) {
    if (x == m) return out;  // degrees above level+2 never appear in G_x
    const Degree k = level + 3;
    if (k >= k_min) {
      const Rational child_left = mediant(left, m);
      const Rational child_right = mediant(m, right);
      if (x == child_left) {
        slot(k) = Rational(1, den(child_left));
      } else if (x == child_right) {
        slot(k) = Rational(1, den(child_right));
      } else if (child_left < x && x < m) {
        slot(k) = Rational(den(child_left)) * x - Rational(num(child_left));
      } else if (m < x && x < child_right) {
        slot(k) = Rational(num(child_right)) - Rational(den(child_right)) * x;
      }
    }
    if (x < m) {
      right = m;
      m = mediant(left, m);
    } else {
      left = m;
      m = mediant(m, right);
    }
  }
  return out;
}

Rational closed_form_P(Degree k, const Rational& x) {
  return closed_form_P_range(k, k, x).front();
}

bool hole_predicate(const FareyPath& path, Degree kappa) {
  if (kappa < 5 || kappa > path.size() + 2) {
    throw std::invalid_argument("hole predicate needs 5 <= kappa <= len + 2");
  }
  // 1-based positions kappa-3 and kappa-2.
  return path[kappa - 4] == path[kappa - 3];
}

ScalingPair verify_scaling(const Rational& x, Degree k, unsigned m) {
  if (k < 5) throw std::invalid_argument("scaling law applies to k >= 5");
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (!is_interior(x)) throw std::invalid_argument("x must be interior");
  const DegreeDistribution dx = degree_distribution(build(rational_to_path(x)));
  const Rational y = apply_F(x, m);
  const DegreeDistribution dy = degree_distribution(build(rational_to_path(y)));
  return ScalingPair{dx.at(k), (Rational(1) + Rational(m) * x) * dy.at(k + m)};
}

Rational p5_after_F(const Rational& x) {
  if (!is_interior(x)) throw std::invalid_argument("x must be interior");
  const Rational half(1, 2);
  if (x == half) throw std::invalid_argument("the P(5, F(x)) rule excludes x = 1/2");
  if (x < half) return Rational(0);
  return (2 * x - 1) / (x + 1);
}

Rational mean_degree(const HarosGraph& g) {
  BigInt sum = 0;
  for (Degree d : g.open_degrees) sum += d;
  return Rational(sum, BigInt(g.q()));
}

double geometric_mean_degree(const HarosGraph& g) {
  double acc = 0.0;
  for (std::size_t i = 1; i + 1 < g.open_degrees.size(); ++i) {
    acc += std::log(double(g.open_degrees[i]));
  }
  acc += std::log(double(g.open_degrees.front() + g.open_degrees.back()));
  return std::exp(acc / double(g.q()));
}

double cf_geometric_mean(const Rational& x) {
  const ContinuedFraction cf = rational_to_cf(x);
  double acc = 0.0;
  for (const BigInt& a : cf.terms()) acc += std::log(to_double(a));
  return std::exp(acc / double(cf.size()));
}

double khinchin_constant() {
  static const double value = [] {
    // Product over r of (1 + 1/(r(r+2)))^(log2 r), truncated with the
    // integral tail of log2(x)/(x(x+2)); the correction leaves ~1e-11.
    constexpr std::int64_t cutoff = 2'000'000;
    double acc = 0.0;
    for (std::int64_t r = 2; r < cutoff; ++r) {
      acc += std::log(double(r)) * std::log1p(1.0 / (double(r) * double(r + 2)));
    }
    const double tail = (std::log(double(cutoff)) + 1.0) / double(cutoff);
    return std::exp((acc + tail) / std::numbers::ln2);
  }();
  return value;
}

double entropy_S(const DegreeDistribution& dist) {
  double acc = 0.0;
  for (const auto& [k, count] : dist.counts) {
    const double p = to_double(Rational(count, dist.node_count));
    if (p > 0) acc -= p * std::log(p);
  }
  return acc;
}

double reduced_H(const Rational& x, double entropy) {
  if (!in_unit_interval(x)) throw std::invalid_argument("x must lie in [0,1]");
  auto plogp_coeff = [](const Rational& r) {
    const double v = to_double(r);
    return v > 0 ? v * std::log(v) : 0.0;
  };
  if (2 * x <= 1) {
    return entropy + 2 * plogp_coeff(x) + plogp_coeff(Rational(1) - 2 * x);
  }
  return entropy + 2 * plogp_coeff(Rational(1) - x) + plogp_coeff(2 * x - 1);
}

namespace {

double brute_entropy(const Rational& x) {
  if (x == 0 || x == 1) return 0.0;
  return entropy_S(degree_distribution(build(rational_to_path(x))));
}

}  // namespace

DeRhamPair derham_check(const Rational& z) {
  if (2 * z < 1 || z > 1) throw std::invalid_argument("z must lie in [1/2, 1]");
  const double lhs = brute_entropy(z);
  const Rational w(den(z), num(z) + 2 * den(z));  // 1 / (z + 2)
  const double rhs = to_double(z + 2) * reduced_H(w, brute_entropy(w));
  return DeRhamPair{lhs, rhs};
}

double family_slope(SlopeFamily family) {
  switch (family) {
    case SlopeFamily::one_over_n: return 0.0;
    case SlopeFamily::two_over_2n1: return std::numbers::ln2;
    case SlopeFamily::three_over_3n2: return std::log(3.0);
    case SlopeFamily::three_over_3n1: return std::log(3.0) - (2.0 / 3.0) * std::numbers::ln2;
    case SlopeFamily::noble_c1: return -std::log(kPhiInv) * (3.0 + kPhiInv);
    case SlopeFamily::noble_c3n12:
      return std::log(3.0 + kPhiInv) - std::log(1.0 - kPhiInv) / (3.0 + kPhiInv);
  }
  throw std::invalid_argument("unknown family");
}

double family_value(const TheoreticalFamily& family) {
  switch (family.kind) {
    case TheoreticalFamily::Kind::golden:
      return kPhiInv;
    case TheoreticalFamily::Kind::noble_c1:
      return 1.0 / (double(family.param) + kPhiInv);
    case TheoreticalFamily::Kind::noble_c3n12: {
      const double n = family.param;
      return (3.0 + kPhiInv) / ((3.0 * n + 2.0) + (n + 1.0) * kPhiInv);
    }
    case TheoreticalFamily::Kind::metallic: {
      const double b = family.param;
      return (std::sqrt(b * b + 4.0) - b) / 2.0;
    }
  }
  throw std::invalid_argument("unknown family");
}

double theoretical_dist(const TheoreticalFamily& family, Degree k) {
  if (k < 2) throw std::invalid_argument("degrees start at 2");
  switch (family.kind) {
    case TheoreticalFamily::Kind::golden: {
      if (k == 2) return 1.0 - kPhiInv;
      if (k == 3) return 2.0 * kPhiInv - 1.0;
      if (k == 4) return 0.0;
      return std::pow(kPhiInv, double(k - 1));
    }
    case TheoreticalFamily::Kind::noble_c1: {
      const unsigned n = family.param;
      if (n < 2) throw std::invalid_argument("C1(n) needs n >= 2");
      const double x = family_value(family);
      if (k == 2) return x;
      if (k == 3) return 1.0 - 2.0 * x;
      if (k <= n + 2) return 0.0;
      return x * std::pow(kPhiInv, double(k) - double(n + 1));
    }
    case TheoreticalFamily::Kind::noble_c3n12: {
      const unsigned n = family.param;
      if (n < 2) throw std::invalid_argument("C3(n,1,2) needs n >= 2");
      const double x = family_value(family);
      const double q = x / (3.0 + kPhiInv);
      if (k == 2) return x;
      if (k == 3) return 1.0 - 2.0 * x;
      if (k <= n + 2) return 0.0;
      if (k == n + 3) return q;
      if (k == n + 4) return (1.0 + kPhiInv) * q;
      if (k == n + 5) return 0.0;
      return q * std::pow(kPhiInv, double(k) - double(n + 4));
    }
    case TheoreticalFamily::Kind::metallic: {
      const unsigned b = family.param;
      if (b < 1) throw std::invalid_argument("metallic(b) needs b >= 1");
      if (b == 1) return theoretical_dist(TheoreticalFamily::golden(), k);
      const double s = family_value(family);
      if (k == 2) return s;
      if (k == 3) return 1.0 - 2.0 * s;
      if (k >= b + 3 && (k - 3) % b == 0) return (1.0 - s) * std::pow(s, double(k - 3) / double(b));
      return 0.0;
    }
  }
  throw std::invalid_argument("unknown family");
}

DegreeDistribution fibonacci_convergent_dist(unsigned n) {
  if (n < 3) throw std::invalid_argument("Fibonacci convergents start at n = 3");
  return degree_distribution(build_tally(FareyPath::zigzag(n - 1)));
}

std::uint64_t farey_sweep_nodes(unsigned order) {
  if (order > 20'000'000) {
    throw std::invalid_argument("Farey order too large for any practical node budget");
  }
  std::uint64_t total = 0;
  std::vector<std::uint32_t> phi(order + 1);
  for (std::uint32_t i = 0; i <= order; ++i) phi[i] = i;
  for (std::uint32_t p = 2; p <= order; ++p) {
    if (phi[p] == p) {  // prime
      for (std::uint32_t m = p; m <= order; m += p) phi[m] -= phi[m] / p;
    }
  }
  for (std::uint32_t q = 2; q <= order; ++q) total += std::uint64_t(phi[q]) * q;
  return total;
}

std::uint64_t farey_interior_count(unsigned order) {
  if (order > 20'000'000) throw std::invalid_argument("Farey order too large");
  std::vector<std::uint32_t> phi(order + 1);
  for (std::uint32_t i = 0; i <= order; ++i) phi[i] = i;
  for (std::uint32_t p = 2; p <= order; ++p) {
    if (phi[p] == p) {
      for (std::uint32_t m = p; m <= order; m += p) phi[m] -= phi[m] / p;
    }
  }
  std::uint64_t total = 0;
  for (std::uint32_t q = 2; q <= order; ++q) total += phi[q];
  return total;
}

namespace {

// Distinct collapsed degrees with multiplicities, via a zeroed scratch
// vector that is cleaned up after every graph (cheap, cache friendly).
void collapsed_counts(const HarosGraph& g, std::vector<std::uint32_t>& scratch,
                      std::vector<std::pair<Degree, std::uint32_t>>& out) {
  out.clear();
  const Degree boundary = g.open_degrees.front() + g.open_degrees.back();
  const std::size_t need = std::max<std::size_t>(boundary + 1, g.open_degrees.size() + 3);
  if (scratch.size() < need) scratch.resize(need, 0);
  auto bump = [&](Degree d) {
    if (scratch[d]++ == 0) out.emplace_back(d, 0);
  };
  for (std::size_t i = 1; i + 1 < g.open_degrees.size(); ++i) bump(g.open_degrees[i]);
  bump(boundary);
  for (auto& [d, c] : out) {
    c = scratch[d];
    scratch[d] = 0;
  }
  std::sort(out.begin(), out.end());
}

}  // namespace

std::vector<EntropySample> entropy_curve(unsigned order, NodeBudget& budget, std::size_t thin) {
  if (order < 2) {
    throw std::invalid_argument("entropy curve needs order >= 2; the interior of F_1 is empty");
  }
  if (thin == 0) thin = 1;
  budget.require(farey_sweep_nodes(order));

  std::vector<EntropySample> samples;
  samples.reserve(farey_interior_count(order) / thin + 1);
  std::vector<std::uint32_t> scratch;
  std::vector<std::pair<Degree, std::uint32_t>> counts;
  std::size_t index = 0;
  for_each_farey_graph(order, budget, [&](const HarosGraph& g) {
    if (index++ % thin != 0) return;
    collapsed_counts(g, scratch, counts);
    const double q = double(g.q());
    double entropy = 0.0;
    double log_acc = 0.0;
    for (const auto& [d, c] : counts) {
      const double p = double(c) / q;
      entropy -= p * std::log(p);
      log_acc += double(c) * std::log(double(d));
    }
    EntropySample s;
    s.x = g.label;
    s.x_float = to_double(g.label);
    s.S = entropy;
    s.H = reduced_H(g.label, entropy);
    s.k_mean = Rational(BigInt(4 * g.q() - 2), BigInt(g.q()));
    s.k_geo = std::exp(log_acc / q);
    samples.push_back(std::move(s));
  });
  return samples;
}

ExtremaScan scan_extrema(std::span<const EntropySample> samples, const Rational& lo,
                         const Rational& hi) {
  std::size_t first = samples.size(), last = samples.size();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].x < lo || samples[i].x > hi) continue;
    if (first == samples.size()) first = i;
    last = i;
  }
  if (first == samples.size()) throw std::invalid_argument("window holds no samples");

  ExtremaScan scan{samples[first], {}};
  for (std::size_t i = first; i <= last; ++i) {
    if (samples[i].S > scan.argmax.S) scan.argmax = samples[i];
    if (i > first && i < last && samples[i].S < samples[i - 1].S &&
        samples[i].S < samples[i + 1].S) {
      scan.local_minima.push_back(samples[i]);
    }
  }
  return scan;
}

double box_counting_dimension(std::span<const EntropySample> samples,
                              std::span<const double> scales) {
  if (samples.size() < 10'000) {
    throw std::invalid_argument("box counting needs >= 1e4 samples");
  }
  if (scales.size() < 4) throw std::invalid_argument("box counting needs >= 4 scales");
  for (double eps : scales) {
    if (!(eps > 0) || eps >= 1) throw std::invalid_argument("scales must lie in (0,1)");
    const double j = std::log2(1.0 / eps);
    if (std::abs(j - std::round(j)) > 1e-9) {
      throw std::invalid_argument("scales must be dyadic (powers of 1/2)");
    }
  }

  std::vector<double> log_inv, log_count;
  std::vector<double> lo, hi;
  for (double eps : scales) {
    const std::size_t columns = std::size_t(std::llround(1.0 / eps));
    lo.assign(columns, std::numeric_limits<double>::infinity());
    hi.assign(columns, -std::numeric_limits<double>::infinity());
    for (const EntropySample& s : samples) {
      std::size_t c = std::min<std::size_t>(columns - 1, std::size_t(s.x_float / eps));
      lo[c] = std::min(lo[c], s.S);
      hi[c] = std::max(hi[c], s.S);
    }
    std::uint64_t boxes = 0;
    for (std::size_t c = 0; c < columns; ++c) {
      if (lo[c] > hi[c]) continue;  // empty column
      boxes += std::uint64_t(std::floor(hi[c] / eps)) - std::uint64_t(std::floor(lo[c] / eps)) + 1;
    }
    log_inv.push_back(std::log(1.0 / eps));
    log_count.push_back(std::log(double(boxes)));
  }

  // Least-squares slope.
  const double n = double(log_inv.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < log_inv.size(); ++i) {
    sx += log_inv[i];
    sy += log_count[i];
    sxx += log_inv[i] * log_inv[i];
    sxy += log_inv[i] * log_count[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace haros
