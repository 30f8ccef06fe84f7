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

#ifndef HAROS_CONTINUED_FRACTION_HPP
#define HAROS_CONTINUED_FRACTION_HPP

#include <cstddef>
#include <vector>

#include "haros/farey.hpp"
#include "haros/numeric.hpp"

namespace haros {

/// Finite continued fraction [a1, a2, ..., an] of a rational in (0,1),
/// kept canonical: all terms >= 1 and the last term >= 2, which resolves
/// the [.., a] vs [.., a-1, 1] ambiguity. Construction normalizes a
/// trailing 1.
class ContinuedFraction {
 public:
  explicit ContinuedFraction(std::vector<BigInt> terms);

  const std::vector<BigInt>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  const BigInt& front() const { return terms_.front(); }

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

 private:
  std::vector<BigInt> terms_;
};

/// Continued-fraction description covering rationals (empty period) and
/// quadratic irrationals (eventually periodic expansion). Period [1] after
/// a transient is a noble number; a bare period [b] is the metallic ratio
/// for b.
struct CFSpec {
  std::vector<BigInt> transient;
  std::vector<BigInt> period;

  CFSpec(std::vector<BigInt> transient_terms, std::vector<BigInt> period_terms);

  bool rational() const { return period.empty(); }
  bool noble() const { return period.size() == 1 && period.front() == 1; }
  bool metallic() const { return transient.empty() && period.size() == 1; }
};

/// Euclidean expansion of a rational in (0,1), canonical form.
ContinuedFraction rational_to_cf(const Rational& x);

/// Exact value of a finite continued fraction.
Rational cf_to_rational(const ContinuedFraction& cf);

/// Symbolic path L^{a1} R^{a2} L^{a3} ... with the final block shortened
/// by one symbol.
FareyPath cf_to_path(const ContinuedFraction& cf);

/// First `depth` convergents of the (possibly periodic) expansion. For a
/// rational spec the list stops at the exact value.
std::vector<Rational> convergents(const CFSpec& spec, std::size_t depth);

/// Numeric value of the spec. Rationals divide exactly; periodic specs
/// solve the integer-coefficient fixed-point quadratic of the period and
/// push the root in (0,1) through the transient.
double evaluate(const CFSpec& spec);

/// x / (1 + m x): shifts the head of the continued fraction by m and maps
/// the subtree interval I_n onto I_{n+m}.
Rational apply_F(const Rational& x, unsigned m = 1);

/// Path of the depth-d convergent of a spec (the finite truncation's path).
FareyPath convergent_path(const CFSpec& spec, std::size_t depth);

}  // namespace haros

#endif  // HAROS_CONTINUED_FRACTION_HPP
