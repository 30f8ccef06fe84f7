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

#include "haros/continued_fraction.hpp"

#include <cmath>
#include <stdexcept>

namespace haros {

namespace {

void require_positive_terms(const std::vector<BigInt>& terms, const char* what) {
  for (const BigInt& t : terms) {
    if (t < 1) throw std::invalid_argument(std::string(what) + " terms must be >= 1");
  }
}

}  // namespace

ContinuedFraction::ContinuedFraction(std::vector<BigInt> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw std::invalid_argument("continued fraction needs >= 1 term");
  require_positive_terms(terms_, "continued fraction");
  // Normalize [.., a, 1] to [.., a+1].
  if (terms_.size() > 1 && terms_.back() == 1) {
    terms_.pop_back();
    terms_.back() += 1;
  }
  if (terms_.size() == 1 && terms_.front() < 2) {
    throw std::invalid_argument("[1] lies outside (0,1)");
  }
}

CFSpec::CFSpec(std::vector<BigInt> transient_terms, std::vector<BigInt> period_terms)
    : transient(std::move(transient_terms)), period(std::move(period_terms)) {
  require_positive_terms(transient, "transient");
  require_positive_terms(period, "period");
  if (period.empty()) {
    // Rational spec: canonicalize through ContinuedFraction.
    transient = ContinuedFraction(transient).terms();
  }
}

ContinuedFraction rational_to_cf(const Rational& x) {
  if (!is_interior(x)) {
    throw std::invalid_argument("continued fraction defined on (0,1), got " + x.str());
  }
  std::vector<BigInt> terms;
  BigInt p = num(x), q = den(x);
  // Euclid on (q, p): x = [a1, a2, ...] with a_i the successive quotients.
  while (p != 0) {
    terms.push_back(q / p);
    BigInt r = q % p;
    q = p;
    p = r;
  }
  return ContinuedFraction(std::move(terms));
}

Rational cf_to_rational(const ContinuedFraction& cf) {
  BigInt p_prev = 1, q_prev = 0;  // formal (-1)-th convergent
  BigInt p = 0, q = 1;            // 0-th convergent
  for (const BigInt& a : cf.terms()) {
    BigInt p_next = a * p + p_prev;
    BigInt q_next = a * q + q_prev;
    p_prev = std::exchange(p, p_next);
    q_prev = std::exchange(q, q_next);
  }
  return Rational(p, q);
}

FareyPath cf_to_path(const ContinuedFraction& cf) {
  std::string symbols;
  char sym = 'L';
  const auto& terms = cf.terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    BigInt count = terms[i];
    if (i + 1 == terms.size()) count -= 1;  // final block is one symbol short
    if (count > 1'000'000'000) {
      throw std::invalid_argument("continued-fraction term too large to expand as a path");
    }
    symbols.append(count.convert_to<std::size_t>(), sym);
    sym = (sym == 'L') ? 'R' : 'L';
  }
  return FareyPath(symbols);
}

namespace {

// Expanded term stream of a spec: transient, then the period repeated.
BigInt term_at(const CFSpec& spec, std::size_t i) {
  if (i < spec.transient.size()) return spec.transient[i];
  return spec.period[(i - spec.transient.size()) % spec.period.size()];
}

}  // namespace

std::vector<Rational> convergents(const CFSpec& spec, std::size_t depth) {
  if (depth == 0) throw std::invalid_argument("depth must be >= 1");
  std::size_t steps = depth;
  if (spec.rational()) steps = std::min(depth, spec.transient.size());
  std::vector<Rational> out;
  out.reserve(steps);
  BigInt p_prev = 1, q_prev = 0, p = 0, q = 1;
  for (std::size_t i = 0; i < steps; ++i) {
    BigInt a = term_at(spec, i);
    BigInt p_next = a * p + p_prev;
    BigInt q_next = a * q + q_prev;
    p_prev = std::exchange(p, p_next);
    q_prev = std::exchange(q, q_next);
    out.emplace_back(p, q);
  }
  return out;
}

FareyPath convergent_path(const CFSpec& spec, std::size_t depth) {
  if (depth == 0) throw std::invalid_argument("depth must be >= 1");
  std::size_t steps = depth;
  if (spec.rational()) steps = std::min(depth, spec.transient.size());
  std::vector<BigInt> terms;
  terms.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) terms.push_back(term_at(spec, i));
  return cf_to_path(ContinuedFraction(std::move(terms)));
}

double evaluate(const CFSpec& spec) {
  if (spec.rational()) {
    return to_double(cf_to_rational(ContinuedFraction(spec.transient)));
  }
  // Fixed point of the period: with P_i/Q_i the period's convergents, the
  // tail value y solves Q_{l-1} y^2 + (Q_l - P_{l-1}) y - P_l = 0 and is
  // the root in (0,1); the roots' product -P_l / Q_{l-1} is negative, so
  // there is exactly one positive root.
  BigInt p_prev = 1, q_prev = 0, p = 0, q = 1;
  for (const BigInt& a : spec.period) {
    BigInt p_next = a * p + p_prev;
    BigInt q_next = a * q + q_prev;
    p_prev = std::exchange(p, p_next);
    q_prev = std::exchange(q, q_next);
  }
  const double a2 = to_double(q_prev);
  const double b = to_double(q - p_prev);
  const double disc = to_double((q - p_prev) * (q - p_prev) + 4 * q_prev * p);
  const double y = (-b + std::sqrt(disc)) / (2 * a2);

  // Push the tail through the transient: value = (p_m + y p_{m-1}) / (q_m + y q_{m-1}).
  BigInt tp_prev = 1, tq_prev = 0, tp = 0, tq = 1;
  for (const BigInt& a : spec.transient) {
    BigInt p_next = a * tp + tp_prev;
    BigInt q_next = a * tq + tq_prev;
    tp_prev = std::exchange(tp, p_next);
    tq_prev = std::exchange(tq, q_next);
  }
  return (to_double(tp) + y * to_double(tp_prev)) / (to_double(tq) + y * to_double(tq_prev));
}

Rational apply_F(const Rational& x, unsigned m) {
  if (!in_unit_interval(x)) throw std::invalid_argument("apply_F domain is [0,1]");
  // p/(q + m p); gcd(p, q + mp) = gcd(p, q) = 1, so already reduced.
  return Rational(num(x), den(x) + BigInt(m) * num(x));
}

}  // namespace haros
