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

#ifndef HAROS_NUMERIC_HPP
#define HAROS_NUMERIC_HPP

#include <cstdint>
#include <boost/multiprecision/cpp_int.hpp>

namespace haros {

/// Arbitrary-precision integer. Denominators of deep convergents overflow
/// 64 bits quickly (Fibonacci quotients do so near depth 90), so every
/// exact quantity lives on this type.
using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, canonical (reduced, positive denominator).
using Rational = boost::multiprecision::cpp_rational;

/// Node degree inside a Haros graph. Bounded by the path length plus 3,
/// so a machine word is always enough even when node counts are not.
using Degree = std::uint64_t;

inline const BigInt& num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline const BigInt& den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(const BigInt& n) { return n.convert_to<double>(); }

inline bool in_unit_interval(const Rational& r) { return r >= 0 && r <= 1; }
inline bool is_interior(const Rational& r) { return r > 0 && r < 1; }

/// Fibonacci number with the two-seed convention F(0) = F(1) = 1.
BigInt fibonacci(std::uint64_t n);

}  // namespace haros

#endif  // HAROS_NUMERIC_HPP
