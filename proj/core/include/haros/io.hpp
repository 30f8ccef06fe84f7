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

#ifndef HAROS_IO_HPP
#define HAROS_IO_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "haros/analytics.hpp"
#include "haros/graph.hpp"

namespace haros {

/// "p/q". Bare integers are accepted on parse ("1" == 1/1).
std::string format_rational(const Rational& r);
Rational parse_rational(std::string_view text);

/// "[a1,a2,...]" for finite expansions, "[a1,...,(b1,...)]" with the
/// period in parentheses for eventually periodic ones.
std::string format_cf_spec(const CFSpec& spec);
CFSpec parse_cf_spec(std::string_view text);

/// Exact rational from a plain decimal string such as "0.61803".
Rational parse_decimal(std::string_view text);

/// Graph dump: {"p","q","path","open_degrees","collapsed"} plus
/// "distribution" on request, all numerics as decimal strings so unbounded
/// integers survive the trip. Distribution values are unreduced "count/q".
std::string graph_json(const HarosGraph& g, bool with_distribution);

/// Entropy-curve CSV. Base columns p,q,x,S; H and the mean columns join on
/// request. x carries 17 significant digits; p,q are exact integer strings.
void write_entropy_csv(std::ostream& out, std::span<const EntropySample> samples,
                       bool with_reduced, bool with_means);

}  // namespace haros

#endif  // HAROS_IO_HPP
