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

#ifndef HAROS_FAREY_HPP
#define HAROS_FAREY_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "haros/numeric.hpp"

namespace haros {

/// Left/right descent through the Farey binary tree, serialized as an
/// uppercase "LR..." string. The empty path names the root 1/1; every
/// nonempty path starts with L because paths begin at 1/1 and the first
/// mediant step can only go left.
class FareyPath {
 public:
  FareyPath() = default;
  explicit FareyPath(std::string_view symbols);

  static FareyPath zigzag(std::size_t length);  // LRLR..., the golden descent

  bool empty() const { return symbols_.empty(); }
  std::size_t size() const { return symbols_.size(); }
  char operator[](std::size_t i) const { return symbols_[i]; }
  const std::string& str() const { return symbols_; }

  FareyPath appended(char symbol) const;

  friend bool operator==(const FareyPath&, const FareyPath&) = default;

 private:
  std::string symbols_;
};

/// Mediant sum (p+p')/(q+q'), reduced. For Farey neighbours the raw sum is
/// already irreducible.
Rational mediant(const Rational& a, const Rational& b);

/// Determinant test |p q' - p' q| == 1 for adjacency in a Farey sequence.
bool farey_neighbours(const Rational& a, const Rational& b);

/// Ascending Farey sequence of order n, endpoints 0/1 and 1/1 included.
std::vector<Rational> farey_sequence(unsigned n);

/// Level n of the Farey binary tree in ascending order. Levels hold
/// 2^(n-2) fractions for n >= 3, so a cap guards against runaway requests;
/// deeper navigation should descend lazily instead of materializing levels.
std::vector<Rational> tree_level(unsigned n, unsigned level_cap = 30);

/// Value reached by descending the tree from 1/1 along the path.
Rational path_to_rational(const FareyPath& path);

/// Inverse of path_to_rational; defined for 0 < x < 1 only (the endpoints
/// have no finite proper path).
FareyPath rational_to_path(const Rational& x);

}  // namespace haros

#endif  // HAROS_FAREY_HPP
