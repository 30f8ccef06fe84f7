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

#include "haros/farey.hpp"

#include <stdexcept>
#include <utility>

namespace haros {

BigInt fibonacci(std::uint64_t n) {
  BigInt a = 1, b = 1;  // F(0), F(1)
  for (std::uint64_t i = 0; i < n; ++i) {
    a = std::exchange(b, a + b);
  }
  return a;
}

FareyPath::FareyPath(std::string_view symbols) : symbols_(symbols) {
  for (char c : symbols_) {
    if (c != 'L' && c != 'R') {
      throw std::invalid_argument("path symbols must be 'L' or 'R', got '" +
                                  std::string(1, c) + "'");
    }
  }
  if (!symbols_.empty() && symbols_.front() != 'L') {
    throw std::invalid_argument("a nonempty path must start with L");
  }
}

FareyPath FareyPath::zigzag(std::size_t length) {
  std::string s;
  s.reserve(length);
  for (std::size_t i = 0; i < length; ++i) s.push_back(i % 2 == 0 ? 'L' : 'R');
  return FareyPath(s);
}

FareyPath FareyPath::appended(char symbol) const {
  FareyPath out;
  out.symbols_ = symbols_;
  out.symbols_.push_back(symbol);
  if (out.symbols_.front() != 'L' || (symbol != 'L' && symbol != 'R')) {
    throw std::invalid_argument("invalid path extension");
  }
  return out;
}

Rational mediant(const Rational& a, const Rational& b) {
  return Rational(num(a) + num(b), den(a) + den(b));
}

bool farey_neighbours(const Rational& a, const Rational& b) {
  BigInt det = num(a) * den(b) - num(b) * den(a);
  return det == 1 || det == -1;
}

std::vector<Rational> farey_sequence(unsigned n) {
  if (n == 0) throw std::invalid_argument("Farey sequence order must be >= 1");
  std::vector<Rational> out;
  // Classic neighbour recurrence: from consecutive a/b, c/d the next term
  // is (kc - a)/(kd - b) with k = floor((n + b)/d).
  std::uint64_t a = 0, b = 1, c = 1, d = n;
  out.emplace_back(0);
  while (c <= n) {
    out.emplace_back(BigInt(c), BigInt(d));
    std::uint64_t k = (n + b) / d;
    std::uint64_t c2 = k * c - a, d2 = k * d - b;
    a = c;
    b = d;
    c = c2;
    d = d2;
  }
  return out;
}

namespace {

void collect_level(const Rational& left, const Rational& node, const Rational& right,
                   unsigned depth, std::vector<Rational>& out) {
  if (depth == 0) {
    out.push_back(node);
    return;
  }
  collect_level(left, mediant(left, node), node, depth - 1, out);
  collect_level(node, mediant(node, right), right, depth - 1, out);
}

}  // namespace

std::vector<Rational> tree_level(unsigned n, unsigned level_cap) {
  if (n == 0) throw std::invalid_argument("tree level must be >= 1");
  if (n > level_cap) {
    throw std::invalid_argument("tree level " + std::to_string(n) +
                                " exceeds the cap of " + std::to_string(level_cap) +
                                "; descend lazily instead of materializing levels");
  }
  if (n == 1) return {Rational(0), Rational(1)};
  std::vector<Rational> out;
  if (n >= 3) out.reserve(std::size_t(1) << (n - 2));
  collect_level(Rational(0), Rational(1, 2), Rational(1), n - 2, out);
  return out;
}

Rational path_to_rational(const FareyPath& path) {
  Rational left(0), node(1), right(1);
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] == 'L') {
      right = node;
      node = mediant(left, node);
    } else {
      left = node;
      node = mediant(node, right);
    }
  }
  return node;
}

FareyPath rational_to_path(const Rational& x) {
  if (!is_interior(x)) {
    throw std::invalid_argument("no finite proper path for " + x.str());
  }
  std::string symbols;
  Rational left(0), node(1, 2), right(1);
  symbols.push_back('L');  // first step 1/1 -> 1/2
  while (node != x) {
    if (x < node) {
      symbols.push_back('L');
      right = node;
      node = mediant(left, node);
    } else {
      symbols.push_back('R');
      left = node;
      node = mediant(node, right);
    }
  }
  return FareyPath(symbols);
}

}  // namespace haros
