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

#include "haros/graph.hpp"

#include <stdexcept>

namespace haros {

Rational DegreeDistribution::at(Degree k) const {
  auto it = counts.find(k);
  if (it == counts.end()) return Rational(0);
  return Rational(it->second, node_count);
}

double DegreeDistribution::at_double(Degree k) const { return to_double(at(k)); }

HarosGraph atom() { return HarosGraph{Rational(0), {1, 1}}; }

HarosGraph concat(const HarosGraph& left, const HarosGraph& right) {
  if (!farey_neighbours(left.label, right.label)) {
    throw std::invalid_argument("concat requires Farey-neighbour operands, got " +
                                left.label.str() + " and " + right.label.str());
  }
  HarosGraph out;
  out.label = mediant(left.label, right.label);
  out.open_degrees.reserve(left.open_degrees.size() + right.open_degrees.size() - 1);
  out.open_degrees.insert(out.open_degrees.end(), left.open_degrees.begin(),
                          left.open_degrees.end());
  out.open_degrees.back() += right.open_degrees.front();  // merging node
  out.open_degrees.insert(out.open_degrees.end(), right.open_degrees.begin() + 1,
                          right.open_degrees.end());
  out.open_degrees.front() += 1;  // closing edge
  out.open_degrees.back() += 1;
  return out;
}

HarosGraph build(const FareyPath& path) {
  HarosGraph left = atom();
  HarosGraph node = atom();
  node.label = Rational(1);
  HarosGraph right = node;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] == 'L') {
      right = node;
      node = concat(left, node);
    } else {
      left = node;
      node = concat(node, right);
    }
  }
  return node;
}

CollapsedSequence collapse(const HarosGraph& g) {
  CollapsedSequence out;
  out.reserve(g.q());
  out.assign(g.open_degrees.begin() + 1, g.open_degrees.end() - 1);
  out.push_back(g.open_degrees.front() + g.open_degrees.back());
  return out;
}

DegreeDistribution degree_distribution(const HarosGraph& g) {
  DegreeDistribution dist;
  dist.node_count = g.q();
  for (std::size_t i = 1; i + 1 < g.open_degrees.size(); ++i) {
    dist.counts[g.open_degrees[i]] += 1;
  }
  dist.counts[g.open_degrees.front() + g.open_degrees.back()] += 1;
  return dist;
}

BigInt degree_count(const HarosGraph& g, Degree k) {
  if (k < 2) throw std::invalid_argument("collapsed degrees start at 2");
  BigInt count = 0;
  for (std::size_t i = 1; i + 1 < g.open_degrees.size(); ++i) {
    if (g.open_degrees[i] == k) ++count;
  }
  if (g.open_degrees.front() + g.open_degrees.back() == k) ++count;
  return count;
}

GraphTally GraphTally::atom() {
  GraphTally t;
  t.label = Rational(0);
  t.open_counts[1] = 2;
  return t;
}

GraphTally concat(const GraphTally& left, const GraphTally& right) {
  if (!farey_neighbours(left.label, right.label)) {
    throw std::invalid_argument("concat requires Farey-neighbour operands");
  }
  GraphTally out;
  out.label = mediant(left.label, right.label);
  out.open_nodes = left.open_nodes + right.open_nodes - 1;
  out.open_counts = left.open_counts;
  for (const auto& [k, c] : right.open_counts) out.open_counts[k] += c;

  auto take = [&out](Degree k) {
    auto it = out.open_counts.find(k);
    it->second -= 1;
    if (it->second == 0) out.open_counts.erase(it);
  };
  auto put = [&out](Degree k) { out.open_counts[k] += 1; };

  // Merge, then close: same moves as on the explicit sequence.
  take(left.last);
  take(right.first);
  put(left.last + right.first);
  out.first = left.first + 1;
  out.last = right.last + 1;
  take(left.first);
  put(out.first);
  take(right.last);
  put(out.last);
  return out;
}

GraphTally build_tally(const FareyPath& path) {
  GraphTally left = GraphTally::atom();
  GraphTally node = GraphTally::atom();
  node.label = Rational(1);
  GraphTally right = node;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] == 'L') {
      right = node;
      node = concat(left, node);
    } else {
      left = node;
      node = concat(node, right);
    }
  }
  return node;
}

DegreeDistribution degree_distribution(const GraphTally& g) {
  DegreeDistribution dist;
  dist.node_count = g.open_nodes - 1;
  dist.counts = g.open_counts;
  auto take = [&dist](Degree k) {
    auto it = dist.counts.find(k);
    it->second -= 1;
    if (it->second == 0) dist.counts.erase(it);
  };
  take(g.first);
  take(g.last);
  dist.counts[g.first + g.last] += 1;
  return dist;
}

}  // namespace haros
