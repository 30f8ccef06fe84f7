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

#ifndef HAROS_GRAPH_HPP
#define HAROS_GRAPH_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "haros/continued_fraction.hpp"
#include "haros/farey.hpp"
#include "haros/numeric.hpp"

namespace haros {

/// Haros graph in its open presentation: q+1 nodes, 2q-1 edges. Haros
/// graphs are horizontal visibility graphs and HVGs are unigraphs, so the
/// degree sequence determines the graph completely; no adjacency structure
/// is kept.
struct HarosGraph {
  Rational label;                     // p/q in [0,1]
  std::vector<Degree> open_degrees;   // k_1 .. k_{q+1}

  std::size_t q() const { return open_degrees.size() - 1; }
};

/// q-node presentation: inner nodes k_2..k_q in order, then the boundary
/// node carrying k_1 + k_{q+1}.
using CollapsedSequence = std::vector<Degree>;

/// Exact degree histogram of the collapsed graph: degree -> node count,
/// probabilities count/q.
struct DegreeDistribution {
  std::map<Degree, BigInt> counts;
  BigInt node_count;  // q

  /// P(k): exact probability, zero when the degree is absent.
  Rational at(Degree k) const;
  double at_double(Degree k) const;
  Degree max_degree() const { return counts.empty() ? 0 : counts.rbegin()->first; }
};

/// The oldest ancestor: two nodes joined by one edge, labelled 0/1 (and
/// standing in for 1/1 as well).
HarosGraph atom();

/// Concatenation: merge the last node of `left` with the first node of
/// `right`, then close the result with one extra edge between the new
/// extremes. Labels combine by mediant; inputs must be Farey neighbours.
HarosGraph concat(const HarosGraph& left, const HarosGraph& right);

/// Graph reached by mirroring the Farey-tree descent with concatenations.
/// Runs in time linear in the total nodes constructed along the path.
HarosGraph build(const FareyPath& path);

CollapsedSequence collapse(const HarosGraph& g);

DegreeDistribution degree_distribution(const HarosGraph& g);

/// Multiplicity of degree k in the collapsed sequence.
BigInt degree_count(const HarosGraph& g, Degree k);

/// Tallied presentation of a Haros graph: the degree histogram plus the
/// two extreme degrees, enough to keep concatenating without storing the
/// sequence. Node counts are exact, so convergents whose denominators dwarf
/// memory (metallic ratios at depth 40 have q ~ 1e15) still tally fine.
struct GraphTally {
  Rational label;
  Degree first = 1;
  Degree last = 1;
  std::map<Degree, BigInt> open_counts;
  BigInt open_nodes = 2;

  static GraphTally atom();
};

GraphTally concat(const GraphTally& left, const GraphTally& right);
GraphTally build_tally(const FareyPath& path);

/// Collapsed exact distribution straight from a tally.
DegreeDistribution degree_distribution(const GraphTally& g);

}  // namespace haros

#endif  // HAROS_GRAPH_HPP
