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

#ifndef HAROS_SWEEP_HPP
#define HAROS_SWEEP_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "haros/graph.hpp"

namespace haros {

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t limit)
      : std::runtime_error("work budget exceeded: needs " + std::to_string(required) +
                           " constructed nodes, budget is " + std::to_string(limit) +
                           " (raise it with --budget)"),
        required_(required) {}
  std::uint64_t required() const { return required_; }

 private:
  std::uint64_t required_;
};

/// Work accounting in constructed nodes (sum of q over built graphs);
/// build cost is linear in q, so this is the natural unit.
struct NodeBudget {
  std::uint64_t limit = 1'000'000'000;
  std::uint64_t used = 0;

  void charge(std::uint64_t nodes) {
    used += nodes;
    if (used > limit) throw BudgetExceeded(used, limit);
  }
  void require(std::uint64_t nodes) const {
    if (used + nodes > limit) throw BudgetExceeded(used + nodes, limit);
  }
};

/// Total nodes needed to visit every interior graph of F_n (sum of q * phi(q)).
std::uint64_t farey_sweep_nodes(unsigned order);

/// Number of interior fractions of F_n.
std::uint64_t farey_interior_count(unsigned order);

namespace detail {

template <typename Fn>
void farey_dfs(const HarosGraph& left, const HarosGraph& node, const HarosGraph& right,
               unsigned max_q, NodeBudget& budget, Fn&& fn) {
  const BigInt left_child_q = den(left.label) + den(node.label);
  if (left_child_q <= max_q) {
    HarosGraph child = concat(left, node);
    budget.charge(child.q());
    farey_dfs(left, child, node, max_q, budget, fn);
  }
  fn(node);
  const BigInt right_child_q = den(node.label) + den(right.label);
  if (right_child_q <= max_q) {
    HarosGraph child = concat(node, right);
    budget.charge(child.q());
    farey_dfs(node, child, right, max_q, budget, fn);
  }
}

}  // namespace detail

/// Visits the Haros graph of every interior fraction of F_max_q exactly
/// once, in ascending label order. Ancestor graphs are shared down the
/// descent, so the whole sweep costs O(sum of q) node operations.
template <typename Fn>
void for_each_farey_graph(unsigned max_q, NodeBudget& budget, Fn&& fn) {
  if (max_q < 2) return;
  HarosGraph left = atom();
  HarosGraph right = atom();
  right.label = Rational(1);
  HarosGraph root = concat(left, right);  // G_{1/2}
  budget.charge(root.q());
  detail::farey_dfs(left, root, right, max_q, budget, fn);
}

/// Visits every path of length <= max_len (all of them starting with L,
/// plus the empty root path), depth-first, together with its graph and the
/// two graphs whose concatenation produced it. For the root the visitor
/// receives the atom as both ancestors.
template <typename Fn>
void for_each_path_graph(unsigned max_len, NodeBudget& budget, Fn&& fn) {
  struct Walker {
    unsigned max_len;
    NodeBudget& budget;
    Fn& fn;
    void descend(const FareyPath& path, const HarosGraph& left, const HarosGraph& node,
                 const HarosGraph& right) {
      fn(path, left, node, right);
      if (path.size() == max_len) return;
      {
        HarosGraph child = concat(left, node);
        budget.charge(child.q());
        descend(path.appended('L'), left, child, node);
      }
      {
        HarosGraph child = concat(node, right);
        budget.charge(child.q());
        descend(path.appended('R'), node, child, right);
      }
    }
  };
  HarosGraph left = atom();
  HarosGraph right = atom();
  right.label = Rational(1);
  HarosGraph root_node = right;  // 1/1
  Walker walker{max_len, budget, fn};
  fn(FareyPath{}, left, root_node, right);
  if (max_len == 0) return;
  HarosGraph child = concat(left, root_node);
  budget.charge(child.q());
  walker.descend(FareyPath("L"), left, child, right);
}

}  // namespace haros

#endif  // HAROS_SWEEP_HPP
