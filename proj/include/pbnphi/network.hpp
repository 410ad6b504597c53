/*
 * Copyright 2026 The pbnphi Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "pbnphi/types.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pbnphi {

inline constexpr int kDefaultMaxNodes = 12;

/// Probabilistic update law of one node.
///
/// `table[c]` is the probability that the node is 1 at the next instant when
/// its inputs are in configuration `c`. The first-listed input is the least
/// significant bit of `c`. A deterministic law uses only 0 and 1.
struct NodeLaw {
  int node_id = 0;
  std::vector<int> inputs;
  std::vector<double> table;

  friend bool operator==(const NodeLaw&, const NodeLaw&) = default;
};

/// Unchecked network description, e.g. as parsed from a document.
struct Network {
  std::vector<NodeLaw> laws;
  /// Optional display names, indexed by node id - 1.
  std::vector<std::string> names;

  friend bool operator==(const Network&, const Network&) = default;
};

/// A network that satisfied every structural invariant. Laws are ordered by id.
class ValidatedNetwork {
 public:
  int size() const noexcept { return static_cast<int>(laws_.size()); }
  StateIndex state_count() const noexcept { return StateIndex{1} << laws_.size(); }
  const NodeLaw& law(int node_id) const { return laws_.at(static_cast<std::size_t>(node_id - 1)); }
  const std::vector<NodeLaw>& laws() const noexcept { return laws_; }
  /// Edge (u, v) means v reads u. Sorted, duplicates removed.
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::string name(int node_id) const;
  SubsetMask all_nodes() const noexcept { return SubsetMask::full(size()); }
  /// Probability that `node_id` is 1 after one step from state x.
  double activation(int node_id, StateIndex x) const;
  Network network() const { return Network{laws_, names_}; }

 private:
  friend ValidatedNetwork validate_network(const Network& net, int max_nodes);

  std::vector<NodeLaw> laws_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::string> names_;
};

/// Checks ids, input references, table lengths and probability ranges.
/// Throws ValidationError naming the node and field, or SizeCapError when
/// the network has more than `max_nodes` nodes.
ValidatedNetwork validate_network(const Network& net, int max_nodes = kDefaultMaxNodes);

/// Renames node k to `new_id[k - 1]`. `new_id` must be a permutation of 1..n.
Network relabel_nodes(const Network& net, std::span<const int> new_id);

/// State index of x after the same relabeling.
StateIndex relabel_state(StateIndex x, std::span<const int> new_id);

SubsetMask relabel_subset(SubsetMask mask, std::span<const int> new_id);

}  // namespace pbnphi
