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

#include "pbnphi/network.hpp"

#include "pbnphi/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace pbnphi {

SubsetMask SubsetMask::of(std::initializer_list<int> node_ids) {
  return of(std::span<const int>(node_ids.begin(), node_ids.size()));
}

SubsetMask SubsetMask::of(std::span<const int> node_ids) {
  std::uint32_t bits = 0;
  for (int id : node_ids) {
    if (id < 1 || id > 32) throw ValidationError("node id " + std::to_string(id) + " out of range");
    bits |= 1u << (id - 1);
  }
  return SubsetMask(bits);
}

int SubsetMask::size() const noexcept { return std::popcount(bits_); }

int SubsetMask::lowest() const noexcept { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

std::vector<int> SubsetMask::nodes() const {
  std::vector<int> ids;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) ids.push_back(std::countr_zero(b) + 1);
  return ids;
}

std::string SubsetMask::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int id : nodes()) {
    if (!first) s += ',';
    s += std::to_string(id);
    first = false;
  }
  return s + "}";
}

StateIndex encode_state(std::span<const int> node_values) {
  StateIndex x = 0;
  for (std::size_t k = 0; k < node_values.size(); ++k) {
    if (node_values[k] != 0) x |= StateIndex{1} << k;
  }
  return x;
}

std::vector<int> decode_state(StateIndex x, int n) {
  std::vector<int> values(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) values[static_cast<std::size_t>(k)] = static_cast<int>((x >> k) & 1u);
  return values;
}

void check_distribution(const Distribution& p, Eigen::Index size, const char* what) {
  if (p.size() != size) {
    throw ValidationError(std::string(what) + ": expected " + std::to_string(size) +
                          " entries, got " + std::to_string(p.size()));
  }
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (!std::isfinite(p(i)) || p(i) < 0.0) {
      throw ValidationError(std::string(what) + ": entry " + std::to_string(i) +
                            " is negative or not finite");
    }
  }
  if (std::abs(p.sum() - 1.0) > kSumTolerance) {
    std::ostringstream os;
    os << what << ": entries sum to " << p.sum() << ", not 1";
    throw ValidationError(os.str());
  }
}

Distribution ConditionalMatrix::row(Eigen::Index i) const {
  if (!is_defined(i)) {
    throw ComputationError("row " + std::to_string(i) + " is undefined (zero conditioning mass)");
  }
  return values.row(i);
}

std::string ValidatedNetwork::name(int node_id) const {
  const auto idx = static_cast<std::size_t>(node_id - 1);
  if (idx < names_.size() && !names_[idx].empty()) return names_[idx];
  return std::to_string(node_id);
}

double ValidatedNetwork::activation(int node_id, StateIndex x) const {
  const NodeLaw& law = this->law(node_id);
  std::size_t config = 0;
  for (std::size_t b = 0; b < law.inputs.size(); ++b) {
    config |= static_cast<std::size_t>(node_value(x, law.inputs[b])) << b;
  }
  return law.table[config];
}

ValidatedNetwork validate_network(const Network& net, int max_nodes) {
  const int n = static_cast<int>(net.laws.size());
  if (n == 0) throw ValidationError("network has no nodes");
  if (n > max_nodes) {
    throw SizeCapError("network has " + std::to_string(n) + " nodes; the limit is " +
                       std::to_string(max_nodes));
  }
  if (!net.names.empty() && net.names.size() != net.laws.size()) {
    throw ValidationError("network declares " + std::to_string(net.names.size()) +
                          " names for " + std::to_string(n) + " nodes");
  }

  std::vector<const NodeLaw*> by_id(static_cast<std::size_t>(n), nullptr);
  for (const NodeLaw& law : net.laws) {
    if (law.node_id < 1 || law.node_id > n) {
      throw ValidationError("node " + std::to_string(law.node_id) + ": id outside 1.." +
                            std::to_string(n));
    }
    auto& slot = by_id[static_cast<std::size_t>(law.node_id - 1)];
    if (slot != nullptr) throw ValidationError("node " + std::to_string(law.node_id) + ": duplicate id");
    slot = &law;
  }

  ValidatedNetwork out;
  for (const NodeLaw* law : by_id) {
    const std::string where = "node " + std::to_string(law->node_id);
    for (int input : law->inputs) {
      if (input < 1 || input > n) {
        throw ValidationError(where + ": inputs reference missing node " + std::to_string(input));
      }
    }
    if (law->inputs.size() >= 31) throw SizeCapError(where + ": too many inputs");
    const std::size_t expected = std::size_t{1} << law->inputs.size();
    if (law->table.size() != expected) {
      throw ValidationError(where + ": table has " + std::to_string(law->table.size()) +
                            " entries, expected 2^" + std::to_string(law->inputs.size()) + " = " +
                            std::to_string(expected));
    }
    for (std::size_t c = 0; c < law->table.size(); ++c) {
      const double r = law->table[c];
      if (!(r >= 0.0 && r <= 1.0)) {
        std::ostringstream os;
        os << where << ": table[" << c << "] = " << r << " is not a probability in [0,1]";
        throw ValidationError(os.str());
      }
    }
    out.laws_.push_back(*law);
    for (int input : law->inputs) out.edges_.emplace_back(input, law->node_id);
  }
  std::sort(out.edges_.begin(), out.edges_.end());
  out.edges_.erase(std::unique(out.edges_.begin(), out.edges_.end()), out.edges_.end());
  out.names_ = net.names;
  return out;
}

namespace {

void check_permutation(std::span<const int> new_id) {
  std::vector<bool> seen(new_id.size(), false);
  for (int id : new_id) {
    if (id < 1 || static_cast<std::size_t>(id) > new_id.size() || seen[static_cast<std::size_t>(id - 1)]) {
      throw ValidationError("relabeling is not a permutation of 1.." + std::to_string(new_id.size()));
    }
    seen[static_cast<std::size_t>(id - 1)] = true;
  }
}

}  // namespace

Network relabel_nodes(const Network& net, std::span<const int> new_id) {
  check_permutation(new_id);
  Network out;
  out.laws.resize(net.laws.size());
  if (!net.names.empty()) out.names.resize(net.names.size());
  for (std::size_t k = 0; k < net.laws.size(); ++k) {
    const NodeLaw& law = net.laws[k];
    if (law.node_id < 1 || static_cast<std::size_t>(law.node_id) > new_id.size()) {
      throw ValidationError("relabeling: node id " + std::to_string(law.node_id) + " out of range");
    }
    const int target = new_id[static_cast<std::size_t>(law.node_id - 1)];
    NodeLaw moved = law;
    moved.node_id = target;
    for (int& input : moved.inputs) input = new_id[static_cast<std::size_t>(input - 1)];
    out.laws[static_cast<std::size_t>(target - 1)] = std::move(moved);
    if (!net.names.empty()) {
      out.names[static_cast<std::size_t>(target - 1)] = net.names[static_cast<std::size_t>(law.node_id - 1)];
    }
  }
  return out;
}

StateIndex relabel_state(StateIndex x, std::span<const int> new_id) {
  check_permutation(new_id);
  StateIndex y = 0;
  for (std::size_t k = 0; k < new_id.size(); ++k) {
    if ((x >> k) & 1u) y |= StateIndex{1} << (new_id[k] - 1);
  }
  return y;
}

SubsetMask relabel_subset(SubsetMask mask, std::span<const int> new_id) {
  return SubsetMask(relabel_state(mask.bits(), new_id));
}

}  // namespace pbnphi
