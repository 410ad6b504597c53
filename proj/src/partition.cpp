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

#include "pbnphi/partition.hpp"

#include "pbnphi/error.hpp"

#include <algorithm>

namespace pbnphi {

Partition::Partition(SubsetMask target, std::vector<SubsetMask> parts)
    : target_(target), parts_(std::move(parts)) {
  if (parts_.size() < 2) throw ValidationError("partition of " + target.to_string() + " needs at least two parts");
  SubsetMask covered;
  for (SubsetMask part : parts_) {
    if (part.empty()) throw ValidationError("partition of " + target.to_string() + " has an empty part");
    if (!(part & covered).empty()) {
      throw ValidationError("partition of " + target.to_string() + ": parts overlap on " +
                            (part & covered).to_string());
    }
    covered = covered | part;
  }
  if (covered != target) {
    throw ValidationError("partition parts cover " + covered.to_string() + ", not " + target.to_string());
  }
  std::sort(parts_.begin(), parts_.end(),
            [](SubsetMask a, SubsetMask b) { return a.lowest() < b.lowest(); });
}

std::string Partition::to_string() const {
  std::string s = "{";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k > 0) s += ',';
    s += parts_[k].to_string();
  }
  return s + "}";
}

std::vector<Partition> enumerate_bipartitions(SubsetMask V) {
  const std::vector<int> nodes = V.nodes();
  if (nodes.size() < 2) throw ValidationError("bipartitions need at least two nodes, got " + V.to_string());
  const std::size_t rest = nodes.size() - 1;
  std::vector<Partition> out;
  out.reserve((std::size_t{1} << rest) - 1);
  for (std::uint32_t pick = 1; pick < (std::uint32_t{1} << rest); ++pick) {
    SubsetMask second;
    for (std::size_t b = 0; b < rest; ++b) {
      if ((pick >> b) & 1u) second = second | SubsetMask::of({nodes[b + 1]});
    }
    out.emplace_back(V, std::vector<SubsetMask>{V - second, second});
  }
  return out;
}

std::vector<Partition> enumerate_partitions(SubsetMask V) {
  const std::vector<int> nodes = V.nodes();
  const std::size_t size = nodes.size();
  if (size < 2) throw ValidationError("partitions need at least two nodes, got " + V.to_string());

  // Restricted growth strings: block[0] = 0, block[i] <= max(block[0..i-1]) + 1.
  std::vector<int> block(size, 0);
  std::vector<Partition> out;
  while (true) {
    const int blocks = *std::max_element(block.begin(), block.end()) + 1;
    if (blocks >= 2) {
      std::vector<SubsetMask> parts(static_cast<std::size_t>(blocks));
      for (std::size_t i = 0; i < size; ++i) {
        auto& part = parts[static_cast<std::size_t>(block[i])];
        part = part | SubsetMask::of({nodes[i]});
      }
      out.emplace_back(V, std::move(parts));
    }
    // Advance to the next string in lexicographic order.
    std::size_t i = size - 1;
    while (i > 0) {
      const int prefix_max = *std::max_element(block.begin(), block.begin() + static_cast<std::ptrdiff_t>(i));
      if (block[i] <= prefix_max) {
        ++block[i];
        std::fill(block.begin() + static_cast<std::ptrdiff_t>(i) + 1, block.end(), 0);
        break;
      }
      --i;
    }
    if (i == 0) break;
  }
  return out;
}

}  // namespace pbnphi
