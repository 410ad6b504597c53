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

#include <string>
#include <vector>

namespace pbnphi {

/// Split of a target node set into m >= 2 disjoint nonempty parts.
/// Parts are kept sorted by their lowest node id.
class Partition {
 public:
  /// Throws ValidationError unless the parts are nonempty, pairwise disjoint,
  /// at least two, and cover `target` exactly.
  Partition(SubsetMask target, std::vector<SubsetMask> parts);

  SubsetMask target() const noexcept { return target_; }
  const std::vector<SubsetMask>& parts() const noexcept { return parts_; }
  int size() const noexcept { return static_cast<int>(parts_.size()); }
  /// "{{1},{2,3}}"
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  SubsetMask target_;
  std::vector<SubsetMask> parts_;
};

/// The 2^(|V|-1) - 1 two-part partitions of V. The part holding V's lowest
/// node comes first; the order follows the binary count of the other part
/// over V's remaining nodes. Throws ValidationError when |V| < 2.
std::vector<Partition> enumerate_bipartitions(SubsetMask V);

/// Every partition of V into m >= 2 parts, in restricted-growth-string order.
/// The count is Bell(|V|) - 1.
std::vector<Partition> enumerate_partitions(SubsetMask V);

}  // namespace pbnphi
