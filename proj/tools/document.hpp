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

#include "pbnphi/network.hpp"
#include "pbnphi/types.hpp"

#include <string>
#include <string_view>

namespace pbnphi::io {

/// Parses a network document (grammar in docs/network-format.md). Node ids
/// follow declaration order. Throws ValidationError with "line L, column C"
/// for syntax errors and "line L" for validation failures.
Network parse_network(std::string_view document, int max_nodes = kDefaultMaxNodes);

/// Inverse of parse_network. Unnamed nodes are written as n<id>.
std::string serialize_network(const Network& net);

/// Whitespace-separated reals; '#' starts a comment. Must hold `size` entries summing to 1.
Distribution parse_distribution(std::string_view text, Eigen::Index size);

/// State bit string written sigma_n ... sigma_1 (node 1 last).
StateIndex parse_state(std::string_view bits, int n);
std::string format_state(StateIndex x, int n);

/// 64-bit FNV-1a of the serialized network, as "fnv1a64:<16 hex digits>".
std::string network_hash(const Network& net);

std::string read_file(const std::string& path);

}  // namespace pbnphi::io
