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

#include <Eigen/Dense>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pbnphi {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <typename Scalar>
using RowVectorX = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using Matrix = MatrixX<double>;
/// Probability vector over 2^m states, stored as a row so that evolution is `p * S`.
using Distribution = RowVectorX<double>;
/// Row-stochastic, row i = p(X_{t+1} | X_t = x_i). Time-constant.
using TransitionMatrix = Matrix;

/// Network state. Node k lives at bit k-1, so node 1 is the least significant bit.
using StateIndex = std::uint32_t;

inline constexpr double kSumTolerance = 1e-9;

/// Set of node ids, node k at bit k-1.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint32_t bits) : bits_(bits) {}

  static SubsetMask of(std::initializer_list<int> node_ids);
  static SubsetMask of(std::span<const int> node_ids);
  static constexpr SubsetMask full(int n) {
    return SubsetMask(n >= 32 ? ~0u : ((1u << n) - 1u));
  }

  constexpr std::uint32_t bits() const noexcept { return bits_; }
  int size() const noexcept;
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(int node_id) const noexcept {
    return node_id >= 1 && node_id <= 32 && ((bits_ >> (node_id - 1)) & 1u) != 0;
  }
  constexpr bool is_subset_of(SubsetMask other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  /// Lowest contained node id, 0 when empty.
  int lowest() const noexcept;
  /// Contained node ids in increasing order.
  std::vector<int> nodes() const;
  /// "{1,3}"
  std::string to_string() const;

  friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) {
    return SubsetMask(a.bits_ | b.bits_);
  }
  friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) {
    return SubsetMask(a.bits_ & b.bits_);
  }
  /// Set difference.
  friend constexpr SubsetMask operator-(SubsetMask a, SubsetMask b) {
    return SubsetMask(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(SubsetMask, SubsetMask) = default;
  friend constexpr auto operator<=>(SubsetMask, SubsetMask) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Bit vector (index k-1 holds node k) to state index.
StateIndex encode_state(std::span<const int> node_values);
std::vector<int> decode_state(StateIndex x, int n);

constexpr int node_value(StateIndex x, int node_id) noexcept {
  return static_cast<int>((x >> (node_id - 1)) & 1u);
}

/// Throws ValidationError unless p has `size` non-negative entries summing to 1.
void check_distribution(const Distribution& p, Eigen::Index size, const char* what = "distribution");

inline Distribution uniform_distribution(Eigen::Index size) {
  return Distribution::Constant(size, 1.0 / static_cast<double>(size));
}

inline Distribution point_distribution(Eigen::Index size, StateIndex x) {
  Distribution p = Distribution::Zero(size);
  p(x) = 1.0;
  return p;
}

/// Stochastic matrix whose rows may be undefined (zero conditioning mass).
/// Used for backward matrices and for subset dynamics.
struct ConditionalMatrix {
  Matrix values;               // undefined rows hold zeros
  std::vector<bool> defined;   // one flag per row
  Distribution conditioning;   // prior p_{t-1} (backward) or p_t (subset forward)
  std::optional<int> time;

  Eigen::Index dim() const noexcept { return values.rows(); }
  bool is_defined(Eigen::Index row) const { return defined.at(static_cast<std::size_t>(row)); }
  /// Throws ComputationError on an undefined row.
  Distribution row(Eigen::Index i) const;
};

/// B(t): row i = p(X_{t-1} | X_t = x_i).
using BackwardMatrix = ConditionalMatrix;

}  // namespace pbnphi
