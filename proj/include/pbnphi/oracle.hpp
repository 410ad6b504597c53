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

#include <vector>

namespace pbnphi::oracle {

/// Largest n * (t + 1) the trajectory enumeration accepts.
inline constexpr int kMaxTrajectoryBits = 24;

/// p(X_{t-1} = x_j, X_t = x_i), built by enumerating every trajectory
/// x_0 ... x_t weighted by p0(x_0) and per-node step probabilities.
struct JointTable {
  int n = 0;
  int time = 0;
  /// mass[j * 2^n + i] = p(X_{t-1} = x_j, X_t = x_i)
  std::vector<double> mass;

  double at(StateIndex previous, StateIndex current) const {
    return mass[(static_cast<std::size_t>(previous) << n) + current];
  }
};

/// Throws SizeCapError when n * (t + 1) exceeds kMaxTrajectoryBits.
JointTable joint(const ValidatedNetwork& net, const std::vector<double>& p0, int t);

/// p(X_t = x) from the joint's column sums.
std::vector<double> current_distribution(const JointTable& table);
/// p(X_{t-1} = x) from the joint's row sums.
std::vector<double> previous_distribution(const JointTable& table);

/// ei(t, x) from joint conditionals. Throws ComputationError when p(X_t = x) = 0.
double ei(const JointTable& table, StateIndex x);

/// ei(t, A, a) with a the sub-state of A; `mask` uses node k at bit k-1.
double subset_ei(const JointTable& table, std::uint32_t mask, StateIndex sub_state);

/// ei(V) - sum_k ei(M_k) for a full state x.
double phi(const JointTable& table, std::uint32_t V, const std::vector<std::uint32_t>& parts,
           StateIndex x);

}  // namespace pbnphi::oracle
