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

#include <vector>

namespace pbnphi {

/// Bits of x at the positions in A, compacted so the lowest node id of A is
/// the least significant bit. Throws ValidationError for an empty mask.
StateIndex project_state(StateIndex x, SubsetMask A);

/// Inverse direction of project_state: places the bits of a sub-state of A
/// back at A's positions, all other bits zero.
StateIndex embed_state(StateIndex sub, SubsetMask A);

/// project_state for every full state 0..dim-1.
std::vector<StateIndex> projection_table(Eigen::Index dim, SubsetMask A);

/// q(a) = sum over x with pi_A(x) = a of p(x).
Distribution marginal_distribution(const Distribution& p, SubsetMask A);

/// Joint p(A_t = a_j, A_{t+1} = a_h) as a 2^|A| x 2^|A| matrix, rows indexed by
/// the earlier sub-state, built from the full distribution `p` at the earlier
/// instant.
Matrix subset_joint(const TransitionMatrix& S, const Distribution& p, SubsetMask A);

/// Restriction of a joint over V (as returned by subset_joint) to A, a subset of V.
Matrix restrict_joint(const Matrix& joint, SubsetMask V, SubsetMask A);

/// ^A s_ij = p(A_{t+1} = a_j | A_t = a_i), conditioned on the full
/// distribution p_t at instant t. Zero-mass sub-states give undefined rows.
ConditionalMatrix subset_transition_matrix(const TransitionMatrix& S, const Distribution& p_t,
                                           SubsetMask A);

/// ^A b_hj(t) = p(A_{t-1} = a_j | A_t = a_h), built from the full
/// distribution p_prev at t-1. Zero-mass sub-states give undefined rows.
ConditionalMatrix subset_backward_matrix(const TransitionMatrix& S, const Distribution& p_prev,
                                         SubsetMask A);

/// Backward matrix read off a joint (rows = earlier sub-state).
ConditionalMatrix backward_from_joint(const Matrix& joint);

}  // namespace pbnphi
