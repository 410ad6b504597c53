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

namespace pbnphi {

/// s_ij = prod_k rho_k, where rho_k is r_k(inputs of x_i) if node k is 1 in
/// x_j and 1 - r_k otherwise. Rows may be filled by `threads` workers; the
/// result does not depend on the thread count.
TransitionMatrix build_transition_matrix(const ValidatedNetwork& net, int threads = 1);

/// p * S. Throws ValidationError on a dimension mismatch.
Distribution evolve_distribution(const Distribution& p, const TransitionMatrix& S);

/// p0 * S^t, evaluated step by step.
Distribution distribution_at(const TransitionMatrix& S, const Distribution& p0, int t);
Distribution distribution_at(const ValidatedNetwork& net, const Distribution& p0, int t);

struct StationaryOptions {
  double tol = 1e-12;
  long max_iter = 1'000'000;
};

/// A distribution p with ||p - p S||_1 <= tol.
///
/// Iterates the lazy chain (I + S) / 2 from the uniform start. Its limit is the
/// Cesaro limit of the plain chain from the same start, so periodic chains
/// converge too. Throws ComputationError (with the residual) on
/// non-convergence.
Distribution stationary_distribution(const TransitionMatrix& S, const StationaryOptions& options = {});

/// Bayes inversion of S against the previous-instant distribution:
/// b_ij = p_prev(j) s_ji / (p_prev . S^i). Row i is undefined when its
/// denominator is zero.
BackwardMatrix backward_matrix(const TransitionMatrix& S, const Distribution& p_prev);

/// Uniform-prior form b_ij = s_ji / sum_k s_ki; row i undefined iff column i of S is zero.
BackwardMatrix backward_matrix_uniform(const TransitionMatrix& S);

/// Number of nodes n for a 2^n-dimensional state space.
int node_count_for_dim(Eigen::Index dim);

}  // namespace pbnphi
