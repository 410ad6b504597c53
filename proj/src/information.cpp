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

#include "pbnphi/information.hpp"

#include "pbnphi/marginalize.hpp"

namespace pbnphi {

void check_instant(int t, int minimum) {
  if (t < minimum) {
    throw UsageError("instant t must be >= " + std::to_string(minimum) + ", got " + std::to_string(t));
  }
}

namespace {

void check_state(StateIndex x, Eigen::Index dim) {
  if (static_cast<Eigen::Index>(x) >= dim) {
    throw ValidationError("state " + std::to_string(x) + " outside the " + std::to_string(dim) +
                          "-state space");
  }
}

double observed_divergence(const ConditionalMatrix& B, StateIndex x, const Distribution& prior,
                           const char* what) {
  check_state(x, B.dim());
  if (!B.is_defined(x)) {
    throw ComputationError(std::string(what) + ": state " + std::to_string(x) + " is unobservable");
  }
  return kl_divergence(B.values.row(x), prior);
}

}  // namespace

double effective_information(const TransitionMatrix& S, const Distribution& p0, int t, StateIndex x) {
  check_instant(t);
  const Distribution p_prev = distribution_at(S, p0, t - 1);
  BackwardMatrix B = backward_matrix(S, p_prev);
  B.time = t;
  return observed_divergence(B, x, p_prev, "effective_information");
}

double effective_information(const ValidatedNetwork& net, const Distribution& p0, int t, StateIndex x) {
  return effective_information(build_transition_matrix(net), p0, t, x);
}

double effective_information_uniform(const TransitionMatrix& S, StateIndex x) {
  const int n = node_count_for_dim(S.rows());
  const BackwardMatrix B = backward_matrix_uniform(S);
  check_state(x, B.dim());
  if (!B.is_defined(x)) {
    throw ComputationError("effective_information_uniform: state " + std::to_string(x) +
                           " has no predecessor");
  }
  return std::max(0.0, static_cast<double>(n) - entropy(B.values.row(x)));
}

double effective_information_stationary(const TransitionMatrix& S, StateIndex x, const StationaryOptions& options) {
  const Distribution p_inf = stationary_distribution(S, options);
  check_state(x, S.rows());
  if (!(p_inf(x) > 0.0)) {
    throw ComputationError("effective_information_stationary: state " + std::to_string(x) +
                           " has zero stationary mass");
  }
  return observed_divergence(backward_matrix(S, p_inf), x, p_inf, "effective_information_stationary");
}

double subset_effective_information(const TransitionMatrix& S, const Distribution& p0, int t, SubsetMask A,
                                    StateIndex a) {
  check_instant(t);
  const Distribution p_prev = distribution_at(S, p0, t - 1);
  ConditionalMatrix B = subset_backward_matrix(S, p_prev, A);
  B.time = t;
  return observed_divergence(B, a, B.conditioning, "subset_effective_information");
}

double subset_effective_information(const ValidatedNetwork& net, const Distribution& p0, int t, SubsetMask A,
                                    StateIndex a) {
  return subset_effective_information(build_transition_matrix(net), p0, t, A, a);
}

}  // namespace pbnphi
