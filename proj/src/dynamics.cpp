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

#include "pbnphi/dynamics.hpp"

#include "pbnphi/error.hpp"
#include "pbnphi/parallel.hpp"

#include <bit>
#include <sstream>

namespace pbnphi {

int node_count_for_dim(Eigen::Index dim) {
  if (dim < 2 || !std::has_single_bit(static_cast<unsigned long long>(dim))) {
    throw ValidationError("state space size " + std::to_string(dim) + " is not 2^n with n >= 1");
  }
  return std::countr_zero(static_cast<unsigned long long>(dim));
}

TransitionMatrix build_transition_matrix(const ValidatedNetwork& net, int threads) {
  const int n = net.size();
  const Eigen::Index dim = net.state_count();
  TransitionMatrix S(dim, dim);
  parallel_for(static_cast<std::size_t>(dim), threads, [&](std::size_t i) {
    const auto x = static_cast<StateIndex>(i);
    // Extend the product one node at a time; node k becomes bit k-1 of j.
    Distribution row(dim);
    row(0) = 1.0;
    Eigen::Index filled = 1;
    for (int k = 1; k <= n; ++k) {
      const double r = net.activation(k, x);
      row.segment(filled, filled) = row.head(filled) * r;
      row.head(filled) *= (1.0 - r);
      filled *= 2;
    }
    S.row(static_cast<Eigen::Index>(i)) = row;
  });
  return S;
}

Distribution evolve_distribution(const Distribution& p, const TransitionMatrix& S) {
  if (S.rows() != S.cols() || p.size() != S.rows()) {
    throw ValidationError("evolve_distribution: distribution has " + std::to_string(p.size()) +
                          " entries but S is " + std::to_string(S.rows()) + "x" +
                          std::to_string(S.cols()));
  }
  return p * S;
}

Distribution distribution_at(const TransitionMatrix& S, const Distribution& p0, int t) {
  if (t < 0) throw UsageError("instant must be >= 0, got " + std::to_string(t));
  Distribution p = p0;
  for (int step = 0; step < t; ++step) p = evolve_distribution(p, S);
  if (t == 0 && p.size() != S.rows()) {
    throw ValidationError("distribution_at: distribution has " + std::to_string(p.size()) +
                          " entries, expected " + std::to_string(S.rows()));
  }
  return p;
}

Distribution distribution_at(const ValidatedNetwork& net, const Distribution& p0, int t) {
  return distribution_at(build_transition_matrix(net), p0, t);
}

Distribution stationary_distribution(const TransitionMatrix& S, const StationaryOptions& options) {
  if (!(options.tol > 0.0)) throw UsageError("stationary_distribution: tol must be > 0");
  Distribution p = uniform_distribution(S.rows());
  double residual = 0.0;
  for (long iter = 0; iter < options.max_iter; ++iter) {
    const Distribution next = evolve_distribution(p, S);
    residual = (p - next).lpNorm<1>();
    if (residual <= options.tol) return p;
    p = 0.5 * (p + next);
    p /= p.sum();
  }
  std::ostringstream os;
  os << "stationary_distribution: no convergence after " << options.max_iter
     << " iterations (residual " << residual << ")";
  throw ComputationError(os.str());
}

namespace {

// Scales the rows of `unnormalized` by 1 / mass, leaving zero-mass rows undefined.
ConditionalMatrix normalize_rows(Matrix unnormalized, const Distribution& mass, Distribution conditioning) {
  ConditionalMatrix out;
  out.defined.assign(static_cast<std::size_t>(unnormalized.rows()), false);
  for (Eigen::Index i = 0; i < unnormalized.rows(); ++i) {
    if (mass(i) > 0.0) {
      unnormalized.row(i) /= mass(i);
      out.defined[static_cast<std::size_t>(i)] = true;
    } else {
      unnormalized.row(i).setZero();
    }
  }
  out.values = std::move(unnormalized);
  out.conditioning = std::move(conditioning);
  return out;
}

}  // namespace

BackwardMatrix backward_matrix(const TransitionMatrix& S, const Distribution& p_prev) {
  const Distribution p_now = evolve_distribution(p_prev, S);
  return normalize_rows(S.transpose() * p_prev.asDiagonal(), p_now, p_prev);
}

BackwardMatrix backward_matrix_uniform(const TransitionMatrix& S) {
  const Distribution column_sums = S.colwise().sum();
  return normalize_rows(S.transpose(), column_sums, uniform_distribution(S.rows()));
}

}  // namespace pbnphi
