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

#include "pbnphi/dynamics.hpp"
#include "pbnphi/error.hpp"
#include "pbnphi/network.hpp"
#include "pbnphi/types.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

namespace pbnphi {

/// Shannon entropy in bits, with 0 log 0 = 0.
template <typename Derived>
typename Derived::Scalar entropy(const Eigen::DenseBase<Derived>& p) {
  using Scalar = typename Derived::Scalar;
  Scalar h(0);
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    const Scalar v = p.derived().coeff(i);
    if (v > Scalar(0)) h -= v * std::log2(v);
  }
  return std::max(h, Scalar(0));
}

/// D_KL(p || q) in bits, summed over the support of p only.
/// Throws ComputationError if p(x) > 0 where q(x) = 0.
template <typename DerivedP, typename DerivedQ>
typename DerivedP::Scalar kl_divergence(const Eigen::DenseBase<DerivedP>& p,
                                        const Eigen::DenseBase<DerivedQ>& q) {
  using Scalar = typename DerivedP::Scalar;
  if (p.size() != q.size()) {
    throw ValidationError("kl_divergence: support sizes differ (" + std::to_string(p.size()) +
                          " vs " + std::to_string(q.size()) + ")");
  }
  Scalar d(0);
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    const Scalar pi = p.derived().coeff(i);
    if (!(pi > Scalar(0))) continue;
    const Scalar qi = q.derived().coeff(i);
    if (!(qi > Scalar(0))) {
      throw ComputationError("kl_divergence: p is not absolutely continuous w.r.t. q at index " +
                             std::to_string(i));
    }
    d += pi * std::log2(pi / qi);
  }
  return std::max(d, Scalar(0));
}

/// ei(t, x) = D_KL(B_x(t) || p_{t-1}) with p_{t-1} = p0 S^{t-1}.
/// Requires t >= 1; throws ComputationError when p_t(x) = 0.
double effective_information(const TransitionMatrix& S, const Distribution& p0, int t, StateIndex x);
double effective_information(const ValidatedNetwork& net, const Distribution& p0, int t, StateIndex x);

/// n - H(row x of the uniform-prior backward matrix).
double effective_information_uniform(const TransitionMatrix& S, StateIndex x);

/// Regime-phase ei: D_KL(B_x || p_inf) against a stationary distribution.
double effective_information_stationary(const TransitionMatrix& S, StateIndex x,
                                        const StationaryOptions& options = {});

/// ei(t, A, a) = D_KL(^A B_a(t) || marginal of p_{t-1} on A).
double subset_effective_information(const TransitionMatrix& S, const Distribution& p0, int t,
                                    SubsetMask A, StateIndex a);
double subset_effective_information(const ValidatedNetwork& net, const Distribution& p0, int t,
                                    SubsetMask A, StateIndex a);

/// Throws UsageError unless t >= minimum.
void check_instant(int t, int minimum = 1);

}  // namespace pbnphi
