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

#include "pbnphi/marginalize.hpp"

#include "pbnphi/dynamics.hpp"
#include "pbnphi/error.hpp"

namespace pbnphi {

namespace {

void require_nonempty(SubsetMask A, const char* op) {
  if (A.empty()) throw ValidationError(std::string(op) + ": empty node subset");
}

void require_within(SubsetMask A, Eigen::Index dim, const char* op) {
  require_nonempty(A, op);
  const int n = node_count_for_dim(dim);
  if (!A.is_subset_of(SubsetMask::full(n))) {
    throw ValidationError(std::string(op) + ": subset " + A.to_string() + " names nodes beyond n = " +
                          std::to_string(n));
  }
}

bool is_full(SubsetMask A, Eigen::Index dim) { return A == SubsetMask::full(node_count_for_dim(dim)); }

}  // namespace

StateIndex project_state(StateIndex x, SubsetMask A) {
  require_nonempty(A, "project_state");
  StateIndex out = 0;
  int pos = 0;
  for (std::uint32_t b = A.bits(); b != 0; b &= b - 1, ++pos) {
    if (x & (b & -b)) out |= StateIndex{1} << pos;
  }
  return out;
}

StateIndex embed_state(StateIndex sub, SubsetMask A) {
  StateIndex out = 0;
  int pos = 0;
  for (std::uint32_t b = A.bits(); b != 0; b &= b - 1, ++pos) {
    if ((sub >> pos) & 1u) out |= (b & -b);
  }
  return out;
}

std::vector<StateIndex> projection_table(Eigen::Index dim, SubsetMask A) {
  std::vector<StateIndex> table(static_cast<std::size_t>(dim));
  for (Eigen::Index x = 0; x < dim; ++x) {
    table[static_cast<std::size_t>(x)] = project_state(static_cast<StateIndex>(x), A);
  }
  return table;
}

Distribution marginal_distribution(const Distribution& p, SubsetMask A) {
  require_within(A, p.size(), "marginal_distribution");
  Distribution q = Distribution::Zero(Eigen::Index{1} << A.size());
  for (Eigen::Index x = 0; x < p.size(); ++x) q(project_state(static_cast<StateIndex>(x), A)) += p(x);
  return q;
}

Matrix subset_joint(const TransitionMatrix& S, const Distribution& p, SubsetMask A) {
  require_within(A, S.rows(), "subset_joint");
  if (p.size() != S.rows()) throw ValidationError("subset_joint: distribution size does not match S");
  const auto proj = projection_table(S.rows(), A);
  const Eigen::Index sub_dim = Eigen::Index{1} << A.size();
  Matrix joint = Matrix::Zero(sub_dim, sub_dim);
  for (Eigen::Index x = 0; x < S.rows(); ++x) {
    if (!(p(x) > 0.0)) continue;
    auto dest = joint.row(proj[static_cast<std::size_t>(x)]);
    for (Eigen::Index y = 0; y < S.cols(); ++y) dest(proj[static_cast<std::size_t>(y)]) += p(x) * S(x, y);
  }
  return joint;
}

Matrix restrict_joint(const Matrix& joint, SubsetMask V, SubsetMask A) {
  require_nonempty(A, "restrict_joint");
  if (!A.is_subset_of(V)) {
    throw ValidationError("restrict_joint: " + A.to_string() + " is not within " + V.to_string());
  }
  std::vector<StateIndex> to_part(static_cast<std::size_t>(joint.rows()));
  for (Eigen::Index v = 0; v < joint.rows(); ++v) {
    to_part[static_cast<std::size_t>(v)] = project_state(embed_state(static_cast<StateIndex>(v), V), A);
  }
  const Eigen::Index sub_dim = Eigen::Index{1} << A.size();
  Matrix out = Matrix::Zero(sub_dim, sub_dim);
  for (Eigen::Index i = 0; i < joint.rows(); ++i) {
    for (Eigen::Index j = 0; j < joint.cols(); ++j) {
      out(to_part[static_cast<std::size_t>(i)], to_part[static_cast<std::size_t>(j)]) += joint(i, j);
    }
  }
  return out;
}

ConditionalMatrix subset_transition_matrix(const TransitionMatrix& S, const Distribution& p_t, SubsetMask A) {
  require_within(A, S.rows(), "subset_transition_matrix");
  const Distribution mass = marginal_distribution(p_t, A);
  ConditionalMatrix out;
  out.values = is_full(A, S.rows()) ? Matrix(S) : subset_joint(S, p_t, A);
  out.defined.assign(static_cast<std::size_t>(mass.size()), false);
  for (Eigen::Index i = 0; i < mass.size(); ++i) {
    if (mass(i) > 0.0) {
      if (!is_full(A, S.rows())) out.values.row(i) /= mass(i);
      out.defined[static_cast<std::size_t>(i)] = true;
    } else {
      out.values.row(i).setZero();
    }
  }
  out.conditioning = p_t;
  return out;
}

ConditionalMatrix backward_from_joint(const Matrix& joint) {
  const Distribution current_mass = joint.colwise().sum();
  ConditionalMatrix out;
  out.values = joint.transpose();
  out.defined.assign(static_cast<std::size_t>(joint.cols()), false);
  for (Eigen::Index h = 0; h < joint.cols(); ++h) {
    if (current_mass(h) > 0.0) {
      out.values.row(h) /= current_mass(h);
      out.defined[static_cast<std::size_t>(h)] = true;
    } else {
      out.values.row(h).setZero();
    }
  }
  out.conditioning = joint.rowwise().sum().transpose();
  return out;
}

ConditionalMatrix subset_backward_matrix(const TransitionMatrix& S, const Distribution& p_prev, SubsetMask A) {
  require_within(A, S.rows(), "subset_backward_matrix");
  if (is_full(A, S.rows())) return backward_matrix(S, p_prev);
  ConditionalMatrix out = backward_from_joint(subset_joint(S, p_prev, A));
  out.conditioning = marginal_distribution(p_prev, A);
  return out;
}

}  // namespace pbnphi
