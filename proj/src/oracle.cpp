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

#include "pbnphi/oracle.hpp"

#include "pbnphi/error.hpp"

#include <cmath>
#include <functional>

namespace pbnphi::oracle {

namespace {

// p(X_{s+1} = to | X_s = from), straight from the node laws.
double step_probability(const ValidatedNetwork& net, StateIndex from, StateIndex to) {
  double prob = 1.0;
  for (const NodeLaw& law : net.laws()) {
    std::size_t config = 0;
    for (std::size_t b = 0; b < law.inputs.size(); ++b) {
      if ((from >> (law.inputs[b] - 1)) & 1u) config += std::size_t{1} << b;
    }
    const double r = law.table[config];
    prob *= ((to >> (law.node_id - 1)) & 1u) ? r : 1.0 - r;
  }
  return prob;
}

StateIndex restrict_to(StateIndex x, std::uint32_t mask) {
  StateIndex out = 0;
  int pos = 0;
  for (int bit = 0; bit < 32; ++bit) {
    if ((mask >> bit) & 1u) {
      if ((x >> bit) & 1u) out |= StateIndex{1} << pos;
      ++pos;
    }
  }
  return out;
}

int popcount(std::uint32_t mask) {
  int c = 0;
  for (; mask != 0; mask >>= 1) c += static_cast<int>(mask & 1u);
  return c;
}

// Divergence of p(prev | cur = observed) from p(prev), for a joint laid out as
// joint[prev * dim + cur].
double divergence_at(const std::vector<double>& joint, std::size_t dim, std::size_t observed) {
  double mass = 0.0;
  for (std::size_t j = 0; j < dim; ++j) mass += joint[j * dim + observed];
  if (!(mass > 0.0)) throw ComputationError("oracle: observed state has zero probability");
  double total = 0.0;
  for (std::size_t j = 0; j < dim; ++j) {
    const double both = joint[j * dim + observed];
    if (!(both > 0.0)) continue;
    double prior = 0.0;
    for (std::size_t i = 0; i < dim; ++i) prior += joint[j * dim + i];
    const double posterior = both / mass;
    total += posterior * std::log2(posterior / prior);
  }
  return total;
}

}  // namespace

JointTable joint(const ValidatedNetwork& net, const std::vector<double>& p0, int t) {
  const int n = net.size();
  if (t < 1) throw UsageError("oracle: instant must be >= 1");
  if (n * (t + 1) > kMaxTrajectoryBits) {
    throw SizeCapError("oracle: 2^(n (t + 1)) trajectories exceed the enumeration cap");
  }
  const std::size_t dim = std::size_t{1} << n;
  if (p0.size() != dim) throw ValidationError("oracle: initial distribution has the wrong size");

  JointTable table{n, t, std::vector<double>(dim * dim, 0.0)};
  std::function<void(int, StateIndex, StateIndex, double)> walk =
      [&](int depth, StateIndex previous, StateIndex state, double weight) {
        if (depth == t) {
          table.mass[(static_cast<std::size_t>(previous) << n) + state] += weight;
          return;
        }
        for (std::size_t next = 0; next < dim; ++next) {
          const double w = weight * step_probability(net, state, static_cast<StateIndex>(next));
          if (w > 0.0) walk(depth + 1, state, static_cast<StateIndex>(next), w);
        }
      };
  for (std::size_t start = 0; start < dim; ++start) {
    if (p0[start] > 0.0) walk(0, 0, static_cast<StateIndex>(start), p0[start]);
  }
  return table;
}

std::vector<double> current_distribution(const JointTable& table) {
  const std::size_t dim = std::size_t{1} << table.n;
  std::vector<double> p(dim, 0.0);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t i = 0; i < dim; ++i) p[i] += table.mass[j * dim + i];
  }
  return p;
}

std::vector<double> previous_distribution(const JointTable& table) {
  const std::size_t dim = std::size_t{1} << table.n;
  std::vector<double> p(dim, 0.0);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t i = 0; i < dim; ++i) p[j] += table.mass[j * dim + i];
  }
  return p;
}

double ei(const JointTable& table, StateIndex x) {
  return divergence_at(table.mass, std::size_t{1} << table.n, x);
}

double subset_ei(const JointTable& table, std::uint32_t mask, StateIndex sub_state) {
  const std::size_t dim = std::size_t{1} << table.n;
  const std::size_t sub_dim = std::size_t{1} << popcount(mask);
  std::vector<double> sub(sub_dim * sub_dim, 0.0);
  for (std::size_t j = 0; j < dim; ++j) {
    const StateIndex a_prev = restrict_to(static_cast<StateIndex>(j), mask);
    for (std::size_t i = 0; i < dim; ++i) {
      sub[a_prev * sub_dim + restrict_to(static_cast<StateIndex>(i), mask)] += table.mass[j * dim + i];
    }
  }
  return divergence_at(sub, sub_dim, sub_state);
}

double phi(const JointTable& table, std::uint32_t V, const std::vector<std::uint32_t>& parts, StateIndex x) {
  double value = subset_ei(table, V, restrict_to(x, V));
  for (std::uint32_t part : parts) value -= subset_ei(table, part, restrict_to(x, part));
  return value;
}

}  // namespace pbnphi::oracle
