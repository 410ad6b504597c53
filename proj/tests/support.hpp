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

#include "pbnphi/pbnphi.hpp"

#include <random>
#include <vector>

namespace pbnphi::testing {

inline NodeLaw law(int id, std::vector<int> inputs, std::vector<double> table) {
  return NodeLaw{id, std::move(inputs), std::move(table)};
}

/// One node, next = NOT current.
inline ValidatedNetwork not_net() { return validate_network(Network{{law(1, {1}, {1.0, 0.0})}, {}}); }

/// One node, next is a fair coin.
inline ValidatedNetwork coin_net() { return validate_network(Network{{law(1, {}, {0.5})}, {}}); }

/// One node that always becomes 0.
inline ValidatedNetwork absorbing_net() { return validate_network(Network{{law(1, {}, {0.0})}, {}}); }

/// Node 1 copies node 2, node 2 copies node 1.
inline ValidatedNetwork swap_net() {
  return validate_network(Network{{law(1, {2}, {0.0, 1.0}), law(2, {1}, {0.0, 1.0})}, {"a", "b"}});
}

/// Two nodes, each negating itself.
inline ValidatedNetwork two_nots() {
  return validate_network(Network{{law(1, {1}, {1.0, 0.0}), law(2, {2}, {1.0, 0.0})}, {}});
}

/// Every node copies itself.
inline ValidatedNetwork identity_net(int n) {
  Network net;
  for (int k = 1; k <= n; ++k) net.laws.push_back(law(k, {k}, {0.0, 1.0}));
  return validate_network(net);
}

/// Swap pair on nodes 1,2 plus an isolated random node 3.
inline ValidatedNetwork swap_plus_coin(double r0 = 0.3, double r1 = 0.8) {
  return validate_network(
      Network{{law(1, {2}, {0.0, 1.0}), law(2, {1}, {0.0, 1.0}), law(3, {3}, {r0, r1})}, {}});
}

/// Random law table entry: deterministic values are common so that
/// unobservable states actually occur.
inline double random_probability(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double pick = u(rng);
  if (pick < 0.15) return 0.0;
  if (pick < 0.30) return 1.0;
  return u(rng);
}

/// Network on `n` nodes whose inputs are drawn from `allowed` (node ids),
/// at most `max_inputs` per node.
inline std::vector<NodeLaw> random_laws(std::mt19937_64& rng, const std::vector<int>& nodes,
                                        const std::vector<int>& allowed, int max_inputs) {
  std::vector<NodeLaw> laws;
  for (int id : nodes) {
    std::vector<int> pool = allowed;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::uniform_int_distribution<int> count(0, std::min<int>(max_inputs, static_cast<int>(pool.size())));
    pool.resize(static_cast<std::size_t>(count(rng)));
    std::vector<double> table(std::size_t{1} << pool.size());
    for (double& r : table) r = random_probability(rng);
    laws.push_back(law(id, pool, table));
  }
  return laws;
}

inline ValidatedNetwork random_network(std::mt19937_64& rng, int n, int max_inputs = 3) {
  std::vector<int> ids(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) ids[static_cast<std::size_t>(k)] = k + 1;
  return validate_network(Network{random_laws(rng, ids, ids, max_inputs), {}});
}

/// Two blocks {1..a} and {a+1..a+b} with no edge between them.
inline ValidatedNetwork random_disconnected(std::mt19937_64& rng, int a, int b) {
  std::vector<int> first, second;
  for (int k = 1; k <= a; ++k) first.push_back(k);
  for (int k = a + 1; k <= a + b; ++k) second.push_back(k);
  auto laws = random_laws(rng, first, first, 3);
  auto more = random_laws(rng, second, second, 3);
  laws.insert(laws.end(), more.begin(), more.end());
  return validate_network(Network{laws, {}});
}

/// Strictly positive random distribution.
inline Distribution random_distribution(std::mt19937_64& rng, Eigen::Index size) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  Distribution p(size);
  for (Eigen::Index i = 0; i < size; ++i) p(i) = u(rng);
  return p / p.sum();
}

/// Random distribution with some zero entries.
inline Distribution random_sparse_distribution(std::mt19937_64& rng, Eigen::Index size) {
  Distribution p = random_distribution(rng, size);
  std::bernoulli_distribution drop(0.3);
  for (Eigen::Index i = 0; i < size; ++i) {
    if (drop(rng)) p(i) = 0.0;
  }
  if (p.sum() == 0.0) p(0) = 1.0;
  return p / p.sum();
}

}  // namespace pbnphi::testing
