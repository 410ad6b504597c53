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

#include "pbnphi/phi.hpp"

#include "pbnphi/error.hpp"
#include "pbnphi/information.hpp"
#include "pbnphi/marginalize.hpp"
#include "pbnphi/parallel.hpp"

#include <cmath>
#include <limits>

namespace pbnphi {

std::string to_string(NormalizationMode mode) {
  return mode == NormalizationMode::Marginal ? "marginal" : "maxent";
}

std::string to_string(PartitionScope scope) { return scope == PartitionScope::All ? "all" : "bi"; }

PhiContext::PhiContext(ValidatedNetwork net, Distribution p0, int t, PhiOptions options)
    : net_(std::move(net)), t_(t), options_(options) {
  check_instant(t);
  S_ = build_transition_matrix(net_, options_.threads);
  check_distribution(p0, S_.rows(), "initial distribution");
  p_prev_ = distribution_at(S_, p0, t - 1);
  p_t_ = evolve_distribution(p_prev_, S_);
}

PhiContext::SubsetData PhiContext::compute(SubsetMask A) const {
  const ConditionalMatrix B = subset_backward_matrix(S_, p_prev_, A);
  SubsetData data;
  data.ei.assign(static_cast<std::size_t>(B.dim()), std::numeric_limits<double>::quiet_NaN());
  for (Eigen::Index h = 0; h < B.dim(); ++h) {
    if (B.is_defined(h)) data.ei[static_cast<std::size_t>(h)] = kl_divergence(B.values.row(h), B.conditioning);
  }
  data.entropy_now = entropy(marginal_distribution(p_t_, A));
  return data;
}

std::shared_ptr<const PhiContext::SubsetData> PhiContext::subset(SubsetMask A) const {
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(A.bits()); it != cache_.end()) return it->second;
  }
  auto data = std::make_shared<const SubsetData>(compute(A));
  std::unique_lock lock(mutex_);
  return cache_.try_emplace(A.bits(), std::move(data)).first->second;
}

void PhiContext::prepare(std::span<const SubsetMask> masks) const {
  std::vector<SubsetMask> missing;
  {
    std::shared_lock lock(mutex_);
    for (SubsetMask A : masks) {
      if (!cache_.contains(A.bits())) missing.push_back(A);
    }
  }
  std::sort(missing.begin(), missing.end());
  missing.erase(std::unique(missing.begin(), missing.end()), missing.end());
  std::vector<std::shared_ptr<const SubsetData>> computed(missing.size());
  parallel_for(missing.size(), options_.threads, [&](std::size_t i) {
    computed[i] = std::make_shared<const SubsetData>(compute(missing[i]));
  });
  std::unique_lock lock(mutex_);
  for (std::size_t i = 0; i < missing.size(); ++i) cache_.try_emplace(missing[i].bits(), computed[i]);
}

std::shared_ptr<const std::vector<Partition>> PhiContext::partitions(SubsetMask V) const {
  {
    std::shared_lock lock(mutex_);
    if (auto it = partitions_.find(V.bits()); it != partitions_.end()) return it->second;
  }
  std::shared_ptr<const std::vector<Partition>> list;
  if (options_.partitions == PartitionScope::All) {
    if (V.size() > options_.max_all_partitions_size) {
      throw SizeCapError("exhaustive partitions are limited to " +
                         std::to_string(options_.max_all_partitions_size) + " nodes; " + V.to_string() +
                         " has " + std::to_string(V.size()));
    }
    list = std::make_shared<const std::vector<Partition>>(enumerate_partitions(V));
  } else {
    list = std::make_shared<const std::vector<Partition>>(enumerate_bipartitions(V));
  }
  std::unique_lock lock(mutex_);
  return partitions_.try_emplace(V.bits(), std::move(list)).first->second;
}

double PhiContext::subset_ei(SubsetMask A, StateIndex x) const {
  const StateIndex a = project_state(x, A);
  const double value = subset(A)->ei.at(a);
  if (std::isnan(value)) {
    throw ComputationError("sub-state " + std::to_string(a) + " of " + A.to_string() + " is unobservable at t = " +
                           std::to_string(t_));
  }
  return value;
}

double PhiContext::marginal_entropy(SubsetMask A) const { return subset(A)->entropy_now; }

double partition_phi(const PhiContext& ctx, const Partition& P, StateIndex x) {
  double phi = ctx.subset_ei(P.target(), x);
  for (SubsetMask part : P.parts()) phi -= ctx.subset_ei(part, x);
  return phi;
}

double normalization(const PhiContext& ctx, const Partition& P, NormalizationMode mode) {
  double smallest = std::numeric_limits<double>::infinity();
  for (SubsetMask part : P.parts()) {
    const double h = mode == NormalizationMode::MaxEnt ? static_cast<double>(part.size())
                                                       : ctx.marginal_entropy(part);
    smallest = std::min(smallest, h);
  }
  return static_cast<double>(P.size() - 1) * smallest;
}

double normalization(const PhiContext& ctx, const Partition& P) {
  return normalization(ctx, P, ctx.options().normalization);
}

namespace {

bool nearly_equal(double a, double b) { return a == b || std::abs(a - b) <= kZeroPhi; }

std::optional<double> normalized_ratio(double phi, double N) {
  if (N > kZeroPhi) return phi / N;
  if (std::abs(phi) <= kZeroPhi) return 0.0;
  if (phi > 0.0) return std::nullopt;
  return -std::numeric_limits<double>::infinity();
}

// Candidate beats incumbent: smaller ratio, then smaller phi; equal keeps the earlier one.
bool better(const PartitionScore& candidate, const PartitionScore& incumbent) {
  if (!nearly_equal(*candidate.ratio, *incumbent.ratio)) return *candidate.ratio < *incumbent.ratio;
  if (!nearly_equal(candidate.phi, incumbent.phi)) return candidate.phi < incumbent.phi;
  return false;
}

std::vector<SubsetMask> masks_of(SubsetMask V, const std::vector<Partition>& partitions) {
  std::vector<SubsetMask> masks{V};
  for (const Partition& P : partitions) masks.insert(masks.end(), P.parts().begin(), P.parts().end());
  return masks;
}

MipResult find_mip_with(const PhiContext& ctx, SubsetMask V, StateIndex x, int threads) {
  if (V.size() < 2) throw ValidationError("MIP search needs |V| >= 2, got " + V.to_string());
  const auto partitions = ctx.partitions(V);
  ctx.subset_ei(V, x);  // fails early on an unobservable v_h

  std::vector<std::optional<PartitionScore>> scores(partitions->size());
  parallel_for(partitions->size(), threads, [&](std::size_t i) {
    const Partition& P = (*partitions)[i];
    const double phi = partition_phi(ctx, P, x);
    const double N = normalization(ctx, P);
    scores[i] = PartitionScore{P, phi, N, normalized_ratio(phi, N)};
  });

  const PartitionScore* best = nullptr;
  for (const auto& score : scores) {
    if (!score->ratio) continue;
    if (best == nullptr || better(*score, *best)) best = &*score;
  }
  if (best == nullptr) {
    throw ComputationError("every partition of " + V.to_string() +
                           " has N = 0 with phi > 0; no MIP is defined");
  }
  MipResult result{best->partition, best->phi, *best->ratio, best->normalization, {}};
  if (ctx.options().keep_partition_table) {
    for (auto& score : scores) result.table.push_back(*score);
  }
  return result;
}

}  // namespace

MipResult find_mip(const PhiContext& ctx, SubsetMask V, StateIndex x) {
  if (V.size() >= 2) {
    const auto partitions = ctx.partitions(V);
    const auto masks = masks_of(V, *partitions);
    ctx.prepare(masks);
  }
  return find_mip_with(ctx, V, x, ctx.options().threads);
}

PhiReport subset_phi(const PhiContext& ctx, SubsetMask V, StateIndex x) {
  MipResult mip = find_mip(ctx, V, x);
  return PhiReport{V,
                   x,
                   project_state(x, V),
                   ctx.time(),
                   mip.phi_raw,
                   std::move(mip.mip),
                   mip.ratio,
                   ctx.options().normalization,
                   std::move(mip.table)};
}

ComplexScan find_complexes(const PhiContext& ctx, StateIndex x) {
  const int n = ctx.network().size();
  if (n > ctx.options().max_scan_nodes) {
    throw SizeCapError("complex scans are limited to " + std::to_string(ctx.options().max_scan_nodes) +
                       " nodes; the network has " + std::to_string(n));
  }
  if (static_cast<Eigen::Index>(x) >= ctx.current().size() || !ctx.observable(x)) {
    throw ComputationError("state " + std::to_string(x) + " is unobservable at t = " + std::to_string(ctx.time()));
  }
  const SubsetMask everything = ctx.network().all_nodes();
  std::vector<SubsetMask> all_masks;
  std::vector<SubsetMask> candidates;
  for (std::uint32_t bits = 1; bits <= everything.bits(); ++bits) {
    const SubsetMask V(bits);
    all_masks.push_back(V);
    if (V.size() >= 2 && (ctx.options().include_full_set || V != everything)) candidates.push_back(V);
  }
  ctx.prepare(all_masks);
  for (SubsetMask V : candidates) ctx.partitions(V);

  std::vector<std::optional<MipResult>> results(candidates.size());
  parallel_for(candidates.size(), ctx.options().threads, [&](std::size_t i) {
    try {
      results[i] = find_mip_with(ctx, candidates[i], x, 1);
    } catch (const ComputationError&) {
      results[i].reset();
    }
  });

  ComplexScan scan;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!results[i]) {
      scan.undefined.push_back(candidates[i]);
    } else if (results[i]->phi_raw > kComplexThreshold) {
      scan.complexes.push_back(Complex{candidates[i], results[i]->phi_raw, false, results[i]->mip});
    }
  }
  for (Complex& c : scan.complexes) {
    c.is_main = std::none_of(scan.complexes.begin(), scan.complexes.end(), [&](const Complex& other) {
      return other.subset != c.subset && c.subset.is_subset_of(other.subset) && other.phi > c.phi + kZeroPhi;
    });
  }
  return scan;
}

double system_phi(const PhiContext& ctx, StateIndex x) {
  double best = 0.0;
  for (const Complex& c : find_complexes(ctx, x).complexes) best = std::max(best, c.phi);
  return best;
}

double average_phi(const PhiContext& ctx) {
  double total = 0.0;
  for (Eigen::Index x = 0; x < ctx.current().size(); ++x) {
    const double weight = ctx.current()(x);
    if (weight > 0.0) total += weight * system_phi(ctx, static_cast<StateIndex>(x));
  }
  return total;
}

bool is_disconnected(const ValidatedNetwork& net, const Partition& P) {
  auto part_of = [&](int node) {
    for (std::size_t k = 0; k < P.parts().size(); ++k) {
      if (P.parts()[k].contains(node)) return static_cast<int>(k);
    }
    return -1;
  };
  for (const auto& [from, to] : net.edges()) {
    const int a = part_of(from);
    const int b = part_of(to);
    if (a >= 0 && b >= 0 && a != b) return false;
  }
  return true;
}

}  // namespace pbnphi
