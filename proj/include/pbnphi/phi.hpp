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
#include "pbnphi/network.hpp"
#include "pbnphi/partition.hpp"
#include "pbnphi/types.hpp"

#include <map>
#include <memory>
#include <shared_mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pbnphi {

/// Entropy used in the normalization N = (m - 1) min_k H(M_k).
enum class NormalizationMode {
  Marginal,  // Shannon entropy of the part's marginal at instant t
  MaxEnt,    // |M_k| bits
};

enum class PartitionScope {
  Bipartitions,
  All,  // every m-way partition; only for |V| <= PhiOptions::max_all_partitions_size
};

std::string to_string(NormalizationMode mode);
std::string to_string(PartitionScope scope);

struct PhiOptions {
  NormalizationMode normalization = NormalizationMode::Marginal;
  PartitionScope partitions = PartitionScope::Bipartitions;
  /// Whether V = X takes part in complex scans and system phi.
  bool include_full_set = true;
  int threads = 1;
  int max_all_partitions_size = 5;
  /// Largest network for exhaustive subset scans.
  int max_scan_nodes = 8;
  /// Keep every scored partition in MIP results.
  bool keep_partition_table = false;
};

/// |phi| at or below this, with N = 0, counts as a perfect cut.
inline constexpr double kZeroPhi = 1e-12;
/// A subset is a complex when its phi exceeds this.
inline constexpr double kComplexThreshold = 1e-9;

/// Everything a phi computation at one instant needs: S, p_{t-1}, p_t and a
/// per-subset cache of effective information. Lookups are thread-safe.
class PhiContext {
 public:
  PhiContext(ValidatedNetwork net, Distribution p0, int t, PhiOptions options = {});

  const ValidatedNetwork& network() const noexcept { return net_; }
  const TransitionMatrix& transition() const noexcept { return S_; }
  const Distribution& previous() const noexcept { return p_prev_; }
  const Distribution& current() const noexcept { return p_t_; }
  int time() const noexcept { return t_; }
  const PhiOptions& options() const noexcept { return options_; }

  bool observable(StateIndex x) const { return p_t_(x) > 0.0; }

  /// ei(t, A, pi_A(x)) for a full state x. Throws ComputationError when the
  /// sub-state is unobservable.
  double subset_ei(SubsetMask A, StateIndex x) const;
  /// H of the marginal of p_t on A.
  double marginal_entropy(SubsetMask A) const;

  /// Fills the cache for `masks` using options().threads workers.
  void prepare(std::span<const SubsetMask> masks) const;

  /// Partitions of V under options().partitions, in enumeration order.
  std::shared_ptr<const std::vector<Partition>> partitions(SubsetMask V) const;

 private:
  struct SubsetData {
    std::vector<double> ei;  // per current sub-state, NaN when unobservable
    double entropy_now = 0.0;
  };
  std::shared_ptr<const SubsetData> subset(SubsetMask A) const;
  SubsetData compute(SubsetMask A) const;

  ValidatedNetwork net_;
  TransitionMatrix S_;
  Distribution p_prev_;
  Distribution p_t_;
  int t_;
  PhiOptions options_;
  mutable std::shared_mutex mutex_;
  mutable std::map<std::uint32_t, std::shared_ptr<const SubsetData>> cache_;
  mutable std::map<std::uint32_t, std::shared_ptr<const std::vector<Partition>>> partitions_;
};

/// phi(t, V, P, v) = ei(t, V, v) - sum_k ei(t, M_k, mu_k), V = P.target().
/// May be negative.
double partition_phi(const PhiContext& ctx, const Partition& P, StateIndex x);

double normalization(const PhiContext& ctx, const Partition& P, NormalizationMode mode);
double normalization(const PhiContext& ctx, const Partition& P);

struct PartitionScore {
  Partition partition;
  double phi = 0.0;
  double normalization = 0.0;
  /// phi / N; nullopt when N = 0 and phi > 0 (excluded from the argmin).
  std::optional<double> ratio;
};

struct MipResult {
  Partition mip;
  double phi_raw = 0.0;
  double ratio = 0.0;
  double normalization = 0.0;
  std::vector<PartitionScore> table;  // filled when keep_partition_table
};

/// Minimizes phi / N over the partitions of V selected by the context options.
/// Ties go to the smaller phi, then to the earlier partition in enumeration
/// order. Throws ComputationError if every partition is excluded.
MipResult find_mip(const PhiContext& ctx, SubsetMask V, StateIndex x);

struct PhiReport {
  SubsetMask subset;
  StateIndex state = 0;      // full network state
  StateIndex sub_state = 0;  // pi_V(state)
  int time = 0;
  double phi_raw = 0.0;
  Partition mip;
  double normalized_value = 0.0;
  NormalizationMode normalization_mode = NormalizationMode::Marginal;
  std::vector<PartitionScore> per_partition;
};

/// phi(t, V, v): the unnormalized phi at the MIP.
PhiReport subset_phi(const PhiContext& ctx, SubsetMask V, StateIndex x);

struct Complex {
  SubsetMask subset;
  double phi = 0.0;
  bool is_main = false;
  Partition mip;
};

struct ComplexScan {
  /// Subsets with phi > kComplexThreshold, in increasing mask order.
  std::vector<Complex> complexes;
  /// Subsets whose every partition was excluded (no phi defined).
  std::vector<SubsetMask> undefined;
};

/// Scans every V with |V| >= 2. A complex is main when no strict superset in
/// the list has a strictly larger phi. Throws SizeCapError beyond max_scan_nodes.
ComplexScan find_complexes(const PhiContext& ctx, StateIndex x);

/// Largest complex phi, 0 when there is no complex.
double system_phi(const PhiContext& ctx, StateIndex x);

/// sum_x p_t(x) system_phi(x) over states with p_t(x) > 0.
double average_phi(const PhiContext& ctx);

/// True iff no declared input edge joins two different parts of P.
bool is_disconnected(const ValidatedNetwork& net, const Partition& P);

}  // namespace pbnphi
