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

#include "support.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace pbnphi;
using namespace pbnphi::testing;

namespace {

Partition singletons(int a, int b) {
  return Partition(SubsetMask::of({a, b}), {SubsetMask::of({a}), SubsetMask::of({b})});
}

// Node 1 keeps its value; nodes 2 and 3 swap.
ValidatedNetwork frozen_plus_swap() {
  return validate_network(Network{{law(1, {1}, {0.0, 1.0}), law(2, {3}, {0.0, 1.0}), law(3, {2}, {0.0, 1.0})}, {}});
}

}  // namespace

TEST_CASE("partition_phi examples") {
  const PhiContext nots(two_nots(), uniform_distribution(4), 1);
  const PhiContext swap(swap_net(), uniform_distribution(4), 1);
  for (StateIndex x = 0; x < 4; ++x) {
    CHECK(std::abs(partition_phi(nots, singletons(1, 2), x)) <= 1e-12);
    CHECK(partition_phi(swap, singletons(1, 2), x) == doctest::Approx(2.0).epsilon(1e-12));
  }
}

TEST_CASE("normalization") {
  const PhiContext swap(swap_net(), uniform_distribution(4), 1);
  CHECK(normalization(swap, singletons(1, 2)) == doctest::Approx(1.0));

  const PhiContext coin3(swap_plus_coin(), uniform_distribution(8), 1);
  const Partition P(SubsetMask::full(3), {SubsetMask::of({1}), SubsetMask::of({2, 3})});
  CHECK(normalization(coin3, P, NormalizationMode::MaxEnt) == 1.0);

  // Node 1 frozen at 1 has a delta marginal.
  Distribution p0 = Distribution::Zero(8);
  for (StateIndex x : {1u, 3u, 5u, 7u}) p0(x) = 0.25;
  const PhiContext frozen(frozen_plus_swap(), p0, 1);
  CHECK(normalization(frozen, Partition(SubsetMask::full(3), {SubsetMask::of({1}), SubsetMask::of({2, 3})})) == 0.0);
  const Partition three(SubsetMask::full(3), {SubsetMask::of({1}), SubsetMask::of({2}), SubsetMask::of({3})});
  CHECK(normalization(coin3, three, NormalizationMode::MaxEnt) == 2.0);
}

TEST_CASE("find_mip on two-node fixtures") {
  const PhiContext swap(swap_net(), uniform_distribution(4), 1);
  const MipResult mip = find_mip(swap, SubsetMask::full(2), 1);
  CHECK(mip.mip == singletons(1, 2));
  CHECK(mip.phi_raw == doctest::Approx(2.0).epsilon(1e-12));

  const PhiContext nots(two_nots(), uniform_distribution(4), 1);
  const MipResult zero = find_mip(nots, SubsetMask::full(2), 2);
  CHECK(zero.mip == singletons(1, 2));
  CHECK(std::abs(zero.phi_raw) <= 1e-12);
  CHECK_THROWS_AS(find_mip(nots, SubsetMask::of({1}), 0), ValidationError);
}

TEST_CASE("a zero-cost cut with zero phi wins the MIP") {
  Distribution p0 = Distribution::Zero(8);
  for (StateIndex x : {1u, 3u, 5u, 7u}) p0(x) = 0.25;
  PhiOptions options;
  options.keep_partition_table = true;
  const PhiContext ctx(frozen_plus_swap(), p0, 1, options);
  const MipResult mip = find_mip(ctx, SubsetMask::full(3), 0b011);
  CHECK(mip.mip.to_string() == "{{1},{2,3}}");
  CHECK(std::abs(mip.phi_raw) <= 1e-12);
  CHECK(mip.ratio == 0.0);
  REQUIRE(mip.table.size() == 3);
  CHECK(*mip.table[0].ratio == doctest::Approx(2.0));
}

TEST_CASE("partitions with N = 0 and phi > 0 are excluded") {
  // Node 1 always becomes 0, node 2 copies node 1. Under a uniform prior node
  // 1 is a delta at t = 1 while V still learns node 1's previous value.
  const auto net = validate_network(Network{{law(1, {}, {0.0}), law(2, {1}, {0.0, 1.0})}, {}});
  const PhiContext marginal(net, uniform_distribution(4), 1);
  CHECK(partition_phi(marginal, singletons(1, 2), 0) == doctest::Approx(1.0));
  CHECK(normalization(marginal, singletons(1, 2)) == 0.0);
  CHECK_THROWS_WITH_AS(find_mip(marginal, SubsetMask::full(2), 0), doctest::Contains("no MIP"), ComputationError);

  PhiOptions maxent;
  maxent.normalization = NormalizationMode::MaxEnt;
  const PhiContext ctx(net, uniform_distribution(4), 1, maxent);
  CHECK(find_mip(ctx, SubsetMask::full(2), 0).phi_raw == doctest::Approx(1.0));

  const ComplexScan scan = find_complexes(marginal, 0);
  CHECK(scan.complexes.empty());
  CHECK(scan.undefined == std::vector<SubsetMask>{SubsetMask::full(2)});
}

TEST_CASE("subset_phi reports") {
  const PhiContext swap(swap_net(), uniform_distribution(4), 1);
  const PhiReport r = subset_phi(swap, SubsetMask::full(2), 2);
  CHECK(r.phi_raw == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r.sub_state == 2);
  CHECK(r.time == 1);
  CHECK(r.normalization_mode == NormalizationMode::Marginal);
  CHECK(r.phi_raw == partition_phi(swap, r.mip, 2));

  const PhiContext nots(two_nots(), uniform_distribution(4), 1);
  CHECK(std::abs(subset_phi(nots, SubsetMask::full(2), 3).phi_raw) <= 1e-12);

  const PhiContext frozen(identity_net(4), uniform_distribution(16), 1);
  for (std::uint32_t bits = 1; bits < 16; ++bits) {
    if (SubsetMask(bits).size() < 2) continue;
    CHECK(subset_phi(frozen, SubsetMask(bits), 5).phi_raw == 0.0);
  }
}

TEST_CASE("complexes of the fixtures") {
  CHECK(find_complexes(PhiContext(two_nots(), uniform_distribution(4), 1), 0).complexes.empty());

  const ComplexScan swap = find_complexes(PhiContext(swap_net(), uniform_distribution(4), 1), 0);
  REQUIRE(swap.complexes.size() == 1);
  CHECK(swap.complexes[0].subset == SubsetMask::full(2));
  CHECK(swap.complexes[0].phi == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(swap.complexes[0].is_main);

  const PhiContext three(swap_plus_coin(), uniform_distribution(8), 1);
  for (StateIndex x = 0; x < 8; ++x) {
    const ComplexScan scan = find_complexes(three, x);
    REQUIRE(scan.complexes.size() == 1);
    CHECK(scan.complexes[0].subset == SubsetMask::of({1, 2}));
    CHECK(scan.complexes[0].is_main);
    CHECK(system_phi(three, x) == doctest::Approx(2.0).epsilon(1e-12));
  }
}

TEST_CASE("system_phi and the full-set flag") {
  CHECK(system_phi(PhiContext(two_nots(), uniform_distribution(4), 1), 0) == 0.0);
  CHECK(system_phi(PhiContext(swap_net(), uniform_distribution(4), 1), 3) == doctest::Approx(2.0));
  PhiOptions strict;
  strict.include_full_set = false;
  CHECK(system_phi(PhiContext(swap_net(), uniform_distribution(4), 1, strict), 3) == 0.0);
  CHECK(system_phi(PhiContext(swap_plus_coin(), uniform_distribution(8), 1, strict), 3) == doctest::Approx(2.0));
}

TEST_CASE("average_phi") {
  CHECK(average_phi(PhiContext(swap_net(), uniform_distribution(4), 1)) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(average_phi(PhiContext(two_nots(), uniform_distribution(4), 1)) == 0.0);
  // p_1 is a point mass on state 2 when p_0 is a point mass on state 1.
  const PhiContext point(swap_plus_coin(0.0, 0.0), point_distribution(8, 1), 1);
  CHECK(point.current() == point_distribution(8, 2));
  CHECK(average_phi(point) == system_phi(point, 2));
}

TEST_CASE("is_disconnected") {
  CHECK(is_disconnected(two_nots(), singletons(1, 2)));
  CHECK_FALSE(is_disconnected(swap_net(), singletons(1, 2)));
  const auto one_way = validate_network(Network{{law(1, {}, {0.5}), law(2, {1}, {0.0, 1.0})}, {}});
  CHECK_FALSE(is_disconnected(one_way, singletons(1, 2)));
}

TEST_CASE("disconnected partitions have zero phi (random blocks)") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const int a = 1 + trial % 3;
    const int b = 1 + (trial / 3) % 3;
    const auto net = random_disconnected(rng, a, b);
    const SubsetMask first = SubsetMask::full(a);
    const Partition P(SubsetMask::full(a + b), {first, SubsetMask::full(a + b) - first});
    REQUIRE(is_disconnected(net, P));
    for (int t = 1; t <= 3; ++t) {
      const PhiContext ctx(net, uniform_distribution(net.state_count()), t);
      for (StateIndex x = 0; x < net.state_count(); ++x) {
        if (ctx.observable(x)) CHECK(std::abs(partition_phi(ctx, P, x)) <= 1e-9);
      }
    }
  }
}

TEST_CASE("phi reports are self-consistent and dominated by system phi") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 15; ++trial) {
    const auto net = random_network(rng, 3 + trial % 2);
    const Distribution p0 = random_distribution(rng, net.state_count());
    const PhiContext ctx(net, p0, 1 + trial % 2);
    const Matrix& S = ctx.transition();
    for (StateIndex x = 0; x < net.state_count(); ++x) {
      if (!ctx.observable(x)) continue;
      const double top = system_phi(ctx, x);
      for (std::uint32_t bits = 3; bits < (1u << net.size()); ++bits) {
        const SubsetMask V(bits);
        if (V.size() < 2) continue;
        try {
          const PhiReport r = subset_phi(ctx, V, x);
          double direct = subset_effective_information(S, p0, ctx.time(), V, project_state(x, V));
          for (SubsetMask part : r.mip.parts()) {
            direct -= subset_effective_information(S, p0, ctx.time(), part, project_state(x, part));
          }
          CHECK(std::abs(r.phi_raw - direct) <= 1e-12);
          CHECK(top >= r.phi_raw - 1e-12);
        } catch (const ComputationError&) {
          // every partition excluded; nothing to compare
        }
      }
    }
  }
}

TEST_CASE("MIP search is thread-count independent") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    const auto net = random_network(rng, 5);
    const Distribution p0 = random_distribution(rng, net.state_count());
    PhiOptions one;
    one.keep_partition_table = true;
    PhiOptions many = one;
    many.threads = 8;
    const PhiContext a(net, p0, 2, one);
    const PhiContext b(net, p0, 2, many);
    for (StateIndex x = 0; x < net.state_count(); x += 5) {
      if (!a.observable(x)) continue;
      try {
        const MipResult ra = find_mip(a, net.all_nodes(), x);
        const MipResult rb = find_mip(b, net.all_nodes(), x);
        CHECK(ra.mip == rb.mip);
        CHECK(ra.phi_raw == rb.phi_raw);
        REQUIRE(ra.table.size() == rb.table.size());
        for (std::size_t i = 0; i < ra.table.size(); ++i) CHECK(ra.table[i].phi == rb.table[i].phi);
      } catch (const ComputationError&) {
        CHECK_THROWS_AS(find_mip(b, net.all_nodes(), x), ComputationError);
      }
    }
  }
}

TEST_CASE("relabeling nodes leaves phi unchanged and maps the MIP") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 3 + trial % 2;
    const auto net = random_network(rng, n);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto moved = validate_network(relabel_nodes(net.network(), perm));
    const Distribution u = uniform_distribution(net.state_count());
    PhiOptions options;
    options.keep_partition_table = true;
    const PhiContext a(net, u, 1, options);
    const PhiContext b(moved, u, 1, options);
    for (StateIndex x = 0; x < net.state_count(); ++x) {
      if (!a.observable(x)) continue;
      const StateIndex y = relabel_state(x, perm);
      CHECK(std::abs(system_phi(a, x) - system_phi(b, y)) <= 1e-12);
      try {
        const MipResult ra = find_mip(a, net.all_nodes(), x);
        const MipResult rb = find_mip(b, moved.all_nodes(), y);
        CHECK(std::abs(ra.phi_raw - rb.phi_raw) <= 1e-12);
        // The mapped MIP must be among rb's minimizers.
        std::vector<SubsetMask> mapped;
        for (SubsetMask part : ra.mip.parts()) mapped.push_back(relabel_subset(part, perm));
        const Partition image(moved.all_nodes(), mapped);
        bool found = false;
        for (const PartitionScore& s : rb.table) {
          if (s.partition == image) {
            found = true;
            CHECK(s.ratio.has_value());
            CHECK(std::abs(*s.ratio - rb.ratio) <= 1e-12);
          }
        }
        CHECK(found);
      } catch (const ComputationError&) {
        CHECK_THROWS_AS(find_mip(b, moved.all_nodes(), y), ComputationError);
      }
    }
  }
}

TEST_CASE("exhaustive partitions") {
  PhiOptions all;
  all.partitions = PartitionScope::All;
  const PhiContext ctx(swap_plus_coin(), uniform_distribution(8), 1, all);
  const MipResult r = find_mip(ctx, SubsetMask::full(3), 5);
  CHECK(std::abs(r.phi_raw) <= 1e-12);
  CHECK(ctx.partitions(SubsetMask::full(3))->size() == 4);

  std::mt19937_64 rng(45);
  const PhiContext big(random_network(rng, 6), uniform_distribution(64), 1, all);
  CHECK_THROWS_AS(find_mip(big, SubsetMask::full(6), 0), SizeCapError);
}

TEST_CASE("complex scans respect the node cap") {
  Network net;
  for (int k = 1; k <= 9; ++k) net.laws.push_back(law(k, {}, {0.5}));
  const PhiContext ctx(validate_network(net), uniform_distribution(512), 1);
  CHECK_THROWS_AS(find_complexes(ctx, 0), SizeCapError);
}
