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

#include <algorithm>
#include <numeric>

using namespace pbnphi;
using namespace pbnphi::testing;

TEST_CASE("validate_network accepts a one-node NOT") {
  const ValidatedNetwork net = validate_network(Network{{law(1, {1}, {1.0, 0.0})}, {}});
  CHECK(net.size() == 1);
  CHECK(net.state_count() == 2);
  CHECK(net.edges() == std::vector<std::pair<int, int>>{{1, 1}});
}

TEST_CASE("validate_network rejects a table of the wrong length") {
  const Network net{{law(1, {1}, {0.5})}, {}};
  CHECK_THROWS_WITH_AS(validate_network(net), doctest::Contains("node 1: table has 1 entries"), ValidationError);
}

TEST_CASE("validate_network rejects a dangling input") {
  const Network net{{law(1, {}, {0.5}), law(2, {3}, {0.0, 1.0})}, {}};
  CHECK_THROWS_WITH_AS(validate_network(net), doctest::Contains("node 2: inputs reference missing node 3"),
                       ValidationError);
}

TEST_CASE("validate_network rejects duplicate ids and out-of-range probabilities") {
  CHECK_THROWS_WITH_AS(validate_network(Network{{law(1, {}, {0.5}), law(1, {}, {0.5})}, {}}),
                       doctest::Contains("duplicate id"), ValidationError);
  CHECK_THROWS_WITH_AS(validate_network(Network{{law(1, {}, {1.5})}, {}}),
                       doctest::Contains("node 1: table[0]"), ValidationError);
  CHECK_THROWS_AS(validate_network(Network{{law(1, {}, {-0.1})}, {}}), ValidationError);
  CHECK_THROWS_AS(validate_network(Network{}), ValidationError);
}

TEST_CASE("validate_network enforces the node cap") {
  Network net;
  for (int k = 1; k <= 13; ++k) net.laws.push_back(law(k, {}, {0.5}));
  CHECK_THROWS_AS(validate_network(net), SizeCapError);
  CHECK_NOTHROW(validate_network(net, 13));
}

TEST_CASE("laws may be declared in any order") {
  const ValidatedNetwork net = validate_network(Network{{law(2, {1}, {0.0, 1.0}), law(1, {}, {0.25})}, {}});
  CHECK(net.law(1).table == std::vector<double>{0.25});
  CHECK(net.edges() == std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("state encoding puts node 1 in the least significant bit") {
  const std::vector<int> bits{1, 0, 1};  // node 1 = 1, node 2 = 0, node 3 = 1
  CHECK(encode_state(bits) == 0b101u);
  CHECK(node_value(0b100u, 3) == 1);
  CHECK(node_value(0b100u, 1) == 0);
}

TEST_CASE("encode and decode round-trip over every state") {
  for (int n = 1; n <= 8; ++n) {
    for (StateIndex x = 0; x < (StateIndex{1} << n); ++x) {
      const auto bits = decode_state(x, n);
      REQUIRE(encode_state(bits) == x);
    }
  }
}

TEST_CASE("SubsetMask basics") {
  const SubsetMask A = SubsetMask::of({3, 1});
  CHECK(A.bits() == 0b101u);
  CHECK(A.size() == 2);
  CHECK(A.lowest() == 1);
  CHECK(A.nodes() == std::vector<int>{1, 3});
  CHECK(A.to_string() == "{1,3}");
  CHECK(A.is_subset_of(SubsetMask::full(3)));
  CHECK((SubsetMask::full(3) - A) == SubsetMask::of({2}));
}

TEST_CASE("relabeling permutes laws, inputs and states consistently") {
  const Network net{{law(1, {2}, {0.1, 0.9}), law(2, {}, {0.3}), law(3, {1, 2}, {0.0, 0.2, 0.4, 1.0})}, {"a", "b", "c"}};
  const std::vector<int> perm{3, 1, 2};
  const Network moved = relabel_nodes(net, perm);
  REQUIRE_NOTHROW(validate_network(moved));
  CHECK(moved.laws[2].node_id == 3);
  CHECK(moved.laws[2].inputs == std::vector<int>{1});  // old node 2 is now node 1
  CHECK(moved.names == std::vector<std::string>{"b", "c", "a"});
  CHECK(relabel_state(0b001u, perm) == 0b100u);
  CHECK(relabel_subset(SubsetMask::of({1, 2}), perm) == SubsetMask::of({1, 3}));
  const std::vector<int> bad{1, 1, 2};
  CHECK_THROWS_AS(relabel_nodes(net, bad), ValidationError);
}

TEST_CASE("check_distribution") {
  CHECK_NOTHROW(check_distribution(uniform_distribution(4), 4));
  CHECK_THROWS_AS(check_distribution(uniform_distribution(4), 8), ValidationError);
  Distribution bad(2);
  bad << 0.7, 0.7;
  CHECK_THROWS_AS(check_distribution(bad, 2), ValidationError);
  bad << 1.1, -0.1;
  CHECK_THROWS_AS(check_distribution(bad, 2), ValidationError);
}
