// Copyright 2026 The hotkit developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include "hotkit/bitstring.hpp"

using namespace hotkit;

TEST_SUITE("bitstring")
{
  TEST_CASE("text form reads the first coordinate leftmost")
  {
    const BitString s = bitstring_from_text("0110");
    CHECK(s.n == 4);
    CHECK(s.at(1) == 0);
    CHECK(s.at(2) == 1);
    CHECK(s.at(3) == 1);
    CHECK(s.at(4) == 0);
    CHECK(to_text(s) == "0110");
  }

  TEST_CASE("theta and unit strings")
  {
    CHECK(theta(3).is_theta());
    CHECK(to_text(unit_string(4, 3)) == "0010");
    CHECK(to_text(pair_string(4, 2, 4)) == "0101");
    CHECK_THROWS_AS(pair_string(4, 2, 2), UsageError);
    CHECK_THROWS_AS(unit_string(4, 5), UsageError);
  }

  TEST_CASE("construction rejects out-of-range data")
  {
    CHECK_THROWS_AS(BitString(0, 0), UsageError);
    CHECK_THROWS_AS(BitString(17, 0), UsageError);
    CHECK_THROWS_AS(BitString(2, 0b100), UsageError);
    CHECK_THROWS_AS(bitstring_from_text("01x"), UsageError);
  }

  TEST_CASE("concatenation splits back into blocks")
  {
    const BitString s = concat(bitstring_from_text("10"), bitstring_from_text("011"));
    CHECK(to_text(s) == "10011");
    CHECK(to_text(first_block(s, 2)) == "10");
    CHECK(to_text(second_block(s, 2)) == "011");
  }

  TEST_CASE("permutation acts by moving coordinates")
  {
    // sigma maps position 1 -> 2 -> 3 -> 1.
    const Perm p{1, 2, 0};
    const BitString s = bitstring_from_text("100");
    CHECK(to_text(permute_string(s, p)) == "010");
    CHECK_THROWS_AS(permute_string(s, Perm{0, 0, 1}), UsageError);
  }

  TEST_CASE("subset helpers")
  {
    CHECK(subset_text(0) == "∅");
    CHECK(subset_text(0b101) == "{1,3}");
    CHECK(subset_text(0b10) == "2");
    CHECK(subset_from_indices({1, 3}, 4) == 0b0101u);
    CHECK_THROWS_AS(subset_from_indices({5}, 4), UsageError);
    CHECK(subset_indices(0b110) == std::vector<int>{2, 3});
  }
}
