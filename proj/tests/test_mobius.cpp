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

#include <random>

#include "hotkit/catalog.hpp"
#include "hotkit/mobius.hpp"
#include "hotkit/subtypes.hpp"
#include "hotkit/typeterm.hpp"

using namespace hotkit;

TEST_SUITE("mobius")
{
  TEST_CASE("basis elements transform to a single coefficient")
  {
    for (Subset T = 0; T <= full_set(3); ++T) {
      const MobiusCoeffs mc = mobius_transform(basis_pT(3, T));
      REQUIRE(mc.terms.size() == 1);
      CHECK(mc.terms[0].first == T);
      CHECK(mc.terms[0].second == 1);
    }
  }

  TEST_CASE("channel type expansion")
  {
    const MobiusCoeffs mc = mobius_transform(catalog::channel_21());
    REQUIRE(mc.terms.size() == 3);
    CHECK(mc.coeff(0) == 1);
    CHECK(mc.coeff(0b01) == -1);
    CHECK(mc.coeff(0b11) == 1);
    CHECK(mobius_text(mc) == "1 - p{1} + p{1,2}");
  }

  TEST_CASE("inverse of a single constant term is the top element")
  {
    MobiusCoeffs mc;
    mc.n = 3;
    mc.terms = {{0, 1}};
    CHECK(to_boolfn(mobius_inverse(mc)) == BoolFn::top(3));
  }

  TEST_CASE("the alternating five-term expansion is the two-step comb")
  {
    MobiusCoeffs mc;
    mc.n = 4;
    mc.terms = {{0, 1},
                {subset_from_indices({1}, 4), -1},
                {subset_from_indices({1, 2}, 4), 1},
                {subset_from_indices({1, 2, 3}, 4), -1},
                {full_set(4), 1}};
    const BoolFn beta = to_boolfn(mobius_inverse(mc));
    const ChainSpec spec{4, {0, 0b0001, 0b0011, 0b0111, 0b1111}};
    CHECK(beta == chain_type(spec));
    CHECK(mobius_transform(beta) == mc);
  }

  TEST_CASE("round trip on random integer-valued functions")
  {
    std::mt19937 rng(17);
    for (int k = 0; k < 1000; ++k) {
      const int n = 1 + static_cast<int>(rng() % 5);
      IntTable t = IntTable::zero(n);
      for (auto& v : t.values) v = static_cast<int>(rng() % 7) - 3;
      CHECK(mobius_inverse(mobius_transform(t)) == t);
    }
  }

  TEST_CASE("boolean round trip on random functions")
  {
    std::mt19937 rng(19);
    for (int k = 0; k < 1000; ++k) {
      const int n = 1 + static_cast<int>(rng() % 5);
      std::vector<std::uint32_t> support{0};
      for (std::uint32_t s = 1; s < (1u << n); ++s) {
        if (rng() & 1u) support.push_back(s);
      }
      const BoolFn f = BoolFn::from_support(n, support);
      CHECK(to_boolfn(mobius_inverse(mobius_transform(f))) == f);
    }
  }

  TEST_CASE("fast transform agrees with the defining sum")
  {
    std::mt19937 rng(23);
    for (int k = 0; k < 300; ++k) {
      const int n = 1 + static_cast<int>(rng() % 5);
      IntTable t = IntTable::zero(n);
      for (auto& v : t.values) v = static_cast<int>(rng() % 5) - 2;
      CHECK(mobius_transform(t) == mobius_transform_direct(t));
    }
  }

  TEST_CASE("out-of-range expansions are a hard error")
  {
    MobiusCoeffs mc;
    mc.n = 2;
    mc.terms = {{0, 2}};
    CHECK_THROWS_AS(to_boolfn(mobius_inverse(mc)), InvariantError);
  }

  TEST_CASE("coefficients are reported unclamped outside the type set")
  {
    // Some regular subtypes on four systems leave {-1,0,1}; find a witness and
    // make sure the transform reports it as-is.
    TypeUniverse universe(4);
    int extreme_min = 0, extreme_max = 0;
    std::string witness;
    for (Subset O = 1; O < full_set(4); ++O) {
      for (const auto& f : enumerate_regular(universe, 4, O).members) {
        for (const auto& [T, c] : mobius_transform(f).terms) {
          if (c > extreme_max) {
            extreme_max = c;
            witness = mobius_text(mobius_transform(f));
          }
          extreme_min = std::min(extreme_min, c);
        }
      }
    }
    INFO("witness expansion: ", witness);
    CHECK(extreme_min == -2);
    CHECK(extreme_max == 3);
  }

  TEST_CASE("rendering with magnitudes and empty expansions")
  {
    MobiusCoeffs mc;
    mc.n = 2;
    mc.terms = {{0b01, -2}, {0b10, 1}};
    std::sort(mc.terms.begin(), mc.terms.end(),
              [](const auto& a, const auto& b) { return subset_less(a.first, b.first); });
    CHECK(mobius_text(mc) == "-2 p{1} + p{2}");
    CHECK(mobius_text(MobiusCoeffs{}) == "0");
  }
}
