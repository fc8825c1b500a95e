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

#include "hotkit/catalog.hpp"
#include "hotkit/subtypes.hpp"
#include "hotkit/typeterm.hpp"

using namespace hotkit;

TEST_SUITE("subtypes")
{
  TEST_CASE("the order rises on outputs and falls on inputs")
  {
    const OutputOrder ord(2, 0b01);  // O = {1}
    const auto s00 = bitstring_from_text("00");
    const auto s01 = bitstring_from_text("01");
    const auto s10 = bitstring_from_text("10");
    CHECK(leq_O(ord, s00, s00));
    CHECK(leq_O(ord, s01, s00));
    CHECK(leq_O(ord, s00, s10));
    CHECK(leq_O(ord, s01, s10));
    CHECK_FALSE(leq_O(ord, s10, s00));
    CHECK_THROWS_AS(leq_O(ord, theta(3), theta(2)), UsageError);

    // Complementing the outputs reverses the order.
    const OutputOrder opp(2, 0b10);
    for (std::uint32_t s = 0; s < 4; ++s) {
      for (std::uint32_t t = 0; t < 4; ++t) {
        CHECK(ord.leq(s, t) == opp.leq(t, s));
      }
    }
  }

  TEST_CASE("monotone subtypes")
  {
    TypeUniverse universe(4);
    for (int n = 1; n <= 4; ++n) {
      for (const auto& f : universe.level(n)) CHECK(is_monotone_subtype(f));
    }
    CHECK(is_monotone_subtype(basis_pT(3, 0b011)));
    CHECK_FALSE(is_monotone_subtype(BoolFn::from_support(2, {0b00, 0b11})));
  }

  TEST_CASE("basic strings of the worked examples")
  {
    auto texts = [](const std::vector<BitString>& ss) {
      std::vector<std::string> out;
      for (const auto& s : ss) out.push_back(to_text(s));
      std::sort(out.begin(), out.end());
      return out;
    };
    CHECK(texts(basic_strings(3, 0b101)) == std::vector<std::string>{"011", "110"});
    CHECK(texts(basic_strings(4, 0b0101)) ==
          std::vector<std::string>{"0011", "0110", "0111", "1001", "1100", "1101"});
    CHECK(texts(basic_strings(2, 0b01)) == std::vector<std::string>{"11"});
    CHECK(basic_strings(3, 0).empty());
    CHECK(basic_strings(3, full_set(3)).empty());
  }

  TEST_CASE("principal-upset functions")
  {
    // f at theta is the least element p_I.
    CHECK(f_s(3, 0b101, theta(3)) == basis_pT(3, 0b010));

    // n=3, O={1,3}: the first basic string gives 1 - p{1} + p{1,2}.
    const BoolFn b1 = f_s(3, 0b101, bitstring_from_text("110"));
    CHECK(mobius_text(mobius_transform(b1)) == "1 - p{1} + p{1,2}");

    // n=4, O={1,3}: f_1101 = 1 - p{1} + p{1,2,4}.
    const BoolFn f1101 = f_s(4, 0b0101, bitstring_from_text("1101"));
    CHECK(mobius_text(mobius_transform(f1101)) == "1 - p{1} + p{1,2,4}");

    // Strings strictly below theta are rejected.
    CHECK_THROWS_AS(f_s(3, 0b101, bitstring_from_text("010")), UsageError);
  }

  TEST_CASE("the two-step comb splits into basic pieces")
  {
    // beta = 1 - p{1} + p{1,2} - p{1,2,3} + p{1,2,3,4} equals f_1101 v f_0011.
    const ChainSpec comb{4, {0, 0b0001, 0b0011, 0b0111, 0b1111}};
    const BoolFn beta = chain_type(comb);
    const BoolFn f1101 = f_s(4, 0b0101, bitstring_from_text("1101"));
    const BoolFn f0011 = f_s(4, 0b0101, bitstring_from_text("0011"));
    CHECK(beta == join(f1101, f0011));
    CHECK(mobius_text(mobius_transform(f0011)) == "p{2} - p{2,3} + p{2,3,4}");
  }

  TEST_CASE("regular lattices of the worked examples")
  {
    TypeUniverse universe(4);
    const auto r3 = enumerate_regular(universe, 3, 0b101);
    CHECK(r3.members.size() == 5);
    // The five members: bottom, top, the two chain generators and their meet.
    const BoolFn beta1 = f_s(3, 0b101, bitstring_from_text("110"));
    const BoolFn beta2 = f_s(3, 0b101, bitstring_from_text("011"));
    for (const BoolFn& m : {basis_pT(3, 0b010), complement(basis_pT(3, 0b101)), beta1, beta2,
                            meet(beta1, beta2)}) {
      CHECK(std::binary_search(r3.members.begin(), r3.members.end(), m));
    }

    CHECK(enumerate_regular(universe, 4, 0b0101).members.size() == 50);

    // Degenerate output sets give the singletons.
    CHECK(enumerate_regular(universe, 3, full_set(3)).members ==
          std::vector<BoolFn>{BoolFn::top(3)});
    CHECK(enumerate_regular(universe, 3, 0).members == std::vector<BoolFn>{BoolFn::bottom(3)});
  }

  TEST_CASE("three enumeration routes agree at n=3")
  {
    TypeUniverse universe(3);
    for (Subset O = 0; O <= full_set(3); ++O) {
      const auto closure = lattice_closure(universe.with_outputs(3, O));
      const auto dfs = enumerate_monotone(3, O);
      CHECK(closure == dfs);
      const auto gens = lattice_closure(regular_generators(3, O));
      CHECK(gens == dfs);
    }
  }

  TEST_CASE("generators are short chains")
  {
    for (const auto& g : regular_generators(4, 0b0101)) {
      const auto spec = chain_of(g);
      REQUIRE(spec.has_value());
      CHECK(spec->sets.size() <= 3);
      CHECK(io_split(g).outputs == 0b0101);
    }
  }

  TEST_CASE("upset enumeration matches the flip predicate")
  {
    for (Subset O = 0; O <= full_set(3); ++O) {
      const auto members = enumerate_monotone(3, O);
      for (const auto& f : members) {
        CHECK(is_monotone_subtype(f));
        CHECK(io_split(f).outputs == O);
      }
    }
  }

  TEST_CASE("type functions, regular subtypes and the subtype interval")
  {
    // On two systems the three sets coincide for every output set; on three
    // systems both inclusions are strict in the nontrivial cases.
    TypeUniverse universe(3);
    auto interval = [](int n, Subset O) {
      const BoolFn lo = basis_pT(n, full_set(n) & ~O);
      const BoolFn hi = complement(basis_pT(n, O));
      std::vector<BoolFn> out;
      for (std::uint32_t u = 0; u < (1u << ((1u << n) - 1)); ++u) {
        std::vector<std::uint32_t> support;
        const std::uint32_t table = 1u | (u << 1);
        for (std::uint32_t s = 0; s < (1u << n); ++s) {
          if ((table >> s) & 1u) support.push_back(s);
        }
        const BoolFn f = BoolFn::from_support(n, support);
        if (leq(lo, f) && leq(f, hi)) out.push_back(f);
      }
      std::sort(out.begin(), out.end());
      return out;
    };
    for (Subset O = 0; O <= full_set(2); ++O) {
      auto types = universe.with_outputs(2, O);
      std::sort(types.begin(), types.end());
      const auto regulars = enumerate_monotone(2, O);
      CHECK(types == regulars);
      CHECK(regulars == interval(2, O));
    }
    for (Subset O = 1; O < full_set(3); ++O) {
      const auto types = universe.with_outputs(3, O);
      const auto regulars = enumerate_monotone(3, O);
      CHECK(types.size() < regulars.size());
      CHECK(regulars.size() < interval(3, O).size());
    }
  }

  TEST_CASE("expansion coefficients of regular subtypes beyond the unit range")
  {
    TypeUniverse universe(3);
    // Two systems: every regular subtype expands with coefficients in {-1,0,1}.
    for (Subset O = 0; O <= full_set(2); ++O) {
      for (const auto& f : enumerate_regular(universe, 2, O).members) {
        CHECK(coeffs_in_unit_range(mobius_transform(f)));
      }
    }
    // Three systems already break the range: the join of the chains
    // {2}<{1,2}<[3] and {3}<{1,3}<[3] is regular with top coefficient 2.
    const BoolFn g1 = chain_type(ChainSpec{3, {0b010, 0b011, 0b111}});
    const BoolFn g2 = chain_type(ChainSpec{3, {0b100, 0b101, 0b111}});
    CHECK(universe.contains(g1));
    CHECK(universe.contains(g2));
    const BoolFn witness = join(g1, g2);
    CHECK(is_monotone_subtype(witness));
    CHECK(mobius_transform(witness).coeff(full_set(3)) == 2);
    // The complement picks up the +1 from the bottom term and lands back inside.
    CHECK(coeffs_in_unit_range(mobius_transform(complement(witness))));
  }
}
