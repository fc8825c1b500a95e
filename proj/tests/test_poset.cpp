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

#include <set>

#include "hotkit/catalog.hpp"
#include "hotkit/poset.hpp"
#include "hotkit/typeterm.hpp"

using namespace hotkit;

namespace {

std::vector<std::string> chain_texts(const StructurePoset& P, bool reduced)
{
  std::vector<std::string> out;
  for (const auto& chain : P.maximal_chains(reduced)) out.push_back(P.chain_label_text(chain));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("poset")
{
  TEST_CASE("basis functions have a single element of rank zero")
  {
    for (Subset T = 0; T <= full_set(3); ++T) {
      const StructurePoset P(basis_pT(3, T));
      REQUIRE(P.size() == 1);
      CHECK(P.elements()[0].set == T);
      CHECK(P.elements()[0].rank == 0);
      CHECK(P.elements()[0].labels == T);
      CHECK(P.top_rank() == 0);
      CHECK(P.valid());
      CHECK(P.free_outputs() == (full_set(3) & ~T));
    }
  }

  TEST_CASE("the superchannel poset is the five-element chain")
  {
    const StructurePoset P(eval_term("(A3 -> A2) -> (A4 -> A1)"));
    REQUIRE(P.size() == 5);
    CHECK(P.totally_ordered());
    CHECK(P.reduced_equals_full());
    std::vector<Subset> sets;
    for (const auto& e : P.elements()) sets.push_back(e.set);
    CHECK(sets == std::vector<Subset>{0, 0b0001, 0b0011, 0b0111, 0b1111});
  }

  TEST_CASE("the process-matrix reduced poset is two disjoint short chains")
  {
    const StructurePoset P(catalog::process_matrix_type());
    CHECK(P.size() == 7);
    CHECK(P.valid());
    CHECK(chain_texts(P, true) == std::vector<std::string>{"2-1", "4-3"});
  }

  TEST_CASE("index ranks")
  {
    // Channels {2} -> {1,3}: the chain {} < {1,3} < [3]; every output has rank one.
    const BoolFn channels = complement(basis_pT(3, 0b101));
    const StructurePoset P(channels);
    CHECK(P.index_rank(0) == 1);
    CHECK(P.index_rank(2) == 1);
    CHECK(P.index_rank(1) == 2);

    // Free outputs sit one rank above the top.
    const StructurePoset Q(basis_pT(3, 0b001));
    CHECK(Q.free_outputs() == 0b110);
    CHECK(Q.index_rank(1) == Q.top_rank() + 1);

    // Input/output parity of the index rank.
    const StructurePoset A(catalog::adapter_large_type());
    const IOSplit io = io_split(catalog::adapter_large_type());
    for (int i = 0; i < 12; ++i) {
      CHECK((A.index_rank(i) % 2 == 0) == contains(io.inputs, i));
    }
    // Index 11 is even-ranked and labels a maximal element.
    CHECK(A.index_rank(10) % 2 == 0);
    const auto tops = A.labelled_by(10);
    REQUIRE(!tops.empty());
    for (int id : tops) {
      for (const auto& e : A.elements()) {
        const bool strictly_above =
            subset_of(A.elements()[id].set, e.set) && e.set != A.elements()[id].set;
        CHECK_FALSE(strictly_above);
      }
    }
  }

  TEST_CASE("pair ranks of the worked examples")
  {
    const StructurePoset Pns(catalog::nonsignalling_type());
    CHECK(Pns.pair_rank(1, 2) == 0);  // indices 2,3
    CHECK(Pns.pair_rank(0, 3) == 0);  // indices 1,4

    const StructurePoset Ppm(catalog::process_matrix_type());
    CHECK(Ppm.pair_rank(1, 2) == -1);
    CHECK(Ppm.pair_rank(3, 0) == -1);

    const StructurePoset Pa2(catalog::adapter_large_type());
    CHECK(Pa2.pair_rank(0, 1) == 3);  // indices 1,2
    CHECK(Pa2.pair_rank(0, 3) == 2);  // indices 1,4
    CHECK_THROWS_AS(Pa2.pair_rank(3, 3), UsageError);
  }

  TEST_CASE("maximal chains of the worked examples")
  {
    const StructurePoset chain(catalog::channel_21());
    CHECK(chain.maximal_chains(true).size() == 1);
    CHECK(chain.maximal_chains(false).size() == 1);

    const StructurePoset Pns(catalog::nonsignalling_type());
    CHECK(chain_texts(Pns, true) ==
          std::vector<std::string>{"∅-1-2", "∅-3-4"});

    CHECK(StructurePoset(catalog::adapter_small_type()).maximal_chains(true).size() == 6);
    CHECK(StructurePoset(catalog::adapter_large_type()).maximal_chains(true).size() == 4);
    CHECK(chain_texts(StructurePoset(catalog::past_future_type()), true) ==
          std::vector<std::string>{"∅-6-2-1-5", "∅-6-4-3-5"});
  }

  TEST_CASE("diagram output")
  {
    const std::string top_dot = StructurePoset(BoolFn::top(2)).to_dot(true);
    CHECK(top_dot == "digraph hasse {\n  rankdir=BT;\n  node [shape=circle fontsize=11];\n"
                     "  v0 [label=\"∅\" color=black fontcolor=black];\n}\n");

    // Covers only: the four-element diamond of the nonsignalling type has four
    // reduced edges and no transitive shortcuts.
    const StructurePoset Pns(catalog::nonsignalling_type());
    CHECK(Pns.covers(true).size() == 4);
    const std::string dot = Pns.to_dot(false);
    CHECK(dot.find("color=gray") != std::string::npos);
    CHECK(dot.find("color=blue") != std::string::npos);
    CHECK(dot.find("color=red") != std::string::npos);

    // The reduced adapter diagram has two branches joined at the least element.
    const StructurePoset Pa1(catalog::adapter_small_type());
    int bottom_out_degree = 0;
    for (const auto& [a, b] : Pa1.covers(true)) {
      if (Pa1.elements()[a].set == 0) ++bottom_out_degree;
    }
    CHECK(bottom_out_degree == 2);
  }

  TEST_CASE("byte-identical diagrams on repeated calls")
  {
    const BoolFn f = catalog::adapter_small_type();
    CHECK(StructurePoset(f).to_dot(true) == StructurePoset(f).to_dot(true));
  }

  TEST_CASE("non-type inputs are reported, not rejected")
  {
    // Both factors non-ordered: the one-way product of two process-matrix types
    // is not a type function, and its poset breaks the chain-intersection rule.
    const BoolFn fpm = catalog::process_matrix_type();
    const BoolFn h = causal_product(fpm, fpm, true);
    const StructurePoset P(h);
    CHECK(coeffs_in_unit_range(mobius_transform(h)));
    CHECK(P.valid());  // graded with exact reconstruction...
    CHECK_FALSE(check_ypsilon(P).pass);  // ...but not a type structure
    CHECK_FALSE(check_ypsilon(P).detail.empty());

    // The support {00,11} expands with a coefficient 2, so reconstruction as an
    // alternating sum fails and the issue is reported.
    const BoolFn odd = BoolFn::from_support(2, {0b00, 0b11});
    const StructurePoset Q(odd);
    CHECK_FALSE(Q.valid());
    CHECK_THROWS_AS(Q.require_valid(), InvariantError);
  }

  TEST_CASE("operation cases against directly computed posets")
  {
    const BoolFn g2 = catalog::channel_21();
    const BoolFn fpm = catalog::process_matrix_type();
    CHECK(poset_op_check(fpm, nullptr, PosetOp::complement).pass);
    const Perm swap{1, 0, 3, 2};
    CHECK(poset_op_check(fpm, nullptr, PosetOp::permute, &swap).pass);
    CHECK(poset_op_check(g2, &g2, PosetOp::tensor).pass);
    CHECK(poset_op_check(g2, &g2, PosetOp::causal).pass);
    CHECK_THROWS_AS(poset_op_check(g2, nullptr, PosetOp::tensor), UsageError);
    CHECK_THROWS_AS(poset_op_check(g2, nullptr, PosetOp::permute), UsageError);

    // The tensor case rebuilds the nonsignalling diagram.
    CHECK(check_pf0_tensor(g2, g2).pass);
    // The causal chain case stacks the channel chains.
    const StructurePoset stacked(causal_product(g2, g2, true));
    CHECK(stacked.totally_ordered());
    CHECK(chain_texts(stacked, true) == std::vector<std::string>{"∅-1-2-3-4"});
  }

  TEST_CASE("global past and future around the process matrices")
  {
    // 1_1 <| f_pm <| p_1, relabelled: past labels 5, future labels 6. The earliest
    // system sits at the top of the chains, the latest just above the bottom.
    const StructurePoset P(catalog::past_future_type());
    CHECK(P.valid());
    CHECK(P.index_rank(4) == P.top_rank());  // the global past
    CHECK(P.index_rank(5) == 1);             // the global future
    const IOSplit io = io_split(catalog::past_future_type());
    CHECK(subset_indices(io.inputs) == std::vector<int>{2, 4, 5});
    CHECK(subset_indices(io.outputs) == std::vector<int>{1, 3, 6});
  }
}
