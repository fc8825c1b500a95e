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
#include "hotkit/normalform.hpp"

using namespace hotkit;

TEST_SUITE("normalform")
{
  TEST_CASE("label chains convert to subset chains and back")
  {
    const LabelChain lc = catalog::lc(false, {{2}, {1}, {4}});
    const ChainSpec spec = chain_from_labels(lc, 4);
    CHECK(spec.sets == std::vector<Subset>{0b0010, 0b0011, 0b1011});
    CHECK(labels_of_chain(spec) == lc);
    CHECK(label_chain_text(lc) == "2-1-4");
    CHECK(mobius_text(mobius_transform(chain_type(spec))) == "p{2} - p{1,2} + p{1,2,4}");

    const LabelChain grouped = catalog::lc(true, {{12}, {8}, {7}, {10}, {9}, {1, 6}, {4}, {3},
                                                  {2, 5}, {11}});
    const ChainSpec gspec = chain_from_labels(grouped, 12);
    CHECK(gspec.sets.size() == 11);
    CHECK(label_chain_text(labels_of_chain(gspec)) ==
          "∅-12-8-7-10-9-{1,6}-4-3-{2,5}-11");
  }

  TEST_CASE("label chains validate steps and parity")
  {
    CHECK_THROWS_WITH_AS(chain_from_labels(catalog::lc(true, {{1}}), 2),
                         doctest::Contains("odd step count"), UsageError);
    CHECK_THROWS_AS(chain_from_labels(catalog::lc(false, {{1}, {1}}), 2), UsageError);
    CHECK_THROWS_AS(chain_from_labels(catalog::lc(false, {{5}}), 2), UsageError);
    CHECK_THROWS_AS(chain_from_labels(LabelChain{}, 2), UsageError);
  }

  TEST_CASE("eight-step adapter chain is a valid causally ordered type")
  {
    const auto rows = catalog::adapter_small_chains();
    const ChainSpec spec = chain_from_labels(rows[0][0], 8);  // {}-2-6-5-8-7-1-4-3
    const BoolFn f = chain_type(spec);
    CHECK(io_split(f).inputs == io_split(catalog::adapter_small_type()).inputs);
  }

  TEST_CASE("evaluation of worked decompositions")
  {
    const auto pm = catalog::process_matrix_chains();
    NormalForm nf;
    nf.n = 4;
    nf.leaves = {chain_from_labels(pm[0], 4), chain_from_labels(pm[1], 4)};
    nf.terms = {{0}, {1}};
    CHECK(eval_normal_form(nf) == catalog::process_matrix_type());

    const auto ns = catalog::nonsignalling_chains();
    NormalForm meet_form;
    meet_form.n = 4;
    meet_form.leaves = {chain_from_labels(ns[0], 4), chain_from_labels(ns[1], 4)};
    meet_form.terms = {{0, 1}};
    CHECK(eval_normal_form(meet_form) == catalog::nonsignalling_type());
  }

  TEST_CASE("evaluation errors name the offending leaf or term")
  {
    NormalForm nf;
    nf.n = 2;
    nf.leaves = {ChainSpec{2, {0b01, 0b11}}};  // even number of subsets: invalid
    nf.terms = {{0}};
    CHECK_THROWS_WITH_AS(eval_normal_form(nf), doctest::Contains("leaf 0"), UsageError);

    NormalForm empty;
    empty.n = 2;
    CHECK_THROWS_AS(eval_normal_form(empty), UsageError);

    NormalForm dangling;
    dangling.n = 2;
    dangling.leaves = {ChainSpec{2, {0}}};
    dangling.terms = {{3}};
    CHECK_THROWS_AS(eval_normal_form(dangling), UsageError);
  }

  TEST_CASE("minimax needs a grid")
  {
    NormalForm ragged;
    ragged.n = 4;
    const auto pm = catalog::process_matrix_chains();
    ragged.leaves = {chain_from_labels(pm[0], 4), chain_from_labels(pm[1], 4)};
    ragged.terms = {{0, 1}, {0}};
    CHECK_FALSE(ragged.is_grid());
    CHECK_THROWS_WITH_AS(verify_minimax(ragged), doctest::Contains("grid"), UsageError);

    NormalForm column;
    column.n = 4;
    column.leaves = ragged.leaves;
    column.terms = {{0}, {1}};  // degenerate 2x1 grid
    CHECK(verify_minimax(column));
  }

  TEST_CASE("synthesis of causally ordered types is a single leaf")
  {
    TypeUniverse universe(4);
    const NormalForm nf = synthesize(catalog::channel_21(), universe);
    CHECK(nf.leaves.size() == 1);
    CHECK(nf.terms == std::vector<std::vector<int>>{{0}});
    CHECK(eval_normal_form(nf) == catalog::channel_21());
  }

  TEST_CASE("synthesis of the four-system examples")
  {
    TypeUniverse universe(4);
    const NormalForm nf = synthesize(catalog::nonsignalling_type(), universe);
    CHECK(nf.leaves.size() <= 2);
    CHECK(eval_normal_form(nf) == catalog::nonsignalling_type());
    for (const auto& leaf : nf.leaves) {
      CHECK(io_split(chain_type(leaf)).outputs ==
            io_split(catalog::nonsignalling_type()).outputs);
    }

    const NormalForm pm = synthesize(catalog::process_matrix_type(), universe);
    CHECK(pm.leaves.size() <= 2);
    CHECK(eval_normal_form(pm) == catalog::process_matrix_type());
  }

  TEST_CASE("synthesis is sound on a five-system sample")
  {
    TypeUniverse universe(5);
    std::mt19937 rng(31);
    const auto& level = universe.level(5);
    for (int k = 0; k < 300; ++k) {
      const BoolFn& f = level[rng() % level.size()];
      const NormalForm nf = synthesize(f, universe);
      CHECK(eval_normal_form(nf) == f);
      CHECK(nf.leaves.size() <= StructurePoset(f).maximal_chains(true).size());
    }
    CHECK_THROWS_AS(synthesize(BoolFn::from_support(2, {0b00, 0b11}), universe), UsageError);
  }

  TEST_CASE("chain proposals reproduce the four-system worked leaves")
  {
    auto texts = [](const std::vector<LabelChain>& chains) {
      std::vector<std::string> out;
      for (const auto& c : chains) out.push_back(label_chain_text(c));
      std::sort(out.begin(), out.end());
      return out;
    };
    const auto ns = propose_chain_candidates(StructurePoset(catalog::nonsignalling_type()));
    CHECK(texts(ns) == std::vector<std::string>{"∅-1-2-3-4", "∅-3-4-1-2"});
    const auto pm = propose_chain_candidates(StructurePoset(catalog::process_matrix_type()));
    CHECK(texts(pm) == std::vector<std::string>{"2-1-4", "4-3-2"});
    // Proposals are candidates: they must at least convert to valid chains here.
    for (const auto& c : pm) CHECK_NOTHROW(chain_from_labels(c, 4));
  }

  TEST_CASE("rendering")
  {
    const auto pm = catalog::process_matrix_chains();
    NormalForm nf;
    nf.n = 4;
    nf.leaves = {chain_from_labels(pm[0], 4), chain_from_labels(pm[1], 4)};
    nf.terms = {{0}, {1}};
    CHECK(normal_form_text(nf) == "2-1-4 ∨ 4-3-2");
  }
}
