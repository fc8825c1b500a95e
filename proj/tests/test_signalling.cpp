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
#include "hotkit/signalling.hpp"

using namespace hotkit;

TEST_SUITE("signalling")
{
  TEST_CASE("constant channels never signal, full channels always do")
  {
    const BoolFn constant = basis_pT(3, 0b011);
    for (int i : {1, 2}) {
      CHECK(no_signal(constant, i, 3));
    }
    const BoolFn full = complement(basis_pT(3, 0b100));
    CHECK_FALSE(no_signal(full, 1, 3));
    CHECK_FALSE(no_signal(full, 2, 3));
    const auto matrix = signalling_matrix(full, TypeStatus::certified_type);
    for (const auto& e : matrix.entries) CHECK(e.signals);
  }

  TEST_CASE("nonsignalling channels versus process matrices")
  {
    const BoolFn fns = catalog::nonsignalling_type();
    CHECK_FALSE(no_signal(fns, 2, 1));
    CHECK_FALSE(no_signal(fns, 4, 3));
    CHECK(no_signal(fns, 2, 3));
    CHECK(no_signal(fns, 4, 1));

    const BoolFn fpm = catalog::process_matrix_type();
    CHECK(no_signal(fpm, 2, 1));
    CHECK(no_signal(fpm, 4, 3));
    CHECK_FALSE(no_signal(fpm, 2, 3));
    CHECK_FALSE(no_signal(fpm, 4, 1));
  }

  TEST_CASE("criterion preconditions")
  {
    const BoolFn fns = catalog::nonsignalling_type();
    CHECK_THROWS_WITH_AS(no_signal(fns, 1, 2), doctest::Contains("not an input"), UsageError);
    CHECK_THROWS_WITH_AS(no_signal(fns, 2, 4), doctest::Contains("not an output"), UsageError);
    const BoolFn irregular = BoolFn::from_support(2, {0b00, 0b11});
    CHECK_THROWS_WITH_AS(no_signal(irregular, 1, 2), doctest::Contains("regular"), UsageError);
    CHECK_THROWS_AS(signalling_matrix(irregular), UsageError);
  }

  TEST_CASE("rank route on the adapters")
  {
    const StructurePoset a1(catalog::adapter_small_type());
    CHECK_FALSE(no_signal_by_rank(a1, 6, 7));  // signals
    CHECK(no_signal_by_rank(a1, 6, 5));
    CHECK_FALSE(no_signal_by_rank(a1, 8, 5));
    CHECK(no_signal_by_rank(a1, 8, 7));

    // Free outputs never receive signals.
    const StructurePoset cst(basis_pT(2, 0b01));
    CHECK(no_signal_by_rank(cst, 1, 2));

    // The rank route refuses unknown or refuted membership.
    CHECK_THROWS_AS(no_signal_by_rank(a1, 6, 7, TypeStatus::unknown), UsageError);
    CHECK_THROWS_AS(no_signal_by_rank(a1, 6, 7, TypeStatus::certified_not_type), UsageError);
  }

  TEST_CASE("matrix entries carry the witnessing rank for type functions")
  {
    const auto m = signalling_matrix(catalog::process_matrix_type(),
                                     TypeStatus::certified_type);
    CHECK(m.at(2, 3).signals);
    REQUIRE(m.at(2, 3).pair_rank.has_value());
    CHECK(*m.at(2, 3).pair_rank == -1);
    CHECK_FALSE(m.at(2, 1).signals);
    CHECK(*m.at(2, 1).pair_rank == 0);

    const auto plain = signalling_matrix(catalog::process_matrix_type());
    CHECK_FALSE(plain.at(2, 3).pair_rank.has_value());
  }

  TEST_CASE("the process-matrix type signals exactly like the relabelled "
            "nonsignalling type")
  {
    const auto a = signalling_matrix(catalog::process_matrix_type());
    const auto b = signalling_matrix(catalog::relabelled_nonsignalling_type());
    CHECK(a.same_relations(b));
  }

  TEST_CASE("the large adapter's distinguished rows")
  {
    const auto m = signalling_matrix(catalog::adapter_large_type(),
                                     TypeStatus::certified_type);
    for (int j : {2, 4, 5, 7, 9, 12}) CHECK(m.signals(11, j));
    for (int i : {1, 3, 6, 8, 10, 11}) CHECK(m.signals(i, 12));
  }

  TEST_CASE("grid rendering is deterministic and shows both verdicts")
  {
    const BoolFn fns = catalog::nonsignalling_type();
    const auto m = signalling_matrix(fns, TypeStatus::certified_type);
    const std::string text = signalling_text(m);
    CHECK(text == signalling_text(signalling_matrix(fns, TypeStatus::certified_type)));
    CHECK(text.find("⇝") != std::string::npos);
    CHECK(text.find("∅") != std::string::npos);
    CHECK(text.find("[r=0]") != std::string::npos);
  }
}
