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

#include "hotkit/boolfn.hpp"
#include "hotkit/catalog.hpp"

using namespace hotkit;

namespace {

BoolFn random_fn(int n, std::mt19937& rng)
{
  std::vector<std::uint32_t> support{0};
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    if (rng() & 1u) support.push_back(s);
  }
  return BoolFn::from_support(n, support);
}

}  // namespace

TEST_SUITE("boolfn")
{
  TEST_CASE("evaluation of the extreme elements")
  {
    const BoolFn top = BoolFn::top(3);
    const BoolFn bot = BoolFn::bottom(3);
    for (std::uint32_t s = 0; s < 8; ++s) {
      CHECK(eval(top, BitString(3, s)) == 1);
      CHECK(eval(bot, BitString(3, s)) == (s == 0 ? 1 : 0));
    }
    CHECK_THROWS_AS(eval(top, theta(2)), UsageError);
  }

  TEST_CASE("channel type evaluates per its expansion")
  {
    const BoolFn g2 = catalog::channel_21();  // 1 - p{1} + p{1,2}
    CHECK(eval(g2, bitstring_from_text("01")) == 0);
    CHECK(eval(g2, bitstring_from_text("10")) == 1);
    CHECK(eval(g2, bitstring_from_text("00")) == 1);
    CHECK(eval(g2, bitstring_from_text("11")) == 1);
  }

  TEST_CASE("basis functions")
  {
    CHECK(basis_pT(3, 0) == BoolFn::top(3));
    CHECK(basis_pT(3, full_set(3)) == BoolFn::bottom(3));
    const BoolFn p1 = basis_pT(2, 0b01);
    CHECK(p1.support() == std::vector<std::uint32_t>{0b00, 0b10});  // strings 00 and 01
    CHECK(to_text(BitString(2, 0b10)) == "01");
    CHECK_THROWS_AS(basis_pT(2, 0b100), UsageError);
  }

  TEST_CASE("combine covers the whole operation table")
  {
    const BoolFn g2 = catalog::channel_21();
    const BoolFn f_ns = combine(g2, g2, BinaryOp::tensor);
    CHECK(eval(f_ns, bitstring_from_text("0110")) == 0);
    CHECK(combine(g2, g2, BinaryOp::meet) == g2);
    CHECK(combine(g2, g2, BinaryOp::join) == g2);
    CHECK_THROWS_AS(combine(BoolFn::top(2), BoolFn::top(3), BinaryOp::meet), UsageError);

    // p_1 <| 1_1 is the two-system basis function with support {00, 01}.
    const BoolFn left = combine(BoolFn::bottom(1), BoolFn::top(1), BinaryOp::causal_left);
    CHECK(left == basis_pT(2, 0b01));

    // The two causal orders read opposite blocks.
    const BoolFn right = combine(BoolFn::bottom(1), BoolFn::top(1), BinaryOp::causal_right);
    CHECK(eval(right, bitstring_from_text("01")) == 1);
    CHECK(eval(right, bitstring_from_text("10")) == 0);
  }

  TEST_CASE("complement pairs the extremes and is an involution")
  {
    CHECK(complement(BoolFn::top(4)) == BoolFn::bottom(4));
    CHECK(complement(basis_pT(2, 0b01)) == catalog::channel_21());
    std::mt19937 rng(7);
    for (int k = 0; k < 50; ++k) {
      const BoolFn f = random_fn(4, rng);
      CHECK(complement(complement(f)) == f);
      CHECK(eval(complement(f), theta(4)) == 1);
    }
  }

  TEST_CASE("complement distributes over the causal product")
  {
    std::mt19937 rng(11);
    for (int k = 0; k < 100; ++k) {
      const BoolFn f = random_fn(2, rng), g = random_fn(3, rng);
      CHECK(complement(causal_product(f, g, true)) ==
            causal_product(complement(f), complement(g), true));
    }
  }

  TEST_CASE("permutation is a group action")
  {
    const BoolFn g2 = catalog::channel_21();
    CHECK(permute(g2, identity_perm(2)) == g2);
    const Perm swap{1, 0};
    CHECK(permute(g2, swap) == catalog::channel_12());
    std::mt19937 rng(3);
    for (int k = 0; k < 50; ++k) {
      const BoolFn f = random_fn(4, rng);
      Perm p = identity_perm(4);
      std::shuffle(p.begin(), p.end(), rng);
      CHECK(permute(permute(f, p), inverse_perm(p)) == f);
    }
    CHECK_THROWS_AS(permute(g2, Perm{0, 0}), UsageError);
    CHECK_THROWS_AS(permute(g2, Perm{0, 1, 2}), UsageError);
  }

  TEST_CASE("input/output split")
  {
    const IOSplit io_top = io_split(BoolFn::top(3));
    CHECK(io_top.inputs == 0);
    CHECK(io_top.outputs == full_set(3));

    const IOSplit io_g2 = io_split(catalog::channel_21());
    CHECK(subset_indices(io_g2.inputs) == std::vector<int>{2});
    CHECK(subset_indices(io_g2.outputs) == std::vector<int>{1});

    std::mt19937 rng(5);
    for (int k = 0; k < 100; ++k) {
      const BoolFn f = random_fn(4, rng);
      const IOSplit a = io_split(f), b = io_split(complement(f));
      CHECK(a.inputs == b.outputs);
      CHECK(a.outputs == b.inputs);
    }
  }

  TEST_CASE("subtype interval predicate")
  {
    CHECK(is_subtype(basis_pT(4, 0b0110)));
    CHECK(is_subtype(catalog::process_matrix_type()));
    const BoolFn bad = BoolFn::from_support(2, {0b00, 0b11});
    CHECK_FALSE(is_subtype(bad));
  }

  TEST_CASE("support bookkeeping")
  {
    const BoolFn f = BoolFn::from_support(3, {0, 5, 6});
    CHECK(f.support_size() == 3);
    CHECK(f.support() == std::vector<std::uint32_t>{0, 5, 6});
    CHECK_THROWS_AS(BoolFn::from_support(2, {1, 2}), UsageError);  // theta missing
    CHECK_THROWS_AS(BoolFn::from_support(2, {0, 4}), UsageError);  // out of range
  }

  TEST_CASE("order and products interact as a linearly distributive algebra")
  {
    std::mt19937 rng(13);
    for (int k = 0; k < 200; ++k) {
      const BoolFn f = random_fn(2, rng), g = random_fn(2, rng);
      CHECK(complement(join(f, g)) == meet(complement(f), complement(g)));
      CHECK(complement(meet(f, g)) == join(complement(f), complement(g)));
      const BoolFn h = random_fn(2, rng);
      CHECK(leq(tensor(f, h), par(f, h)));
    }
  }
}
