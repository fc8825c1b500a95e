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
#include "hotkit/choiverify.hpp"

using namespace hotkit;

TEST_SUITE("choiverify")
{
  TEST_CASE("dimension bookkeeping")
  {
    CHECK(SystemDims({2, 2, 3}).superop_dim() == 144);
    CHECK_THROWS_AS(SystemDims({1, 2}), UsageError);
    CHECK_THROWS_AS(SystemDims({8, 8, 8, 8}), UsageError);  // exceeds the cap
    CHECK(SystemDims({8, 8}, 4096).superop_dim() == 4096);
  }

  TEST_CASE("string projections decompose the identity orthogonally")
  {
    const ProjectionFactory factory(SystemDims({2, 3}));
    const int dim = 36;
    double total_rank = 0;
    for (std::uint32_t s = 0; s < 4; ++s) {
      const Matrix& P = factory.build_Ps(BitString(2, s));
      CHECK((P * P - P).frobenius() < 1e-10);
      CHECK(P.max_asymmetry() < 1e-12);
      total_rank += P.trace();
      for (std::uint32_t t = 0; t < s; ++t) {
        CHECK((P * factory.build_Ps(BitString(2, t))).frobenius() < 1e-10);
      }
    }
    CHECK(total_rank == doctest::Approx(dim).epsilon(1e-12));
    CHECK(factory.build_Ps(theta(2)).trace() == doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("the top element maps to the identity superoperator")
  {
    const ProjectionFactory factory(SystemDims({2, 2}));
    const Matrix P = factory.build_Pf(BoolFn::top(2));
    CHECK((P - Matrix::identity(16)).frobenius() < 1e-12);
  }

  TEST_CASE("basis functions map to the trace-and-replace projections")
  {
    const ProjectionFactory factory(SystemDims({2, 3}));
    for (Subset T = 0; T <= full_set(2); ++T) {
      CHECK((factory.build_Pf(basis_pT(2, T)) - factory.build_PiT(T)).frobenius() < 1e-12);
    }
  }

  TEST_CASE("rank formula agrees with the numeric trace")
  {
    const ProjectionFactory factory(SystemDims({2, 3}));
    const BoolFn g2 = catalog::channel_21();
    CHECK(factory.build_Pf(g2).trace() ==
          doctest::Approx(static_cast<double>(factory.expected_rank(g2))).epsilon(1e-12));
    // dim L_{i,0} = 1 and dim L_{i,1} = d_i^2 - 1 per letter.
    CHECK(factory.expected_rank(BoolFn::top(2)) == 36);
    CHECK(factory.expected_rank(BoolFn::bottom(2)) == 1);
  }

  TEST_CASE("normalization constants multiply the input dimensions")
  {
    const ProjectionFactory factory(SystemDims({2, 3}));
    CHECK(factory.trace_constant(catalog::channel_21()) == 3);  // input on system 2
    CHECK(factory.trace_constant(BoolFn::top(2)) == 1);
    CHECK(factory.trace_constant(BoolFn::bottom(2)) == 6);
  }

  TEST_CASE("identities for the two channel types on qubits")
  {
    const ProjectionFactory factory(SystemDims({2, 2}));
    const IdentityReport rep =
        verify_identities(factory, catalog::channel_21(), catalog::channel_12());
    CHECK(rep.pass());
    CHECK(rep.max_residual() < 1e-12);
  }

  TEST_CASE("identities on mixed local dimensions")
  {
    const ProjectionFactory factory(SystemDims({2, 3}));
    const IdentityReport rep =
        verify_identities(factory, catalog::channel_21(), catalog::channel_21());
    CHECK(rep.pass());
  }

  TEST_CASE("expansion bridge for the nonsignalling type on four qubits")
  {
    const ProjectionFactory factory(SystemDims({2, 2, 2, 2}));
    const BoolFn fns = catalog::nonsignalling_type();
    const BoolFn g2 = catalog::channel_21();
    const IdentityReport rep = verify_identities(factory, fns, fns, &g2, &g2);
    CHECK(rep.pass());
    CHECK(rep.bridge_residual < 1e-12);
    CHECK(rep.tensor_residual < 1e-12);
  }

  TEST_CASE("input validation")
  {
    const ProjectionFactory factory(SystemDims({2, 2}));
    CHECK_THROWS_AS(factory.build_Pf(BoolFn::top(3)), UsageError);
    CHECK_THROWS_AS(factory.build_Ps(theta(3)), UsageError);
    CHECK_THROWS_AS(factory.build_PiT(0b100), UsageError);
  }
}
