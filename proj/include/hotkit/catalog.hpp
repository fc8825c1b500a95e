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

#pragma once

#include <vector>

#include "hotkit/boolfn.hpp"
#include "hotkit/normalform.hpp"
#include "hotkit/typeterm.hpp"

namespace hotkit::catalog {

/*! \brief Type of channels 2 -> 1 on two systems: 1 - p{1} + p{1,2}. */
inline BoolFn channel_21() { return eval_term("A2 -> A1"); }

/*! \brief Type of channels 1 -> 2 on two systems: 1 - p{2} + p{1,2}. */
inline BoolFn channel_12() { return eval_term("A1 -> A2"); }

/*! \brief Nonsignalling channels {2,4} -> {1,3}: the product of two channel types. */
inline BoolFn nonsignalling_type() { return eval_term("(A2 -> A1) * (A4 -> A3)"); }

/*! \brief Process matrices on four systems: the dual of a product of channel types. */
inline BoolFn process_matrix_type() { return eval_term("~((A1 -> A2) * (A3 -> A4))"); }

/*! \brief The nonsignalling type with systems 2 and 4 exchanged; dominates the
    process-matrix type everywhere except at the all-ones string. */
inline BoolFn relabelled_nonsignalling_type()
{
  return permute(nonsignalling_type(), Perm{0, 3, 2, 1});
}

/*! \brief Process matrices with a global past (system 5) and future (system 6):
    states <| process matrices <| effects, relabelled so the matrix keeps 1..4. */
inline BoolFn past_future_type()
{
  const BoolFn raw = causal_product(
      BoolFn::top(1), causal_product(process_matrix_type(), BoolFn::bottom(1), true), true);
  return permute(raw, Perm{1, 2, 3, 4, 5, 0});
}

/*! \brief Transformer of process matrices to process matrices, eight systems: the
    input matrix occupies 1..4 and the output matrix 5..8. */
inline BoolFn adapter_small_type()
{
  const BoolFn pm = process_matrix_type();
  return complement(tensor(pm, complement(pm)));
}

/*! \brief Transformer of past/future process matrices, twelve systems: the input
    matrix occupies 1..6 and the output matrix 7..12. */
inline BoolFn adapter_large_type()
{
  const BoolFn pf = past_future_type();
  return complement(tensor(pf, complement(pf)));
}

inline LabelChain lc(bool leading_empty, std::vector<std::vector<int>> steps)
{
  LabelChain out;
  out.leading_empty = leading_empty;
  for (const auto& step : steps) {
    Subset s = 0;
    for (int i : step) s |= 1u << (i - 1);
    out.labels.push_back(s);
  }
  return out;
}

/*! \brief The two chains whose meet is the nonsignalling type. */
inline std::vector<LabelChain> nonsignalling_chains()
{
  return {lc(true, {{1}, {2}, {3}, {4}}), lc(true, {{3}, {4}, {1}, {2}})};
}

/*! \brief The two chains whose join is the process-matrix type. */
inline std::vector<LabelChain> process_matrix_chains()
{
  return {lc(false, {{2}, {1}, {4}}), lc(false, {{4}, {3}, {2}})};
}

/*! \brief The two chains whose join is the past/future type. */
inline std::vector<LabelChain> past_future_chains()
{
  return {lc(true, {{6}, {2}, {1}, {4}, {3}, {5}}), lc(true, {{6}, {4}, {3}, {2}, {1}, {5}})};
}

/*! \brief Chains for the eight-system adapter, indexed [branch][variant]:
    branch 1 starts at label 2, branch 2 at label 4. */
inline std::vector<std::vector<LabelChain>> adapter_small_chains()
{
  return {
      {lc(true, {{2}, {6}, {5}, {8}, {7}, {1}, {4}, {3}}),
       lc(true, {{2}, {8}, {7}, {6}, {5}, {1}, {4}, {3}}),
       lc(true, {{2}, {1}, {4}, {6}, {5}, {8}, {7}, {3}})},
      {lc(true, {{4}, {6}, {5}, {8}, {7}, {3}, {2}, {1}}),
       lc(true, {{4}, {8}, {7}, {6}, {5}, {3}, {2}, {1}}),
       lc(true, {{4}, {3}, {2}, {6}, {5}, {8}, {7}, {1}})},
  };
}

/*! \brief Chains for the twelve-system adapter, indexed [branch][variant]. */
inline std::vector<std::vector<LabelChain>> adapter_large_chains()
{
  return {
      {lc(true, {{12}, {6}, {2}, {1}, {4}, {3}, {5}, {8}, {7}, {10}, {9}, {11}}),
       lc(true, {{12}, {6}, {4}, {3}, {2}, {1}, {5}, {8}, {7}, {10}, {9}, {11}})},
      {lc(true, {{12}, {8}, {7}, {10}, {9}, {6}, {2}, {1}, {4}, {3}, {5}, {11}}),
       lc(true, {{12}, {8}, {7}, {10}, {9}, {6}, {4}, {3}, {2}, {1}, {5}, {11}})},
      {lc(true, {{12}, {10}, {9}, {8}, {7}, {6}, {2}, {1}, {4}, {3}, {5}, {11}}),
       lc(true, {{12}, {10}, {9}, {8}, {7}, {6}, {4}, {3}, {2}, {1}, {5}, {11}})},
  };
}

/*! \brief The two grouped-label chains of the four-leaf adapter decomposition. */
inline std::vector<LabelChain> adapter_large_grouped_chains()
{
  return {lc(true, {{12}, {8}, {7}, {10}, {9}, {1, 6}, {4}, {3}, {2, 5}, {11}}),
          lc(true, {{12}, {10}, {9}, {8}, {7}, {1, 6}, {4}, {3}, {2, 5}, {11}})};
}

}  // namespace hotkit::catalog
