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

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hotkit/boolfn.hpp"
#include "hotkit/common.hpp"
#include "hotkit/poset.hpp"
#include "hotkit/subtypes.hpp"

namespace hotkit {

/*! \brief What is known about membership of a function in the type-function set. */
enum class TypeStatus { certified_type, certified_not_type, unknown };

/*! \brief No-signalling from input i to output j, decided by one table lookup:
    i cannot signal to j iff f(e^{i,j}) = 0.

  The criterion is stated for regular subtypes, so anything else is refused.
  Indices are 1-based.
*/
inline bool no_signal(const BoolFn& f, int i, int j)
{
  if (!is_monotone_subtype(f)) {
    throw UsageError("signalling criterion applies to regular (monotone) subtypes only");
  }
  const IOSplit io = io_split(f);
  if (i < 1 || i > f.n() || !contains(io.inputs, i - 1)) {
    throw UsageError("index " + std::to_string(i) + " is not an input");
  }
  if (j < 1 || j > f.n() || !contains(io.outputs, j - 1)) {
    throw UsageError("index " + std::to_string(j) + " is not an output");
  }
  return f.value(pair_string(f.n(), i, j).bits) == 0;
}

/*! \brief No-signalling read off the structure poset: i cannot signal to j iff the
    pair rank is even (-1 counts as odd).

  Valid for type functions only. Certification is the caller's: pass
  certified_type when the function came from a term or from enumeration; the
  poset invariants are still required to hold.
*/
inline bool no_signal_by_rank(const StructurePoset& P, int i, int j,
                              TypeStatus status = TypeStatus::certified_type)
{
  if (status == TypeStatus::certified_not_type) {
    throw UsageError("rank criterion applies to type functions only");
  }
  if (status == TypeStatus::unknown) {
    throw UsageError("rank criterion needs a certified type function");
  }
  P.require_valid();
  const IOSplit io = io_split(P.fn());
  if (i < 1 || i > P.n() || !contains(io.inputs, i - 1)) {
    throw UsageError("index " + std::to_string(i) + " is not an input");
  }
  if (j < 1 || j > P.n() || !contains(io.outputs, j - 1)) {
    throw UsageError("index " + std::to_string(j) + " is not an output");
  }
  const int r = P.pair_rank(i - 1, j - 1);
  return r >= 0 && r % 2 == 0;
}

/*! \brief Signalling relations over all input/output pairs. */
struct SignallingMatrix {
  int n = 1;
  Subset inputs = 0;
  Subset outputs = 0;
  struct Entry {
    int i = 0;  // 1-based input
    int j = 0;  // 1-based output
    bool signals = false;
    std::optional<int> pair_rank;  // present when the rank route was available
  };
  std::vector<Entry> entries;  // ordered by (i, j)

  const Entry& at(int i, int j) const
  {
    for (const auto& e : entries) {
      if (e.i == i && e.j == j) return e;
    }
    throw UsageError("no entry for pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }

  bool signals(int i, int j) const { return at(i, j).signals; }

  bool same_relations(const SignallingMatrix& other) const
  {
    if (entries.size() != other.entries.size()) return false;
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const auto& a = entries[k];
      const auto& b = other.entries[k];
      if (a.i != b.i || a.j != b.j || a.signals != b.signals) return false;
    }
    return true;
  }
};

/*! \brief Fills the matrix by evaluation; for certified type functions the rank
    route is run as well and any disagreement between the two theorems is fatal. */
inline SignallingMatrix signalling_matrix(const BoolFn& f,
                                          TypeStatus status = TypeStatus::unknown)
{
  if (!is_monotone_subtype(f)) {
    throw UsageError("signalling matrices exist for regular (monotone) subtypes only");
  }
  SignallingMatrix m;
  m.n = f.n();
  const IOSplit io = io_split(f);
  m.inputs = io.inputs;
  m.outputs = io.outputs;
  std::optional<StructurePoset> poset;
  if (status == TypeStatus::certified_type) poset.emplace(f);
  for (int i = 1; i <= f.n(); ++i) {
    if (!contains(io.inputs, i - 1)) continue;
    for (int j = 1; j <= f.n(); ++j) {
      if (!contains(io.outputs, j - 1)) continue;
      SignallingMatrix::Entry e;
      e.i = i;
      e.j = j;
      e.signals = !no_signal(f, i, j);
      if (poset) {
        const int r = poset->pair_rank(i - 1, j - 1);
        e.pair_rank = r;
        const bool rank_no_signal = no_signal_by_rank(*poset, i, j, status);
        if (rank_no_signal == e.signals) {
          throw InvariantError("signalling criteria disagree at (" + std::to_string(i) + "," +
                               std::to_string(j) + "): evaluation says " +
                               (e.signals ? "signal" : "no-signal") + ", pair rank is " +
                               std::to_string(r));
        }
      }
      m.entries.push_back(e);
    }
  }
  return m;
}

/*! \brief I x O grid; a wavy arrow marks signalling pairs, the empty-set sign the
    no-signalling ones, with the witnessing pair rank when known. */
inline std::string signalling_text(const SignallingMatrix& m)
{
  std::ostringstream os;
  const auto ins = subset_indices(m.inputs);
  const auto outs = subset_indices(m.outputs);
  os << "      ";
  for (int j : outs) os << "  j=" << j << (j < 10 ? "    " : "   ");
  os << '\n';
  for (int i : ins) {
    os << "  i=" << i << (i < 10 ? " " : "");
    for (int j : outs) {
      const auto& e = m.at(i, j);
      std::string cell = e.signals ? "⇝" : "∅";
      if (e.pair_rank) cell += "[r=" + std::to_string(*e.pair_rank) + "]";
      os << "  " << cell;
      for (std::size_t pad = cell.size(); pad < 9; ++pad) os << ' ';
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace hotkit
