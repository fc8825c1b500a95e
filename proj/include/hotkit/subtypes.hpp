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

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "hotkit/bitstring.hpp"
#include "hotkit/boolfn.hpp"
#include "hotkit/common.hpp"
#include "hotkit/typeterm.hpp"

namespace hotkit {

/*! \brief The partial order on strings that rises on output coordinates and falls
    on input coordinates.

  XOR-ing with the input mask turns it into plain bitwise inclusion, which the
  implementation leans on throughout.
*/
struct OutputOrder {
  int n = 1;
  Subset outputs = 0;

  OutputOrder(int n_, Subset outputs_) : n(n_), outputs(outputs_)
  {
    if (n < 1 || n > kMaxSystems) throw UsageError("system count out of range");
    if (!subset_of(outputs, full_set(n))) throw UsageError("output set not contained in [n]");
  }

  Subset inputs() const { return full_set(n) & ~outputs; }

  /*! \brief Relabelling under which the order becomes bitwise inclusion. */
  std::uint32_t flip(std::uint32_t s) const { return s ^ inputs(); }

  bool leq(std::uint32_t s, std::uint32_t t) const { return subset_of(flip(s), flip(t)); }

  bool in_down_theta(std::uint32_t s) const { return (s & outputs) == 0; }
  bool in_up_theta(std::uint32_t s) const { return (s & inputs()) == 0; }
};

inline bool leq_O(const OutputOrder& ord, const BitString& s, const BitString& t)
{
  if (s.n != ord.n || t.n != ord.n) throw UsageError("string length does not match the order");
  return ord.leq(s.bits, t.bits);
}

/*! \brief Monotone subtype test: the support is an upset for the order given by the
    function's own outputs and meets the principal down-set of theta only in theta.
    By the characterization theorem these are exactly the regular subtypes. */
inline bool is_monotone_subtype(const BoolFn& f)
{
  const OutputOrder ord(f.n(), io_split(f).outputs);
  for (std::uint32_t s = 0; s < f.num_strings(); ++s) {
    if (!f.value(s)) continue;
    if (s != 0 && ord.in_down_theta(s)) return false;
    // Upset: every single-coordinate raise stays in the support.
    for (int i = 0; i < f.n(); ++i) {
      const std::uint32_t bit = 1u << i;
      const bool is_output = contains(ord.outputs, i);
      const std::uint32_t t = is_output ? (s | bit) : (s & ~bit);
      if (!f.value(t)) return false;
    }
  }
  return true;
}

/*! \brief The same predicate via the raw definition (all comparable pairs); used to
    validate the single-flip scan. */
inline bool is_monotone_subtype_exhaustive(const BoolFn& f)
{
  const OutputOrder ord(f.n(), io_split(f).outputs);
  for (std::uint32_t s = 0; s < f.num_strings(); ++s) {
    if (!f.value(s)) continue;
    if (s != 0 && ord.in_down_theta(s)) return false;
    for (std::uint32_t t = 0; t < f.num_strings(); ++t) {
      if (ord.leq(s, t) && !f.value(t)) return false;
    }
  }
  return true;
}

/*! \brief Basic strings for the order: not comparable with theta, exactly one output
    coordinate set, at most one input coordinate cleared. Degenerate orders have
    none. Sorted by (weight, mask). */
inline std::vector<BitString> basic_strings(int n, Subset outputs)
{
  const OutputOrder ord(n, outputs);
  std::vector<std::uint32_t> masks;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (ord.in_down_theta(s) || ord.in_up_theta(s)) continue;
    if (popcount(s & outputs) != 1) continue;
    if (popcount(ord.inputs() & ~s) > 1) continue;
    masks.push_back(s);
  }
  std::sort(masks.begin(), masks.end(), subset_less);
  std::vector<BitString> out;
  out.reserve(masks.size());
  for (auto m : masks) out.emplace_back(n, m);
  return out;
}

/*! \brief The monotone subtype supported on the union of the principal upsets of s
    and of theta. For basic s this is one of the generating chain types. */
inline BoolFn f_s(int n, Subset outputs, const BitString& s)
{
  if (s.n != n) throw UsageError("string length does not match n");
  const OutputOrder ord(n, outputs);
  if (s.bits != 0 && ord.in_down_theta(s.bits)) {
    throw UsageError("string lies below theta; no monotone subtype is supported there");
  }
  std::vector<std::uint32_t> support;
  for (std::uint32_t t = 0; t < (1u << n); ++t) {
    if (ord.leq(s.bits, t) || ord.in_up_theta(t)) support.push_back(t);
  }
  return BoolFn::from_support(n, support);
}

/*! \brief All monotone subtypes with the given output set, by depth-first search
    over upsets of the order (top-down, an element may enter only when everything
    above it is in). Output-linear, so feasible through n = 5. */
inline std::vector<BoolFn> enumerate_monotone(int n, Subset outputs)
{
  const OutputOrder ord(n, outputs);
  const std::uint32_t size = 1u << n;
  // Work in flipped coordinates where the order is inclusion.
  const std::uint32_t forced_in_above = ord.flip(0);  // flipped theta
  std::vector<int> state(size, -1);                   // -1 undecided, 0 out, 1 in
  std::vector<std::uint32_t> order;                   // masks by decreasing weight
  for (std::uint32_t v = 0; v < size; ++v) order.push_back(v);
  std::sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
    return subset_less(b, a);
  });
  for (std::uint32_t v = 0; v < size; ++v) {
    if (subset_of(forced_in_above, v)) state[v] = 1;                     // upset of theta
    else if (subset_of(v, forced_in_above) && v != forced_in_above) state[v] = 0;  // below theta
  }
  std::vector<BoolFn> out;
  std::vector<std::uint32_t> undecided;
  for (auto v : order) {
    if (state[v] == -1) undecided.push_back(v);
  }
  auto covers_in = [&](std::uint32_t v) {
    for (int i = 0; i < n; ++i) {
      const std::uint32_t w = v | (1u << i);
      if (w != v && state[w] != 1) return false;
    }
    return true;
  };
  auto emit = [&]() {
    std::vector<std::uint32_t> support;
    for (std::uint32_t v = 0; v < size; ++v) {
      if (state[v] == 1) support.push_back(ord.flip(v));
    }
    out.push_back(BoolFn::from_support(n, support));
  };
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == undecided.size()) {
      emit();
      return;
    }
    const std::uint32_t v = undecided[k];
    if (covers_in(v)) {
      state[v] = 1;
      self(self, k + 1);
    }
    state[v] = 0;
    self(self, k + 1);
    state[v] = -1;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/*! \brief Meet/join closure of a seed set, by worklist until the fixed point. */
inline std::vector<BoolFn> lattice_closure(const std::vector<BoolFn>& seed)
{
  std::unordered_set<BoolFn, BoolFn::Hash> members(seed.begin(), seed.end());
  std::vector<BoolFn> work(members.begin(), members.end());
  std::vector<BoolFn> all(work);
  while (!work.empty()) {
    std::vector<BoolFn> fresh;
    for (const auto& f : work) {
      for (const auto& g : all) {
        for (const BoolFn& h : {meet(f, g), join(f, g)}) {
          if (members.insert(h).second) fresh.push_back(h);
        }
      }
    }
    for (const auto& h : fresh) all.push_back(h);
    work = std::move(fresh);
  }
  std::sort(all.begin(), all.end());
  return all;
}

/*! \brief The lattice generated by the type functions with a fixed output set. */
struct RegularLattice {
  int n = 1;
  Subset outputs = 0;
  std::vector<BoolFn> members;     // sorted
  std::vector<BoolFn> generators;  // the seed that was closed
};

/*! \brief Closes T_{n,O} under meet and join and cross-checks the result against the
    independently enumerated monotone subtypes; disagreement is fatal. */
inline RegularLattice enumerate_regular(const TypeUniverse& universe, int n, Subset outputs)
{
  RegularLattice lat;
  lat.n = n;
  lat.outputs = outputs;
  lat.generators = universe.with_outputs(n, outputs);
  lat.members = lattice_closure(lat.generators);
  const auto monotone = enumerate_monotone(n, outputs);
  if (lat.members != monotone) {
    throw InvariantError("regular-subtype closure (" + std::to_string(lat.members.size()) +
                         " members) does not match the monotone subtypes (" +
                         std::to_string(monotone.size()) + ") for n=" + std::to_string(n) +
                         ", O=" + subset_text(outputs));
  }
  return lat;
}

/*! \brief The generating chain types of the regular lattice:
    1 - p_{j} + p_{I+j} for j in O, and p_{i} - p_{i,j} + p_{I+j} for i in I, j in O.
    Formulas may degenerate (e.g. to p_I when |I| = 1); duplicates are removed. */
inline std::vector<BoolFn> regular_generators(int n, Subset outputs)
{
  const OutputOrder ord(n, outputs);
  const Subset I = ord.inputs();
  std::vector<BoolFn> gens;
  auto push = [&gens](const BoolFn& f) {
    if (std::find(gens.begin(), gens.end(), f) == gens.end()) gens.push_back(f);
  };
  if (outputs == 0) {
    push(BoolFn::bottom(n));
    return gens;
  }
  for (int j = 0; j < n; ++j) {
    if (!contains(outputs, j)) continue;
    const Subset sj = 1u << j;
    MobiusCoeffs mc;
    mc.n = n;
    mc.terms = {{0, 1}, {sj, -1}, {I | sj, 1}};
    if (sj == (I | sj)) mc.terms = {{0, 1}};  // no inputs: collapses to the top element
    push(to_boolfn(mobius_inverse(mc), "generator"));
    for (int i = 0; i < n; ++i) {
      if (!contains(I, i)) continue;
      const Subset si = 1u << i;
      MobiusCoeffs mc2;
      mc2.n = n;
      if ((si | sj) == (I | sj)) {
        mc2.terms = {{si, 1}};  // single input: collapses to p_I
      } else {
        mc2.terms = {{si, 1}, {si | sj, -1}, {I | sj, 1}};
      }
      push(to_boolfn(mobius_inverse(mc2), "generator"));
    }
  }
  return gens;
}

/*! \brief The generating family with its defining property enforced: the closure
    must reproduce the independently enumerated lattice, else the call is fatal. */
inline std::vector<BoolFn> checked_generators(int n, Subset outputs)
{
  auto gens = regular_generators(n, outputs);
  if (lattice_closure(gens) != enumerate_monotone(n, outputs)) {
    throw InvariantError("generator closure misses the regular lattice for n=" +
                         std::to_string(n) + ", O=" + subset_text(outputs));
  }
  return gens;
}

}  // namespace hotkit
