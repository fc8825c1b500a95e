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
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hotkit/boolfn.hpp"
#include "hotkit/common.hpp"
#include "hotkit/mobius.hpp"

namespace hotkit {

struct PosetElement {
  Subset set = 0;     // the subset T with fhat_T != 0
  int coeff = 0;      // fhat_T
  int rank = 0;       // longest chain from a minimal element
  Subset labels = 0;  // indices of T not contained in any strictly smaller element
  bool reduced = false;
};

/*! \brief The poset of subsets carrying nonzero expansion coefficients, ordered by
    inclusion, with ranks, labels and the reduced subposet.

  For a type function the poset is graded of even top rank, reconstructs the
  function as sum (-1)^{rank} p_T, the label sets partition [n] minus the free
  outputs, and the free inputs label every minimal element. The constructor never
  throws on violations: it records them, so that arbitrary functions can still be
  inspected. Callers that rely on the guarantees use require_valid().
*/
class StructurePoset {
 public:
  explicit StructurePoset(const BoolFn& f) : n_(f.n()), fn_(f)
  {
    const MobiusCoeffs mc = mobius_transform(f);
    elems_.reserve(mc.terms.size());
    for (const auto& [T, c] : mc.terms) {
      PosetElement e;
      e.set = T;
      e.coeff = c;
      elems_.push_back(e);
    }
    // Elements are sorted by (cardinality, mask), so strict subsets come earlier.
    compute_ranks();
    compute_labels();
    check_invariants();
  }

  int n() const { return n_; }
  const BoolFn& fn() const { return fn_; }
  const std::vector<PosetElement>& elements() const { return elems_; }
  int size() const { return static_cast<int>(elems_.size()); }
  int top_rank() const { return top_rank_; }
  const std::vector<std::string>& issues() const { return issues_; }
  bool valid() const { return issues_.empty(); }

  void require_valid() const
  {
    if (!issues_.empty()) {
      std::string msg = "not a valid type structure:";
      for (const auto& s : issues_) msg += " [" + s + "]";
      throw InvariantError(msg);
    }
  }

  std::optional<int> index_of(Subset T) const
  {
    for (int i = 0; i < size(); ++i) {
      if (elems_[i].set == T) return i;
    }
    return std::nullopt;
  }

  bool totally_ordered() const
  {
    for (int i = 1; i < size(); ++i) {
      if (!subset_of(elems_[i - 1].set, elems_[i].set)) return false;
    }
    return true;
  }

  bool reduced_equals_full() const
  {
    for (const auto& e : elems_) {
      if (!e.reduced) return false;
    }
    return true;
  }

  /*! \brief Indices labelling every minimal element; equivalently the intersection
      of all poset elements. */
  Subset free_inputs() const
  {
    Subset acc = full_set(n_);
    for (const auto& e : elems_) acc &= e.set;
    return acc;
  }

  /*! \brief Indices appearing in no label set; their rank is top_rank()+1. */
  Subset free_outputs() const
  {
    Subset labelled = 0;
    for (const auto& e : elems_) labelled |= e.labels;
    return full_set(n_) & ~labelled;
  }

  /*! \brief Element ids labelled by index i (0-based). */
  std::vector<int> labelled_by(int i0) const
  {
    std::vector<int> out;
    for (int k = 0; k < size(); ++k) {
      if (contains(elems_[k].labels, i0)) out.push_back(k);
    }
    return out;
  }

  /*! \brief Rank of an index: the common rank of the elements it labels, or
      top_rank()+1 for an index labelling nothing. */
  int index_rank(int i0) const
  {
    if (i0 < 0 || i0 >= n_) throw UsageError("index out of range");
    const auto ids = labelled_by(i0);
    if (ids.empty()) return top_rank_ + 1;
    const int r = elems_[ids[0]].rank;
    for (int id : ids) {
      if (elems_[id].rank != r) {
        throw InvariantError("index " + std::to_string(i0 + 1) +
                             " labels elements of different ranks");
      }
    }
    return r;
  }

  /*! \brief Rank of a pair of indices: the largest rank of an existing meet of an
      element labelled i with an element labelled j; -1 when there is none, except
      that pairs involving a free output take min of the index ranks. */
  int pair_rank(int i0, int j0) const
  {
    if (i0 == j0) throw UsageError("pair rank needs two distinct indices");
    const Subset freeO = free_outputs();
    if (contains(freeO, i0) || contains(freeO, j0)) {
      return std::min(index_rank(i0), index_rank(j0));
    }
    const auto Si = labelled_by(i0);
    const auto Sj = labelled_by(j0);
    int best = -1;
    for (int a : Si) {
      for (int b : Sj) {
        // Rank of the meet equals the best rank among common lower bounds.
        const Subset cap = elems_[a].set & elems_[b].set;
        for (const auto& e : elems_) {
          if (subset_of(e.set, cap)) best = std::max(best, e.rank);
        }
      }
    }
    return best;
  }

  /*! \brief Cover relation restricted to the full poset or the reduced subposet.
      Pairs (lower, upper) of element ids, lexicographic. */
  std::vector<std::pair<int, int>> covers(bool reduced_only) const
  {
    std::vector<int> ids;
    for (int i = 0; i < size(); ++i) {
      if (!reduced_only || elems_[i].reduced) ids.push_back(i);
    }
    std::vector<std::pair<int, int>> out;
    for (int a : ids) {
      for (int b : ids) {
        if (a == b || !strictly_below(a, b)) continue;
        bool cover = true;
        for (int c : ids) {
          if (c != a && c != b && strictly_below(a, c) && strictly_below(c, b)) {
            cover = false;
            break;
          }
        }
        if (cover) out.emplace_back(a, b);
      }
    }
    return out;
  }

  /*! \brief All maximal chains, as sequences of element ids from a minimal to a
      maximal element, in lexicographic order of the id sequences. */
  std::vector<std::vector<int>> maximal_chains(bool reduced_only) const
  {
    const auto edge = covers(reduced_only);
    std::vector<std::vector<int>> next(size());
    std::vector<bool> has_pred(size(), false), member(size(), false);
    for (int i = 0; i < size(); ++i) member[i] = !reduced_only || elems_[i].reduced;
    for (const auto& [a, b] : edge) {
      next[a].push_back(b);
      has_pred[b] = true;
    }
    std::vector<std::vector<int>> chains;
    std::vector<int> path;
    auto rec = [&](auto&& self, int v) -> void {
      path.push_back(v);
      if (next[v].empty()) {
        chains.push_back(path);
      } else {
        for (int w : next[v]) self(self, w);
      }
      path.pop_back();
    };
    for (int v = 0; v < size(); ++v) {
      if (member[v] && !has_pred[v]) rec(rec, v);
    }
    return chains;
  }

  /*! \brief Label sequence of a chain of element ids, e.g. "∅-2-1-4". */
  std::string chain_label_text(const std::vector<int>& chain) const
  {
    std::ostringstream os;
    for (std::size_t k = 0; k < chain.size(); ++k) {
      if (k) os << '-';
      os << subset_text(elems_[chain[k]].labels);
    }
    return os.str();
  }

  /*! \brief Hasse diagram in DOT, covers only. Blue marks labelled vertices of even
      rank (inputs), red labelled odd rank (outputs), black the empty set, gray the
      full-poset vertices outside the reduced subposet. */
  std::string to_dot(bool reduced_only) const
  {
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n  node [shape=circle fontsize=11];\n";
    for (int i = 0; i < size(); ++i) {
      const auto& e = elems_[i];
      if (reduced_only && !e.reduced) continue;
      std::string color = "gray";
      if (e.set == 0) {
        color = "black";
      } else if (e.reduced) {
        color = (e.rank % 2 == 0) ? "blue" : "red";
      }
      os << "  v" << i << " [label=\"" << (e.labels ? subset_text(e.labels) : "∅")
         << "\" color=" << color << " fontcolor=" << color << "];\n";
    }
    for (const auto& [a, b] : covers(reduced_only)) {
      std::string attr;
      if (!reduced_only && !(elems_[a].reduced && elems_[b].reduced)) attr = " [color=gray]";
      os << "  v" << a << " -> v" << b << attr << ";\n";
    }
    os << "}\n";
    return os.str();
  }

 private:
  bool strictly_below(int a, int b) const
  {
    return elems_[a].set != elems_[b].set && subset_of(elems_[a].set, elems_[b].set);
  }

  void compute_ranks()
  {
    top_rank_ = 0;
    for (int i = 0; i < size(); ++i) {
      int r = 0;
      for (int j = 0; j < i; ++j) {
        if (strictly_below(j, i)) r = std::max(r, elems_[j].rank + 1);
      }
      elems_[i].rank = r;
      top_rank_ = std::max(top_rank_, r);
    }
  }

  void compute_labels()
  {
    for (int i = 0; i < size(); ++i) {
      Subset below = 0;
      for (int j = 0; j < i; ++j) {
        if (strictly_below(j, i)) below |= elems_[j].set;
      }
      elems_[i].labels = elems_[i].set & ~below;
      elems_[i].reduced = (elems_[i].set == 0) || (elems_[i].labels != 0);
    }
  }

  void check_invariants()
  {
    if (elems_.empty()) {
      issues_.push_back("empty expansion support");
      return;
    }
    // Graded: covers raise rank by one and all maximal elements share the top rank.
    for (const auto& [a, b] : covers(false)) {
      if (elems_[b].rank != elems_[a].rank + 1) {
        issues_.push_back("not graded: cover " + subset_text(elems_[a].set) + " < " +
                          subset_text(elems_[b].set) + " skips a rank");
        break;
      }
    }
    for (int i = 0; i < size(); ++i) {
      bool maximal = true;
      for (int j = 0; j < size(); ++j) {
        if (j != i && strictly_below(i, j)) {
          maximal = false;
          break;
        }
      }
      if (maximal && elems_[i].rank != top_rank_) {
        issues_.push_back("not graded: maximal element " + subset_text(elems_[i].set) +
                          " has rank " + std::to_string(elems_[i].rank) + " != " +
                          std::to_string(top_rank_));
        break;
      }
    }
    if (top_rank_ % 2 != 0) issues_.push_back("top rank " + std::to_string(top_rank_) + " is odd");
    // Reconstruction f = sum (-1)^rank p_T, via uniqueness of the expansion.
    for (const auto& e : elems_) {
      const int expected = (e.rank % 2 == 0) ? 1 : -1;
      if (e.coeff != expected) {
        issues_.push_back("reconstruction fails at " + subset_text(e.set) + ": coefficient " +
                          std::to_string(e.coeff) + ", rank " + std::to_string(e.rank));
        break;
      }
    }
    // Every index covered by the poset carries a label somewhere, and all the
    // elements it labels share one rank (so the index rank is well defined).
    Subset covered = 0, labelled = 0;
    for (const auto& e : elems_) {
      covered |= e.set;
      labelled |= e.labels;
    }
    if (covered != labelled) {
      issues_.push_back("indices inside the poset without a label");
    }
    for (int i = 0; i < n_; ++i) {
      int seen_rank = -1;
      for (const auto& e : elems_) {
        if (!contains(e.labels, i)) continue;
        if (seen_rank < 0) {
          seen_rank = e.rank;
        } else if (seen_rank != e.rank) {
          issues_.push_back("index " + std::to_string(i + 1) +
                            " labels elements of different ranks");
          break;
        }
      }
    }
  }

  int n_;
  BoolFn fn_;
  std::vector<PosetElement> elems_;
  int top_rank_ = 0;
  std::vector<std::string> issues_;
};

inline StructurePoset structure_poset(const BoolFn& f) { return StructurePoset(f); }

// ---------------------------------------------------------------------------
// Order-theoretic checks used as test oracles
// ---------------------------------------------------------------------------

struct CheckReport {
  bool pass = true;
  std::string detail;

  static CheckReport ok() { return {}; }
  static CheckReport fail(std::string d) { return {false, std::move(d)}; }
};

namespace detail {

/*! \brief Reduced-subposet ids of elements below/above the given one. */
inline std::vector<int> reduced_cone(const StructurePoset& P, int id, bool down)
{
  std::vector<int> out;
  const auto& es = P.elements();
  for (int k = 0; k < P.size(); ++k) {
    if (!es[k].reduced) continue;
    const bool rel = down ? subset_of(es[k].set, es[id].set) : subset_of(es[id].set, es[k].set);
    if (rel) out.push_back(k);
  }
  return out;
}

inline bool ids_form_chain(const StructurePoset& P, const std::vector<int>& ids)
{
  const auto& es = P.elements();
  for (std::size_t a = 0; a < ids.size(); ++a) {
    for (std::size_t b = a + 1; b < ids.size(); ++b) {
      if (!subset_of(es[ids[a]].set, es[ids[b]].set) &&
          !subset_of(es[ids[b]].set, es[ids[a]].set)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace detail

/*! \brief For incomparable reduced elements, the common part of their down-sets (and
    of their up-sets) is empty or a chain. */
inline CheckReport check_ypsilon(const StructurePoset& P)
{
  const auto& es = P.elements();
  for (int a = 0; a < P.size(); ++a) {
    if (!es[a].reduced) continue;
    for (int b = a + 1; b < P.size(); ++b) {
      if (!es[b].reduced) continue;
      if (subset_of(es[a].set, es[b].set) || subset_of(es[b].set, es[a].set)) continue;
      for (bool down : {true, false}) {
        auto da = detail::reduced_cone(P, a, down);
        auto db = detail::reduced_cone(P, b, down);
        std::vector<int> common;
        for (int x : da) {
          if (std::find(db.begin(), db.end(), x) != db.end()) common.push_back(x);
        }
        if (!common.empty() && !detail::ids_form_chain(P, common)) {
          return CheckReport::fail("intersection of " + std::string(down ? "down" : "up") +
                                   "-sets of " + subset_text(es[a].set) + " and " +
                                   subset_text(es[b].set) + " is not a chain");
        }
      }
    }
  }
  return CheckReport::ok();
}

/*! \brief Every reduced element has a chain down-set or a chain up-set; when the
    down-set is a chain its length equals the element's rank in the full poset. */
inline CheckReport check_xfree(const StructurePoset& P)
{
  const auto& es = P.elements();
  for (int a = 0; a < P.size(); ++a) {
    if (!es[a].reduced) continue;
    const auto down = detail::reduced_cone(P, a, true);
    const auto up = detail::reduced_cone(P, a, false);
    const bool down_chain = detail::ids_form_chain(P, down);
    if (!down_chain && !detail::ids_form_chain(P, up)) {
      return CheckReport::fail("element " + subset_text(es[a].set) +
                               " has neither a chain down-set nor a chain up-set");
    }
    if (down_chain && static_cast<int>(down.size()) - 1 != es[a].rank) {
      return CheckReport::fail("chain down-set of " + subset_text(es[a].set) + " has length " +
                               std::to_string(down.size() - 1) + " but rank is " +
                               std::to_string(es[a].rank));
    }
  }
  return CheckReport::ok();
}

/*! \brief When two reduced elements have a meet in the full poset, it is reduced. */
inline CheckReport check_meet(const StructurePoset& P)
{
  const auto& es = P.elements();
  for (int a = 0; a < P.size(); ++a) {
    if (!es[a].reduced) continue;
    for (int b = a; b < P.size(); ++b) {
      if (!es[b].reduced) continue;
      // Greatest common lower bound over the full poset, if any.
      std::vector<int> lower;
      for (int c = 0; c < P.size(); ++c) {
        if (subset_of(es[c].set, es[a].set & es[b].set)) lower.push_back(c);
      }
      if (lower.empty()) continue;
      int top = lower[0];
      bool unique_max = true;
      for (int c : lower) {
        if (subset_of(es[top].set, es[c].set)) top = c;
      }
      for (int c : lower) {
        if (!subset_of(es[c].set, es[top].set)) unique_max = false;
      }
      if (unique_max && !es[top].reduced) {
        return CheckReport::fail("meet " + subset_text(es[top].set) + " of " +
                                 subset_text(es[a].set) + " and " + subset_text(es[b].set) +
                                 " is not in the reduced poset");
      }
    }
  }
  return CheckReport::ok();
}

/*! \brief In the reduced poset: a common lower (upper) bound exists iff the meet
    (join) exists; the poset is a lattice iff it is bounded. */
inline CheckReport check_lattice(const StructurePoset& P)
{
  const auto& es = P.elements();
  std::vector<int> ids;
  for (int i = 0; i < P.size(); ++i) {
    if (es[i].reduced) ids.push_back(i);
  }
  bool all_meets = true, all_joins = true;
  for (std::size_t x = 0; x < ids.size(); ++x) {
    for (std::size_t y = x + 1; y < ids.size(); ++y) {
      for (bool down : {true, false}) {
        std::vector<int> bounds;
        for (int c : ids) {
          const bool rel = down ? (subset_of(es[c].set, es[ids[x]].set) &&
                                   subset_of(es[c].set, es[ids[y]].set))
                                : (subset_of(es[ids[x]].set, es[c].set) &&
                                   subset_of(es[ids[y]].set, es[c].set));
          if (rel) bounds.push_back(c);
        }
        bool extreme_exists = false;
        if (!bounds.empty()) {
          for (int c : bounds) {
            bool is_extreme = true;
            for (int d : bounds) {
              const bool rel = down ? subset_of(es[d].set, es[c].set)
                                    : subset_of(es[c].set, es[d].set);
              if (!rel) is_extreme = false;
            }
            if (is_extreme) extreme_exists = true;
          }
          if (!extreme_exists) {
            return CheckReport::fail("common " + std::string(down ? "lower" : "upper") +
                                     " bound of " + subset_text(es[ids[x]].set) + " and " +
                                     subset_text(es[ids[y]].set) + " without a " +
                                     (down ? "meet" : "join"));
          }
        } else {
          (down ? all_meets : all_joins) = false;
        }
      }
    }
  }
  // Bounded iff lattice.
  int minima = 0, maxima = 0;
  for (int c : ids) {
    bool is_min = true, is_max = true;
    for (int d : ids) {
      if (d == c) continue;
      if (subset_of(es[d].set, es[c].set)) is_min = false;
      if (subset_of(es[c].set, es[d].set)) is_max = false;
    }
    minima += is_min;
    maxima += is_max;
  }
  const bool bounded = (minima == 1 && maxima == 1);
  const bool lattice = all_meets && all_joins;
  if (bounded != lattice) {
    return CheckReport::fail(std::string("bounded=") + (bounded ? "yes" : "no") + " but lattice=" +
                             (lattice ? "yes" : "no"));
  }
  return CheckReport::ok();
}

// ---------------------------------------------------------------------------
// Constructive descriptions of the reduced poset under the basic operations,
// verified against the directly computed poset of the composed function.
// ---------------------------------------------------------------------------

namespace detail {

using LabelledSet = std::map<Subset, Subset>;  // element -> labels

inline LabelledSet reduced_labelled(const StructurePoset& P)
{
  LabelledSet out;
  for (const auto& e : P.elements()) {
    if (e.reduced) out[e.set] = e.labels;
  }
  return out;
}

inline std::string labelled_text(const LabelledSet& ls)
{
  std::ostringstream os;
  for (const auto& [set, labels] : ls) {
    os << ' ' << subset_text(set) << ":" << subset_text(labels);
  }
  return os.str();
}

inline CheckReport compare_labelled(const LabelledSet& expected, const LabelledSet& computed,
                                    const std::string& what)
{
  if (expected == computed) return CheckReport::ok();
  return CheckReport::fail(what + ": expected{" + labelled_text(expected) + " } computed{" +
                           labelled_text(computed) + " }");
}

inline std::vector<Subset> minima_of(const LabelledSet& ls)
{
  std::vector<Subset> out;
  for (const auto& [s, l] : ls) {
    bool minimal = true;
    for (const auto& [t, lt] : ls) {
      if (t != s && subset_of(t, s)) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

}  // namespace detail

/*! \brief Reduced poset of f o sigma: the preimages of the elements of f's poset,
    with labels carried along. */
inline CheckReport check_pf0_permutation(const BoolFn& f, const Perm& p)
{
  const StructurePoset Pf(f);
  const StructurePoset Ph(permute(f, p));
  detail::LabelledSet expected;
  for (const auto& e : Pf.elements()) {
    if (e.reduced) expected[preimage_subset(e.set, p)] = preimage_subset(e.labels, p);
  }
  return detail::compare_labelled(expected, detail::reduced_labelled(Ph), "permutation case");
}

/*! \brief Reduced poset of f*: symmetric difference with {empty,[n]} when f or f*
    has free outputs, with {empty} otherwise; labels of retained middle elements
    are unchanged. */
inline CheckReport check_pf0_complement(const BoolFn& f)
{
  const StructurePoset Pf(f);
  const StructurePoset Ph(complement(f));
  const Subset all = full_set(f.n());
  detail::LabelledSet expected = detail::reduced_labelled(Pf);
  const bool swap_top = (Pf.free_outputs() != 0) || (Ph.free_outputs() != 0);

  auto toggle = [&expected](Subset s, Subset labels_when_added) {
    auto it = expected.find(s);
    if (it != expected.end()) {
      expected.erase(it);
    } else {
      expected[s] = labels_when_added;
    }
  };
  toggle(0, 0);
  if (swap_top) toggle(all, Pf.free_outputs());
  return detail::compare_labelled(expected, detail::reduced_labelled(Ph), "complement case");
}

/*! \brief Reduced poset of f (x) g: pairs (S,T) with S or T minimal, labels merged
    on the doubly-minimal pairs. */
inline CheckReport check_pf0_tensor(const BoolFn& f, const BoolFn& g)
{
  const int m = f.n();
  const StructurePoset Pf(f), Pg(g);
  const StructurePoset Ph(tensor(f, g));
  const auto lf = detail::reduced_labelled(Pf);
  const auto lg = detail::reduced_labelled(Pg);
  const auto min_f = detail::minima_of(lf);
  const auto min_g = detail::minima_of(lg);
  auto is_min = [](const std::vector<Subset>& mins, Subset s) {
    return std::find(mins.begin(), mins.end(), s) != mins.end();
  };
  detail::LabelledSet expected;
  for (const auto& [S, LS] : lf) {
    for (const auto& [T, LT] : lg) {
      const bool fmin = is_min(min_f, S), gmin = is_min(min_g, T);
      if (!fmin && !gmin) continue;
      Subset labels;
      if (!fmin) {
        labels = LS;
      } else if (!gmin) {
        labels = LT << m;
      } else {
        labels = LS | (LT << m);
      }
      expected[S | (T << m)] = labels;
    }
  }
  return detail::compare_labelled(expected, detail::reduced_labelled(Ph), "tensor case");
}

/*! \brief Reduced poset of f <| g: an ordinal sum of the two reduced posets, with
    the four boundary cases at [m] and the empty set. */
inline CheckReport check_pf0_causal(const BoolFn& f, const BoolFn& g)
{
  const int m = f.n();
  const Subset all_f = full_set(m);
  const StructurePoset Pf(f), Pg(g);
  const StructurePoset Ph(causal_product(f, g, true));
  const auto lf = detail::reduced_labelled(Pf);
  const auto lg = detail::reduced_labelled(Pg);
  detail::LabelledSet expected;

  auto g_part = [&](bool skip_empty, Subset extra_on_minima) {
    detail::LabelledSet part;
    for (const auto& [T, LT] : lg) {
      if (skip_empty && T == 0) continue;
      part[all_f | (T << m)] = LT << m;
    }
    // Attach the extra labels to the minima of the mapped part.
    std::vector<Subset> mins = detail::minima_of(part);
    for (Subset s : mins) part[s] |= extra_on_minima;
    return part;
  };

  if (lf.count(all_f)) {
    // Labels of [m] move onto the minima of g's part.
    expected = lf;
    const Subset carried = expected[all_f];
    expected.erase(all_f);
    for (const auto& [s, l] : g_part(false, carried)) expected[s] = l;
  } else if (lg.count(0)) {
    expected = lf;
    for (const auto& [s, l] : g_part(true, Pf.free_outputs())) expected[s] = l;
  } else if (Pf.free_outputs() != 0) {
    expected = lf;
    expected[all_f] = Pf.free_outputs();
    for (const auto& [s, l] : g_part(false, 0)) expected[s] = l;
  } else {
    expected = lf;
    for (const auto& [s, l] : g_part(false, 0)) expected[s] = l;
  }
  return detail::compare_labelled(expected, detail::reduced_labelled(Ph), "causal case");
}

enum class PosetOp { permute, complement, tensor, causal };

/*! \brief Verifies the constructive description of the reduced poset under an
    operation against the directly computed poset. Failures are report content. */
inline CheckReport poset_op_check(const BoolFn& f, const BoolFn* g, PosetOp op,
                                  const Perm* perm = nullptr)
{
  switch (op) {
    case PosetOp::permute:
      if (!perm) throw UsageError("permutation case needs a permutation");
      return check_pf0_permutation(f, *perm);
    case PosetOp::complement: return check_pf0_complement(f);
    case PosetOp::tensor:
      if (!g) throw UsageError("tensor case needs a second function");
      return check_pf0_tensor(f, *g);
    case PosetOp::causal:
      if (!g) throw UsageError("causal case needs a second function");
      return check_pf0_causal(f, *g);
  }
  throw UsageError("unknown poset operation");
}

}  // namespace hotkit
