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
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hotkit/boolfn.hpp"
#include "hotkit/common.hpp"
#include "hotkit/poset.hpp"
#include "hotkit/typeterm.hpp"

namespace hotkit {

/*! \brief A chain written as its sequence of label sets, the reading used in the
    Hasse diagrams: disjoint nonempty steps, with an optional leading empty-set
    marker. "2-1-4" and "∅-12-8-7-{1,6}-..." both fit. */
struct LabelChain {
  bool leading_empty = false;
  std::vector<Subset> labels;

  friend bool operator==(const LabelChain& a, const LabelChain& b) = default;
};

/*! \brief Cumulative unions of the label steps; the step count must come out even. */
inline ChainSpec chain_from_labels(const LabelChain& lc, int n)
{
  ChainSpec spec;
  spec.n = n;
  Subset acc = 0;
  if (lc.leading_empty) spec.sets.push_back(0);
  for (const Subset step : lc.labels) {
    if (step == 0) throw UsageError("label steps must be nonempty");
    if (acc & step) throw UsageError("label steps must be disjoint");
    if (!subset_of(step, full_set(n))) throw UsageError("label step outside [n]");
    acc |= step;
    spec.sets.push_back(acc);
  }
  if (spec.sets.empty()) throw UsageError("empty label chain");
  if (spec.sets.size() % 2 == 0) {
    throw UsageError("label chain of odd step count cannot close to a causally ordered type");
  }
  spec.validate();
  return spec;
}

/*! \brief Label sequence of a chain: leading empty marker plus successive
    differences. Indices beyond the last set are the free outputs and do not
    appear. */
inline LabelChain labels_of_chain(const ChainSpec& spec)
{
  LabelChain lc;
  Subset prev = 0;
  for (std::size_t k = 0; k < spec.sets.size(); ++k) {
    if (k == 0 && spec.sets[0] == 0) {
      lc.leading_empty = true;
      continue;
    }
    lc.labels.push_back(spec.sets[k] & ~prev);
    prev = spec.sets[k];
  }
  return lc;
}

inline std::string label_chain_text(const LabelChain& lc)
{
  std::ostringstream os;
  bool first = true;
  if (lc.leading_empty) {
    os << "∅";
    first = false;
  }
  for (const Subset step : lc.labels) {
    if (!first) os << '-';
    os << subset_text(step);
    first = false;
  }
  return os.str();
}

/*! \brief A join of meets of causally ordered types. Leaves are shared between
    terms; a term is the meet of its leaves, the form is the join of its terms. */
struct NormalForm {
  int n = 1;
  std::vector<ChainSpec> leaves;
  std::vector<std::vector<int>> terms;  // leaf indices

  bool is_grid() const
  {
    if (terms.empty()) return false;
    for (const auto& t : terms) {
      if (t.size() != terms[0].size() || t.empty()) return false;
    }
    return true;
  }
};

/*! \brief Pointwise join of meets. Leaf validation failures name the leaf. */
inline BoolFn eval_normal_form(const NormalForm& nf)
{
  if (nf.terms.empty()) throw UsageError("normal form has no terms");
  std::vector<BoolFn> leaf_fns;
  leaf_fns.reserve(nf.leaves.size());
  for (std::size_t k = 0; k < nf.leaves.size(); ++k) {
    try {
      leaf_fns.push_back(chain_type(nf.leaves[k]));
    } catch (const UsageError& err) {
      throw UsageError("leaf " + std::to_string(k) + " (" +
                       label_chain_text(labels_of_chain(nf.leaves[k])) +
                       ") is not a valid chain: " + err.what());
    }
  }
  std::optional<BoolFn> acc;
  for (const auto& term : nf.terms) {
    if (term.empty()) throw UsageError("normal form has an empty meet");
    std::optional<BoolFn> m;
    for (int id : term) {
      if (id < 0 || id >= static_cast<int>(leaf_fns.size())) {
        throw UsageError("term references missing leaf " + std::to_string(id));
      }
      m = m ? meet(*m, leaf_fns[id]) : leaf_fns[id];
    }
    acc = acc ? join(*acc, *m) : *m;
  }
  return *acc;
}

/*! \brief For a full A x B grid of leaves, whether the join of meets equals the
    meet of joins pointwise. */
inline bool verify_minimax(const NormalForm& nf)
{
  if (!nf.is_grid()) throw UsageError("minimax check needs a full grid of leaves");
  std::vector<BoolFn> leaf_fns;
  leaf_fns.reserve(nf.leaves.size());
  for (const auto& leaf : nf.leaves) leaf_fns.push_back(chain_type(leaf));
  const BoolFn join_of_meets = eval_normal_form(nf);
  const std::size_t cols = nf.terms[0].size();
  std::optional<BoolFn> acc;
  for (std::size_t b = 0; b < cols; ++b) {
    std::optional<BoolFn> col;
    for (const auto& term : nf.terms) {
      const BoolFn& l = leaf_fns[term[b]];
      col = col ? join(*col, l) : l;
    }
    acc = acc ? meet(*acc, *col) : *col;
  }
  return join_of_meets == *acc;
}

inline std::string normal_form_text(const NormalForm& nf)
{
  std::ostringstream os;
  for (std::size_t a = 0; a < nf.terms.size(); ++a) {
    if (a) os << " ∨ ";
    const bool paren = nf.terms[a].size() > 1 && nf.terms.size() > 1;
    if (paren) os << '(';
    for (std::size_t b = 0; b < nf.terms[a].size(); ++b) {
      if (b) os << " ∧ ";
      os << label_chain_text(labels_of_chain(nf.leaves[nf.terms[a][b]]));
    }
    if (paren) os << ')';
  }
  return os.str();
}

namespace detail {

/*! \brief Canonical shape: terms sorted and deduplicated, supersets of other terms
    absorbed, unused leaves dropped. Keeps the evaluated function unchanged. */
inline void tidy_normal_form(NormalForm& nf)
{
  for (auto& t : nf.terms) {
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
  }
  std::sort(nf.terms.begin(), nf.terms.end());
  nf.terms.erase(std::unique(nf.terms.begin(), nf.terms.end()), nf.terms.end());
  std::vector<std::vector<int>> kept;
  for (const auto& t : nf.terms) {
    bool absorbed = false;
    for (const auto& u : nf.terms) {
      if (&u != &t && std::includes(t.begin(), t.end(), u.begin(), u.end()) && u != t) {
        absorbed = true;  // meet over a superset of leaves is below the other term
        break;
      }
    }
    if (!absorbed) kept.push_back(t);
  }
  nf.terms = std::move(kept);
  // Drop unreferenced leaves, renumber them lexicographically by their subset
  // chains, and re-sort the terms, so equal forms render identically.
  std::vector<int> used(nf.leaves.size(), 0);
  for (const auto& t : nf.terms) {
    for (int id : t) used[id] = 1;
  }
  std::vector<int> order;
  for (int id = 0; id < static_cast<int>(nf.leaves.size()); ++id) {
    if (used[id]) order.push_back(id);
  }
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return nf.leaves[a].sets < nf.leaves[b].sets; });
  std::vector<int> remap(nf.leaves.size(), -1);
  std::vector<ChainSpec> leaves;
  for (int id : order) {
    remap[id] = static_cast<int>(leaves.size());
    leaves.push_back(nf.leaves[id]);
  }
  for (auto& t : nf.terms) {
    for (int& id : t) id = remap[id];
    std::sort(t.begin(), t.end());
  }
  std::sort(nf.terms.begin(), nf.terms.end());
  nf.leaves = std::move(leaves);
}

inline int add_leaf(NormalForm& nf, const ChainSpec& spec)
{
  for (std::size_t k = 0; k < nf.leaves.size(); ++k) {
    if (nf.leaves[k] == spec) return static_cast<int>(k);
  }
  nf.leaves.push_back(spec);
  return static_cast<int>(nf.leaves.size()) - 1;
}

inline ChainSpec chain_of_or_throw(const BoolFn& f, const char* what)
{
  auto spec = chain_of(f);
  if (!spec) throw InvariantError(std::string(what) + " failed to be causally ordered");
  return *spec;
}

inline NormalForm synthesize_impl(const BoolFn& f, const TypeUniverse& universe);

}  // namespace detail

/*! \brief Normal-form synthesis by recursion over the construction of the type
    function recorded during enumeration.

  Chains are leaves. A complement dualizes the shape (meet of joins) and the
  leaves, then redistributes. A product f1 (x) f2 becomes
  (f1 <| alpha2) meet (f2 <| alpha1) with alpha_k the full-signalling chain
  p_{O_k}*, pushed through the shapes leaf by leaf. The distinct-leaf count is
  bounded by the number of maximal chains of the reduced structure poset;
  exceeding it is fatal.
*/
inline NormalForm synthesize(const BoolFn& f, const TypeUniverse& universe)
{
  NormalForm nf = detail::synthesize_impl(f, universe);
  const auto bound = StructurePoset(f).maximal_chains(true).size();
  if (nf.leaves.size() > bound) {
    throw InvariantError("synthesized form uses " + std::to_string(nf.leaves.size()) +
                         " chains, above the maximal-chain bound " + std::to_string(bound));
  }
  return nf;
}

namespace detail {

inline NormalForm synthesize_impl(const BoolFn& f, const TypeUniverse& universe)
{
  if (!universe.contains(f)) {
    throw UsageError("normal-form synthesis needs a type function within the guard");
  }
  NormalForm nf;
  nf.n = f.n();

  if (auto spec = chain_of(f)) {
    nf.leaves.push_back(*spec);
    nf.terms = {{0}};
    return nf;
  }

  const Provenance& prov = universe.provenance(f);
  if (prov.kind == Provenance::Kind::complement) {
    const BoolFn& base = universe.level(f.n())[prov.base];
    NormalForm inner = synthesize(base, universe);
    // (join_a meet_b l_ab)* = meet_a join_b l_ab*; distribute back to join-of-meets
    // by picking one dual leaf from each term.
    NormalForm out;
    out.n = f.n();
    std::vector<std::vector<int>> rows;
    for (const auto& term : inner.terms) {
      std::vector<int> row;
      for (int id : term) {
        row.push_back(detail::add_leaf(out, detail::chain_of_or_throw(
                                                complement(chain_type(inner.leaves[id])),
                                                "complement of a chain")));
      }
      rows.push_back(row);
    }
    std::vector<std::vector<int>> terms{{}};
    for (const auto& row : rows) {
      std::vector<std::vector<int>> next;
      for (const auto& partial : terms) {
        for (int id : row) {
          auto t = partial;
          t.push_back(id);
          next.push_back(std::move(t));
        }
      }
      terms = std::move(next);
      if (terms.size() > 200000) throw InvariantError("normal-form distribution blow-up");
    }
    out.terms = std::move(terms);
    detail::tidy_normal_form(out);
    return out;
  }

  if (prov.kind == Provenance::Kind::product) {
    const BoolFn& f1 = universe.level(prov.split)[prov.left];
    const BoolFn& f2 = universe.level(f.n() - prov.split)[prov.right];

    NormalForm prod;
    prod.n = f.n();
    // A basis-function factor carries a one-vertex poset, so its trivial chain is
    // swallowed by the other factor's chains and the maximal-chain count does not
    // grow. Share such a factor into every leaf instead of adding one of its own.
    const bool basis1 = mobius_transform(f1).terms.size() == 1;
    const bool basis2 = mobius_transform(f2).terms.size() == 1;
    if (basis1 || basis2) {
      const NormalForm inner = synthesize(basis1 ? f2 : f1, universe);
      for (const auto& term : inner.terms) {
        std::vector<int> t;
        for (int id : term) {
          const BoolFn leaf_fn = chain_type(inner.leaves[id]);
          const BoolFn lifted = basis1 ? tensor(f1, leaf_fn) : tensor(leaf_fn, f2);
          t.push_back(detail::add_leaf(
              prod, detail::chain_of_or_throw(lifted, "product with a one-vertex factor")));
        }
        prod.terms.push_back(std::move(t));
      }
    } else {
      const NormalForm nf1 = synthesize(f1, universe);
      const NormalForm nf2 = synthesize(f2, universe);
      const BoolFn alpha1 = complement(basis_pT(f1.n(), io_split(f1).outputs));
      const BoolFn alpha2 = complement(basis_pT(f2.n(), io_split(f2).outputs));

      // Leaves of part one are chain <| alpha2, of part two alpha1 <| chain-in-future.
      auto lift = [&](const NormalForm& part, bool first_block) {
        std::vector<std::vector<int>> terms;
        for (const auto& term : part.terms) {
          std::vector<int> t;
          for (int id : term) {
            const BoolFn leaf_fn = chain_type(part.leaves[id]);
            const BoolFn lifted = first_block ? causal_product(leaf_fn, alpha2, true)
                                              : causal_product(alpha1, leaf_fn, false);
            t.push_back(detail::add_leaf(
                prod, detail::chain_of_or_throw(lifted, "one-way product of chains")));
          }
          terms.push_back(std::move(t));
        }
        return terms;
      };
      const auto terms1 = lift(nf1, true);
      const auto terms2 = lift(nf2, false);
      for (const auto& a : terms1) {
        for (const auto& b : terms2) {
          auto t = a;
          t.insert(t.end(), b.begin(), b.end());
          prod.terms.push_back(std::move(t));
        }
      }
    }
    detail::tidy_normal_form(prod);

    // Apply the recorded permutation to every leaf.
    if (prov.perm == identity_perm(f.n())) return prod;
    NormalForm out;
    out.n = f.n();
    out.terms = prod.terms;
    for (const auto& leaf : prod.leaves) {
      ChainSpec moved;
      moved.n = leaf.n;
      for (Subset s : leaf.sets) moved.sets.push_back(preimage_subset(s, prov.perm));
      out.leaves.push_back(std::move(moved));
    }
    detail::tidy_normal_form(out);
    return out;
  }

  throw InvariantError("non-chain type function with atomic provenance");
}

}  // namespace detail

/*! \brief Candidate chains read off the reduced structure poset, one per maximal
    chain, in the style of the worked examples: the chain's own label steps come
    first, then the unused steps of the other chains, merging a step into the
    previous one when the input/output alternation demands it and freeing trailing
    outputs to land on an even step count. The construction involves genuine
    freedom, so the output is a proposal to be checked through eval_normal_form,
    not a guaranteed decomposition. */
inline std::vector<LabelChain> propose_chain_candidates(const StructurePoset& P)
{
  const auto chains = P.maximal_chains(true);
  const Subset outputs = io_split(P.fn()).outputs;
  std::vector<LabelChain> out;
  for (std::size_t c = 0; c < chains.size(); ++c) {
    LabelChain lc;
    Subset used = 0;
    auto append = [&](int id) {
      const auto& e = P.elements()[id];
      if (e.set == 0 && e.labels == 0) {
        lc.leading_empty = true;
        return;
      }
      const Subset step = e.labels & ~used;
      if (!step) return;
      used |= step;
      const bool step_is_output = subset_of(step, outputs);
      // Step at position k (counting the optional leading empty set) must be an
      // output iff k is odd; otherwise fold it into the previous matching step.
      const std::size_t position = lc.labels.size() + (lc.leading_empty ? 1 : 0);
      const bool want_output = (position % 2 == 1);
      if (step_is_output != want_output && !lc.labels.empty()) {
        const std::size_t prev = lc.labels.size() - 1 + (lc.leading_empty ? 1 : 0);
        if (((prev % 2 == 1)) == step_is_output) {
          lc.labels.back() |= step;
          return;
        }
      }
      lc.labels.push_back(step);
    };
    for (int id : chains[c]) append(id);
    for (std::size_t d = 0; d < chains.size(); ++d) {
      if (d == c) continue;
      for (int id : chains[d]) append(id);
    }
    // Even set counts close by freeing trailing outputs.
    while (!lc.labels.empty() && (lc.labels.size() + (lc.leading_empty ? 1 : 0)) % 2 == 0 &&
           subset_of(lc.labels.back(), outputs)) {
      lc.labels.pop_back();
    }
    out.push_back(std::move(lc));
  }
  return out;
}

}  // namespace hotkit
