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

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hotkit/boolfn.hpp"
#include "hotkit/catalog.hpp"
#include "hotkit/choiverify.hpp"
#include "hotkit/common.hpp"
#include "hotkit/mobius.hpp"
#include "hotkit/normalform.hpp"
#include "hotkit/poset.hpp"
#include "hotkit/signalling.hpp"
#include "hotkit/subtypes.hpp"
#include "hotkit/typeterm.hpp"

namespace hotkit {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

inline std::string criterion_line(const CriterionResult& r)
{
  std::ostringstream os;
  os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ' ' << r.name << ": " << r.detail << " ("
     << static_cast<int>(r.seconds * 1000) / 1000.0 << "s)";
  return os.str();
}

/*! \brief The verification suite: one entry per claim the build must reproduce, each
    with its pinned counts, tolerances and runtime budget. */
class VerifySuite {
 public:
  explicit VerifySuite(int max_n = kDefaultEnumGuard, unsigned seed = 20260808u)
      : max_n_(max_n), universe_(std::max(max_n, 4)), seed_(seed)
  {
  }

  static constexpr int kCriteria = 10;

  std::vector<CriterionResult> run_all()
  {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriteria; ++id) out.push_back(run(id));
    return out;
  }

  CriterionResult run(int id)
  {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    CriterionResult r;
    r.id = id;
    switch (id) {
      case 1: r = counts_criterion(); break;
      case 2: r = regular_criterion(); break;
      case 3: r = signalling_equivalence_criterion(); break;
      case 4: r = mobius_criterion(); break;
      case 5: r = causal_product_criterion(); break;
      case 6: r = golden_signalling_criterion(); break;
      case 7: r = golden_normal_forms_criterion(); break;
      case 8: r = synthesis_bound_criterion(); break;
      case 9: r = choi_criterion(); break;
      case 10: r = lemma_suites_criterion(); break;
      default: throw UsageError("criteria are numbered 1.." + std::to_string(kCriteria));
    }
    r.id = id;
    r.seconds = std::chrono::duration<double>(clock::now() - start).count();
    // Stated runtime budgets are part of the contract.
    const double budget = (id == 1) ? 10.0 : (id == 2) ? 120.0 : (id == 9) ? 300.0 : 0.0;
    if (budget > 0 && r.seconds > budget) {
      r.pass = false;
      r.detail += " [exceeded the " + std::to_string(static_cast<int>(budget)) + "s budget]";
    }
    return r;
  }

 private:
  // -- helpers --------------------------------------------------------------

  int sweep_n(int stated) const { return std::min(stated, max_n_); }

  static std::vector<BoolFn> all_fn(int n)
  {
    std::vector<BoolFn> out;
    const std::uint32_t tables = 1u << ((1u << n) - 1);
    for (std::uint32_t u = 0; u < tables; ++u) {
      const std::uint32_t table = 1u | (u << 1);
      std::vector<std::uint32_t> support;
      for (std::uint32_t s = 0; s < (1u << n); ++s) {
        if ((table >> s) & 1u) support.push_back(s);
      }
      out.push_back(BoolFn::from_support(n, support));
    }
    return out;
  }

  static std::vector<BoolFn> monotone_by_scan(int n, Subset outputs)
  {
    std::vector<BoolFn> out;
    for (const auto& f : all_fn(n)) {
      if (io_split(f).outputs == outputs && is_monotone_subtype(f)) out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  BoolFn random_fn(int n, std::mt19937& rng) const
  {
    std::vector<std::uint32_t> support{0};
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
      if (rng() & 1u) support.push_back(s);
    }
    return BoolFn::from_support(n, support);
  }

  const BoolFn& random_type(int n, std::mt19937& rng) const
  {
    const auto& level = universe_.level(n);
    return level[rng() % level.size()];
  }

  BoolFn random_regular(int n, Subset outputs, std::mt19937& rng) const
  {
    const OutputOrder ord(n, outputs);
    BoolFn acc = basis_pT(n, ord.inputs());
    for (int k = 0; k < 3; ++k) {
      const std::uint32_t s = rng() & full_set(n);
      if (s != 0 && ord.in_down_theta(s)) continue;
      acc = join(acc, f_s(n, outputs, BitString(n, s)));
    }
    return acc;
  }

  BoolFn random_subtype(int n, Subset outputs, std::mt19937& rng) const
  {
    const Subset inputs = full_set(n) & ~outputs;
    const BoolFn lo = basis_pT(n, inputs);
    const BoolFn hi = complement(basis_pT(n, outputs));
    std::vector<std::uint32_t> support;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
      if (lo.value(s) || (hi.value(s) && (rng() & 1u))) support.push_back(s);
    }
    return BoolFn::from_support(n, support);
  }

  Perm random_perm(int n, std::mt19937& rng) const
  {
    Perm p = identity_perm(n);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
  }

  static CriterionResult make(const std::string& name, bool pass, const std::string& detail)
  {
    CriterionResult r;
    r.name = name;
    r.pass = pass;
    r.detail = detail;
    return r;
  }

  // -- 1: pinned counts -----------------------------------------------------

  CriterionResult counts_criterion()
  {
    const Subset O13_3 = subset_from_indices({1, 3}, 3);
    const Subset O13_4 = subset_from_indices({1, 3}, 4);
    const auto reg3 = enumerate_regular(universe_, 3, O13_3);
    const auto reg4 = enumerate_regular(universe_, 4, O13_4);
    int chains4 = 0;
    for (const auto& f : universe_.with_outputs(4, O13_4)) chains4 += is_chain_type(f) ? 1 : 0;
    std::vector<std::string> basics;
    for (const auto& s : basic_strings(4, O13_4)) basics.push_back(to_text(s));
    std::sort(basics.begin(), basics.end());
    const std::vector<std::string> expected_basics{"0011", "0110", "0111", "1001", "1100", "1101"};
    const bool pass = reg3.members.size() == 5 && reg4.members.size() == 50 && chains4 == 14 &&
                      basics == expected_basics;
    std::ostringstream os;
    os << "regular(3,{1,3})=" << reg3.members.size() << " regular(4,{1,3})=" << reg4.members.size()
       << " chain-types(4,{1,3})=" << chains4 << " basic-strings=" << basics.size();
    CriterionResult r = make("counts", pass, os.str());
    return r;
  }

  // -- 2: regular = monotone, exact set equality -----------------------------

  CriterionResult regular_criterion()
  {
    int checked = 0;
    for (int n = 1; n <= sweep_n(4); ++n) {
      for (Subset O = 0; O <= full_set(n); ++O) {
        const auto closure = lattice_closure(universe_.with_outputs(n, O));
        const auto dfs = enumerate_monotone(n, O);
        const auto scan = monotone_by_scan(n, O);
        if (closure != dfs || dfs != scan) {
          return make("regular-subtypes",
                      false,
                      "set mismatch at n=" + std::to_string(n) + " O=" + subset_text(O) + ": " +
                          std::to_string(closure.size()) + "/" + std::to_string(dfs.size()) + "/" +
                          std::to_string(scan.size()));
        }
        ++checked;
      }
    }
    return make("regular-subtypes",
                true,
                std::to_string(checked) + " (n,O) pairs, three enumeration routes agree");
  }

  // -- 3: evaluation and rank-parity signalling agree ------------------------

  /*! \brief Reduced-poset reading of no-signalling: free output, comparable pair,
      or longest common chain below. */
  static bool no_signal_from_diagram(const StructurePoset& P, int i0, int j0)
  {
    if (contains(P.free_outputs(), j0)) return true;
    const auto Ti = P.labelled_by(i0);
    const auto Tj = P.labelled_by(j0);
    const auto& es = P.elements();
    bool comparable = false, below = false;
    for (int a : Ti) {
      for (int b : Tj) {
        if (subset_of(es[a].set, es[b].set)) comparable = below = true;
        if (subset_of(es[b].set, es[a].set) && !comparable) comparable = true;
      }
    }
    if (comparable) return below;
    int longest = -1;
    for (int a : Ti) {
      for (int b : Tj) {
        const auto da = detail::reduced_cone(P, a, true);
        std::vector<int> common;
        for (int x : da) {
          if (subset_of(es[x].set, es[b].set)) common.push_back(x);
        }
        if (!common.empty()) longest = std::max(longest, static_cast<int>(common.size()) - 1);
      }
    }
    return longest >= 0 && longest % 2 == 0;
  }

  CriterionResult signalling_equivalence_criterion()
  {
    long long pairs = 0, mismatches = 0, diagram_mismatches = 0;
    for (int n = 1; n <= sweep_n(5); ++n) {
      for (const auto& f : universe_.level(n)) {
        const StructurePoset P(f);
        const IOSplit io = io_split(f);
        for (int i = 0; i < n; ++i) {
          if (!contains(io.inputs, i)) continue;
          for (int j = 0; j < n; ++j) {
            if (!contains(io.outputs, j)) continue;
            ++pairs;
            const bool by_eval = f.value(pair_string(n, i + 1, j + 1).bits) == 0;
            const int r = P.pair_rank(i, j);
            const bool by_rank = r >= 0 && r % 2 == 0;
            if (by_eval != by_rank) ++mismatches;
            if (by_eval != no_signal_from_diagram(P, i, j)) ++diagram_mismatches;
          }
        }
      }
    }
    std::ostringstream os;
    os << pairs << " (f,i,j) triples with n<=" << sweep_n(5) << ", " << mismatches
       << " rank mismatches, " << diagram_mismatches << " diagram-rule mismatches";
    return make("signalling-equivalence", mismatches == 0 && diagram_mismatches == 0, os.str());
  }

  // -- 4: expansion integrality and poset validity ---------------------------

  CriterionResult mobius_criterion()
  {
    long long functions = 0;
    for (int n = 1; n <= sweep_n(5); ++n) {
      for (const auto& f : universe_.level(n)) {
        ++functions;
        const MobiusCoeffs mc = mobius_transform(f);
        if (!coeffs_in_unit_range(mc)) {
          return make("mobius-integrality", false,
                      "coefficient outside {-1,0,1} for an enumerated type at n=" +
                          std::to_string(n));
        }
        const StructurePoset P(f);
        if (!P.valid() || P.top_rank() % 2 != 0) {
          return make("mobius-integrality", false,
                      "poset invariant failed at n=" + std::to_string(n) + ": " +
                          (P.issues().empty() ? "odd top rank" : P.issues().front()));
        }
        if (to_boolfn(mobius_inverse(mc), "reconstruction") != f) {
          return make("mobius-integrality", false, "reconstruction mismatch");
        }
      }
    }
    return make("mobius-integrality", true,
                std::to_string(functions) + " type functions: coefficients in {-1,0,1}, graded "
                                            "even rank, exact reconstruction");
  }

  // -- 5: causal products of types ------------------------------------------

  CriterionResult causal_product_criterion()
  {
    long long pairs = 0, mismatches = 0;
    const int cap = sweep_n(5);
    for (int a = 1; a + 1 <= cap; ++a) {
      for (int b = 1; a + b <= cap; ++b) {
        for (const auto& f : universe_.level(a)) {
          const bool cf = is_chain_type(f);
          for (const auto& g : universe_.level(b)) {
            ++pairs;
            const bool cg = is_chain_type(g);
            const BoolFn prod = causal_product(f, g, true);
            const bool is_type = universe_.contains(prod);
            if (is_type != (cf || cg)) ++mismatches;
            if (cf && cg && !is_chain_type(prod)) ++mismatches;
          }
        }
      }
    }
    return make("causal-product-types", mismatches == 0,
                std::to_string(pairs) + " ordered pairs with a+b<=" + std::to_string(cap) + ", " +
                    std::to_string(mismatches) + " mismatches");
  }

  // -- 6: golden signalling tables -------------------------------------------

  CriterionResult golden_signalling_criterion()
  {
    int failures = 0, checked = 0;
    std::ostringstream why;
    auto expect = [&](const SignallingMatrix& m, int i, int j, bool signals, const char* who) {
      ++checked;
      if (m.signals(i, j) != signals) {
        ++failures;
        why << ' ' << who << "(" << i << (signals ? "~>" : "!~>") << j << ")";
      }
    };

    const auto m_ns = signalling_matrix(catalog::nonsignalling_type(), TypeStatus::certified_type);
    expect(m_ns, 2, 1, true, "ns");
    expect(m_ns, 4, 3, true, "ns");
    expect(m_ns, 2, 3, false, "ns");
    expect(m_ns, 4, 1, false, "ns");

    const auto m_pm = signalling_matrix(catalog::process_matrix_type(), TypeStatus::certified_type);
    expect(m_pm, 2, 1, false, "pm");
    expect(m_pm, 4, 3, false, "pm");
    expect(m_pm, 2, 3, true, "pm");
    expect(m_pm, 4, 1, true, "pm");
    const auto m_rns =
        signalling_matrix(catalog::relabelled_nonsignalling_type(), TypeStatus::certified_type);
    if (!m_pm.same_relations(m_rns)) {
      ++failures;
      why << " pm-vs-relabelled-ns";
    }

    const auto m_a1 = signalling_matrix(catalog::adapter_small_type(), TypeStatus::certified_type);
    const bool a1_signal[4][4] = {
        // outputs:    2      4      5      7
        /* input 1 */ {true, false, true, true},
        /* input 3 */ {false, true, true, true},
        /* input 6 */ {true, true, false, true},
        /* input 8 */ {true, true, true, false},
    };
    const int a1_in[4] = {1, 3, 6, 8};
    const int a1_out[4] = {2, 4, 5, 7};
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) expect(m_a1, a1_in[a], a1_out[b], a1_signal[a][b], "a1");
    }

    const auto m_a2 = signalling_matrix(catalog::adapter_large_type(), TypeStatus::certified_type);
    const bool a2_signal[6][6] = {
        // outputs:     2      4      5      7     9     12
        /* input 1  */ {true, false, false, true, true, true},
        /* input 3  */ {false, true, false, true, true, true},
        /* input 6  */ {false, false, false, true, true, true},
        /* input 8  */ {true, true, true, false, true, true},
        /* input 10 */ {true, true, true, true, false, true},
        /* input 11 */ {true, true, true, true, true, true},
    };
    const int a2_in[6] = {1, 3, 6, 8, 10, 11};
    const int a2_out[6] = {2, 4, 5, 7, 9, 12};
    for (int a = 0; a < 6; ++a) {
      for (int b = 0; b < 6; ++b) expect(m_a2, a2_in[a], a2_out[b], a2_signal[a][b], "a2");
    }

    // Full-signalling channels: every input signals to every output.
    const BoolFn full = complement(basis_pT(3, subset_from_indices({1, 3}, 3)));
    const auto m_full = signalling_matrix(full, TypeStatus::certified_type);
    for (const auto& e : m_full.entries) {
      ++checked;
      if (!e.signals) {
        ++failures;
        why << " full-signalling";
      }
    }
    ++checked;  // the matrix comparison above

    return make("golden-signalling", failures == 0,
                failures == 0 ? std::to_string(checked) +
                                    " relations match (ns, pm, relabelled ns, both adapters, "
                                    "full-signalling channels)"
                              : "mismatches:" + why.str());
  }

  // -- 7: golden normal forms -------------------------------------------------

  CriterionResult golden_normal_forms_criterion()
  {
    int failures = 0;
    std::ostringstream why;
    auto expect_eval = [&](const NormalForm& nf, const BoolFn& target, const char* who) {
      if (eval_normal_form(nf) != target) {
        ++failures;
        why << ' ' << who << "(eval)";
      }
    };
    auto expect_minimax = [&](const NormalForm& nf, bool value, const char* who) {
      if (verify_minimax(nf) != value) {
        ++failures;
        why << ' ' << who << "(minimax)";
      }
    };
    auto grid_form = [](int n, const std::vector<std::vector<LabelChain>>& rows) {
      NormalForm nf;
      nf.n = n;
      for (const auto& row : rows) {
        std::vector<int> term;
        for (const auto& leaf : row) {
          nf.leaves.push_back(chain_from_labels(leaf, n));
          term.push_back(static_cast<int>(nf.leaves.size()) - 1);
        }
        nf.terms.push_back(term);
      }
      return nf;
    };

    {
      const auto leaves = catalog::nonsignalling_chains();
      const NormalForm nf = grid_form(4, {{leaves[0], leaves[1]}});
      expect_eval(nf, catalog::nonsignalling_type(), "ns");
      expect_minimax(nf, true, "ns");
    }
    {
      const auto leaves = catalog::process_matrix_chains();
      const NormalForm nf = grid_form(4, {{leaves[0]}, {leaves[1]}});
      expect_eval(nf, catalog::process_matrix_type(), "pm");
      expect_minimax(nf, true, "pm");
    }
    {
      const auto leaves = catalog::past_future_chains();
      const NormalForm nf = grid_form(6, {{leaves[0]}, {leaves[1]}});
      expect_eval(nf, catalog::past_future_type(), "past-future");
      expect_minimax(nf, true, "past-future");
    }
    {
      const auto rows = catalog::adapter_small_chains();  // [branch][variant]
      // Join of meets: (h11 ^ h21) v (h12 ^ h22) v (h13 ^ h23).
      const NormalForm nf = grid_form(8, {{rows[0][0], rows[1][0]},
                                          {rows[0][1], rows[1][1]},
                                          {rows[0][2], rows[1][2]}});
      expect_eval(nf, catalog::adapter_small_type(), "adapter8");
      expect_minimax(nf, true, "adapter8");
    }
    {
      const auto rows = catalog::adapter_large_chains();  // [branch][variant]
      const NormalForm nf = grid_form(12, {{rows[0][0], rows[0][1]},
                                           {rows[1][0], rows[1][1]},
                                           {rows[2][0], rows[2][1]}});
      expect_eval(nf, catalog::adapter_large_type(), "adapter12");
      expect_minimax(nf, true, "adapter12");
    }
    {
      // Four-leaf decomposition: it evaluates to the target but is not an A x B
      // grid, so it is the one worked form without the minimax property.
      const auto rows = catalog::adapter_large_chains();
      const auto grouped = catalog::adapter_large_grouped_chains();
      NormalForm nf;
      nf.n = 12;
      nf.leaves = {chain_from_labels(rows[0][0], 12), chain_from_labels(rows[0][1], 12),
                   chain_from_labels(grouped[0], 12), chain_from_labels(grouped[1], 12)};
      nf.terms = {{0, 1}, {2}, {3}};
      expect_eval(nf, catalog::adapter_large_type(), "adapter12-4leaf");
      if (nf.is_grid()) {
        ++failures;
        why << " adapter12-4leaf(shape)";
      } else {
        bool rejected = false;
        try {
          verify_minimax(nf);
        } catch (const UsageError&) {
          rejected = true;
        }
        if (!rejected) {
          ++failures;
          why << " adapter12-4leaf(minimax-not-rejected)";
        }
      }
    }

    return make("golden-normal-forms", failures == 0,
                failures == 0
                    ? "6 worked decompositions evaluate to their targets; minimax holds for all "
                      "but the four-leaf adapter form"
                    : "mismatches:" + why.str());
  }

  // -- 8: synthesis soundness and leaf bound ----------------------------------

  CriterionResult synthesis_bound_criterion()
  {
    long long functions = 0;
    for (int n = 1; n <= sweep_n(4); ++n) {
      for (const auto& f : universe_.level(n)) {
        ++functions;
        const NormalForm nf = synthesize(f, universe_);
        if (eval_normal_form(nf) != f) {
          return make("synthesis-bound", false, "synthesized form does not evaluate back");
        }
        const auto M = StructurePoset(f).maximal_chains(true).size();
        if (nf.leaves.size() > M) {
          return make("synthesis-bound", false,
                      "leaf count " + std::to_string(nf.leaves.size()) + " exceeds the " +
                          std::to_string(M) + " maximal chains");
        }
        for (const auto& leaf : nf.leaves) {
          const BoolFn lf = chain_type(leaf);
          if (io_split(lf).outputs != io_split(f).outputs) {
            return make("synthesis-bound", false, "leaf with a different input/output split");
          }
        }
      }
    }
    return make("synthesis-bound", true,
                std::to_string(functions) +
                    " type functions re-evaluate with leaf count within the maximal-chain bound");
  }

  // -- 9: superoperator projection identities ---------------------------------

  CriterionResult choi_criterion()
  {
    const double construction_tol = 1e-10, identity_tol = 1e-9;
    long long pairs = 0;
    double worst = 0;
    std::mt19937 rng(seed_);

    auto run_pair = [&](const ProjectionFactory& factory, const BoolFn& f, const BoolFn& g,
                        const BoolFn* l, const BoolFn* r) {
      const IdentityReport rep = verify_identities(factory, f, g, l, r);
      worst = std::max(worst, rep.max_residual());
      ++pairs;
      return rep.pass(construction_tol, identity_tol);
    };
    auto rank_ok = [&](const ProjectionFactory& factory, const BoolFn& f) {
      const double tr = factory.build_Pf(f).trace();
      return std::abs(tr - static_cast<double>(factory.expected_rank(f))) < 1e-6;
    };

    for (int n = 1; n <= std::min(3, sweep_n(4)); ++n) {
      const ProjectionFactory factory(SystemDims(std::vector<int>(n, 2)));
      for (const auto& f : universe_.level(n)) {
        if (!rank_ok(factory, f)) {
          return make("choi-identities", false, "rank formula failed at n=" + std::to_string(n));
        }
        for (const auto& g : universe_.level(n)) {
          if (!run_pair(factory, f, g, nullptr, nullptr)) {
            return make("choi-identities", false,
                        "identity failed at n=" + std::to_string(n) + ", residual " +
                            std::to_string(worst));
          }
        }
      }
      // Tensor identity over the splits.
      for (int a = 1; a < n; ++a) {
        for (const auto& fl : universe_.level(a)) {
          for (const auto& fr : universe_.level(n - a)) {
            const BoolFn prod = tensor(fl, fr);
            if (!run_pair(factory, prod, prod, &fl, &fr)) {
              return make("choi-identities", false, "tensor identity failed");
            }
          }
        }
      }
    }
    if (sweep_n(4) >= 4) {
      const ProjectionFactory factory(SystemDims(std::vector<int>{2, 2, 2, 2}));
      const auto& level = universe_.level(4);
      for (int k = 0; k < 50; ++k) {
        const BoolFn& f = level[rng() % level.size()];
        const BoolFn& g = level[rng() % level.size()];
        if (!run_pair(factory, f, g, nullptr, nullptr)) {
          return make("choi-identities", false, "identity failed on four qubits");
        }
      }
      for (int k = 0; k < 8; ++k) {
        const BoolFn& fl = universe_.level(2)[rng() % universe_.level(2).size()];
        const BoolFn& fr = universe_.level(2)[rng() % universe_.level(2).size()];
        const BoolFn prod = tensor(fl, fr);
        if (!run_pair(factory, prod, prod, &fl, &fr)) {
          return make("choi-identities", false, "tensor identity failed on four qubits");
        }
      }
    }
    std::ostringstream os;
    os << pairs << " pairs on qubit systems, max residual " << worst;
    return make("choi-identities", true, os.str());
  }

  // -- 10: lemma-level property suites -----------------------------------------

  CriterionResult lemma_suites_criterion();

  int max_n_;
  TypeUniverse universe_;
  unsigned seed_;
};

}  // namespace hotkit

#include "hotkit/verify_lemmas.hpp"
