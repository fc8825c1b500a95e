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

// Lemma-level property sweeps behind criterion 10: exhaustive at small sizes,
// seeded random cases at five systems.

#pragma once

#include "hotkit/verify.hpp"

namespace hotkit {

namespace detail {

struct SuiteOutcome {
  std::string name;
  long long cases = 0;
  long long failures = 0;
  std::string first_failure;

  void tally(bool ok, const char* what)
  {
    ++cases;
    if (!ok) {
      ++failures;
      if (first_failure.empty()) first_failure = what;
    }
  }
};

class LemmaSweeps {
 public:
  LemmaSweeps(const TypeUniverse& universe, int max_n, unsigned seed)
      : universe_(universe), max_n_(max_n), rng_(seed)
  {
    for (int n = 1; n <= 4; ++n) {
      fn_.push_back(enumerate_all(n));
      std::vector<BoolFn> subs;
      for (const auto& f : fn_.back()) {
        if (is_subtype(f)) subs.push_back(f);
      }
      subtypes_.push_back(std::move(subs));
    }
  }

  std::vector<SuiteOutcome> run()
  {
    std::vector<SuiteOutcome> out;
    out.push_back(algebra_suite());
    out.push_back(subtype_closure_suite());
    out.push_back(poset_suite());
    out.push_back(pf0_construction_suite());
    out.push_back(signalling_operations_suite());
    out.push_back(monotone_suite());
    return out;
  }

 private:
  static std::vector<BoolFn> enumerate_all(int n)
  {
    std::vector<BoolFn> out;
    const std::uint32_t tables = 1u << ((1u << n) - 1);
    for (std::uint32_t u = 0; u < tables; ++u) {
      std::vector<std::uint32_t> support;
      const std::uint32_t table = 1u | (u << 1);
      for (std::uint32_t s = 0; s < (1u << n); ++s) {
        if ((table >> s) & 1u) support.push_back(s);
      }
      out.push_back(BoolFn::from_support(n, support));
    }
    return out;
  }

  const std::vector<BoolFn>& fns(int n) const { return fn_[n - 1]; }
  const std::vector<BoolFn>& subtypes(int n) const { return subtypes_[n - 1]; }

  BoolFn random_fn(int n)
  {
    std::vector<std::uint32_t> support{0};
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
      if (rng_() & 1u) support.push_back(s);
    }
    return BoolFn::from_support(n, support);
  }

  Perm random_perm(int n)
  {
    Perm p = identity_perm(n);
    std::shuffle(p.begin(), p.end(), rng_);
    return p;
  }

  BoolFn random_monotone(int n, Subset outputs)
  {
    const OutputOrder ord(n, outputs);
    BoolFn acc = basis_pT(n, ord.inputs());
    for (int k = 0; k < 3; ++k) {
      const std::uint32_t s = rng_() & full_set(n);
      if (s != 0 && ord.in_down_theta(s)) continue;
      acc = join(acc, f_s(n, outputs, BitString(n, s)));
    }
    return acc;
  }

  BoolFn random_subtype_in(int n, Subset outputs)
  {
    const Subset inputs = full_set(n) & ~outputs;
    const BoolFn lo = basis_pT(n, inputs);
    const BoolFn hi = complement(basis_pT(n, outputs));
    std::vector<std::uint32_t> support;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
      if (lo.value(s) || (hi.value(s) && (rng_() & 1u))) support.push_back(s);
    }
    return BoolFn::from_support(n, support);
  }

  Subset random_proper_outputs(int n)
  {
    while (true) {
      const Subset O = rng_() & full_set(n);
      if (O != 0 && O != full_set(n)) return O;
    }
  }

  // -- pointwise algebra, products and the one-way product --------------------

  SuiteOutcome algebra_suite()
  {
    SuiteOutcome suite;
    suite.name = "boolean-algebra";

    auto de_morgan = [&](const BoolFn& f, const BoolFn& g) {
      suite.tally(complement(join(f, g)) == meet(complement(f), complement(g)) &&
                      complement(meet(f, g)) == join(complement(f), complement(g)) &&
                      complement(complement(f)) == f,
                  "de-morgan");
    };
    for (int n = 1; n <= 3; ++n) {
      for (const auto& f : fns(n)) {
        for (const auto& g : fns(n)) de_morgan(f, g);
      }
    }
    for (int k = 0; k < 1500; ++k) de_morgan(random_fn(5), random_fn(5));

    auto product_pair = [&](const BoolFn& f, const BoolFn& g) {
      const BoolFn t = tensor(f, g);
      const BoolFn p = par(f, g);
      const BoolFn fg = causal_product(f, g, true);
      const BoolFn gf = causal_product(f, g, false);
      suite.tally(leq(t, p), "tensor-below-par");
      suite.tally(complement(fg) == causal_product(complement(f), complement(g), true),
                  "causal-complement");
      suite.tally(t == meet(fg, gf) && p == join(fg, gf), "products-via-causal");
    };
    for (int a = 1; a <= 4; ++a) {
      for (int b = 1; a + b <= 5 && b <= 4; ++b) {
        for (const auto& f : fns(a)) {
          for (const auto& g : fns(b)) product_pair(f, g);
        }
      }
    }

    // Monotonicity of the products in both arguments, plus the extension identity
    // f1 (x) f2 = (f1 <| g2) ^ (f2 <| g1) for dominating g1, g2.
    auto monotone_products = [&](const BoolFn& f, const BoolFn& f2, const BoolFn& g,
                                 const BoolFn& g2) {
      if (!leq(f, f2) || !leq(g, g2)) return;
      suite.tally(leq(tensor(f, g), tensor(f2, g2)) && leq(par(f, g), par(f2, g2)),
                  "product-monotonicity");
      suite.tally(tensor(f, g) == meet(causal_product(f, g2, true), causal_product(f2, g, false)),
                  "causal-extension");
    };
    const std::pair<int, int> quad_splits[] = {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {1, 3}, {3, 1}};
    for (const auto& [a, b] : quad_splits) {
      for (const auto& f : fns(a)) {
        for (const auto& f2 : fns(a)) {
          if (!leq(f, f2)) continue;
          for (const auto& g : fns(b)) {
            for (const auto& g2 : fns(b)) monotone_products(f, f2, g, g2);
          }
        }
      }
    }
    for (int k = 0; k < 1000; ++k) {
      const BoolFn f = random_fn(2), g = random_fn(3);
      monotone_products(f, join(f, random_fn(2)), g, join(g, random_fn(3)));
    }

    // Associativity of the one-way product, exhaustive for all splits through n=5.
    for (int a = 1; a <= 3; ++a) {
      for (int b = 1; a + b <= 4; ++b) {
        for (int c = 1; a + b + c <= 5; ++c) {
          for (const auto& f : fns(a)) {
            for (const auto& g : fns(b)) {
              for (const auto& h : fns(c)) {
                suite.tally(causal_product(causal_product(f, g, true), h, true) ==
                                causal_product(f, causal_product(g, h, true), true),
                            "causal-associativity");
              }
            }
          }
        }
      }
    }

    // Distribution over joins and meets in both arguments.
    auto distribution = [&](const BoolFn& f1, const BoolFn& f2, const BoolFn& f3,
                            const BoolFn& f4) {
      const BoolFn lhs_join = causal_product(join(f1, f2), join(f3, f4), true);
      suite.tally(lhs_join == join(causal_product(f1, f3, true), causal_product(f2, f4, true)) &&
                      lhs_join ==
                          join(causal_product(f1, f4, true), causal_product(f2, f3, true)),
                  "causal-distribution-join");
      const BoolFn lhs_meet = causal_product(meet(f1, f2), meet(f3, f4), true);
      suite.tally(lhs_meet == meet(causal_product(f1, f3, true), causal_product(f2, f4, true)) &&
                      lhs_meet ==
                          meet(causal_product(f1, f4, true), causal_product(f2, f3, true)),
                  "causal-distribution-meet");
    };
    for (const auto& [a, b] : quad_splits) {
      for (const auto& f1 : fns(a)) {
        for (const auto& f2 : fns(a)) {
          for (const auto& f3 : fns(b)) {
            for (const auto& f4 : fns(b)) distribution(f1, f2, f3, f4);
          }
        }
      }
    }
    for (int k = 0; k < 1000; ++k) {
      distribution(random_fn(2), random_fn(2), random_fn(3), random_fn(3));
    }
    return suite;
  }

  // -- closure of subtypes under the operations --------------------------------

  SuiteOutcome subtype_closure_suite()
  {
    SuiteOutcome suite;
    suite.name = "subtype-closure";

    auto unary = [&](const BoolFn& f) {
      const IOSplit io = io_split(f);
      const BoolFn dual = complement(f);
      suite.tally(is_subtype(dual) && io_split(dual).inputs == io.outputs &&
                      io_split(dual).outputs == io.inputs,
                  "dual-subtype");
      const Perm p = random_perm(f.n());
      const BoolFn moved = permute(f, p);
      suite.tally(is_subtype(moved) && io_split(moved).inputs == preimage_subset(io.inputs, p),
                  "permuted-subtype");
    };
    auto pair = [&](const BoolFn& f, const BoolFn& g) {
      const Subset expect_in = io_split(f).inputs | (io_split(g).inputs << f.n());
      for (BinaryOp op :
           {BinaryOp::tensor, BinaryOp::par, BinaryOp::causal_left, BinaryOp::causal_right}) {
        const BoolFn h = combine(f, g, op);
        suite.tally(is_subtype(h) && io_split(h).inputs == expect_in, "product-subtype");
      }
    };
    for (int n = 1; n <= 4; ++n) {
      for (const auto& f : subtypes(n)) unary(f);
    }
    for (int a = 1; a <= 3; ++a) {
      for (int b = 1; a + b <= 4; ++b) {
        for (const auto& f : subtypes(a)) {
          for (const auto& g : subtypes(b)) pair(f, g);
        }
      }
    }
    for (int k = 0; k < 1000; ++k) {
      const BoolFn f = random_subtype_in(2, rng_() & full_set(2));
      const BoolFn g = random_subtype_in(3, rng_() & full_set(3));
      unary(random_subtype_in(5, rng_() & full_set(5)));
      pair(f, g);
    }
    return suite;
  }

  // -- order-theoretic poset lemmas ---------------------------------------------

  SuiteOutcome poset_suite()
  {
    SuiteOutcome suite;
    suite.name = "poset-lemmas";
    auto check = [&](const BoolFn& f) {
      const StructurePoset P(f);
      suite.tally(P.valid(), "poset-validity");
      suite.tally(check_ypsilon(P).pass, "cone-intersections");
      suite.tally(check_xfree(P).pass, "chain-cone");
      suite.tally(check_meet(P).pass, "meet-reduced");
      suite.tally(check_lattice(P).pass, "bounded-lattice");
      const bool chain = is_chain_type(f);
      suite.tally(chain == P.totally_ordered() && chain == P.reduced_equals_full(),
                  "chain-characterization");
    };
    for (int n = 1; n <= std::min(5, max_n_); ++n) {
      for (const auto& f : universe_.level(n)) check(f);
    }
    // Chain classification against direct chain enumeration.
    for (int n = 1; n <= std::min(5, max_n_); ++n) {
      const auto chains = enumerate_chain_types(n);
      long long found = 0;
      for (const auto& f : universe_.level(n)) {
        const bool in_oracle = std::binary_search(chains.begin(), chains.end(), f);
        suite.tally(is_chain_type(f) == in_oracle, "chain-oracle");
        found += in_oracle ? 1 : 0;
      }
      suite.tally(found == static_cast<long long>(chains.size()), "chain-oracle-coverage");
    }
    return suite;
  }

  // -- constructive reduced posets under the operations --------------------------

  SuiteOutcome pf0_construction_suite()
  {
    SuiteOutcome suite;
    suite.name = "reduced-poset-construction";
    for (int n = 1; n <= std::min(4, max_n_); ++n) {
      std::vector<Perm> perms;
      Perm p = identity_perm(n);
      do {
        perms.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      for (const auto& f : universe_.level(n)) {
        suite.tally(check_pf0_complement(f).pass, "complement-case");
        for (const auto& sigma : perms) {
          suite.tally(check_pf0_permutation(f, sigma).pass, "permutation-case");
        }
      }
    }
    const int cap = std::min(5, max_n_);
    for (int a = 1; a + 1 <= cap; ++a) {
      for (int b = 1; a + b <= cap; ++b) {
        for (const auto& f : universe_.level(a)) {
          for (const auto& g : universe_.level(b)) {
            suite.tally(check_pf0_tensor(f, g).pass, "tensor-case");
            suite.tally(check_pf0_causal(f, g).pass, "causal-case");
          }
        }
      }
    }
    if (max_n_ >= 5) {
      for (const auto& f : universe_.level(5)) {
        suite.tally(check_pf0_complement(f).pass, "complement-case");
        suite.tally(check_pf0_permutation(f, random_perm(5)).pass, "permutation-case");
      }
    }
    return suite;
  }

  // -- signalling under the operations -------------------------------------------

  SuiteOutcome signalling_operations_suite()
  {
    SuiteOutcome suite;
    suite.name = "signalling-operations";

    // Raw criterion evaluation; the checked API is exercised in the unit tests.
    auto nosig = [](const BoolFn& f, int i1, int j1) {
      return f.value((1u << (i1 - 1)) | (1u << (j1 - 1))) == 0;
    };

    auto duality_and_lattice = [&](const std::vector<BoolFn>& regulars) {
      for (const auto& f : regulars) {
        const IOSplit io = io_split(f);
        const auto ins = subset_indices(io.inputs);
        const auto outs = subset_indices(io.outputs);
        const BoolFn dual = complement(f);
        for (int i : ins) {
          for (int j : outs) {
            suite.tally(nosig(f, i, j) == !nosig(dual, j, i), "duality");
          }
        }
        for (const auto& g : regulars) {
          const BoolFn lo = meet(f, g), hi = join(f, g);
          for (int i : ins) {
            for (int j : outs) {
              suite.tally(nosig(lo, i, j) == (nosig(f, i, j) || nosig(g, i, j)), "meet-rule");
              suite.tally(nosig(hi, i, j) == (nosig(f, i, j) && nosig(g, i, j)), "join-rule");
            }
          }
        }
      }
    };
    auto permutation_rule = [&](const BoolFn& f, const Perm& p) {
      const BoolFn moved = permute(f, p);
      const Perm inv = inverse_perm(p);
      const IOSplit io = io_split(f);
      for (int i : subset_indices(io.inputs)) {
        for (int j : subset_indices(io.outputs)) {
          suite.tally(nosig(f, i, j) == nosig(moved, inv[i - 1] + 1, inv[j - 1] + 1),
                      "permutation-rule");
        }
      }
    };
    auto product_rules = [&](const BoolFn& f1, const BoolFn& f2) {
      const int n1 = f1.n();
      const IOSplit io1 = io_split(f1), io2 = io_split(f2);
      const BoolFn prod = tensor(f1, f2);
      const BoolFn ordered = causal_product(f1, f2, true);
      for (const BoolFn* h : {&prod, &ordered}) {
        const bool is_tensor = (h == &prod);
        for (int i : subset_indices(io1.inputs)) {
          for (int j : subset_indices(io1.outputs)) {
            suite.tally(nosig(*h, i, j) == nosig(f1, i, j), "block-one-rule");
          }
        }
        for (int i : subset_indices(io2.inputs)) {
          for (int j : subset_indices(io2.outputs)) {
            suite.tally(nosig(*h, i + n1, j + n1) == nosig(f2, i, j), "block-two-rule");
          }
        }
        for (int i : subset_indices(io1.inputs)) {
          for (int j : subset_indices(io2.outputs)) {
            suite.tally(nosig(*h, i, j + n1), "cross-no-signal");
          }
        }
        for (int i : subset_indices(io2.inputs)) {
          for (int j : subset_indices(io1.outputs)) {
            suite.tally(nosig(*h, i + n1, j) == is_tensor, "cross-back-rule");
          }
        }
      }
    };

    for (int n = 1; n <= 4; ++n) {
      std::vector<Perm> perms;
      Perm p = identity_perm(n);
      do {
        perms.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      for (Subset O = 0; O <= full_set(n); ++O) {
        const auto regulars = enumerate_monotone(n, O);
        duality_and_lattice(regulars);
        for (const auto& f : regulars) {
          for (const auto& sigma : perms) permutation_rule(f, sigma);
        }
      }
    }
    for (int a = 1; a <= 3; ++a) {
      for (int b = 1; a + b <= 4; ++b) {
        for (Subset O1 = 0; O1 <= full_set(a); ++O1) {
          for (Subset O2 = 0; O2 <= full_set(b); ++O2) {
            for (const auto& f1 : enumerate_monotone(a, O1)) {
              for (const auto& f2 : enumerate_monotone(b, O2)) product_rules(f1, f2);
            }
          }
        }
      }
    }
    for (int k = 0; k < 500; ++k) {
      const BoolFn f = random_monotone(5, random_proper_outputs(5));
      permutation_rule(f, random_perm(5));
      product_rules(random_monotone(2, random_proper_outputs(2)),
                    random_monotone(3, random_proper_outputs(3)));
      duality_and_lattice({f, random_monotone(5, io_split(f).outputs)});
    }
    return suite;
  }

  // -- the generating family of the regular lattice -------------------------------

  SuiteOutcome monotone_suite()
  {
    SuiteOutcome suite;
    suite.name = "monotone-generators";

    // Single-flip monotonicity scan agrees with the full comparison, and being a
    // monotone subtype is the same as f and f* both being plain monotone.
    auto plain_monotone = [](const BoolFn& f) {
      const OutputOrder ord(f.n(), io_split(f).outputs);
      for (std::uint32_t s = 0; s < f.num_strings(); ++s) {
        for (std::uint32_t t = 0; t < f.num_strings(); ++t) {
          if (ord.leq(s, t) && f.value(s) > f.value(t)) return false;
        }
      }
      return true;
    };
    auto monotone_characterizations = [&](const BoolFn& f) {
      const bool subtype_route = is_monotone_subtype(f);
      suite.tally(subtype_route == is_monotone_subtype_exhaustive(f), "flip-scan");
      suite.tally(subtype_route == (plain_monotone(f) && plain_monotone(complement(f))),
                  "dual-monotone-characterization");
    };
    for (int n = 1; n <= 4; ++n) {
      for (const auto& f : fns(n)) monotone_characterizations(f);
    }
    for (int k = 0; k < 2000; ++k) monotone_characterizations(random_fn(5));

    auto family_checks = [&](int n, Subset O) {
      const OutputOrder ord(n, O);
      std::vector<std::uint32_t> candidates;  // strings incomparable with theta
      for (std::uint32_t s = 0; s < (1u << n); ++s) {
        if (!ord.in_down_theta(s) && !ord.in_up_theta(s)) candidates.push_back(s);
      }
      // f_{s v t} = f_s ^ f_t.
      for (auto s : candidates) {
        for (auto t : candidates) {
          const std::uint32_t sv = ord.flip(ord.flip(s) | ord.flip(t));
          suite.tally(f_s(n, O, BitString(n, sv)) ==
                          meet(f_s(n, O, BitString(n, s)), f_s(n, O, BitString(n, t))),
                      "join-meet-exchange");
        }
      }
      // Every f_s is the meet of basic generators.
      const Subset I = ord.inputs();
      for (auto s : candidates) {
        std::optional<BoolFn> acc;
        for (int j = 0; j < n; ++j) {
          if (!contains(O, j) || !contains(s, j)) continue;
          const std::uint32_t zero_inputs = I & ~s;
          if (zero_inputs == 0) {
            const BoolFn g = f_s(n, O, BitString(n, I | (1u << j)));
            acc = acc ? meet(*acc, g) : g;
          } else {
            for (int i = 0; i < n; ++i) {
              if (!contains(zero_inputs, i)) continue;
              const BoolFn g = f_s(n, O, BitString(n, (I & ~(1u << i)) | (1u << j)));
              acc = acc ? meet(*acc, g) : g;
            }
          }
        }
        suite.tally(acc && *acc == f_s(n, O, BitString(n, s)), "basic-meet-decomposition");
      }
      // The announced generators are chains and generate the whole lattice.
      const auto gens = regular_generators(n, O);
      for (const auto& g : gens) {
        const auto spec = chain_of(g);
        suite.tally(spec.has_value() && spec->sets.size() <= 3, "generator-shape");
      }
      suite.tally(lattice_closure(gens) == enumerate_monotone(n, O), "generator-closure");
    };
    for (int n = 2; n <= 4; ++n) {
      for (Subset O = 1; O < full_set(n); ++O) family_checks(n, O);
    }
    family_checks(5, random_proper_outputs(5));

    // Lattice operations and products preserve monotone subtypes.
    auto closure_pair = [&](const BoolFn& f, const BoolFn& g) {
      if (f.n() == g.n() && io_split(f).outputs == io_split(g).outputs) {
        suite.tally(is_monotone_subtype(meet(f, g)) && is_monotone_subtype(join(f, g)),
                    "monotone-lattice-closure");
      }
      if (f.n() + g.n() <= kMaxSystems) {
        suite.tally(is_monotone_subtype(tensor(f, g)) && is_monotone_subtype(par(f, g)) &&
                        is_monotone_subtype(causal_product(f, g, true)) &&
                        is_monotone_subtype(causal_product(f, g, false)),
                    "monotone-product-closure");
      }
      suite.tally(is_monotone_subtype(complement(f)) &&
                      is_monotone_subtype(permute(f, random_perm(f.n()))),
                  "monotone-unary-closure");
    };
    for (int a = 1; a <= 2; ++a) {
      for (int b = a; a + b <= 4; ++b) {
        for (Subset O1 = 0; O1 <= full_set(a); ++O1) {
          for (Subset O2 = 0; O2 <= full_set(b); ++O2) {
            for (const auto& f : enumerate_monotone(a, O1)) {
              for (const auto& g : enumerate_monotone(b, O2)) closure_pair(f, g);
            }
          }
        }
      }
    }
    for (int k = 0; k < 1000; ++k) {
      closure_pair(random_monotone(5, random_proper_outputs(5)),
                   random_monotone(5, random_proper_outputs(5)));
    }
    return suite;
  }

  const TypeUniverse& universe_;
  int max_n_;
  std::mt19937 rng_;
  std::vector<std::vector<BoolFn>> fn_;
  std::vector<std::vector<BoolFn>> subtypes_;
};

}  // namespace detail

inline CriterionResult VerifySuite::lemma_suites_criterion()
{
  detail::LemmaSweeps sweeps(universe_, max_n_, seed_);
  const auto outcomes = sweeps.run();
  long long cases = 0, failures = 0;
  std::ostringstream os;
  for (const auto& s : outcomes) {
    cases += s.cases;
    failures += s.failures;
    os << ' ' << s.name << '=' << s.cases;
    if (s.failures) os << "(FAILED " << s.failures << ": " << s.first_failure << ")";
  }
  CriterionResult r;
  r.name = "lemma-suites";
  r.pass = failures == 0;
  r.detail = std::to_string(cases) + " cases:" + os.str();
  return r;
}

}  // namespace hotkit
