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
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hotkit/catalog.hpp"
#include "hotkit/choiverify.hpp"
#include "hotkit/report.hpp"
#include "hotkit/serialization.hpp"
#include "hotkit/verify.hpp"

namespace hotkit::cli {

struct CommonInput {
  std::string term;
  std::string fn_file;
  int max_n = 0;  // 0 = default guard / environment

  int guard() const
  {
    if (max_n > 0) return std::min(max_n, kMaxSystems);
    if (const char* env = std::getenv("HOTKIT_MAX_N")) {
      const int v = std::atoi(env);
      if (v >= 1) return std::min(v, kMaxSystems);
    }
    return kDefaultEnumGuard;
  }

  /*! \brief The function plus what is known about it: terms certify type-ness by
      construction, files start out unknown. */
  std::pair<BoolFn, TypeStatus> load(std::ostream& err) const
  {
    if (!term.empty() && !fn_file.empty()) {
      throw UsageError("give either --term or --fn, not both");
    }
    if (!term.empty()) return {eval_term(term), TypeStatus::certified_type};
    if (!fn_file.empty()) {
      std::ifstream in(fn_file);
      if (!in) throw UsageError("cannot open " + fn_file);
      Json j;
      try {
        in >> j;
      } catch (const std::exception& e) {
        throw UsageError("cannot parse " + fn_file + ": " + e.what());
      }
      return {boolfn_from_json(j), TypeStatus::unknown};
    }
    (void)err;
    throw UsageError("an input function is required: --term \"<dsl>\" or --fn <json-file>");
  }

  std::string source_text() const { return !term.empty() ? term : fn_file; }
};

inline std::vector<int> parse_int_list(const std::string& text, const char* what)
{
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw UsageError(std::string("cannot parse ") + what + " entry '" + tok + "'");
    }
  }
  if (out.empty()) throw UsageError(std::string(what) + " must be a comma-separated list");
  return out;
}

inline std::string render_term(const TypeTerm& t)
{
  switch (t.kind) {
    case TypeTerm::Kind::leaf: return "A" + std::to_string(t.index);
    case TypeTerm::Kind::dual: return "~" + render_term(*t.lhs);
    case TypeTerm::Kind::tensor:
      return "(" + render_term(*t.lhs) + " * " + render_term(*t.rhs) + ")";
  }
  return "?";
}

/*! \brief Command-line front end; returns the process exit code. Exit 0 on
    success, 1 on bad input, 2 on a broken structural guarantee. */
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"calculus of higher-order quantum-map types"};
  app.require_subcommand(1);

  CommonInput input;
  bool as_json = false, as_dot = false, full_poset = false, all_types = false;
  int n_arg = 0;
  std::string outputs_arg, dims_arg = "2,2", suite_arg = "all";
  double tolerance = 1e-9;
  unsigned seed = 20260808u;

  auto add_input = [&](CLI::App* cmd, bool with_json = true) {
    cmd->add_option("--term", input.term, "type term, e.g. \"(A2 -> A1) * (A4 -> A3)\"");
    cmd->add_option("--fn", input.fn_file, "JSON file with {\"n\":...,\"support\":[...]}");
    cmd->add_option("--max-n", input.max_n, "enumeration guard override (env HOTKIT_MAX_N)");
    if (with_json) cmd->add_flag("--json", as_json, "machine-readable output");
  };

  auto* cmd_parse = app.add_subcommand("parse", "parse a term and echo its desugared form");
  add_input(cmd_parse);

  auto* cmd_analyze = app.add_subcommand("analyze", "full report for one function");
  add_input(cmd_analyze);

  auto* cmd_enum = app.add_subcommand("enumerate-types", "all type functions on n systems");
  cmd_enum->add_option("--n", n_arg, "system count")->required();
  cmd_enum->add_option("--max-n", input.max_n, "enumeration guard override");
  cmd_enum->add_flag("--json", as_json, "machine-readable output");

  auto* cmd_reg = app.add_subcommand("enumerate-regular",
                                     "the lattice generated by type functions with fixed outputs");
  cmd_reg->add_option("--n", n_arg, "system count")->required();
  cmd_reg->add_option("--outputs", outputs_arg, "output indices, e.g. 1,3")->required();
  cmd_reg->add_option("--max-n", input.max_n, "enumeration guard override");
  cmd_reg->add_flag("--json", as_json, "machine-readable output");

  auto* cmd_sig = app.add_subcommand("signalling", "input/output signalling relations");
  add_input(cmd_sig);

  auto* cmd_hasse = app.add_subcommand("hasse", "structure poset of a function");
  add_input(cmd_hasse);
  cmd_hasse->add_flag("--dot", as_dot, "emit the Hasse diagram in DOT");
  cmd_hasse->add_flag("--full", full_poset, "include elements outside the reduced poset");

  auto* cmd_nf = app.add_subcommand("normal-form", "decomposition into causally ordered types");
  add_input(cmd_nf);

  auto* cmd_verify = app.add_subcommand("verify", "run the verification suite");
  cmd_verify->add_option("--suite", suite_arg, "all or a criterion number 1..10");
  cmd_verify->add_option("--max-n", input.max_n, "sweep ceiling (full sweeps need 5)");
  cmd_verify->add_option("--seed", seed, "seed for the randomized cases");

  auto* cmd_choi = app.add_subcommand("choi-verify",
                                      "numerical check of the superoperator projection algebra");
  cmd_choi->add_option("--dims", dims_arg, "local dimensions, e.g. 2,2,2");
  cmd_choi->add_option("--term", input.term, "type term to check");
  cmd_choi->add_option("--fn", input.fn_file, "JSON file with the function");
  cmd_choi->add_flag("--all-types", all_types, "sweep all type-function pairs at this n");
  cmd_choi->add_option("--tolerance", tolerance, "identity tolerance (default 1e-9)");
  cmd_choi->add_option("--max-n", input.max_n, "enumeration guard override");
  cmd_choi->add_flag("--json", as_json, "machine-readable output");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n' << app.help();
    return 1;
  }

  try {
    if (cmd_parse->parsed()) {
      if (input.term.empty()) throw UsageError("parse needs --term");
      const ParsedTerm parsed = parse_term(input.term);
      if (as_json) {
        Json j{{"term", parsed.text},
               {"n", parsed.n},
               {"desugared", render_term(*parsed.root)},
               {"leaf_order", parsed.leaf_order}};
        out << j.dump(2) << '\n';
      } else {
        out << "n: " << parsed.n << '\n';
        out << "desugared: " << render_term(*parsed.root) << '\n';
      }
      return 0;
    }

    if (cmd_analyze->parsed()) {
      auto [fn, status] = input.load(err);
      const TypeUniverse universe(input.guard());
      const AnalysisReport rep = analyze(fn, input.source_text(), status, universe);
      out << format_report(rep, as_json ? ReportMode::json : ReportMode::text);
      return 0;
    }

    if (cmd_enum->parsed()) {
      if (n_arg < 1 || n_arg > input.guard()) {
        throw UsageError("n exceeds the enumeration guard (" + std::to_string(input.guard()) +
                         "); raise --max-n explicitly");
      }
      const TypeUniverse universe(n_arg);
      auto level = universe.level(n_arg);
      std::sort(level.begin(), level.end());
      long long chains = 0;
      for (const auto& f : level) chains += is_chain_type(f) ? 1 : 0;
      if (as_json) {
        Json members = Json::array();
        for (const auto& f : level) members.push_back(boolfn_to_json(f));
        out << Json{{"n", n_arg},
                    {"count", level.size()},
                    {"chain_types", chains},
                    {"members", members}}
                   .dump(2)
            << '\n';
      } else {
        out << "type functions at n=" << n_arg << ": " << level.size() << " (" << chains
            << " causally ordered)" << '\n';
      }
      return 0;
    }

    if (cmd_reg->parsed()) {
      const auto indices = parse_int_list(outputs_arg, "--outputs");
      const Subset O = subset_from_indices(indices, n_arg);
      // Regular enumeration defaults to n <= 4; beyond that the counts can be
      // large, so the ceiling must be raised explicitly.
      const bool raised = input.max_n > 0 || std::getenv("HOTKIT_MAX_N") != nullptr;
      const int guard = raised ? input.guard() : std::min(input.guard(), 4);
      if (n_arg < 1 || n_arg > guard) {
        throw UsageError("regular enumeration at n=" + std::to_string(n_arg) +
                         " needs an explicit --max-n");
      }
      const TypeUniverse universe(n_arg);
      const RegularLattice lat = enumerate_regular(universe, n_arg, O);
      int coeff_min = 0, coeff_max = 0;
      long long chains = 0;
      for (const auto& f : lat.members) {
        chains += is_chain_type(f) ? 1 : 0;
        for (const auto& [T, c] : mobius_transform(f).terms) {
          coeff_min = std::min(coeff_min, c);
          coeff_max = std::max(coeff_max, c);
        }
      }
      const auto chain_gens = checked_generators(n_arg, O);
      if (as_json) {
        Json members = Json::array();
        for (const auto& f : lat.members) {
          members.push_back(Json{{"fn", boolfn_to_json(f)},
                                 {"type_function", universe.contains(f)},
                                 {"chain_type", is_chain_type(f)},
                                 {"mobius", mobius_text(mobius_transform(f))}});
        }
        Json gens = Json::array();
        for (const auto& g : lat.generators) gens.push_back(boolfn_to_json(g));
        Json cgens = Json::array();
        for (const auto& g : chain_gens) cgens.push_back(mobius_text(mobius_transform(g)));
        out << Json{{"n", lat.n},
                    {"outputs", subset_indices(lat.outputs)},
                    {"count", lat.members.size()},
                    {"chain_types", chains},
                    {"coefficient_range", Json::array({coeff_min, coeff_max})},
                    {"generators", gens},
                    {"chain_generators", cgens},
                    {"members", members}}
                   .dump(2)
            << '\n';
      } else {
        out << "regular subtypes at n=" << n_arg << ", outputs " << subset_text(O) << ": "
            << lat.members.size() << " members, " << chains << " causally ordered, seeded by "
            << lat.generators.size() << " type functions (" << chain_gens.size()
            << " generating chains), coefficients in [" << coeff_min << "," << coeff_max << "]"
            << '\n';
      }
      return 0;
    }

    if (cmd_sig->parsed()) {
      auto [fn, status] = input.load(err);
      if (status == TypeStatus::unknown && fn.n() <= input.guard()) {
        const TypeUniverse universe(input.guard());
        status = universe.contains(fn) ? TypeStatus::certified_type
                                       : TypeStatus::certified_not_type;
      }
      const auto m = signalling_matrix(
          fn, status == TypeStatus::certified_type ? TypeStatus::certified_type
                                                   : TypeStatus::unknown);
      if (as_json) {
        out << signalling_to_json(m).dump(2) << '\n';
      } else {
        out << signalling_text(m);
      }
      return 0;
    }

    if (cmd_hasse->parsed()) {
      auto [fn, status] = input.load(err);
      const StructurePoset P(fn);
      if (as_dot) {
        out << P.to_dot(!full_poset);
      } else if (as_json) {
        out << poset_to_json(P).dump(2) << '\n';
      } else {
        out << "elements: " << P.size() << ", rank " << P.top_rank() << '\n';
        for (const auto& chain : P.maximal_chains(true)) {
          out << "  chain: " << P.chain_label_text(chain) << '\n';
        }
        for (const auto& issue : P.issues()) out << "  issue: " << issue << '\n';
      }
      return 0;
    }

    if (cmd_nf->parsed()) {
      auto [fn, status] = input.load(err);
      NormalForm nf;
      if (auto spec = chain_of(fn)) {
        nf.n = fn.n();
        nf.leaves = {*spec};
        nf.terms = {{0}};
      } else {
        if (fn.n() > input.guard()) {
          throw UsageError("normal-form synthesis needs n within the guard (" +
                           std::to_string(input.guard()) + "); chains are decomposed at any n");
        }
        const TypeUniverse universe(input.guard());
        nf = synthesize(fn, universe);
      }
      if (as_json) {
        out << normal_form_to_json(nf).dump(2) << '\n';
      } else {
        out << normal_form_text(nf) << '\n';
      }
      return 0;
    }

    if (cmd_verify->parsed()) {
      VerifySuite suite(input.guard(), seed);
      std::vector<CriterionResult> results;
      if (suite_arg == "all") {
        results = suite.run_all();
      } else {
        int id = 0;
        try {
          id = std::stoi(suite_arg);
        } catch (const std::exception&) {
          throw UsageError("--suite takes 'all' or a criterion number");
        }
        results.push_back(suite.run(id));
      }
      bool all_pass = true;
      for (const auto& r : results) {
        out << criterion_line(r) << '\n';
        all_pass = all_pass && r.pass;
      }
      out << (all_pass ? "verification passed" : "verification FAILED") << '\n';
      return all_pass ? 0 : 2;
    }

    if (cmd_choi->parsed()) {
      const auto dim_list = parse_int_list(dims_arg, "--dims");
      const SystemDims dims(dim_list);
      const ProjectionFactory factory(dims);
      const double construction_tol = 1e-10;
      std::vector<std::pair<std::string, IdentityReport>> rows;
      if (all_types) {
        if (dims.n() > input.guard()) {
          throw UsageError("--all-types needs n within the enumeration guard");
        }
        const TypeUniverse universe(dims.n());
        const auto& level = universe.level(dims.n());
        for (const auto& f : level) {
          for (const auto& g : level) {
            rows.emplace_back("pair", verify_identities(factory, f, g));
          }
        }
      } else {
        auto [fn, status] = input.load(err);
        if (fn.n() != dims.n()) throw UsageError("--dims length must match the function");
        rows.emplace_back(input.source_text(), verify_identities(factory, fn, fn));
        if (!as_json) {
          out << "trace constant: " << factory.trace_constant(fn) << ", rank "
              << factory.expected_rank(fn) << " of " << dims.superop_dim() << '\n';
        }
      }
      bool all_pass = true;
      double worst = 0;
      for (const auto& [name, rep] : rows) {
        all_pass = all_pass && rep.pass(construction_tol, tolerance);
        worst = std::max(worst, rep.max_residual());
      }
      if (as_json) {
        out << Json{{"checks", rows.size()},
                    {"tolerance", tolerance},
                    {"max_residual", worst},
                    {"pass", all_pass}}
                   .dump(2)
            << '\n';
      } else {
        out << "checks: " << rows.size() << ", max residual " << worst << ", tolerance "
            << tolerance << " -> " << (all_pass ? "PASS" : "FAIL") << '\n';
      }
      return all_pass ? 0 : 2;
    }
  } catch (const InvariantError& e) {
    err << "invariant failure: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << "no subcommand selected" << '\n';
  return 1;
}

}  // namespace hotkit::cli
