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
#include "hotkit/mobius.hpp"
#include "hotkit/normalform.hpp"
#include "hotkit/poset.hpp"
#include "hotkit/serialization.hpp"
#include "hotkit/signalling.hpp"
#include "hotkit/subtypes.hpp"
#include "hotkit/typeterm.hpp"

namespace hotkit {

/*! \brief Everything the analyze command reports about one function. Every field is
    a pure function of the input, so identical inputs render identically. */
struct AnalysisReport {
  std::string source;  // the term or file the function came from
  BoolFn fn;
  IOSplit io;
  MobiusCoeffs coeffs;
  bool chain = false;
  bool monotone = false;
  TypeStatus type_status = TypeStatus::unknown;
  int poset_size = 0;
  int reduced_size = 0;
  int top_rank = 0;
  int maximal_chain_count = 0;  // of the reduced poset
  std::vector<std::string> poset_issues;
  std::optional<SignallingMatrix> matrix;  // regular subtypes only
  std::optional<NormalForm> normal_form;   // chains always; otherwise within the guard
  std::string normal_form_note;

  explicit AnalysisReport(const BoolFn& f) : fn(f), coeffs(mobius_transform(f)) {}
};

inline AnalysisReport analyze(const BoolFn& f, const std::string& source,
                              TypeStatus claimed_status, const TypeUniverse& universe)
{
  AnalysisReport rep(f);
  rep.source = source;
  rep.io = io_split(f);
  rep.chain = is_chain_type(f);
  rep.monotone = is_monotone_subtype(f);

  rep.type_status = claimed_status;
  if (rep.type_status == TypeStatus::unknown && f.n() <= universe.max_n()) {
    rep.type_status =
        universe.contains(f) ? TypeStatus::certified_type : TypeStatus::certified_not_type;
  }

  const StructurePoset poset(f);
  rep.poset_size = poset.size();
  rep.top_rank = poset.top_rank();
  rep.poset_issues = poset.issues();
  int reduced = 0;
  for (const auto& e : poset.elements()) reduced += e.reduced ? 1 : 0;
  rep.reduced_size = reduced;
  rep.maximal_chain_count = static_cast<int>(poset.maximal_chains(true).size());

  if (rep.monotone) {
    rep.matrix = signalling_matrix(f, rep.type_status);
  }

  if (rep.chain) {
    NormalForm nf;
    nf.n = f.n();
    nf.leaves = {*chain_of(f)};
    nf.terms = {{0}};
    rep.normal_form = nf;
  } else if (rep.type_status == TypeStatus::certified_type && f.n() <= universe.max_n()) {
    rep.normal_form = synthesize(f, universe);
  } else {
    rep.normal_form_note = "normal form omitted: needs a type function within the guard";
  }
  return rep;
}

enum class ReportMode { text, json };

inline std::string format_report(const AnalysisReport& rep, ReportMode mode)
{
  if (mode == ReportMode::json) {
    Json j;
    j["source"] = rep.source;
    j["n"] = rep.fn.n();
    j["inputs"] = subset_indices(rep.io.inputs);
    j["outputs"] = subset_indices(rep.io.outputs);
    j["mobius"] = mobius_text(rep.coeffs);
    j["coeffs"] = mobius_to_json(rep.coeffs)["coeffs"];
    j["chain_type"] = rep.chain;
    j["monotone_subtype"] = rep.monotone;
    j["type_function"] = rep.type_status == TypeStatus::certified_type
                             ? Json(true)
                             : (rep.type_status == TypeStatus::certified_not_type ? Json(false)
                                                                                  : Json(nullptr));
    j["poset"] = Json{{"elements", rep.poset_size},
                      {"reduced_elements", rep.reduced_size},
                      {"rank", rep.top_rank},
                      {"maximal_chains", rep.maximal_chain_count},
                      {"issues", rep.poset_issues}};
    j["signalling"] = rep.matrix ? signalling_to_json(*rep.matrix) : Json(nullptr);
    if (rep.normal_form) {
      j["normal_form"] = normal_form_to_json(*rep.normal_form);
    } else {
      j["normal_form"] = nullptr;
      j["normal_form_note"] = rep.normal_form_note;
    }
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "source: " << rep.source << '\n';
  os << "n: " << rep.fn.n() << '\n';
  os << "inputs: " << subset_text(rep.io.inputs) << "  outputs: " << subset_text(rep.io.outputs)
     << '\n';
  if (rep.coeffs.terms.size() <= 24) {
    os << "expansion: " << mobius_text(rep.coeffs) << '\n';
  } else {
    MobiusCoeffs head;
    head.n = rep.coeffs.n;
    head.terms.assign(rep.coeffs.terms.begin(), rep.coeffs.terms.begin() + 8);
    os << "expansion: " << mobius_text(head) << " ... (" << rep.coeffs.terms.size()
       << " terms, see --json)" << '\n';
  }
  os << "class: ";
  if (rep.chain) {
    os << "causally ordered (comb)";
  } else if (rep.type_status == TypeStatus::certified_type) {
    os << "type function, not causally ordered";
  } else if (rep.monotone) {
    os << (rep.type_status == TypeStatus::certified_not_type ? "regular subtype, not a type"
                                                             : "regular subtype");
  } else {
    os << "not a regular subtype";
  }
  os << '\n';
  os << "poset: " << rep.poset_size << " elements (" << rep.reduced_size << " reduced), rank "
     << rep.top_rank << ", " << rep.maximal_chain_count << " maximal chains" << '\n';
  if (!rep.poset_issues.empty()) {
    os << "poset issues:" << '\n';
    for (const auto& s : rep.poset_issues) os << "  - " << s << '\n';
  }
  if (rep.matrix) {
    os << "signalling:" << '\n' << signalling_text(*rep.matrix);
  } else {
    os << "signalling: undefined (not a regular subtype)" << '\n';
  }
  if (rep.normal_form) {
    os << "normal form: " << normal_form_text(*rep.normal_form) << '\n';
  } else {
    os << "normal form: " << rep.normal_form_note << '\n';
  }
  return os.str();
}

}  // namespace hotkit
