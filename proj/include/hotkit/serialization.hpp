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
#include <string>
#include <vector>

#include <json.hpp>

#include "hotkit/boolfn.hpp"
#include "hotkit/common.hpp"
#include "hotkit/mobius.hpp"
#include "hotkit/normalform.hpp"
#include "hotkit/poset.hpp"
#include "hotkit/signalling.hpp"

namespace hotkit {

using Json = nlohmann::ordered_json;

/*! \brief {"n":..., "support":[...]} with each string reading s_1 leftmost,
    lexicographically sorted. */
inline Json boolfn_to_json(const BoolFn& f)
{
  std::vector<std::string> support;
  for (std::uint32_t s = 0; s < f.num_strings(); ++s) {
    if (f.value(s)) support.push_back(to_text(BitString(f.n(), s)));
  }
  std::sort(support.begin(), support.end());
  return Json{{"n", f.n()}, {"support", support}};
}

inline BoolFn boolfn_from_json(const Json& j)
{
  if (!j.is_object() || !j.contains("n") || !j.contains("support")) {
    throw UsageError("function record needs fields n and support");
  }
  const int n = j.at("n").get<int>();
  if (n < 1 || n > kMaxSystems) throw UsageError("field n out of range");
  std::vector<std::uint32_t> support;
  for (const auto& entry : j.at("support")) {
    const BitString s = bitstring_from_text(entry.get<std::string>());
    if (s.n != n) throw UsageError("support string of wrong length: " + entry.get<std::string>());
    support.push_back(s.bits);
  }
  return BoolFn::from_support(n, support);
}

inline Json mobius_to_json(const MobiusCoeffs& mc)
{
  Json coeffs = Json::array();
  for (const auto& [T, c] : mc.terms) {
    coeffs.push_back(Json{{"T", subset_indices(T)}, {"c", c}});
  }
  return Json{{"n", mc.n}, {"coeffs", coeffs}};
}

inline MobiusCoeffs mobius_from_json(const Json& j)
{
  MobiusCoeffs mc;
  mc.n = j.at("n").get<int>();
  if (mc.n < 1 || mc.n > kMaxSystems) throw UsageError("field n out of range");
  for (const auto& entry : j.at("coeffs")) {
    const Subset T = subset_from_indices(entry.at("T").get<std::vector<int>>(), mc.n);
    mc.terms.emplace_back(T, entry.at("c").get<int>());
  }
  std::sort(mc.terms.begin(), mc.terms.end(),
            [](const auto& a, const auto& b) { return subset_less(a.first, b.first); });
  return mc;
}

inline Json poset_to_json(const StructurePoset& P)
{
  Json elements = Json::array();
  for (const auto& e : P.elements()) {
    elements.push_back(Json{{"T", subset_indices(e.set)},
                            {"rank", e.rank},
                            {"labels", subset_indices(e.labels)},
                            {"reduced", e.reduced}});
  }
  Json edges = Json::array();
  for (const auto& [a, b] : P.covers(false)) edges.push_back(Json::array({a, b}));
  return Json{{"elements", elements}, {"edges", edges}};
}

inline Json signalling_to_json(const SignallingMatrix& m)
{
  Json pairs = Json::array();
  for (const auto& e : m.entries) {
    Json rec{{"i", e.i}, {"j", e.j}, {"signals", e.signals}};
    rec["pair_rank"] = e.pair_rank ? Json(*e.pair_rank) : Json(nullptr);
    pairs.push_back(rec);
  }
  return Json{{"pairs", pairs}};
}

inline Json label_chain_to_json(const LabelChain& lc)
{
  Json labels = Json::array();
  for (Subset step : lc.labels) labels.push_back(subset_indices(step));
  return Json{{"leading_empty", lc.leading_empty}, {"labels", labels}};
}

inline Json normal_form_to_json(const NormalForm& nf)
{
  Json leaves = Json::array();
  for (const auto& leaf : nf.leaves) leaves.push_back(label_chain_to_json(labels_of_chain(leaf)));
  return Json{{"shape", "join-of-meets"}, {"terms", nf.terms}, {"leaves", leaves}};
}

}  // namespace hotkit
