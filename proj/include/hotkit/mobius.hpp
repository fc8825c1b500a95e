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
#include <sstream>
#include <string>
#include <vector>

#include "hotkit/boolfn.hpp"
#include "hotkit/common.hpp"

namespace hotkit {

/*! \brief An integer-valued table {0,1}^n -> Z, the common ground of a boolean
    function and a signed p_T expansion. */
struct IntTable {
  int n = 1;
  std::vector<int> values;  // indexed by packed string

  static IntTable zero(int n)
  {
    if (n < 1 || n > kMaxSystems) throw UsageError("system count out of range");
    IntTable t;
    t.n = n;
    t.values.assign(std::size_t{1} << n, 0);
    return t;
  }

  static IntTable of(const BoolFn& f)
  {
    IntTable t = zero(f.n());
    for (std::uint32_t s = 0; s < f.num_strings(); ++s) t.values[s] = f.value(s) ? 1 : 0;
    return t;
  }

  friend bool operator==(const IntTable& a, const IntTable& b) = default;
};

/*! \brief Checks a signed expansion landed in {0,1} and packs it. Out-of-range entries
    mean the expression was malformed, which is a hard error. */
inline BoolFn to_boolfn(const IntTable& t, const std::string& what = "expression")
{
  std::vector<std::uint32_t> support;
  for (std::uint32_t s = 0; s < t.values.size(); ++s) {
    const int v = t.values[s];
    if (v != 0 && v != 1) {
      throw InvariantError(what + " evaluates to " + std::to_string(v) + " at string " +
                           std::to_string(s) + "; not a boolean function");
    }
    if (v == 1) support.push_back(s);
  }
  return BoolFn::from_support(t.n, support);
}

/*! \brief Coefficients of the unique expansion f = sum_T fhat_T p_T.

  Entries are kept as plain integers and never clamped: regular subtypes can leave
  the {-1,0,1} range and the transform must report that, not truncate it.
*/
struct MobiusCoeffs {
  int n = 1;
  std::vector<std::pair<Subset, int>> terms;  // nonzero only, sorted by (cardinality, mask)

  int coeff(Subset T) const
  {
    for (const auto& [set, c] : terms) {
      if (set == T) return c;
    }
    return 0;
  }

  std::vector<Subset> support() const
  {
    std::vector<Subset> out;
    out.reserve(terms.size());
    for (const auto& [set, c] : terms) out.push_back(set);
    return out;
  }

  friend bool operator==(const MobiusCoeffs& a, const MobiusCoeffs& b) = default;
};

inline MobiusCoeffs coeffs_from_table(const IntTable& t)
{
  MobiusCoeffs mc;
  mc.n = t.n;
  for (std::uint32_t T = 0; T < t.values.size(); ++T) {
    if (t.values[T] != 0) mc.terms.emplace_back(T, t.values[T]);
  }
  std::sort(mc.terms.begin(), mc.terms.end(),
            [](const auto& a, const auto& b) { return subset_less(a.first, b.first); });
  return mc;
}

/*! \brief Reference transform, computed term by term from the defining sum

      fhat_T = sum over strings s with s_j = 1 for all j outside T
               of (-1)^{number of ones of s inside T} f(s).

  Kept as the oracle the fast path is validated against.
*/
inline MobiusCoeffs mobius_transform_direct(const IntTable& t)
{
  IntTable out = IntTable::zero(t.n);
  const std::uint32_t all = full_set(t.n);
  for (std::uint32_t T = 0; T <= all; ++T) {
    const std::uint32_t outside = all & ~T;
    long long acc = 0;
    // Iterate the subsets u of T; the string is u with all outside bits forced to 1.
    std::uint32_t u = 0;
    while (true) {
      const int sign = (popcount(u) & 1) ? -1 : 1;
      acc += sign * t.values[u | outside];
      if (u == T) break;
      u = (u - T) & T;  // next subset of T
    }
    if (acc < INT32_MIN || acc > INT32_MAX) throw InvariantError("transform overflow");
    out.values[T] = static_cast<int>(acc);
  }
  return coeffs_from_table(out);
}

inline MobiusCoeffs mobius_transform_direct(const BoolFn& f)
{
  return mobius_transform_direct(IntTable::of(f));
}

/*! \brief Transform via an in-place subset convolution, O(n 2^n).

  Writing F(v) = f(complement of v), the defining sum says F is the subset-sum
  (zeta) transform of fhat, so fhat is recovered by the inverse convolution.
*/
inline MobiusCoeffs mobius_transform(const IntTable& t)
{
  const std::uint32_t size = 1u << t.n;
  const std::uint32_t all = size - 1;
  std::vector<long long> a(size);
  for (std::uint32_t v = 0; v < size; ++v) a[v] = t.values[(all & ~v)];
  for (int i = 0; i < t.n; ++i) {
    const std::uint32_t bit = 1u << i;
    for (std::uint32_t m = 0; m < size; ++m) {
      if (m & bit) a[m] -= a[m ^ bit];
    }
  }
  IntTable out = IntTable::zero(t.n);
  for (std::uint32_t T = 0; T < size; ++T) {
    if (a[T] < INT32_MIN || a[T] > INT32_MAX) throw InvariantError("transform overflow");
    out.values[T] = static_cast<int>(a[T]);
  }
  return coeffs_from_table(out);
}

inline MobiusCoeffs mobius_transform(const BoolFn& f) { return mobius_transform(IntTable::of(f)); }

/*! \brief Pointwise evaluation of sum_T c_T p_T; always exists as an integer table.
    Callers expecting a boolean function check the range via to_boolfn. */
inline IntTable mobius_inverse(const MobiusCoeffs& mc)
{
  IntTable out = IntTable::zero(mc.n);
  for (std::uint32_t s = 0; s < out.values.size(); ++s) {
    int acc = 0;
    for (const auto& [T, c] : mc.terms) {
      if ((T & s) == 0) acc += c;  // p_T(s) = 1 iff s and T are disjoint
    }
    out.values[s] = acc;
  }
  return out;
}

/*! \brief True when every coefficient lies in {-1,0,1}. */
inline bool coeffs_in_unit_range(const MobiusCoeffs& mc)
{
  for (const auto& [T, c] : mc.terms) {
    if (c < -1 || c > 1) return false;
  }
  return true;
}

/*! \brief Renders the expansion as a signed sum, e.g. "1 - p{1} + p{1,2}". */
inline std::string mobius_text(const MobiusCoeffs& mc)
{
  if (mc.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [T, c] : mc.terms) {
    const int mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (T == 0) {
      os << mag;  // p_{} is the constant 1
      continue;
    }
    if (mag != 1) os << mag << ' ';
    os << "p{";
    const auto idx = subset_indices(T);
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k) os << ',';
      os << idx[k];
    }
    os << '}';
  }
  return os.str();
}

}  // namespace hotkit
