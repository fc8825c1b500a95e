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

#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hotkit {

/*! \brief Raised on invalid arguments or malformed input (CLI exit code 1). */
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& message) : std::runtime_error(message) {}
};

/*! \brief Raised when a structural guarantee fails (CLI exit code 2). */
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& message) : std::logic_error(message) {}
};

/*! \brief Maximum number of systems; strings fit a machine word, tables fit 2^16 bits. */
inline constexpr int kMaxSystems = 16;

/*! \brief Default ceiling for enumeration-based decisions. */
inline constexpr int kDefaultEnumGuard = 5;

// Subsets of [n] are stored as masks: bit i-1 holds membership of index i.
using Subset = std::uint32_t;

inline int popcount(Subset s) { return std::popcount(s); }

inline Subset full_set(int n) { return (n >= 32) ? ~0u : ((1u << n) - 1u); }

inline bool subset_of(Subset a, Subset b) { return (a & ~b) == 0; }

inline bool contains(Subset s, int index0) { return (s >> index0) & 1u; }

/*! \brief 1-based indices of a subset mask, ascending. */
inline std::vector<int> subset_indices(Subset s)
{
  std::vector<int> out;
  for (int i = 0; s != 0; ++i, s >>= 1) {
    if (s & 1u) out.push_back(i + 1);
  }
  return out;
}

inline Subset subset_from_indices(const std::vector<int>& indices1, int n)
{
  Subset s = 0;
  for (int i : indices1) {
    if (i < 1 || i > n) {
      throw UsageError("index " + std::to_string(i) + " outside [1," + std::to_string(n) + "]");
    }
    s |= 1u << (i - 1);
  }
  return s;
}

/*! \brief Renders a subset as {1,3} (or a bare index for singletons); empty set prints as the
    empty-set sign. */
inline std::string subset_text(Subset s)
{
  if (s == 0) return "∅";
  std::ostringstream os;
  const auto idx = subset_indices(s);
  if (idx.size() == 1) return std::to_string(idx[0]);
  os << '{';
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) os << ',';
    os << idx[k];
  }
  os << '}';
  return os.str();
}

// Ordering used everywhere results must be byte-stable: cardinality first, then mask value.
inline bool subset_less(Subset a, Subset b)
{
  const int pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  return a < b;
}

using Perm = std::vector<int>;  // p[i] = image of position i, 0-based

inline bool is_permutation(const Perm& p)
{
  std::uint32_t seen = 0;
  const int n = static_cast<int>(p.size());
  for (int v : p) {
    if (v < 0 || v >= n || (seen >> v) & 1u) return false;
    seen |= 1u << v;
  }
  return true;
}

inline Perm identity_perm(int n)
{
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

inline Perm inverse_perm(const Perm& p)
{
  Perm inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

/*! \brief Moves bit i of the mask to bit p[i]. */
inline std::uint32_t apply_perm(std::uint32_t mask, const Perm& p)
{
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if ((mask >> i) & 1u) out |= 1u << p[i];
  }
  return out;
}

/*! \brief Preimage {i : p[i] in t} of a subset under a permutation. */
inline Subset preimage_subset(Subset t, const Perm& p)
{
  Subset out = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if ((t >> p[i]) & 1u) out |= 1u << i;
  }
  return out;
}

}  // namespace hotkit
