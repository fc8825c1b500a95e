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

#include <cstdint>
#include <string>

#include "hotkit/common.hpp"

namespace hotkit {

/*! \brief An element of {0,1}^n packed into a machine word.

  Bit i-1 of \c bits holds the letter s_i, so s_1 is the least significant bit.
  The text form reads s_1 leftmost: "0110" means s_1=0, s_2=1, s_3=1, s_4=0.
*/
struct BitString {
  int n = 1;
  std::uint32_t bits = 0;

  BitString() = default;
  BitString(int n_, std::uint32_t bits_) : n(n_), bits(bits_)
  {
    if (n < 1 || n > kMaxSystems) {
      throw UsageError("string length must be in [1," + std::to_string(kMaxSystems) + "], got " +
                       std::to_string(n));
    }
    if ((bits & ~full_set(n)) != 0) {
      throw UsageError("string has bits set beyond position " + std::to_string(n));
    }
  }

  /*! \brief Letter s_i, 1-based. */
  int at(int i) const { return (bits >> (i - 1)) & 1u; }

  bool is_theta() const { return bits == 0; }

  friend bool operator==(const BitString& a, const BitString& b) = default;
};

/*! \brief The all-zero string. */
inline BitString theta(int n) { return BitString(n, 0); }

/*! \brief e^i: the unit string with s_i = 1. */
inline BitString unit_string(int n, int i)
{
  if (i < 1 || i > n) throw UsageError("unit index " + std::to_string(i) + " outside [1,n]");
  return BitString(n, 1u << (i - 1));
}

/*! \brief e^{i,j}: the string with exactly s_i = s_j = 1, i != j. */
inline BitString pair_string(int n, int i, int j)
{
  if (i == j) throw UsageError("pair string needs two distinct indices");
  return BitString(n, unit_string(n, i).bits | unit_string(n, j).bits);
}

/*! \brief Concatenation s = s^1 s^2 on the decomposition [n1+n2] = [n1] + [n2]. */
inline BitString concat(const BitString& a, const BitString& b)
{
  if (a.n + b.n > kMaxSystems) throw UsageError("concatenation exceeds the system cap");
  return BitString(a.n + b.n, a.bits | (b.bits << a.n));
}

inline BitString first_block(const BitString& s, int n1)
{
  return BitString(n1, s.bits & full_set(n1));
}

inline BitString second_block(const BitString& s, int n1)
{
  return BitString(s.n - n1, s.bits >> n1);
}

/*! \brief Action sigma(s) = s o sigma^{-1}; bit i moves to position p[i]. */
inline BitString permute_string(const BitString& s, const Perm& p)
{
  if (static_cast<int>(p.size()) != s.n || !is_permutation(p)) {
    throw UsageError("not a permutation of the string positions");
  }
  return BitString(s.n, apply_perm(s.bits, p));
}

inline std::string to_text(const BitString& s)
{
  std::string out(s.n, '0');
  for (int i = 1; i <= s.n; ++i) {
    if (s.at(i)) out[i - 1] = '1';
  }
  return out;
}

inline BitString bitstring_from_text(const std::string& text)
{
  const int n = static_cast<int>(text.size());
  if (n < 1 || n > kMaxSystems) throw UsageError("string literal of unsupported length: " + text);
  std::uint32_t bits = 0;
  for (int i = 0; i < n; ++i) {
    if (text[i] == '1') {
      bits |= 1u << i;
    } else if (text[i] != '0') {
      throw UsageError("string literal must be over {0,1}: " + text);
    }
  }
  return BitString(n, bits);
}

}  // namespace hotkit
