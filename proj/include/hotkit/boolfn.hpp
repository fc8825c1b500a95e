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
#include <functional>
#include <string>
#include <vector>

#include "hotkit/bitstring.hpp"
#include "hotkit/common.hpp"

namespace hotkit {

/*! \brief A boolean function {0,1}^n -> {0,1} with f(theta) = 1, stored as a 2^n-bit
    truth table indexed by the packed string.

  This is the carrier of the whole calculus: the lattice operations are pointwise
  min/max, the complement is f* = 1 - f + p_n, and the product operations are taken
  on the fixed concatenation decomposition of [n]. Values are immutable after
  construction; every operation below is a pure function.
*/
class BoolFn {
 public:
  /*! \brief The constant-one function 1_n (top element). */
  static BoolFn top(int n)
  {
    BoolFn f(n);
    for (auto& w : f.words_) w = ~0ull;
    f.trim();
    return f;
  }

  /*! \brief The bottom element p_n, supported on theta only. */
  static BoolFn bottom(int n)
  {
    BoolFn f(n);
    f.words_[0] = 1ull;
    return f;
  }

  /*! \brief Builds a function from its support. Theta must be included. */
  static BoolFn from_support(int n, const std::vector<std::uint32_t>& support)
  {
    BoolFn f(n);
    for (auto s : support) {
      if (s >= (1u << n)) throw UsageError("support string out of range for n=" + std::to_string(n));
      f.words_[s >> 6] |= 1ull << (s & 63u);
    }
    if (!f.value(0)) throw UsageError("the all-zero string must be in the support");
    return f;
  }

  int n() const { return n_; }
  std::uint32_t num_strings() const { return 1u << n_; }

  bool value(std::uint32_t mask) const { return (words_[mask >> 6] >> (mask & 63u)) & 1ull; }

  const std::vector<std::uint64_t>& words() const { return words_; }

  std::vector<std::uint32_t> support() const
  {
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = 0; s < num_strings(); ++s) {
      if (value(s)) out.push_back(s);
    }
    return out;
  }

  std::uint32_t support_size() const
  {
    std::uint32_t c = 0;
    for (auto w : words_) c += static_cast<std::uint32_t>(std::popcount(w));
    return c;
  }

  friend bool operator==(const BoolFn& a, const BoolFn& b)
  {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

  /*! \brief Pointwise order f <= g. */
  friend bool leq(const BoolFn& a, const BoolFn& b)
  {
    if (a.n_ != b.n_) throw UsageError("order comparison needs matching system counts");
    for (std::size_t k = 0; k < a.words_.size(); ++k) {
      if (a.words_[k] & ~b.words_[k]) return false;
    }
    return true;
  }

  // Total order for deterministic listings: by n, then table bytes.
  friend bool operator<(const BoolFn& a, const BoolFn& b)
  {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    for (std::size_t k = a.words_.size(); k-- > 0;) {
      if (a.words_[k] != b.words_[k]) return a.words_[k] < b.words_[k];
    }
    return false;
  }

  struct Hash {
    std::size_t operator()(const BoolFn& f) const
    {
      std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(f.n_);
      for (auto w : f.words_) {
        h ^= w;
        h *= 1099511628211ull;
      }
      return static_cast<std::size_t>(h);
    }
  };

 private:
  explicit BoolFn(int n) : n_(n)
  {
    if (n < 1 || n > kMaxSystems) {
      throw UsageError("system count must be in [1," + std::to_string(kMaxSystems) + "], got " +
                       std::to_string(n));
    }
    words_.assign(((1u << n) + 63u) / 64u, 0ull);
  }

  void set(std::uint32_t mask) { words_[mask >> 6] |= 1ull << (mask & 63u); }

  void trim()
  {
    // Clear bits beyond 2^n in the last word.
    const std::uint32_t used = num_strings() & 63u;
    if (used) words_.back() &= (1ull << used) - 1ull;
  }

  int n_;
  std::vector<std::uint64_t> words_;

  friend BoolFn basis_pT(int, Subset);
  friend BoolFn meet(const BoolFn&, const BoolFn&);
  friend BoolFn join(const BoolFn&, const BoolFn&);
  friend BoolFn complement(const BoolFn&);
  friend BoolFn tensor(const BoolFn&, const BoolFn&);
  friend BoolFn causal_product(const BoolFn&, const BoolFn&, bool);
  friend BoolFn permute(const BoolFn&, const Perm&);
};

/*! \brief Evaluates f at a string; the dimensions must match. */
inline int eval(const BoolFn& f, const BitString& s)
{
  if (s.n != f.n()) {
    throw UsageError("string length " + std::to_string(s.n) + " does not match system count " +
                     std::to_string(f.n()));
  }
  return f.value(s.bits) ? 1 : 0;
}

/*! \brief Basis function p_T(s) = prod_{i in T} (1 - s_i).

  p_{} is the top element 1_n and p_{[n]} is the bottom element p_n. The support is
  exactly the strings disjoint from T.
*/
inline BoolFn basis_pT(int n, Subset T)
{
  BoolFn f(n);
  if (!subset_of(T, full_set(n))) throw UsageError("subset is not contained in [n]");
  for (std::uint32_t s = 0; s < f.num_strings(); ++s) {
    if ((s & T) == 0) f.set(s);
  }
  return f;
}

/*! \brief Pointwise minimum. */
inline BoolFn meet(const BoolFn& a, const BoolFn& b)
{
  if (a.n() != b.n()) throw UsageError("meet needs matching system counts");
  BoolFn out = a;
  for (std::size_t k = 0; k < out.words_.size(); ++k) out.words_[k] &= b.words_[k];
  return out;
}

/*! \brief Pointwise maximum. */
inline BoolFn join(const BoolFn& a, const BoolFn& b)
{
  if (a.n() != b.n()) throw UsageError("join needs matching system counts");
  BoolFn out = a;
  for (std::size_t k = 0; k < out.words_.size(); ++k) out.words_[k] |= b.words_[k];
  return out;
}

/*! \brief Complement f* = 1 - f + p_n; flips every value except at theta. */
inline BoolFn complement(const BoolFn& f)
{
  BoolFn out = f;
  for (auto& w : out.words_) w = ~w;
  out.words_[0] |= 1ull;  // f*(theta) = 1
  out.trim();
  return out;
}

/*! \brief (f (x) g)(s^1 s^2) = f(s^1) g(s^2) on the fixed concatenation. */
inline BoolFn tensor(const BoolFn& f, const BoolFn& g)
{
  const int n = f.n() + g.n();
  if (n > kMaxSystems) throw UsageError("tensor product exceeds the system cap");
  BoolFn out(n);
  const std::uint32_t lo = full_set(f.n());
  for (std::uint32_t s = 0; s < out.num_strings(); ++s) {
    if (f.value(s & lo) && g.value(s >> f.n())) out.set(s);
  }
  return out;
}

/*! \brief One-way signalling product on the fixed concatenation.

  With \c first_in_future, the result is f <| g: it evaluates f on the first block
  unless that block is all-zero, in which case it falls back to g on the second
  block. Otherwise the result is g <| f, with the blocks' roles exchanged but g
  still reading the second block.
*/
inline BoolFn causal_product(const BoolFn& f, const BoolFn& g, bool first_in_future)
{
  const int n = f.n() + g.n();
  if (n > kMaxSystems) throw UsageError("causal product exceeds the system cap");
  BoolFn out(n);
  const std::uint32_t lo = full_set(f.n());
  for (std::uint32_t s = 0; s < out.num_strings(); ++s) {
    const std::uint32_t s1 = s & lo, s2 = s >> f.n();
    bool v;
    if (first_in_future) {
      v = (s1 != 0) ? f.value(s1) : g.value(s2);
    } else {
      v = (s2 != 0) ? g.value(s2) : f.value(s1);
    }
    if (v) out.set(s);
  }
  return out;
}

/*! \brief f par g = (f* (x) g*)*. */
inline BoolFn par(const BoolFn& f, const BoolFn& g)
{
  return complement(tensor(complement(f), complement(g)));
}

/*! \brief (f o sigma)(s) = f(sigma(s)) where sigma moves bit i to position p[i]. */
inline BoolFn permute(const BoolFn& f, const Perm& p)
{
  if (static_cast<int>(p.size()) != f.n() || !is_permutation(p)) {
    throw UsageError("not a permutation of [n]");
  }
  BoolFn out(f.n());
  for (std::uint32_t s = 0; s < out.num_strings(); ++s) {
    if (f.value(apply_perm(s, p))) out.set(s);
  }
  return out;
}

enum class BinaryOp { meet, join, tensor, par, causal_left, causal_right };

/*! \brief Single dispatch point over the binary operations, so property sweeps can
    iterate over them uniformly. causal_left is f <| g, causal_right is g <| f. */
inline BoolFn combine(const BoolFn& f, const BoolFn& g, BinaryOp op)
{
  switch (op) {
    case BinaryOp::meet: return meet(f, g);
    case BinaryOp::join: return join(f, g);
    case BinaryOp::tensor: return tensor(f, g);
    case BinaryOp::par: return par(f, g);
    case BinaryOp::causal_left: return causal_product(f, g, true);
    case BinaryOp::causal_right: return causal_product(f, g, false);
  }
  throw UsageError("unknown binary operation");
}

inline const char* op_name(BinaryOp op)
{
  switch (op) {
    case BinaryOp::meet: return "meet";
    case BinaryOp::join: return "join";
    case BinaryOp::tensor: return "tensor";
    case BinaryOp::par: return "par";
    case BinaryOp::causal_left: return "causal_left";
    case BinaryOp::causal_right: return "causal_right";
  }
  return "?";
}

/*! \brief Input/output split of [n]: inputs are the indices with f(e^i) = 0. */
struct IOSplit {
  Subset inputs = 0;
  Subset outputs = 0;
};

inline IOSplit io_split(const BoolFn& f)
{
  IOSplit io;
  for (int i = 0; i < f.n(); ++i) {
    if (f.value(1u << i)) {
      io.outputs |= 1u << i;
    } else {
      io.inputs |= 1u << i;
    }
  }
  return io;
}

/*! \brief Whether p_{I_f} <= f <= p_{O_f}* holds pointwise. */
inline bool is_subtype(const BoolFn& f)
{
  const IOSplit io = io_split(f);
  return leq(basis_pT(f.n(), io.inputs), f) && leq(f, complement(basis_pT(f.n(), io.outputs)));
}

}  // namespace hotkit
