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
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "hotkit/boolfn.hpp"
#include "hotkit/common.hpp"
#include "hotkit/mobius.hpp"

namespace hotkit {

// ---------------------------------------------------------------------------
// Chain types
// ---------------------------------------------------------------------------

/*! \brief A strict chain of subsets S_0 < S_1 < ... < S_N of [n] with N even.

  The associated function is the alternating sum of the p_{S_i}; such functions
  are exactly the causally ordered types (combs).
*/
struct ChainSpec {
  int n = 1;
  std::vector<Subset> sets;  // strictly increasing by inclusion, odd count

  void validate() const
  {
    if (n < 1 || n > kMaxSystems) throw UsageError("chain system count out of range");
    if (sets.empty()) throw UsageError("chain needs at least one subset");
    if (sets.size() % 2 == 0) {
      throw UsageError("chain must have an even number of steps (odd number of subsets)");
    }
    for (std::size_t k = 0; k < sets.size(); ++k) {
      if (!subset_of(sets[k], full_set(n))) throw UsageError("chain subset outside [n]");
      if (k > 0 && !(subset_of(sets[k - 1], sets[k]) && sets[k - 1] != sets[k])) {
        throw UsageError("chain subsets must strictly increase");
      }
    }
  }

  friend bool operator==(const ChainSpec& a, const ChainSpec& b) = default;
};

/*! \brief Evaluates the alternating sum of a chain; the result is checked to be a
    boolean function (it always is for a valid chain). */
inline BoolFn chain_type(const ChainSpec& spec)
{
  spec.validate();
  MobiusCoeffs mc;
  mc.n = spec.n;
  for (std::size_t k = 0; k < spec.sets.size(); ++k) {
    mc.terms.emplace_back(spec.sets[k], (k % 2 == 0) ? 1 : -1);
  }
  return to_boolfn(mobius_inverse(mc), "chain expansion");
}

/*! \brief Recovers the chain of a causally ordered type; empty when the expansion
    support is not totally ordered by inclusion. */
inline std::optional<ChainSpec> chain_of(const BoolFn& f)
{
  const MobiusCoeffs mc = mobius_transform(f);
  ChainSpec spec;
  spec.n = f.n();
  for (std::size_t k = 0; k < mc.terms.size(); ++k) {
    const auto& [T, c] = mc.terms[k];
    if (k > 0 && !subset_of(spec.sets.back(), T)) return std::nullopt;
    const int expected = (k % 2 == 0) ? 1 : -1;
    if (c != expected) return std::nullopt;  // alternation is automatic for chains
    spec.sets.push_back(T);
  }
  if (spec.sets.empty() || spec.sets.size() % 2 == 0) return std::nullopt;
  return spec;
}

inline bool is_chain_type(const BoolFn& f) { return chain_of(f).has_value(); }

/*! \brief Inputs/outputs of a chain read off the step sets: even steps are inputs,
    odd steps (and the indices beyond the last set) are outputs. */
inline IOSplit chain_io(const ChainSpec& spec)
{
  IOSplit io;
  Subset prev = 0;
  for (std::size_t k = 0; k < spec.sets.size(); ++k) {
    const Subset step = spec.sets[k] & ~prev;
    if (k % 2 == 0) {
      io.inputs |= step;
    } else {
      io.outputs |= step;
    }
    prev = spec.sets[k];
  }
  io.outputs |= full_set(spec.n) & ~prev;  // free outputs
  return io;
}

/*! \brief All chain types on n systems, by direct enumeration of strict chains with an
    odd number of subsets. Distinct chains give distinct functions, so this is an
    independent classification oracle. */
inline std::vector<BoolFn> enumerate_chain_types(int n)
{
  if (n < 1 || n > 6) throw UsageError("chain-type enumeration supported for n <= 6");
  std::vector<BoolFn> out;
  std::vector<Subset> stack;
  const std::uint32_t size = 1u << n;
  auto emit = [&]() {
    ChainSpec spec{n, stack};
    out.push_back(chain_type(spec));
  };
  // DFS over strict chains ordered by inclusion.
  auto rec = [&](auto&& self, Subset last) -> void {
    if (stack.size() % 2 == 1) emit();
    for (std::uint32_t next = last + 1; next < size; ++next) {
      if (subset_of(last, next) && next != last) {
        stack.push_back(next);
        self(self, next);
        stack.pop_back();
      }
    }
  };
  for (std::uint32_t first = 0; first < size; ++first) {
    stack.assign(1, first);
    rec(rec, first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// The term language
// ---------------------------------------------------------------------------

/*! \brief Syntax tree of the term grammar

      term := atom | "~" term | term "*" term | term "->" term | "(" term ")"
      atom := "A" digits

  with "~" binding tightest, "*" tighter than "->", and "->" right-associative.
  The arrow is surface sugar: x -> y parses as ~(x * ~y). Each elementary index
  must occur exactly once.
*/
struct TypeTerm {
  enum class Kind { leaf, dual, tensor };
  Kind kind = Kind::leaf;
  int index = 0;  // 1-based, leaf only
  std::unique_ptr<TypeTerm> lhs, rhs;

  static std::unique_ptr<TypeTerm> leaf(int index)
  {
    auto t = std::make_unique<TypeTerm>();
    t->kind = Kind::leaf;
    t->index = index;
    return t;
  }
  static std::unique_ptr<TypeTerm> dual(std::unique_ptr<TypeTerm> x)
  {
    auto t = std::make_unique<TypeTerm>();
    t->kind = Kind::dual;
    t->lhs = std::move(x);
    return t;
  }
  static std::unique_ptr<TypeTerm> prod(std::unique_ptr<TypeTerm> x, std::unique_ptr<TypeTerm> y)
  {
    auto t = std::make_unique<TypeTerm>();
    t->kind = Kind::tensor;
    t->lhs = std::move(x);
    t->rhs = std::move(y);
    return t;
  }
};

class ParseError : public UsageError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : UsageError(message + " at position " + std::to_string(position + 1)), position_(position)
  {
  }
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

class TermParser {
 public:
  explicit TermParser(const std::string& text) : text_(text) {}

  std::unique_ptr<TypeTerm> run()
  {
    auto t = parse_arrow();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return t;
  }

 private:
  // arrow := tensor ("->" arrow)?   (right-associative)
  std::unique_ptr<TypeTerm> parse_arrow()
  {
    auto lhs = parse_tensor();
    skip_ws();
    if (match("->")) {
      auto rhs = parse_arrow();
      return TypeTerm::dual(TypeTerm::prod(std::move(lhs), TypeTerm::dual(std::move(rhs))));
    }
    return lhs;
  }

  // tensor := unary ("*" unary)*
  std::unique_ptr<TypeTerm> parse_tensor()
  {
    auto lhs = parse_unary();
    while (true) {
      skip_ws();
      if (!match("*")) return lhs;
      lhs = TypeTerm::prod(std::move(lhs), parse_unary());
    }
  }

  // unary := "~" unary | primary
  std::unique_ptr<TypeTerm> parse_unary()
  {
    skip_ws();
    if (match("~")) return TypeTerm::dual(parse_unary());
    return parse_primary();
  }

  std::unique_ptr<TypeTerm> parse_primary()
  {
    skip_ws();
    if (match("(")) {
      auto t = parse_arrow();
      skip_ws();
      if (!match(")")) throw ParseError("expected ')'", pos_);
      return t;
    }
    if (pos_ < text_.size() && text_[pos_] == 'A') {
      const std::size_t start = pos_++;
      std::size_t digits = 0;
      int value = 0;
      while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
        value = value * 10 + (text_[pos_] - '0');
        if (value > kMaxSystems * 10) break;
        ++pos_;
        ++digits;
      }
      if (digits == 0) throw ParseError("expected digits after 'A'", pos_);
      if (value < 1) throw ParseError("system indices start at 1", start);
      return TypeTerm::leaf(value);
    }
    throw ParseError("expected an atom, '~' or '('", pos_);
  }

  void skip_ws()
  {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool match(const std::string& token)
  {
    if (text_.compare(pos_, token.size(), token) == 0) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

inline void collect_leaves(const TypeTerm& t, std::vector<int>& leaves)
{
  switch (t.kind) {
    case TypeTerm::Kind::leaf: leaves.push_back(t.index); break;
    case TypeTerm::Kind::dual: collect_leaves(*t.lhs, leaves); break;
    case TypeTerm::Kind::tensor:
      collect_leaves(*t.lhs, leaves);
      collect_leaves(*t.rhs, leaves);
      break;
  }
}

}  // namespace detail

struct ParsedTerm {
  std::unique_ptr<TypeTerm> root;
  int n = 0;
  std::vector<int> leaf_order;  // 1-based indices in left-to-right order
  std::string text;
};

/*! \brief Parses the term language and validates that the leaves are exactly
    A1..An, each occurring once. */
inline ParsedTerm parse_term(const std::string& text)
{
  ParsedTerm out;
  out.root = detail::TermParser(text).run();
  out.text = text;
  detail::collect_leaves(*out.root, out.leaf_order);
  out.n = static_cast<int>(out.leaf_order.size());
  if (out.n > kMaxSystems) throw UsageError("term uses more than 16 systems");
  std::vector<int> seen(out.n + 1, 0);
  for (int i : out.leaf_order) {
    if (i > out.n) {
      throw UsageError("index " + std::to_string(i) + " out of range: a term with " +
                       std::to_string(out.n) + " leaves must use A1..A" + std::to_string(out.n));
    }
    if (seen[i]++) throw UsageError("index " + std::to_string(i) + " appears more than once");
  }
  return out;
}

/*! \brief Maps a term to its function: leaves become the one-system top element,
    dual becomes the complement, tensor the product, and the result is permuted so
    that coordinate i carries system A_i regardless of leaf order. */
inline BoolFn eval_term(const ParsedTerm& term)
{
  auto rec = [&](auto&& self, const TypeTerm& t) -> BoolFn {
    switch (t.kind) {
      case TypeTerm::Kind::leaf: return BoolFn::top(1);
      case TypeTerm::Kind::dual: return complement(self(self, *t.lhs));
      case TypeTerm::Kind::tensor: return tensor(self(self, *t.lhs), self(self, *t.rhs));
    }
    throw UsageError("corrupt term");
  };
  BoolFn raw = rec(rec, *term.root);
  Perm p(term.n);
  for (int position = 0; position < term.n; ++position) {
    p[term.leaf_order[position] - 1] = position;
  }
  return permute(raw, p);
}

inline BoolFn eval_term(const std::string& text) { return eval_term(parse_term(text)); }

// ---------------------------------------------------------------------------
// Enumeration of all type functions
// ---------------------------------------------------------------------------

/*! \brief How a type function was first obtained during enumeration; used to drive
    the normal-form synthesis recursion. */
struct Provenance {
  enum class Kind { atom, product, complement };
  Kind kind = Kind::atom;
  int split = 0;   // product: systems in the left factor
  int left = -1;   // product: index into level(split)
  int right = -1;  // product: index into level(n - split)
  Perm perm;       // product: permutation applied after the tensor
  int base = -1;   // complement: index into level(n)
};

/*! \brief The sets T_n of all type functions, built level by level as the closure
    under complement of all permuted products of lower levels.

  T_1 = {1_1, p_1}; every type function arises, up to a permutation, as a product
  of two smaller ones or as the complement of such a product, so one product pass
  plus one complement pass reaches the fixed point (asserted in the test suite).
  Enumeration cost grows steeply with n; the guard makes it explicit.
*/
class TypeUniverse {
 public:
  explicit TypeUniverse(int max_n = kDefaultEnumGuard) : max_n_(max_n)
  {
    if (max_n < 1 || max_n > kMaxSystems) throw UsageError("enumeration guard out of range");
    levels_.resize(max_n + 1);
    maps_.resize(max_n + 1);
    prov_.resize(max_n + 1);
    built_.assign(max_n + 1, false);
  }

  int max_n() const { return max_n_; }

  /*! \brief All of T_n in deterministic construction order. */
  const std::vector<BoolFn>& level(int n) const
  {
    check_guard(n);
    build(n);
    return levels_[n];
  }

  /*! \brief Membership in T_n; throws when n exceeds the guard, never silently false. */
  bool contains(const BoolFn& f) const
  {
    check_guard(f.n());
    build(f.n());
    return maps_[f.n()].count(f) > 0;
  }

  const Provenance& provenance(const BoolFn& f) const
  {
    check_guard(f.n());
    build(f.n());
    auto it = maps_[f.n()].find(f);
    if (it == maps_[f.n()].end()) throw UsageError("not a type function");
    return prov_[f.n()][it->second];
  }

  /*! \brief Type functions at level n with the given output set. */
  std::vector<BoolFn> with_outputs(int n, Subset outputs) const
  {
    std::vector<BoolFn> out;
    for (const auto& f : level(n)) {
      if (io_split(f).outputs == outputs) out.push_back(f);
    }
    return out;
  }

 private:
  void check_guard(int n) const
  {
    if (n < 1) throw UsageError("system count must be positive");
    if (n > max_n_) {
      throw UsageError("membership in T_n is undecided at n=" + std::to_string(n) +
                       ": enumeration guard is " + std::to_string(max_n_) +
                       " (raise it explicitly to decide)");
    }
  }

  int insert(int n, const BoolFn& f, Provenance prov) const
  {
    auto [it, fresh] = maps_[n].try_emplace(f, static_cast<int>(levels_[n].size()));
    if (fresh) {
      levels_[n].push_back(f);
      prov_[n].push_back(std::move(prov));
    }
    return it->second;
  }

  void build(int n) const
  {
    if (built_[n]) return;
    if (n == 1) {
      Provenance atom;
      atom.kind = Provenance::Kind::atom;
      insert(1, BoolFn::top(1), atom);
      insert(1, BoolFn::bottom(1), atom);
      built_[1] = true;
      return;
    }
    for (int k = 1; k < n; ++k) build(k);

    // Permutations as lookup tables mask -> permuted mask.
    std::vector<Perm> perms;
    {
      Perm p = identity_perm(n);
      do {
        perms.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
    }
    const std::uint32_t size = 1u << n;
    std::vector<std::vector<std::uint32_t>> luts(perms.size(), std::vector<std::uint32_t>(size));
    for (std::size_t pi = 0; pi < perms.size(); ++pi) {
      for (std::uint32_t s = 0; s < size; ++s) luts[pi][s] = apply_perm(s, perms[pi]);
    }

    for (int k = 1; k < n; ++k) {
      const auto& lo = levels_[k];
      const auto& hi = levels_[n - k];
      for (int a = 0; a < static_cast<int>(lo.size()); ++a) {
        for (int b = 0; b < static_cast<int>(hi.size()); ++b) {
          const BoolFn base = tensor(lo[a], hi[b]);
          for (std::size_t pi = 0; pi < perms.size(); ++pi) {
            std::vector<std::uint32_t> support;
            for (std::uint32_t s = 0; s < size; ++s) {
              if (base.value(luts[pi][s])) support.push_back(s);
            }
            Provenance prov;
            prov.kind = Provenance::Kind::product;
            prov.split = k;
            prov.left = a;
            prov.right = b;
            prov.perm = perms[pi];
            insert(n, BoolFn::from_support(n, support), prov);
          }
        }
      }
    }
    const std::size_t products = levels_[n].size();
    for (std::size_t i = 0; i < products; ++i) {
      Provenance prov;
      prov.kind = Provenance::Kind::complement;
      prov.base = static_cast<int>(i);
      insert(n, complement(levels_[n][i]), prov);
    }
    built_[n] = true;
  }

  int max_n_;
  mutable std::vector<std::vector<BoolFn>> levels_;
  mutable std::vector<std::unordered_map<BoolFn, int, BoolFn::Hash>> maps_;
  mutable std::vector<std::vector<Provenance>> prov_;
  mutable std::vector<bool> built_;
};

/*! \brief Decision by enumeration. Throws past the guard rather than guessing. */
inline bool is_type_function(const BoolFn& f, const TypeUniverse& universe)
{
  return universe.contains(f);
}

}  // namespace hotkit
