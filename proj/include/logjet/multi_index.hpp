#pragma once

#include "logjet/params.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace logjet {

/// Element of N^n with componentwise arithmetic and lexicographic order.
/// The length is fixed per context (n, or n-1 for hatted indices).
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<std::uint32_t> c) : c_(std::move(c)) {}
  MultiIndex(std::initializer_list<std::uint32_t> c) : c_(c) {}

  static MultiIndex zeros(std::size_t n) { return MultiIndex(std::vector<std::uint32_t>(n, 0)); }
  /// 1_i in N^n (i is 1-based).
  static MultiIndex unit(std::size_t i, std::size_t n);

  std::size_t size() const { return c_.size(); }
  std::uint32_t operator[](std::size_t k) const { return c_[k]; }
  std::uint32_t& operator[](std::size_t k) { return c_[k]; }
  const std::vector<std::uint32_t>& components() const { return c_; }

  std::uint64_t norm() const;
  bool is_zero() const;
  std::uint32_t last() const { return c_.empty() ? 0 : c_.back(); }

  /// Drops the last component.
  MultiIndex hat() const;
  /// Copy with the last component replaced by zero.
  MultiIndex zero_last() const;
  /// Pads with zeros on the right up to length n.
  MultiIndex embed(std::size_t n) const;

  MultiIndex operator+(const MultiIndex& o) const;
  /// Componentwise difference; requires o <= *this.
  MultiIndex operator-(const MultiIndex& o) const;
  /// Componentwise <=.
  bool leq(const MultiIndex& o) const;
  MultiIndex min(const MultiIndex& o) const;

  auto operator<=>(const MultiIndex&) const = default;

 private:
  std::vector<std::uint32_t> c_;
};

/// True iff 0 < |J| <= p^m (membership in the slot-index set).
bool in_slot_set(const Params& params, const MultiIndex& j);

/// Position (1-based) of the first slot whose last component is nonzero, or
/// the slot count if none.  Throws on an empty list.
std::size_t s_index(const std::vector<MultiIndex>& slots);

struct Triple {
  MultiIndex a, b, c;
};

/// All componentwise triples (A,B,C) with A+B+C = I, minus the forbidden
/// ones, in lexicographic order of (A,B).
std::vector<Triple> decompositions(const MultiIndex& i, bool forbid_b_eq_i,
                                   bool forbid_c_eq_i);

/// All I in N^n with |I| <= w, ordered by total weight then lexicographically.
std::vector<MultiIndex> indices_up_to_weight(std::size_t n, std::uint64_t w);

/// The slot-index set, ordered by weight then lexicographically.
std::vector<MultiIndex> slot_set(const Params& params);

/// Indices with p^m < |J| <= 2 p^m (the legal inner exponents of relations).
std::vector<MultiIndex> relation_inner_set(const Params& params);

std::string render(const MultiIndex& i);
MultiIndex parse_multi_index(std::string_view text);

}  // namespace logjet
