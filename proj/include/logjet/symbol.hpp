#pragma once

#include "logjet/multi_index.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace logjet {

/// Canonical generator of the degree-r module: an eta exponent I and an
/// ordered list of slot exponents J_1..J_r.  Ordered by degree, then eta,
/// then slots, all lexicographically.
struct DeltaSymbol {
  MultiIndex eta;
  std::vector<MultiIndex> slots;

  std::size_t degree() const { return slots.size(); }

  std::strong_ordering operator<=>(const DeltaSymbol& o) const {
    if (auto c = slots.size() <=> o.slots.size(); c != 0) return c;
    if (auto c = eta <=> o.eta; c != 0) return c;
    return slots <=> o.slots;
  }
  bool operator==(const DeltaSymbol&) const = default;
};

/// True when every slot lies in the slot-index set.
bool is_canonical(const Params& params, const DeltaSymbol& s);

/// The symbol itself when canonical; nullopt (the zero chain) when a slot is
/// degenerate (|J| = 0) or exceeds p^m in norm.
std::optional<DeltaSymbol> canonicalize(const Params& params, DeltaSymbol s);

/// "d((2);(1),(2))"; degree 0 renders as "d((2))".  Round-trips via
/// parse_symbol.
std::string render(const DeltaSymbol& s);
DeltaSymbol parse_symbol(std::string_view text);

}  // namespace logjet
