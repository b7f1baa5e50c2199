#pragma once

#include "logjet/chain.hpp"

#include <map>
#include <optional>
#include <vector>

namespace logjet {

/// Row-echelon span of chains over a fixed, sorted column universe of
/// symbols.  Elimination is exact over F_p and deterministic: pivots are
/// chosen in symbol order.
class FpSpan {
 public:
  FpSpan(std::uint32_t p, std::vector<DeltaSymbol> columns);

  const std::vector<DeltaSymbol>& columns() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  /// Adds a generator; returns true when the rank grew.
  bool insert(const Chain& v);
  bool contains(const Chain& v) const;

  /// Dense residual of v after reduction, or nullopt when v touches a symbol
  /// outside the column universe.
  std::optional<std::vector<Coeff>> residual(const Chain& v) const;
  std::optional<std::vector<Coeff>> to_dense(const Chain& v) const;
  void reduce_in_place(std::vector<Coeff>& v) const;

 private:
  std::uint32_t p_;
  std::vector<DeltaSymbol> cols_;
  std::map<DeltaSymbol, std::size_t> index_;
  std::map<std::size_t, std::vector<Coeff>> rows_;  // pivot column -> row, leading 1
};

/// True iff v lies in the F_p-span of the generators (all one degree).
bool span_contains(const Params& params, const Chain& v,
                   const std::vector<Chain>& generators);

/// Solves v - sum c_b * b in span(generators) for coordinates c on `basis`.
/// Shared by the free function solve_coordinates and the cached quotient
/// machinery.  Throws ConsistencyError when a solution exists but is not
/// unique (the basis residuals are dependent modulo the generators).
class CoordinateSolver {
 public:
  CoordinateSolver(std::uint32_t p, std::vector<DeltaSymbol> columns,
                   const std::vector<Chain>& generators,
                   std::vector<DeltaSymbol> basis);

  std::optional<std::map<DeltaSymbol, Coeff>> solve(const Chain& v) const;
  const FpSpan& generator_span() const { return genspan_; }
  std::size_t generator_count() const { return generator_count_; }

 private:
  struct BasisRow {
    std::vector<Coeff> vec;     // residual, leading 1
    std::vector<Coeff> coords;  // combination of basis elements producing vec
    std::size_t pivot;
  };

  std::uint32_t p_;
  FpSpan genspan_;
  std::vector<DeltaSymbol> basis_;
  std::vector<BasisRow> brows_;             // in pivot order
  std::map<std::size_t, std::size_t> bpivot_;
  bool dependent_ = false;
  std::size_t generator_count_ = 0;
};

/// Coordinates c with v - sum c*basis in span(generators), or nullopt if none
/// exists.  Non-uniqueness raises ConsistencyError.
std::optional<std::map<DeltaSymbol, Coeff>> solve_coordinates(
    const Params& params, const Chain& v, const std::vector<DeltaSymbol>& basis,
    const std::vector<Chain>& generators);

}  // namespace logjet
