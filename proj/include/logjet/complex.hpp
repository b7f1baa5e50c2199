#pragma once

#include "logjet/chain.hpp"
#include "logjet/combinat.hpp"
#include "logjet/elimination.hpp"

#include <map>
#include <memory>
#include <set>
#include <vector>

namespace logjet {

/// Descriptor of one defining relation: the expansion of d^1(eta^{J}) spliced
/// in at slot position k, surrounded by fixed slots.
struct RelationSpec {
  MultiIndex eta;                  // I
  std::size_t position = 1;        // k >= 1
  MultiIndex inner;                // J with p^m < |J| <= 2 p^m
  std::vector<MultiIndex> before;  // J_1 .. J_{k-1}
  std::vector<MultiIndex> after;   // J_{k+2} .. J_r

  std::size_t degree() const { return before.size() + 2 + after.size(); }
  /// s-value of the surrounding slots (0 when there are none).
  std::size_t type_s() const;

  auto operator<=>(const RelationSpec&) const = default;
};

void validate(const Params& params, const RelationSpec& spec);

/// d^0(eta^{I}) = sum over A+B+C=I, B != I of Gamma_{A,B,C} delta(A+B; A+C).
Chain diff0(const Params& params, const MultiIndex& i);

/// d^1((dlog t)^J) = -sum over A+B+C=J, B,C != J of Gamma delta(0; A+B, A+C).
/// Requires J in the slot set.
Chain diff1_slot(const Params& params, const MultiIndex& j);

/// eta^{I} * eta^{K} = <I+K over I> eta^{I+K}.
std::pair<Coeff, MultiIndex> eta_product(const Params& params, const MultiIndex& i,
                                         const MultiIndex& k);

/// Moves a divided-power coefficient eta^{K} leftward across the given slots
/// (K sits to the right of slots.back()) and merges it into eta_target.
/// One crossing expands to sum over A+B+C=K of Gamma_{A,B,C} with the
/// coefficient becoming eta^{A+B} and the crossed slot gaining A+C.
Chain push_coefficient(const Params& params, const MultiIndex& k,
                       const std::vector<MultiIndex>& slots,
                       const MultiIndex& eta_target);

/// The full differential (Leibniz expansion): eta part plus, for each slot k,
/// (-1)^k times the positive Gamma-sum replacing slot k by a slot pair.
Chain differential(const Params& params, const Chain& v);

/// The Gamma-sum the relation expands to, canonicalized.
Chain relation_chain(const Params& params, const RelationSpec& spec);

/// All relations whose term set meets the support, closed under adding the
/// symbols of emitted relations, iterated to a fixpoint.
std::vector<Chain> relations_touching(const Params& params,
                                      const std::set<DeltaSymbol>& support);

/// Memoized quotient machinery.  Not thread-safe; use one per worker.
class QuotientContext {
 public:
  explicit QuotientContext(const Params& params);
  ~QuotientContext();

  const Params& params() const { return params_; }

  /// Equality test against zero in the quotient by all relations.  Decided
  /// gradewise: relations never mix eta exponents, so each eta-graded
  /// component is checked against the full relation family of its grade.
  bool quotient_zero(const Chain& v);

  /// Expresses the symbol's class modulo the leading-slot relations (type
  /// (k,k) with inner last-component >= p^m) in the distinguished basis:
  /// symbols whose first slot with nonzero last component either stays below
  /// p^m or is the final slot.
  Chain basis_expand(const DeltaSymbol& s);
  Chain basis_expand(const Chain& v);

  bool is_basis_symbol(const DeltaSymbol& s) const;

  /// Number of relation generators consulted by the last quotient_zero call.
  std::size_t last_closure_size() const { return last_closure_; }

 private:
  struct Grade;
  struct BasisGrade;
  Grade& grade(const MultiIndex& eta, std::size_t r);
  BasisGrade& basis_grade(const MultiIndex& eta, std::size_t r);

  Params params_;
  std::size_t last_closure_ = 0;
  std::map<std::pair<MultiIndex, std::size_t>, std::unique_ptr<Grade>> grades_;
  std::map<std::pair<MultiIndex, std::size_t>, std::unique_ptr<BasisGrade>> basis_grades_;
  std::map<DeltaSymbol, Chain> expand_memo_;
};

/// Convenience forms following the closure formulation directly (uncached).
bool quotient_zero(const Params& params, const Chain& v);
Chain basis_expand(const Params& params, const DeltaSymbol& s);

}  // namespace logjet
