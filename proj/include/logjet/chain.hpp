#pragma once

#include "logjet/symbol.hpp"

#include <map>
#include <string>
#include <string_view>

namespace logjet {

/// Finitely supported F_p-linear combination of canonical symbols of one
/// degree.  No zero coefficients are stored; term order is the symbol order.
class Chain {
 public:
  explicit Chain(std::size_t degree) : degree_(degree) {}

  static Chain single(const Params& params, DeltaSymbol s, Coeff c = 1);

  std::size_t degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<DeltaSymbol, Coeff>& terms() const { return terms_; }

  /// Canonicalizes the symbol, then accumulates c mod p (dropping zeros).
  void add_term(const Params& params, DeltaSymbol s, Coeff c);
  /// Accumulates a known-canonical symbol.
  void add_canonical(const Params& params, const DeltaSymbol& s, Coeff c);

  Coeff coefficient(const DeltaSymbol& s) const;

  bool operator==(const Chain& o) const {
    return degree_ == o.degree_ && terms_ == o.terms_;
  }

 private:
  std::size_t degree_;
  std::map<DeltaSymbol, Coeff> terms_;
};

/// Pointwise mod-p sum; degrees must agree.
Chain add(const Params& params, const Chain& a, const Chain& b);
Chain sub(const Params& params, const Chain& a, const Chain& b);
Chain scale(const Params& params, Coeff c, const Chain& a);

/// "d((0);(1),(1)) + 2*d((1);(2))", terms in symbol order; "0" when empty.
std::string render(const Chain& v);

/// Inverse of render.  The degree of "0" is taken from zero_degree.
Chain parse_chain(const Params& params, std::string_view text, std::size_t zero_degree = 0);

}  // namespace logjet
