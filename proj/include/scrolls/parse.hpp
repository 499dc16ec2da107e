#pragma once

#include <string_view>

#include "scrolls/polynomial.hpp"

namespace scrolls {

struct ParseOptions {
  /// Accept juxtaposed factors ("2x0", "x0 y1") and identifiers that
  /// decompose into a product of ring variables ("x0y3").
  bool implicit_mul = true;
};

/// Grammar: integer or a/b rational coefficients, variables matching
/// [A-Za-z][A-Za-z0-9_]*, '^' for powers, '*' for products, '+'/'-'
/// between terms, parentheses, insignificant whitespace. An exponent
/// after a decomposed identifier binds to its last variable.
Poly parse_poly(std::string_view text, const RingPtr& ring, const ParseOptions& opts = {});

}  // namespace scrolls
