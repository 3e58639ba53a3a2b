#ifndef PARTALG_EXPRPARSE_HPP
#define PARTALG_EXPRPARSE_HPP

#include <string_view>

#include "partalg/lincomb.hpp"

namespace partalg {

// Diagram expression language used by the CLI:
//   expr   := chain (("+" | "-") chain)*
//   chain  := tens (("o" [U+2218] | ";") tens)*          composition
//   tens   := atom (("(x)" | U+2297) atom)*              tensor product
//   atom   := primary "*"*                                postfix flip
//   primary:= INT | ("d" | "delta" | U+03B4) ["^" INT]    scalars, as 0->0 terms
//           | "P[" n "," m "]:" blocks                    diagram literal
//           | NAME "(" args ")"                           generator call
//           | "(" expr ")"
// Generators: one/id, sigma, U, b, b0, w, wstar, W, Wb, Wbbar, A1, A12, E0,
// E1, omega, a, asym.
LinComb parse_expression(std::string_view text);

}  // namespace partalg

#endif
