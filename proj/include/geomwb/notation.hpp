#pragma once

#include <string>
#include <string_view>

#include "geomwb/exterior.hpp"

namespace geomwb {

// Presentation text, e.g.
//
//   dim 7; param a;
//   (0, 0, -a*e15, -a*e16, a*e13, a*e14, -2*e12 - 2*e34 - 2*e56)
//
// or the equation dialect
//
//   dim 3;
//   de3 = -2 e^{12};
//
// Coframe monomials are written e14, e^{14}, e^14, or with a separator
// between multi-digit indices (e1.12, e^{1,12}). Coefficients are rational
// expressions in parameters with + - * / ^ and parentheses; juxtaposition
// multiplies. '#' starts a comment.

/// Throws SyntaxError, DimensionMismatch or DegreeError.
LieAlgebra parse(std::string_view text);

/// Canonical tuple text; parse(render(g)) == g.
std::string render(const LieAlgebra& g);

Scalar parse_scalar(std::string_view text);
/// A form of any degree on a dim-dimensional coframe.
KForm parse_form(std::string_view text, int dim);
/// "e_2", "-e2 + 3*e5" or a component tuple "(0,-1,0)".
FrameVector parse_vector(std::string_view text, int dim);

std::string render_vector(const FrameVector& v);

}  // namespace geomwb
