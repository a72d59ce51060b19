#pragma once

#include <string>

#include "teich/quadratic.hpp"

namespace teich {

struct Mat2K;

// Element syntax: `a+b*w` with optional signs/whitespace ("-5-4*w", "w", "3w");
// rationals as `(a+b*w)/d`. Printing is canonical: "a+b*w", "(a+b*w)/d".
QuadInt parse_quadint(const std::string& text, const Discriminant& disc);
QuadRat parse_quadrat(const std::string& text, const Discriminant& disc);
std::string to_string(const QuadInt& x);
std::string to_string(const QuadRat& x);

// Matrix syntax: "a11,a12;a21,a22", entries in element syntax.
Mat2K parse_matrix(const std::string& text, const Discriminant& disc);
std::string to_string(const Mat2K& m);

}  // namespace teich
