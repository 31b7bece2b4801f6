#pragma once

#include <istream>
#include <string>
#include <vector>

#include "ltf/extension.hpp"
#include "ltf/poly.hpp"

namespace ltf {

// "num/den;...;num/den", one entry per coordinate of the element's field.
std::string format_elem(const FieldElem& x);
// Accepts the same grammar (a bare integer counts as den 1); ValidationError otherwise.
FieldElem parse_elem(const Field& f, const std::string& s);

// Coefficients of degree 0..deg joined by '|'; the zero polynomial is one zero element.
std::string format_poly(const PolyL& g);

// "degree,coeff" CSV with one row per degree 0..deg.
std::string poly_csv(const PolyL& g);
// Reads "degree,coeff" CSV; missing degrees are zero, repeated degrees are rejected.
PolyL read_poly_csv(const Field& f, std::istream& in);

// Splits one CSV line on commas (the serialization grammar never needs quoting).
std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace ltf
