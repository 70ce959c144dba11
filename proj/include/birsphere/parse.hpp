#pragma once
#include <array>
#include <string>

#include "birsphere/ratfn.hpp"

namespace bs {

// Grammar: rationals, i, z, sqrt(<rational constant>), + - * / ^, parentheses,
// implicit multiplication ("2i", "3z^2", "2(z+1)"). Throws ParseError.
RatFn parse_ratfn(const std::string& s);
PolyC parse_poly(const std::string& s);
CoeffScalar parse_scalar(const std::string& s);

// "[[p11, p12],[p21, p22]]" or "diag(p, q)"; denominators cleared by a common factor.
std::array<PolyC, 4> parse_matrix_entries(const std::string& s);

}  // namespace bs
