#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "nqr/necklace.hpp"
#include "nqr/schedler.hpp"
#include "nqr/weyl.hpp"

namespace nqr {

// Expression grammar (whitespace insignificant):
//   expr    := term { ('+' | '-') term }
//   term    := unary { '*' unary }          at most one non-scalar factor
//   unary   := '-' unary | power
//   power   := primary [ '^' integer ]      only for scalars
//   primary := rational | 'hbar' | '(' expr ')' | product
//   product := cycle | factor { '&' factor }
//   cycle   := 'cyc' '(' arrow {',' arrow} ')'
//   factor  := 'e' '(' vertex ')' | 'h' '[' '(' arrow ',' height ')' {',' ...} ']'
// A product containing h[...] or '&', or any hbar coefficient, or a bare
// scalar term makes the result a HeightSum; otherwise it is a NecklaceSum.
// Necklaces mixed into a HeightSum are lifted. HeightSum results are not
// rewritten to PBW normal form.
using Expression = std::variant<NecklaceSum, HeightSum>;

Expression parse_expression(std::string_view text, const Quiver& q);
NecklaceSum parse_necklace_sum(std::string_view text, const Quiver& q);
HeightSum parse_height_sum(std::string_view text, const Quiver& q);

// Weyl / polynomial grammar: sums of products of rationals, hbar,
// x[arrow][i][j] and D[arrow][i][j] (1-based), with '^' powers and
// parentheses. Polynomials use x[a*][i][j] for starred coordinates.
WeylSum parse_weyl(std::string_view text, const CoordSystem& cs);
PolySum parse_poly(std::string_view text, const CoordSystem& cs);

std::string to_string(const Quiver& q, const Necklace& n);
std::string to_string(const Quiver& q, const NecklaceSum& x);
std::string to_string(const Quiver& q, const HeightMonomial& m);
std::string to_string(const Quiver& q, const HeightSum& x);
std::string to_string(const Quiver& q, const SymMonomial& m);
std::string to_string(const CoordSystem& cs, const PhaseMonomial& m, bool derivative_names);
std::string to_string(const CoordSystem& cs, const WeylSum& x);
std::string to_string(const CoordSystem& cs, const PolySum& x);

}  // namespace nqr
