#ifndef BLOWUP_PARSE_HPP
#define BLOWUP_PARSE_HPP

#include <string>

#include "blowup/polynomial.hpp"

namespace blowup {

/// Parses the textual polynomial format:
///   expr    := ['-'] term (('+'|'-') term)*
///   term    := coeff ('*' varpow)* | varpow ('*' varpow)*
///   varpow  := name ('^' posint)?
///   coeff   := int ('/' posint)?
/// Whitespace is ignored everywhere. format(parse(s)) == format for canonical
/// strings, and parse(format(f)) == f for every polynomial f.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

/// Parses a rational literal, e.g. "-3/2".
Rational parse_rational(const std::string& text);

} // namespace blowup

#endif
