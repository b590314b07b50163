#pragma once

#include "ncdeg/freealg.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncdeg {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at offset " + std::to_string(position) +
                             ")"),
          position(position) {}

    std::size_t position = 0;
};

// Parses the polynomial grammar shared by the CLI and the test fixtures:
//
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := var ('^' uint)? | '(' poly ')' ('^' uint)?
//           | '[' poly ',' poly ']' ('^' uint)?
//   coeff  := uint ('/' uint)?
//
// '[a,b]' desugars to a*b - b*a.  Whitespace is insignificant.  Variables
// are named x1..xn, with single-letter aliases x, y, z, w available for
// alphabets of at most four letters.  Fractions require characteristic 0.
// Exponents are capped at 64.
NcPoly parse_poly(const std::string& text, int alphabet, FieldTag tag);

}  // namespace ncdeg
