#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tribilliards/complex.hpp"

namespace tribilliards {

enum class InputFormat { GridPoly, GridComplex, Word };

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

std::optional<InputFormat> format_from_name(std::string_view name);

// Header line ("# gridpoly v1", ...) first, otherwise the first keyword.
InputFormat detect_format(std::string_view text);

// Parses and validates. Throws ParseError for malformed text and
// InvalidComplexError when the described complex is not valid.
GridComplex parse_complex(std::string_view text, std::optional<InputFormat> format = std::nullopt);

// Simple polygon bounded by a clockwise step word such as "ENEW...".
GridComplex complex_from_word(std::string_view word);

std::string serialize_gridcomplex(const GridComplex& x);
// Only for complexes whose image map is injective on faces (simple polygons).
std::string serialize_gridpoly(const GridComplex& x);
std::string serialize_word(const GridComplex& x);

}  // namespace tribilliards
