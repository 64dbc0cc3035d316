#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "idealis/ideal.hpp"

namespace idealis {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at offset " + std::to_string(position) +
                           ")"),
        position(position) {}
  std::size_t position;
};

/// Parses "x<i>_<h>^<e>" factors joined by '*'; "^1" may be omitted and the
/// constant monomial is "1".  Repeated variables accumulate.  Indices are
/// 1-based in the text and must lie inside `vars`.
Monomial parse_monomial(const VariableSetPtr& vars, std::string_view text);

/// Parses "x<i>_<h>" as a single variable reference, returning its flat index.
std::size_t parse_variable(const VariableSet& vars, std::string_view text);

/// One monomial per nonempty line.
std::vector<Monomial> parse_monomial_lines(const VariableSetPtr& vars,
                                           std::string_view text);

std::string to_string(const MonomialIdeal& ideal);

}  // namespace idealis
