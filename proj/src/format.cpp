#include "idealis/format.hpp"

#include <cctype>

namespace idealis {

namespace {

std::size_t skip_spaces(std::string_view text, std::size_t at) {
  while (at < text.size() && std::isspace(static_cast<unsigned char>(text[at])))
    ++at;
  return at;
}

std::size_t parse_number(std::string_view text, std::size_t at,
                         std::string& digits) {
  digits.clear();
  while (at < text.size() && std::isdigit(static_cast<unsigned char>(text[at])))
    digits.push_back(text[at++]);
  return at;
}

// x<i>_<h> with optional ^<e>.  Returns position after the factor.
std::size_t parse_factor(const VariableSet& vars, std::string_view text,
                         std::size_t at, std::size_t& flat, Natural& exp) {
  if (at >= text.size() || text[at] != 'x')
    throw ParseError("expected a variable factor starting with 'x'", at);
  ++at;
  std::string digits;
  std::size_t after = parse_number(text, at, digits);
  if (digits.empty()) throw ParseError("expected a block index", at);
  unsigned long block = std::stoul(digits);
  at = after;
  if (at >= text.size() || text[at] != '_')
    throw ParseError("expected '_' between block and position", at);
  ++at;
  after = parse_number(text, at, digits);
  if (digits.empty()) throw ParseError("expected a position index", at);
  unsigned long pos = std::stoul(digits);
  at = after;
  if (block == 0 || block > vars.block_count())
    throw ParseError("block index out of range", at);
  if (pos == 0 || pos > vars.block_size(block - 1))
    throw ParseError("position index out of range", at);
  flat = vars.flat_index(block - 1, pos - 1);
  exp = 1;
  if (at < text.size() && text[at] == '^') {
    ++at;
    after = parse_number(text, at, digits);
    if (digits.empty()) throw ParseError("expected an exponent", at);
    exp = Natural(digits);
    at = after;
  }
  return at;
}

}  // namespace

Monomial parse_monomial(const VariableSetPtr& vars, std::string_view text) {
  Exponents exponents(vars->variable_count(), Natural(0));
  std::size_t at = skip_spaces(text, 0);
  if (at >= text.size()) throw ParseError("empty monomial", at);
  if (text[at] == '1') {
    at = skip_spaces(text, at + 1);
    if (at != text.size())
      throw ParseError("unexpected trailing text after '1'", at);
    return Monomial(vars, std::move(exponents));
  }
  while (true) {
    std::size_t flat = 0;
    Natural exp;
    at = parse_factor(*vars, text, at, flat, exp);
    exponents[flat] += exp;
    at = skip_spaces(text, at);
    if (at == text.size()) break;
    if (text[at] != '*')
      throw ParseError("expected '*' between factors", at);
    at = skip_spaces(text, at + 1);
  }
  return Monomial(vars, std::move(exponents));
}

std::size_t parse_variable(const VariableSet& vars, std::string_view text) {
  std::size_t at = skip_spaces(text, 0);
  std::size_t flat = 0;
  Natural exp;
  at = parse_factor(vars, text, at, flat, exp);
  at = skip_spaces(text, at);
  if (at != text.size() || exp != 1)
    throw ParseError("expected a plain variable reference", at);
  return flat;
}

std::vector<Monomial> parse_monomial_lines(const VariableSetPtr& vars,
                                           std::string_view text) {
  std::vector<Monomial> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    std::size_t at = skip_spaces(line, 0);
    if (at < line.size()) out.push_back(parse_monomial(vars, line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::string to_string(const MonomialIdeal& ideal) {
  std::string out;
  for (const Monomial& g : ideal.generators()) {
    out += g.str();
    out += '\n';
  }
  return out;
}

}  // namespace idealis
