#include "idealis/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace idealis {

Monomial::Monomial(VariableSetPtr vars, Exponents exponents)
    : vars_(std::move(vars)), exponents_(std::move(exponents)), degree_(0) {
  if (!vars_) throw std::invalid_argument("monomial needs a variable set");
  if (exponents_.size() != vars_->variable_count())
    throw std::invalid_argument("exponent vector length does not match the "
                                "variable count");
  for (const Natural& e : exponents_) {
    if (e < 0) throw std::invalid_argument("exponents must be nonnegative");
    degree_ += e;
  }
}

Monomial Monomial::one(VariableSetPtr vars) {
  Exponents zeros(vars->variable_count(), Natural(0));
  return Monomial(std::move(vars), std::move(zeros));
}

Monomial Monomial::variable(VariableSetPtr vars, std::size_t block,
                            std::size_t pos) {
  Exponents e(vars->variable_count(), Natural(0));
  e[vars->flat_index(block, pos)] = 1;
  return Monomial(std::move(vars), std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  require_same_variables(*vars_, other.vars(), "divides");
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] > other.exponents_[i]) return false;
  return true;
}

Monomial Monomial::times(const Monomial& other) const {
  require_same_variables(*vars_, other.vars(), "product");
  Exponents e(exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exponents_[i];
  return Monomial(vars_, std::move(e));
}

Monomial Monomial::pow(unsigned long k) const {
  Exponents e(exponents_);
  for (Natural& x : e) x *= k;
  return Monomial(vars_, std::move(e));
}

Monomial Monomial::gcd(const Monomial& other) const {
  require_same_variables(*vars_, other.vars(), "gcd");
  Exponents e(exponents_);
  for (std::size_t i = 0; i < e.size(); ++i)
    if (other.exponents_[i] < e[i]) e[i] = other.exponents_[i];
  return Monomial(vars_, std::move(e));
}

Monomial Monomial::lcm(const Monomial& other) const {
  require_same_variables(*vars_, other.vars(), "lcm");
  Exponents e(exponents_);
  for (std::size_t i = 0; i < e.size(); ++i)
    if (other.exponents_[i] > e[i]) e[i] = other.exponents_[i];
  return Monomial(vars_, std::move(e));
}

Monomial Monomial::colon_by(const Monomial& f) const {
  require_same_variables(*vars_, f.vars(), "colon");
  Exponents e(exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] -= f.exponents_[i];
    if (e[i] < 0) e[i] = 0;
  }
  return Monomial(vars_, std::move(e));
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] > 0) s.push_back(i);
  return s;
}

std::string Monomial::str() const {
  std::string out;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars_->variable_name(i);
    if (exponents_[i] != 1) {
      out += '^';
      out += exponents_[i].get_str();
    }
  }
  return out.empty() ? "1" : out;
}

bool Monomial::operator==(const Monomial& other) const {
  return *vars_ == other.vars() && exponents_ == other.exponents_;
}

Monomial operator*(const Monomial& a, const Monomial& b) { return a.times(b); }

bool canonical_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  // Descending lex within a degree: the lex-larger monomial (bigger exponent
  // at the earliest differing variable) comes first.
  const Exponents& x = a.exponents();
  const Exponents& y = b.exponents();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[i]) return x[i] > y[i];
  return false;
}

}  // namespace idealis
