#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ribbonforge/rational.hpp"

namespace ribbonforge {

/// Ordered variable list with per-variable idempotent flags (w^2 = w).
class VarTable {
 public:
  VarTable() = default;
  explicit VarTable(std::vector<std::string> names, std::vector<std::string> idempotent = {});

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_.at(i); }
  bool idempotent(int i) const { return idempotent_.at(i); }
  /// Index of a variable name, or -1 when absent.
  int index_of(const std::string& name) const;

  bool operator==(const VarTable& other) const {
    return names_ == other.names_ && idempotent_ == other.idempotent_;
  }
  bool operator!=(const VarTable& other) const { return !(*this == other); }

 private:
  std::vector<std::string> names_;
  std::vector<bool> idempotent_;
};

/// Exponent vector in half-units: stored value 2k means exponent k,
/// stored 2k+1 means exponent k + 1/2.
using ExpVec = std::vector<std::int32_t>;

/// Sparse multivariate Laurent polynomial over the rationals.
///
/// Exponents are half-integers (see ExpVec); idempotent variables are
/// normalized into {0, 1}. Terms are kept in graded-lex-descending order,
/// which is also the canonical printing and serialization order.
class LaurentPoly {
 public:
  struct TermOrder {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
  };
  using TermMap = std::map<ExpVec, Rational, TermOrder>;

  LaurentPoly() = default;
  explicit LaurentPoly(VarTable table) : table_(std::move(table)) {}

  static LaurentPoly zero(const VarTable& t) { return LaurentPoly(t); }
  static LaurentPoly constant(const VarTable& t, const Rational& c);
  /// A single variable raised to `half_units`/2 (default exponent 1).
  static LaurentPoly variable(const VarTable& t, const std::string& name, std::int32_t half_units = 2);
  static LaurentPoly monomial(const VarTable& t, const Rational& coeff, const ExpVec& exps);

  const VarTable& table() const { return table_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  int term_count() const { return static_cast<int>(terms_.size()); }

  /// Coefficient of an exponent vector (zero when absent).
  Rational coeff(const ExpVec& exps) const;

  LaurentPoly operator+(const LaurentPoly& rhs) const;
  LaurentPoly operator-(const LaurentPoly& rhs) const;
  LaurentPoly operator*(const LaurentPoly& rhs) const;
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  bool operator==(const LaurentPoly& rhs) const;
  bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

  /// p^n for n >= 0.
  LaurentPoly pow(long n) const;

  /// Multiplicative inverse, defined for monomials only.
  LaurentPoly monomial_inverse() const;
  /// Exact square root of a monomial (half exponents, square coefficient).
  std::optional<LaurentPoly> monomial_sqrt() const;

  /// Substitute variables by polynomials over a target table. Unbound
  /// variables must exist in the target table by name. A variable with
  /// negative or half-integer exponents can only be bound to a monomial.
  LaurentPoly substitute(const std::map<std::string, LaurentPoly>& bindings,
                         const VarTable& target) const;
  /// Same-table convenience overload.
  LaurentPoly substitute(const std::map<std::string, LaurentPoly>& bindings) const {
    return substitute(bindings, table_);
  }

  /// Exact evaluation at a rational point. Variables appearing with a
  /// negative exponent must be nonzero; half exponents need values with
  /// rational square roots.
  Rational eval(const std::map<std::string, Rational>& point) const;

  /// Canonical text form, bit-stable across runs.
  std::string text() const;

  /// Maximum exponent of one variable, in half-units; 0 for the zero poly.
  std::int32_t max_exp_half(const std::string& var) const;
  std::int32_t min_exp_half(const std::string& var) const;

  void add_term(const ExpVec& exps, const Rational& coeff);

 private:
  void normalize_term(ExpVec& exps, Rational& coeff) const;

  VarTable table_;
  TermMap terms_;
};

/// Parse the canonical text form (see LaurentPoly::text) over a table.
LaurentPoly parse_poly(const VarTable& table, const std::string& text);

}  // namespace ribbonforge
