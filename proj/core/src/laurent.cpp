#include "ribbonforge/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ribbonforge {

VarTable::VarTable(std::vector<std::string> names, std::vector<std::string> idempotent)
    : names_(std::move(names)), idempotent_(names_.size(), false) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = i + 1; j < names_.size(); ++j) {
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable name: " + names_[i]);
    }
  }
  for (const auto& v : idempotent) {
    int idx = index_of(v);
    if (idx < 0) throw std::invalid_argument("idempotent flag names unknown variable: " + v);
    idempotent_[idx] = true;
  }
}

int VarTable::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

bool LaurentPoly::TermOrder::operator()(const ExpVec& a, const ExpVec& b) const {
  // Graded lex descending: higher total degree first, then lex-higher first.
  long long ga = std::accumulate(a.begin(), a.end(), 0LL);
  long long gb = std::accumulate(b.begin(), b.end(), 0LL);
  if (ga != gb) return ga > gb;
  return a > b;
}

LaurentPoly LaurentPoly::constant(const VarTable& t, const Rational& c) {
  LaurentPoly p(t);
  p.add_term(ExpVec(t.size(), 0), c);
  return p;
}

LaurentPoly LaurentPoly::variable(const VarTable& t, const std::string& name, std::int32_t half_units) {
  int idx = t.index_of(name);
  if (idx < 0) throw std::invalid_argument("unknown variable: " + name);
  ExpVec e(t.size(), 0);
  e[idx] = half_units;
  LaurentPoly p(t);
  p.add_term(e, Rational(1));
  return p;
}

LaurentPoly LaurentPoly::monomial(const VarTable& t, const Rational& coeff, const ExpVec& exps) {
  if (static_cast<int>(exps.size()) != t.size()) throw std::invalid_argument("exponent arity mismatch");
  LaurentPoly p(t);
  p.add_term(exps, coeff);
  return p;
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](std::int32_t x) { return x == 0; });
}

Rational LaurentPoly::coeff(const ExpVec& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::normalize_term(ExpVec& exps, Rational& coeff) const {
  for (int i = 0; i < table_.size(); ++i) {
    if (!table_.idempotent(i)) continue;
    std::int32_t e = exps[i];
    if (e == 0) continue;
    if (e < 0 || (e & 1)) {
      throw std::domain_error("idempotent variable " + table_.name(i) +
                              " admits only exponents 0 and 1");
    }
    exps[i] = 2;  // w^k -> w for k >= 1
  }
  (void)coeff;
}

void LaurentPoly::add_term(const ExpVec& exps, const Rational& coeff) {
  if (static_cast<int>(exps.size()) != table_.size()) throw std::invalid_argument("exponent arity mismatch");
  if (sgn(coeff) == 0) return;
  ExpVec e = exps;
  Rational c = coeff;
  c.canonicalize();  // GMP rationals built from (num, den) arrive unreduced
  normalize_term(e, c);
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(std::move(e), c);
  } else {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (table_ != rhs.table_) {
    if (terms_.empty() && table_.size() == 0) {
      *this = rhs;
      return *this;
    }
    throw std::invalid_argument("incompatible variable tables");
  }
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  if (table_ != rhs.table_) throw std::invalid_argument("incompatible variable tables");
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
  LaurentPoly r = *this;
  r += rhs;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
  LaurentPoly r = *this;
  r -= rhs;
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(table_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
  if (table_ != rhs.table_) throw std::invalid_argument("incompatible variable tables");
  LaurentPoly r(table_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      ExpVec e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

bool LaurentPoly::operator==(const LaurentPoly& rhs) const {
  return table_ == rhs.table_ && terms_ == rhs.terms_;
}

LaurentPoly LaurentPoly::pow(long n) const {
  if (n < 0) throw std::domain_error("pow: negative exponent");
  LaurentPoly acc = constant(table_, 1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1L) acc *= base;
    base *= base;
    n >>= 1L;
  }
  return acc;
}

LaurentPoly LaurentPoly::monomial_inverse() const {
  if (terms_.size() != 1) throw std::domain_error("inverse requires a monomial");
  const auto& [e, c] = *terms_.begin();
  for (int i = 0; i < table_.size(); ++i) {
    if (table_.idempotent(i) && e[i] != 0) {
      throw std::domain_error("idempotent variable is not invertible");
    }
  }
  ExpVec inv(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) inv[i] = -e[i];
  return monomial(table_, Rational(1) / c, inv);
}

std::optional<LaurentPoly> LaurentPoly::monomial_sqrt() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  auto rc = rational_sqrt(c);
  if (!rc) return std::nullopt;
  // Half-unit storage makes the exponent sqrt a plain halving; odd stored
  // values would need quarter exponents.
  ExpVec h(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    h[i] = e[i] / 2;
    if (e[i] % 2 != 0) return std::nullopt;
  }
  return monomial(table_, *rc, h);
}

namespace {

// monomial^(half_units/2), exact or throws.
LaurentPoly monomial_half_pow(const LaurentPoly& m, std::int32_t half_units) {
  const auto& [e, c] = *m.terms().begin();
  ExpVec out(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    long long v = static_cast<long long>(e[i]) * half_units;
    if (v % 2 != 0) throw std::domain_error("substitution produces a quarter-integer exponent");
    out[i] = static_cast<std::int32_t>(v / 2);
  }
  Rational coeff;
  if (half_units % 2 == 0) {
    coeff = rational_pow(c, half_units / 2);
  } else {
    auto rc = rational_sqrt(c);
    if (!rc) throw std::domain_error("substitution needs a rational square root of a coefficient");
    coeff = rational_pow(*rc, half_units);
  }
  return LaurentPoly::monomial(m.table(), coeff, out);
}

}  // namespace

LaurentPoly LaurentPoly::substitute(const std::map<std::string, LaurentPoly>& bindings,
                                    const VarTable& target) const {
  for (const auto& [name, p] : bindings) {
    if (table_.index_of(name) < 0) throw std::invalid_argument("binding for unknown variable: " + name);
    if (p.table() != target) throw std::invalid_argument("binding polynomial over wrong table");
  }
  // Per source variable: either a binding or an identity lift into target.
  std::vector<const LaurentPoly*> bound(table_.size(), nullptr);
  std::vector<int> lift(table_.size(), -1);
  for (int i = 0; i < table_.size(); ++i) {
    auto it = bindings.find(table_.name(i));
    if (it != bindings.end()) {
      bound[i] = &it->second;
    } else {
      lift[i] = target.index_of(table_.name(i));
    }
  }
  LaurentPoly result(target);
  for (const auto& [e, c] : terms_) {
    LaurentPoly term = LaurentPoly::constant(target, c);
    ExpVec lifted(target.size(), 0);
    bool lifted_any = false;
    for (int i = 0; i < table_.size(); ++i) {
      if (e[i] == 0) continue;
      if (bound[i] != nullptr) {
        const LaurentPoly& p = *bound[i];
        if (p.is_monomial()) {
          term *= monomial_half_pow(p, e[i]);
        } else {
          if (e[i] < 0) {
            throw std::domain_error("negative exponent of " + table_.name(i) +
                                    " bound to a non-monomial (uncleared denominator)");
          }
          if (e[i] % 2 != 0) {
            throw std::domain_error("half exponent of " + table_.name(i) +
                                    " bound to a non-monomial");
          }
          term *= p.pow(e[i] / 2);
        }
      } else {
        if (lift[i] < 0) {
          throw std::invalid_argument("variable " + table_.name(i) +
                                      " is unbound and absent from the target table");
        }
        lifted[lift[i]] += e[i];
        lifted_any = true;
      }
    }
    if (lifted_any) term *= LaurentPoly::monomial(target, Rational(1), lifted);
    result += term;
  }
  return result;
}

Rational LaurentPoly::eval(const std::map<std::string, Rational>& point) const {
  std::vector<Rational> vals(table_.size());
  std::vector<bool> have(table_.size(), false);
  for (const auto& [name, v] : point) {
    int idx = table_.index_of(name);
    if (idx < 0) throw std::invalid_argument("evaluation point names unknown variable: " + name);
    vals[idx] = v;
    have[idx] = true;
  }
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < table_.size(); ++i) {
      if (e[i] == 0) continue;
      if (!have[i]) throw std::invalid_argument("no value for variable " + table_.name(i));
      const Rational& v = vals[i];
      if (sgn(v) == 0) {
        if (e[i] < 0) throw std::domain_error("evaluation at a pole of " + table_.name(i));
        term = 0;
        break;
      }
      if (e[i] % 2 == 0) {
        term *= rational_pow(v, e[i] / 2);
      } else {
        auto rv = rational_sqrt(v);
        if (!rv) {
          throw std::domain_error("half exponent of " + table_.name(i) +
                                  " needs a value with a rational square root");
        }
        term *= rational_pow(*rv, e[i]);
      }
    }
    acc += term;
  }
  return acc;
}

std::int32_t LaurentPoly::max_exp_half(const std::string& var) const {
  int idx = table_.index_of(var);
  if (idx < 0) throw std::invalid_argument("unknown variable: " + var);
  std::int32_t best = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[idx] > best) best = e[idx];
    first = false;
  }
  return best;
}

std::int32_t LaurentPoly::min_exp_half(const std::string& var) const {
  int idx = table_.index_of(var);
  if (idx < 0) throw std::invalid_argument("unknown variable: " + var);
  std::int32_t best = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[idx] < best) best = e[idx];
    first = false;
  }
  return best;
}

namespace {

bool plain_name(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
  }
  return !std::isdigit(static_cast<unsigned char>(s[0]));
}

void render_factor(std::ostringstream& out, const std::string& name, std::int32_t half) {
  if (plain_name(name)) {
    out << name;
  } else {
    out << '(' << name << ')';
  }
  if (half == 2) return;
  if (half % 2 == 0) {
    out << '^' << half / 2;
  } else {
    out << "^(" << half << "/2)";
  }
}

}  // namespace

std::string LaurentPoly::text() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
      first = false;
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    bool any_var = false;
    std::ostringstream vars;
    for (int i = 0; i < table_.size(); ++i) {
      if (e[i] == 0) continue;
      if (any_var) vars << '*';
      render_factor(vars, table_.name(i), e[i]);
      any_var = true;
    }
    if (!any_var) {
      out << mag.get_str();
    } else if (mag == 1) {
      out << vars.str();
    } else {
      out << mag.get_str() << '*' << vars.str();
    }
  }
  return out.str();
}

}  // namespace ribbonforge
