#pragma once

#include "qhankel/rational.hpp"

#include <cstddef>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace qhankel {

struct NotDivisible : std::runtime_error {
  NotDivisible() : std::runtime_error("exact_divide: no exact quotient exists") {}
  explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroSubstitutionIntoNegativePower : std::runtime_error {
  ZeroSubstitutionIntoNegativePower()
      : std::runtime_error("substitute: q = 0 meets a negative power of q") {}
};

/// Exponent triple of one term. q is Laurent (eq may be negative); a and x are
/// ordinary polynomial variables (ea, ex >= 0).
struct Monomial {
  int eq = 0;
  int ea = 0;
  int ex = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Canonical term order: ascending lexicographic on (ea, ex, eq). Map
  /// iteration in this order is the emission order.
  friend bool operator<(const Monomial& l, const Monomial& r) {
    return std::tie(l.ea, l.ex, l.eq) < std::tie(r.ea, r.ex, r.eq);
  }
};

/// Sparse exact polynomial in q (Laurent), a and x over Rational. The term map
/// is the canonical form: no zero coefficients, equality is map equality.
class SymPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  SymPoly() = default;
  SymPoly(const Rational& c) { insert(Monomial{}, c); }
  SymPoly(int c) : SymPoly(Rational(c)) {}
  SymPoly(long c) : SymPoly(Rational(c)) {}

  static SymPoly monomial(const Rational& c, int eq, int ea, int ex) {
    if (ea < 0 || ex < 0) throw std::invalid_argument("SymPoly: negative exponent of a or x");
    SymPoly f;
    f.insert(Monomial{eq, ea, ex}, c);
    return f;
  }
  static SymPoly q(int e = 1) { return monomial(1, e, 0, 0); }
  static SymPoly a(int e = 1) { return monomial(1, 0, e, 0); }
  static SymPoly x(int e = 1) { return monomial(1, 0, 0, e); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Monomial{} &&
           terms_.begin()->second.is_one();
  }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
  }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Rational coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational() : it->second;
  }
  Rational constant_value() const {
    if (!is_constant()) throw std::logic_error("SymPoly: not a constant: " + str());
    return coeff(Monomial{});
  }

  friend bool operator==(const SymPoly&, const SymPoly&) = default;

  SymPoly& operator+=(const SymPoly& o) {
    for (const auto& [m, c] : o.terms_) insert(m, c);
    return *this;
  }
  SymPoly& operator-=(const SymPoly& o) {
    for (const auto& [m, c] : o.terms_) insert(m, -c);
    return *this;
  }
  friend SymPoly operator+(SymPoly l, const SymPoly& r) { l += r; return l; }
  friend SymPoly operator-(SymPoly l, const SymPoly& r) { l -= r; return l; }
  SymPoly operator-() const {
    SymPoly f;
    for (const auto& [m, c] : terms_) f.terms_.emplace(m, -c);
    return f;
  }

  friend SymPoly operator*(const SymPoly& l, const SymPoly& r) {
    SymPoly f;
    for (const auto& [lm, lc] : l.terms_)
      for (const auto& [rm, rc] : r.terms_)
        f.insert(Monomial{lm.eq + rm.eq, lm.ea + rm.ea, lm.ex + rm.ex}, lc * rc);
    return f;
  }
  SymPoly& operator*=(const SymPoly& o) { *this = *this * o; return *this; }

  /// Integer power, exponent >= 0.
  SymPoly pow(int e) const {
    if (e < 0) throw std::invalid_argument("SymPoly::pow: negative exponent");
    SymPoly acc(1), base = *this;
    while (e > 0) {
      if (e & 1) acc *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return acc;
  }

  SymPoly scaled(const Rational& c) const {
    SymPoly f;
    if (c.is_zero()) return f;
    for (const auto& [m, v] : terms_) f.terms_.emplace(m, v * c);
    return f;
  }

  /// Multiplication by c * q^dq * a^da * x^dx.
  SymPoly shifted(int dq, int da = 0, int dx = 0, const Rational& c = Rational(1)) const {
    SymPoly f;
    if (c.is_zero()) return f;
    for (const auto& [m, v] : terms_) {
      Monomial mm{m.eq + dq, m.ea + da, m.ex + dx};
      if (mm.ea < 0 || mm.ex < 0) throw std::invalid_argument("SymPoly::shifted: negative exponent");
      f.terms_.emplace(mm, v * c);
    }
    return f;
  }

  int degree_x() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.ex);
    return d;
  }
  int min_q_exp() const {
    if (terms_.empty()) return 0;
    int e = terms_.begin()->first.eq;
    for (const auto& [m, c] : terms_) e = std::min(e, m.eq);
    return e;
  }
  int max_q_exp() const {
    if (terms_.empty()) return 0;
    int e = terms_.begin()->first.eq;
    for (const auto& [m, c] : terms_) e = std::max(e, m.eq);
    return e;
  }

  /// Coefficient of x^k as a polynomial in q and a.
  SymPoly coeff_of_x(int k) const {
    SymPoly f;
    for (const auto& [m, c] : terms_)
      if (m.ex == k) f.terms_.emplace(Monomial{m.eq, m.ea, 0}, c);
    return f;
  }

  SymPoly subst_q(const Rational& c) const {
    SymPoly f;
    for (const auto& [m, v] : terms_) {
      if (c.is_zero() && m.eq < 0) throw ZeroSubstitutionIntoNegativePower();
      if (c.is_zero() && m.eq > 0) continue;
      f.insert(Monomial{0, m.ea, m.ex}, m.eq == 0 ? v : v * c.pow(m.eq));
    }
    return f;
  }

  /// Base change q -> q^t, t >= 1.
  SymPoly subst_q_power(int t) const {
    if (t < 1) throw std::invalid_argument("SymPoly::subst_q_power: require t >= 1");
    SymPoly f;
    for (const auto& [m, v] : terms_) f.terms_.emplace(Monomial{t * m.eq, m.ea, m.ex}, v);
    return f;
  }

  SymPoly subst_a(const Rational& c) const {
    SymPoly f;
    for (const auto& [m, v] : terms_) {
      if (c.is_zero() && m.ea > 0) continue;
      f.insert(Monomial{m.eq, 0, m.ex}, m.ea == 0 ? v : v * c.pow(m.ea));
    }
    return f;
  }

  SymPoly subst_x(const Rational& c) const {
    SymPoly f;
    for (const auto& [m, v] : terms_) {
      if (c.is_zero() && m.ex > 0) continue;
      f.insert(Monomial{m.eq, m.ea, 0}, m.ex == 0 ? v : v * c.pow(m.ex));
    }
    return f;
  }

  /// x -> g for an arbitrary polynomial g.
  SymPoly subst_x(const SymPoly& g) const {
    const int d = degree_x();
    std::vector<SymPoly> gp;
    gp.reserve(d + 1);
    gp.emplace_back(1);
    for (int i = 1; i <= d; ++i) gp.push_back(gp.back() * g);
    SymPoly f;
    for (const auto& [m, v] : terms_)
      f += gp[m.ex].shifted(m.eq, m.ea, 0, v);
    return f;
  }

  /// Canonical string form: terms in canonical order, "C*q^E*a^F*x^G" with
  /// zero-exponent factors omitted, e.g. "2*q + q^2 - 1/3*q^-1*a". Zero is "0".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      const bool neg = c.sign() < 0;
      if (first) {
        if (neg) out += "-";
        first = false;
      } else {
        out += neg ? " - " : " + ";
      }
      out += term_str(m, neg ? -c : c);
    }
    return out;
  }

  /// Parses the canonical string form (whitespace-tolerant).
  static SymPoly parse(std::string_view s);

  friend std::ostream& operator<<(std::ostream& os, const SymPoly& f) { return os << f.str(); }

 private:
  void insert(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  static std::string term_str(const Monomial& m, const Rational& c) {
    std::string vars;
    const auto factor = [&vars](const char* name, int e) {
      if (e == 0) return;
      if (!vars.empty()) vars += "*";
      vars += name;
      if (e != 1) {
        vars += "^";
        vars += std::to_string(e);
      }
    };
    factor("q", m.eq);
    factor("a", m.ea);
    factor("x", m.ex);
    if (vars.empty()) return c.str();
    if (c.is_one()) return vars;
    return c.str() + "*" + vars;
  }

  TermMap terms_;
};

/// Exact quotient f / g in the ring (q is a unit). Throws NotDivisible when no
/// exact quotient exists. Used by fraction-free elimination, where a failure
/// signals an internal bug.
inline SymPoly exact_divide(const SymPoly& f, const SymPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
  if (f.is_zero()) return {};
  // Factor out q-units so both operands are ordinary in q; divisibility is
  // unaffected and leading-term division below stays in nonnegative exponents.
  const int sf = f.min_q_exp(), sg = g.min_q_exp();
  SymPoly rem = f.shifted(-sf);
  const SymPoly div = g.shifted(-sg);
  const auto lead_div = *div.terms().rbegin();
  SymPoly quot;
  while (!rem.is_zero()) {
    const auto lead_rem = *rem.terms().rbegin();
    const Monomial t{lead_rem.first.eq - lead_div.first.eq,
                     lead_rem.first.ea - lead_div.first.ea,
                     lead_rem.first.ex - lead_div.first.ex};
    if (t.eq < 0 || t.ea < 0 || t.ex < 0) throw NotDivisible();
    const SymPoly term = SymPoly::monomial(lead_rem.second / lead_div.second, t.eq, t.ea, t.ex);
    quot += term;
    rem -= term * div;
  }
  return quot.shifted(sf - sg);
}

/// Substitution of a rational value for one of the three variables.
inline SymPoly substitute(const SymPoly& f, char var, const Rational& value) {
  switch (var) {
    case 'q': return f.subst_q(value);
    case 'a': return f.subst_a(value);
    case 'x': return f.subst_x(value);
    default: throw std::invalid_argument(std::string("substitute: unknown variable '") + var + "'");
  }
}

inline SymPoly SymPoly::parse(std::string_view s) {
  std::size_t i = 0;
  const auto fail = [&] {
    return std::invalid_argument("SymPoly: cannot parse '" + std::string(s) + "'");
  };
  const auto skip_ws = [&] {
    while (i < s.size() && s[i] == ' ') ++i;
  };
  const auto parse_uint = [&]() -> std::string {
    std::string digits;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') digits += s[i++];
    if (digits.empty()) throw fail();
    return digits;
  };
  const auto parse_int = [&]() -> std::string {
    std::string out;
    if (i < s.size() && s[i] == '-') {
      out += '-';
      ++i;
    }
    return out + parse_uint();
  };

  SymPoly result;
  skip_ws();
  if (i >= s.size()) throw fail();
  bool negative = false;
  if (s[i] == '-') {
    negative = true;
    ++i;
    skip_ws();
  }
  while (true) {
    // One term: '*'-separated factors, each a rational literal or q/a/x power.
    Rational coeff(1);
    Monomial mono;
    bool any_factor = false;
    while (true) {
      skip_ws();
      if (i >= s.size()) throw fail();
      const char c = s[i];
      if (c >= '0' && c <= '9') {
        std::string num = parse_uint();
        std::string den = "1";
        if (i < s.size() && s[i] == '/') {
          ++i;
          den = parse_uint();
        }
        coeff *= Rational(mpz_class(num, 10), mpz_class(den, 10));
      } else if (c == 'q' || c == 'a' || c == 'x') {
        ++i;
        int e = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          e = std::stoi(parse_int());
        }
        if (c == 'q') mono.eq += e;
        if (c == 'a') mono.ea += e;
        if (c == 'x') mono.ex += e;
      } else {
        throw fail();
      }
      any_factor = true;
      if (i < s.size() && s[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!any_factor || mono.ea < 0 || mono.ex < 0) throw fail();
    result += SymPoly::monomial(negative ? -coeff : coeff, mono.eq, mono.ea, mono.ex);
    skip_ws();
    if (i >= s.size()) break;
    if (s[i] == '+') negative = false;
    else if (s[i] == '-') negative = true;
    else throw fail();
    ++i;
    skip_ws();
  }
  return result;
}

}  // namespace qhankel
