#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace qhankel {

/// Arbitrary-precision rational scalar. Stored canonically: gcd(|num|, den) = 1,
/// den > 0, zero is 0/1. All arithmetic is exact.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}
  explicit Rational(const mpz_class& z) : v_(z) {}
  Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }

  /// Parses "p" or "p/q" with q > 0, e.g. "-3", "2/3".
  static Rational parse(std::string_view s) {
    const auto fail = [&] {
      return std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
    };
    std::string_view t = s;
    while (!t.empty() && t.front() == ' ') t.remove_prefix(1);
    while (!t.empty() && t.back() == ' ') t.remove_suffix(1);
    if (t.empty()) throw fail();

    const auto slash = t.find('/');
    std::string_view num_sv = t.substr(0, slash);
    std::string_view den_sv = slash == std::string_view::npos ? std::string_view("1") : t.substr(slash + 1);

    const auto is_int = [](std::string_view v, bool allow_sign) {
      if (allow_sign && !v.empty() && v.front() == '-') v.remove_prefix(1);
      if (v.empty()) return false;
      for (char c : v)
        if (c < '0' || c > '9') return false;
      return true;
    };
    if (!is_int(num_sv, true) || !is_int(den_sv, false)) throw fail();
    mpz_class num(std::string(num_sv), 10);
    mpz_class den(std::string(den_sv), 10);
    if (den == 0) throw fail();
    return Rational(num, den);
  }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  Rational operator-() const { return Rational(mpq_class(-v_), canonical_t{}); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational l, const Rational& r) { l += r; return l; }
  friend Rational operator-(Rational l, const Rational& r) { l -= r; return l; }
  friend Rational operator*(Rational l, const Rational& r) { l *= r; return l; }
  friend Rational operator/(Rational l, const Rational& r) { l /= r; return l; }

  friend bool operator==(const Rational& l, const Rational& r) { return l.v_ == r.v_; }
  friend bool operator!=(const Rational& l, const Rational& r) { return !(l == r); }
  friend bool operator<(const Rational& l, const Rational& r) { return l.v_ < r.v_; }

  /// Exact integer power; negative exponents invert (0 to a negative power throws).
  Rational pow(int e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
      if (e < 0) throw std::domain_error("Rational: zero to a negative power");
      return Rational();
    }
    const unsigned long ue = e < 0 ? static_cast<unsigned long>(-static_cast<long>(e))
                                   : static_cast<unsigned long>(e);
    mpz_class pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), num().get_mpz_t(), ue);
    mpz_pow_ui(pd.get_mpz_t(), den().get_mpz_t(), ue);
    return e < 0 ? Rational(pd, pn) : Rational(pn, pd);
  }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(den(), num());
  }

  /// "p" or "p/q" with leading sign, reduced.
  std::string str() const { return v_.get_str(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  struct canonical_t {};
  Rational(mpq_class v, canonical_t) : v_(std::move(v)) {}

  mpq_class v_;
};

}  // namespace qhankel
