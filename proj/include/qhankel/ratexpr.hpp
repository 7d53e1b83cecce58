#pragma once

#include "qhankel/sympoly.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace qhankel {

/// Quotient of two SymPoly values. Normal form: the denominator's canonical
/// leading term has coefficient 1 with all q-exponents nonnegative, and the
/// fraction is cleared to a polynomial whenever the denominator divides the
/// numerator exactly. No gcd reduction beyond that.
class RatExpr {
 public:
  RatExpr() : num_(), den_(1) {}
  RatExpr(SymPoly n) : num_(std::move(n)), den_(1) {}
  RatExpr(int c) : num_(c), den_(1) {}
  RatExpr(const Rational& c) : num_(c), den_(1) {}
  RatExpr(SymPoly n, SymPoly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::invalid_argument("RatExpr: zero denominator");
    normalize();
  }

  const SymPoly& num() const { return num_; }
  const SymPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  const SymPoly& as_poly() const {
    if (!is_polynomial()) throw std::logic_error("RatExpr: not a polynomial: " + str());
    return num_;
  }

  friend bool operator==(const RatExpr& l, const RatExpr& r) {
    return l.num_ * r.den_ == r.num_ * l.den_;
  }
  friend bool operator!=(const RatExpr& l, const RatExpr& r) { return !(l == r); }

  RatExpr operator-() const { return RatExpr(-num_, den_); }
  friend RatExpr operator+(const RatExpr& l, const RatExpr& r) {
    return RatExpr(l.num_ * r.den_ + r.num_ * l.den_, l.den_ * r.den_);
  }
  friend RatExpr operator-(const RatExpr& l, const RatExpr& r) {
    return RatExpr(l.num_ * r.den_ - r.num_ * l.den_, l.den_ * r.den_);
  }
  friend RatExpr operator*(const RatExpr& l, const RatExpr& r) {
    return RatExpr(l.num_ * r.num_, l.den_ * r.den_);
  }
  friend RatExpr operator/(const RatExpr& l, const RatExpr& r) {
    if (r.is_zero()) throw std::domain_error("RatExpr: division by zero");
    return RatExpr(l.num_ * r.den_, l.den_ * r.num_);
  }
  RatExpr& operator+=(const RatExpr& o) { *this = *this + o; return *this; }
  RatExpr& operator-=(const RatExpr& o) { *this = *this - o; return *this; }
  RatExpr& operator*=(const RatExpr& o) { *this = *this * o; return *this; }
  RatExpr& operator/=(const RatExpr& o) { *this = *this / o; return *this; }

  std::string str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const RatExpr& r) { return os << r.str(); }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = SymPoly(1);
      return;
    }
    const int s = den_.min_q_exp();
    if (s != 0) {
      num_ = num_.shifted(-s);
      den_ = den_.shifted(-s);
    }
    const Rational lead = den_.terms().rbegin()->second;
    if (!lead.is_one()) {
      const Rational inv = lead.inverse();
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
    if (!den_.is_one()) {
      try {
        num_ = exact_divide(num_, den_);
        den_ = SymPoly(1);
      } catch (const NotDivisible&) {
        // keep the reduced-by-unit form
      }
    }
  }

  SymPoly num_;
  SymPoly den_;
};

}  // namespace qhankel
