#pragma once

#include "qhankel/hankel.hpp"
#include "qhankel/ratexpr.hpp"

#include <stdexcept>
#include <vector>

namespace qhankel {

struct SingularSystem : std::logic_error {
  explicit SingularSystem(const std::string& what) : std::logic_error(what) {}
};

struct DegenerateMoments : std::runtime_error {
  explicit DegenerateMoments(int n)
      : std::runtime_error("monic_op: the order-" + std::to_string(n) +
                           " Hankel determinant of the moments is zero") {}
};

/// p_n(x,a) = sum_k (-a)^k q^{binom(k,2)} [n choose k]_q x^{n-k}.
inline SymPoly p_poly(int n) {
  if (n < 0) throw std::invalid_argument("p_poly: require n >= 0");
  SymPoly f;
  for (int k = 0; k <= n; ++k) {
    const Rational sign = k % 2 == 0 ? Rational(1) : Rational(-1);
    f += qbinomial(n, k).shifted(static_cast<int>(binom2(k)), k, n - k, sign);
  }
  return f;
}

/// g_n = sum_k (-a)^k q^{m*binom(k,2)} [n choose k]_{q^m} <<x>>_{r,m,n-k}.
///
/// The binomial weights are taken at base q^m, not base q: only this family is
/// orthogonal for the moment functional when m > 1 (the base-q family fails
/// G(x h_2) = 0 already, because D_{q^m} p_n = [n]_{q^m} p_{n-1} does not hold
/// for base-q p_n). For m = 1 the two readings coincide.
inline SymPoly g_poly(const Params& p, int n) {
  if (n < 0) throw std::invalid_argument("g_poly: require n >= 0");
  check_params(p);
  SymPoly f;
  for (int k = 0; k <= n; ++k) {
    const Rational sign = k % 2 == 0 ? Rational(1) : Rational(-1);
    f += qbinomial(n, k).subst_q_power(p.m).shifted(p.m * static_cast<int>(binom2(k)), k, 0, sign) *
         gen_factorial_normalized(p, n - k);
  }
  return f;
}

/// h_n = q^{m*binom(n,2)+rn} g_n; monic of degree n in x.
inline SymPoly h_poly(const Params& p, int n) {
  return g_poly(p, n).shifted(p.m * static_cast<int>(binom2(n)) + p.r * n);
}

/// The moment functional: expands f in the monomial basis of x and maps
/// x^n to mu_n (by default Phi_n written in the variable a). Linear over the
/// parameter ring, so coefficients may involve q and a.
inline SymPoly functional_G(const Params& p, const SymPoly& f,
                            MomentVariant variant = MomentVariant::phi_at_a) {
  SymPoly out;
  for (int k = 0; k <= f.degree_x(); ++k) {
    const SymPoly ck = f.coeff_of_x(k);
    if (ck.is_zero()) continue;
    out += ck * moment_value(p, k, variant);
  }
  return out;
}

/// Expands f over the normalized generalized-factorial basis <<x>>_{r,m,k};
/// index k of the result is the coefficient of <<x>>_{r,m,k}. The coefficients
/// of x^n are exactly the first-form Whitney row n.
inline std::vector<SymPoly> to_genfact_basis(const Params& p, SymPoly f) {
  check_params(p);
  const int deg = f.degree_x();
  if (deg < 0) return {};
  std::vector<SymPoly> coeffs(deg + 1);
  for (int n = deg; n >= 0; --n) {
    // leading coefficient of <<x>>_{r,m,n} is q^{-rn-m*binom(n,2)}
    const SymPoly c = f.coeff_of_x(n).shifted(p.r * n + p.m * static_cast<int>(binom2(n)));
    coeffs[n] = c;
    if (!c.is_zero()) f -= c * gen_factorial_normalized(p, n);
  }
  if (!f.is_zero()) throw std::logic_error("to_genfact_basis: nonzero remainder");
  return coeffs;
}

inline SymPoly from_genfact_basis(const Params& p, const std::vector<SymPoly>& coeffs) {
  SymPoly f;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    f += coeffs[k] * gen_factorial_normalized(p, static_cast<int>(k));
  return f;
}

/// Three-term recurrence coefficients for x h_n = g h_{n+1} + f h_n + c h_{n-1},
/// recovered by exact coefficient comparison.
struct RecurrenceCoeffs {
  int n = 0;
  RatExpr g_rec, f_rec, c_rec;
};

/// Solves for (g, f, c) by equating x-coefficients top degree downward, then
/// checks that the residual vanishes identically. Since the h-polynomials are
/// monic and degree-graded, the solve is triangular with unit pivots.
inline RecurrenceCoeffs recover_recurrence(const Params& p, int n) {
  if (n < 1) throw std::invalid_argument("recover_recurrence: require n >= 1");
  const SymPoly hm = h_poly(p, n - 1), h = h_poly(p, n), hp = h_poly(p, n + 1);
  const auto graded = [](const SymPoly& f, int deg) {
    return f.degree_x() == deg && f.coeff_of_x(deg).is_one();
  };
  if (!graded(hm, n - 1) || !graded(h, n) || !graded(hp, n + 1))
    throw SingularSystem("recover_recurrence: h-polynomials are not degree-graded monic");

  const SymPoly lhs = SymPoly::x() * h;
  RecurrenceCoeffs res;
  res.n = n;
  res.g_rec = RatExpr(lhs.coeff_of_x(n + 1), hp.coeff_of_x(n + 1));
  res.f_rec = (RatExpr(lhs.coeff_of_x(n)) - res.g_rec * RatExpr(hp.coeff_of_x(n))) /
              RatExpr(h.coeff_of_x(n));
  res.c_rec = (RatExpr(lhs.coeff_of_x(n - 1)) - res.g_rec * RatExpr(hp.coeff_of_x(n - 1)) -
               res.f_rec * RatExpr(h.coeff_of_x(n - 1))) /
              RatExpr(hm.coeff_of_x(n - 1));
  for (int k = 0; k <= n + 1; ++k) {
    const RatExpr residual = RatExpr(lhs.coeff_of_x(k)) - res.g_rec * RatExpr(hp.coeff_of_x(k)) -
                             res.f_rec * RatExpr(h.coeff_of_x(k)) -
                             res.c_rec * RatExpr(hm.coeff_of_x(k));
    if (!residual.is_zero())
      throw SingularSystem("recover_recurrence: nonzero residual at x^" + std::to_string(k));
  }
  return res;
}

/// The recurrence coefficients exactly as printed in the source formulas,
/// for side-by-side comparison with the recovered values:
///   g(n) = (2 + (q^{mn} - 1)) q^{-mn}
///   f(n) = 2 q^{n+r} a + [r]_q + (q^{mn}-1) q^r (q^n a + q^{n-1} a) + q^r [m]_q [n]_{q^m}
///   c(n) = ((q^{mn}-1) q^r q^{2n-2} a^2 + q^r [m]_q [n]_{q^m} q^{n-1} a) q^{m(n-1)+r}
struct PrintedCoeffs {
  SymPoly g, f, c;
};

inline PrintedCoeffs printed_recurrence_coeffs(const Params& p, int n) {
  if (n < 1) throw std::invalid_argument("printed_recurrence_coeffs: require n >= 1");
  check_params(p);
  const SymPoly qmn_minus_1 = SymPoly::q(p.m * n) - SymPoly(1);
  PrintedCoeffs out;
  out.g = (SymPoly(2) + qmn_minus_1).shifted(-p.m * n);
  out.f = SymPoly::monomial(2, n + p.r, 1, 0) + qint(p.r) +
          qmn_minus_1 * (SymPoly::monomial(1, n + p.r, 1, 0) + SymPoly::monomial(1, n - 1 + p.r, 1, 0)) +
          qint(p.m) * qint(n, p.m).shifted(p.r);
  out.c = (qmn_minus_1.shifted(p.r + 2 * n - 2, 2, 0) +
           (qint(p.m) * qint(n, p.m)).shifted(p.r + n - 1, 1, 0))
              .shifted(p.m * (n - 1) + p.r);
  return out;
}

/// prod_{i=1}^{n} c(i) with the printed c.
inline SymPoly norm_product_printed(const Params& p, int n) {
  SymPoly f(1);
  for (int i = 1; i <= n; ++i) f *= printed_recurrence_coeffs(p, i).c;
  return f;
}

/// prod_{i=1}^{n} c(i) with the recovered c.
inline RatExpr norm_product_recovered(const Params& p, int n) {
  RatExpr f(1);
  for (int i = 1; i <= n; ++i) f *= recover_recurrence(p, i).c_rec;
  return f;
}

/// Monic polynomial in x with RatExpr coefficients indexed by degree.
struct MonicPoly {
  std::vector<RatExpr> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  const RatExpr& at_zero() const { return coeffs.front(); }

  bool matches(const SymPoly& f) const {
    if (f.degree_x() != degree()) return false;
    for (int k = 0; k <= degree(); ++k)
      if (coeffs[static_cast<std::size_t>(k)] != RatExpr(f.coeff_of_x(k))) return false;
    return true;
  }
};

/// Moments mu_0 .. mu_{count-1} of the chosen variant.
inline std::vector<SymPoly> moment_values(const Params& p, int count,
                                          MomentVariant variant = MomentVariant::phi_at_a) {
  std::vector<SymPoly> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(moment_value(p, i, variant));
  return out;
}

/// Degree-n monic orthogonal polynomial of a moment sequence, computed as the
/// bordered Hankel determinant divided by the order-n Hankel determinant.
/// Needs moments mu_0 .. mu_{2n-1}.
inline MonicPoly monic_op(int n, const std::vector<SymPoly>& moments) {
  if (n < 0) throw std::invalid_argument("monic_op: require n >= 0");
  if (n == 0) return MonicPoly{{RatExpr(1)}};
  if (static_cast<int>(moments.size()) < 2 * n)
    throw std::invalid_argument("monic_op: need moments up to index 2n-1");

  Matrix hank(n, std::vector<SymPoly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) hank[i][j] = moments[i + j];
  const SymPoly dn = det_bareiss(hank);
  if (dn.is_zero()) throw DegenerateMoments(n);

  Matrix bordered(n + 1, std::vector<SymPoly>(n + 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= n; ++j) bordered[i][j] = moments[i + j];
  for (int j = 0; j <= n; ++j) bordered[n][j] = SymPoly::x(j);
  const SymPoly num = det_bareiss(bordered);

  MonicPoly out;
  out.coeffs.reserve(n + 1);
  for (int k = 0; k <= n; ++k) out.coeffs.emplace_back(num.coeff_of_x(k), dn);
  if (out.coeffs.back() != RatExpr(1))
    throw SingularSystem("monic_op: leading coefficient is not 1");
  return out;
}

inline MonicPoly monic_op(const Params& p, int n,
                          MomentVariant variant = MomentVariant::phi_at_a) {
  return monic_op(n, moment_values(p, n == 0 ? 1 : 2 * n, variant));
}

}  // namespace qhankel
