#pragma once

#include "qhankel/qcore.hpp"

#include <stdexcept>
#include <vector>

namespace qhankel {

/// Structural parameters (m, r) fixing one Whitney/Dowling family.
struct Params {
  int m = 1;
  int r = 0;

  friend bool operator==(const Params&, const Params&) = default;
};

inline void check_params(const Params& p) {
  if (p.m < 1 || p.r < 0) throw std::invalid_argument("Params: require m >= 1 and r >= 0");
}

enum class WhitneyForm { first, second, third };

inline long binom2(long k) { return k * (k - 1) / 2; }
inline long binom3(long k) { return k * (k - 1) * (k - 2) / 6; }

/// Memoized triangle of first-form q-analogue r-Whitney numbers of the second
/// kind, built from the triangular recurrence
///   W[n,k] = q^{m(k-1)+r} W[n-1,k-1] + [mk+r]_q W[n-1,k],   W[0,0] = 1,
/// with W[n,k] = 0 outside 0 <= k <= n. Second and third forms differ from the
/// first by explicit q-power factors (Laurent in q).
class WhitneyTable {
 public:
  explicit WhitneyTable(Params p) : params_(p) {
    check_params(p);
    rows_.push_back({SymPoly(1)});
  }

  const Params& params() const { return params_; }

  SymPoly first(int n, int k) {
    if (n < 0) throw std::invalid_argument("WhitneyTable: require n >= 0");
    if (k < 0 || k > n) return {};
    ensure(n);
    return rows_[n][k];
  }

  SymPoly second(int n, int k) {
    return first(n, k).shifted(-k * params_.r - params_.m * static_cast<int>(binom2(k)));
  }

  SymPoly third(int n, int k) {
    return first(n, k).shifted(-params_.m * static_cast<int>(binom2(k)));
  }

  SymPoly entry(int n, int k, WhitneyForm form) {
    switch (form) {
      case WhitneyForm::first: return first(n, k);
      case WhitneyForm::second: return second(n, k);
      case WhitneyForm::third: return third(n, k);
    }
    throw std::logic_error("WhitneyTable: bad form");
  }

 private:
  void ensure(int n) {
    for (int nn = static_cast<int>(rows_.size()); nn <= n; ++nn) {
      const auto& prev = rows_[nn - 1];
      std::vector<SymPoly> row(nn + 1);
      for (int k = 0; k <= nn; ++k) {
        if (k >= 1) row[k] += prev[k - 1].shifted(params_.m * (k - 1) + params_.r);
        if (k <= nn - 1) row[k] += qint(params_.m * k + params_.r) * prev[k];
      }
      rows_.push_back(std::move(row));
    }
  }

  Params params_;
  std::vector<std::vector<SymPoly>> rows_;
};

inline SymPoly whitney_first(const Params& p, int n, int k) {
  return WhitneyTable(p).first(n, k);
}
inline SymPoly whitney_second(const Params& p, int n, int k) {
  return WhitneyTable(p).second(n, k);
}
inline SymPoly whitney_third(const Params& p, int n, int k) {
  return WhitneyTable(p).third(n, k);
}

/// (q,r)-Dowling number: row sum of the chosen Whitney form.
inline SymPoly dowling(const Params& p, int n, WhitneyForm form) {
  if (n < 0) throw std::invalid_argument("dowling: require n >= 0");
  WhitneyTable t(p);
  SymPoly sum;
  for (int k = 0; k <= n; ++k) sum += t.entry(n, k, form);
  return sum;
}

/// Generalized q-exponential polynomial Phi_n = sum_k W[n,k] x^k; equals the
/// first-form Dowling number at x = 1.
inline SymPoly phi_poly(const Params& p, int n) {
  if (n < 0) throw std::invalid_argument("phi_poly: require n >= 0");
  WhitneyTable t(p);
  SymPoly f;
  for (int k = 0; k <= n; ++k) f += t.first(n, k).shifted(0, 0, k);
  return f;
}

/// q-weighted moment variant sum_k W[n,k] q^{rk+m*binom(k,2)} a^k. Kept beside
/// phi for adjudication of the moment sequence; they agree only for n <= 1.
inline SymPoly moment_poly(const Params& p, int n) {
  if (n < 0) throw std::invalid_argument("moment_poly: require n >= 0");
  WhitneyTable t(p);
  SymPoly f;
  for (int k = 0; k <= n; ++k)
    f += t.first(n, k).shifted(p.r * k + p.m * static_cast<int>(binom2(k)), k, 0);
  return f;
}

/// Generalized falling factorial <x>_{r,m,k} = prod_{j=0}^{k-1} (x - [r+jm]_q).
inline SymPoly gen_factorial(const Params& p, int k) {
  if (k < 0) throw std::invalid_argument("gen_factorial: require k >= 0");
  check_params(p);
  SymPoly f(1);
  for (int j = 0; j < k; ++j) f *= SymPoly::x() - qint(p.r + j * p.m);
  return f;
}

/// Normalized variant <<x>>_{r,m,k} = q^{-rk-m*binom(k,2)} <x>_{r,m,k}.
inline SymPoly gen_factorial_normalized(const Params& p, int k) {
  return gen_factorial(p, k).shifted(-p.r * k - p.m * static_cast<int>(binom2(k)));
}

/// One step of the Phi recursion: applies
///   q^r x f + (q^m - 1) q^r x^2 D_{q^m} f + [r]_q f + q^r [m]_q x D_{q^m} f.
inline SymPoly phi_operator_apply(const Params& p, const SymPoly& f) {
  check_params(p);
  const SymPoly d = qderiv(f, p.m);
  SymPoly out = f.shifted(p.r, 0, 1);
  out += ((SymPoly::q(p.m) - SymPoly(1)) * d).shifted(p.r, 0, 2);
  out += qint(p.r) * f;
  out += (qint(p.m) * d).shifted(p.r, 0, 1);
  return out;
}

/// Classical Stirling numbers of the second kind, S(n,k) = S(n-1,k-1) + k S(n-1,k).
/// Independent integer oracle for the q -> 1, m = 1, r = 0 limit.
inline mpz_class stirling2_oracle(int n, int k) {
  if (n < 0) throw std::invalid_argument("stirling2_oracle: require n >= 0");
  if (k < 0 || k > n) return 0;
  std::vector<mpz_class> row{1};
  for (int nn = 1; nn <= n; ++nn) {
    std::vector<mpz_class> next(nn + 1);
    for (int j = 0; j <= nn; ++j) {
      if (j >= 1) next[j] += row[j - 1];
      if (j <= nn - 1) next[j] += j * row[j];
    }
    row = std::move(next);
  }
  return row[k];
}

/// Bell numbers as Stirling row sums.
inline mpz_class bell_oracle(int n) {
  mpz_class sum = 0;
  for (int k = 0; k <= n; ++k) sum += stirling2_oracle(n, k);
  return sum;
}

/// Which polynomial sequence serves as the moment sequence of the functional.
enum class MomentVariant { phi_at_a, moment_weighted };

/// Moment mu_n in the variable a.
inline SymPoly moment_value(const Params& p, int n, MomentVariant v = MomentVariant::phi_at_a) {
  return v == MomentVariant::phi_at_a ? phi_poly(p, n).subst_x(SymPoly::a()) : moment_poly(p, n);
}

}  // namespace qhankel
