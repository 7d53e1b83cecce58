#pragma once

#include "qhankel/sympoly.hpp"

#include <stdexcept>
#include <vector>

namespace qhankel {

/// q-integer [n]_{q^t} = sum_{i=0}^{n-1} q^{t*i}; equals n at q = 1.
inline SymPoly qint(int n, int base = 1) {
  if (n < 0) throw std::invalid_argument("qint: require n >= 0");
  if (base < 1) throw std::invalid_argument("qint: require base >= 1");
  SymPoly f;
  for (int i = 0; i < n; ++i) f += SymPoly::q(base * i);
  return f;
}

/// q-factorial [n]_{q^t}! = prod_{i=1}^{n} [i]_{q^t}; empty product is 1.
inline SymPoly qfactorial(int n, int base = 1) {
  if (n < 0) throw std::invalid_argument("qfactorial: require n >= 0");
  SymPoly f(1);
  for (int i = 1; i <= n; ++i) f *= qint(i, base);
  return f;
}

/// Gaussian binomial coefficient, computed row by row with the q-Pascal
/// recurrence [n,k] = [n-1,k] + q^{n-k} [n-1,k-1]. Zero outside 0 <= k <= n.
inline SymPoly qbinomial(int n, int k) {
  if (k < 0 || k > n) return {};
  std::vector<SymPoly> row{SymPoly(1)};
  for (int nn = 1; nn <= n; ++nn) {
    std::vector<SymPoly> next(nn + 1);
    for (int j = 0; j <= nn; ++j) {
      if (j <= nn - 1) next[j] += row[j];
      if (j >= 1) next[j] += row[j - 1].shifted(nn - j);
    }
    row = std::move(next);
  }
  return row[k];
}

/// q-Pochhammer (z; q)_i = prod_{j=0}^{i-1} (1 - q^j * z); empty product is 1.
inline SymPoly qpochhammer(const SymPoly& z, int i) {
  if (i < 0) throw std::invalid_argument("qpochhammer: require i >= 0");
  SymPoly f(1);
  for (int j = 0; j < i; ++j) f *= SymPoly(1) - z.shifted(j);
  return f;
}

/// Jackson q-derivative in x at base q^t, by the monomial rule
/// x^k -> [k]_{q^t} x^{k-1}. Agrees with (f(x) - f(q^t x)) / ((1 - q^t) x).
inline SymPoly qderiv(const SymPoly& f, int base = 1) {
  if (base < 1) throw std::invalid_argument("qderiv: require base >= 1");
  SymPoly out;
  for (const auto& [m, c] : f.terms()) {
    if (m.ex == 0) continue;
    out += qint(m.ex, base).shifted(m.eq, m.ea, m.ex - 1, c);
  }
  return out;
}

}  // namespace qhankel
