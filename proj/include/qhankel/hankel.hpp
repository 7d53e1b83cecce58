#pragma once

#include "qhankel/sequences.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qhankel {

struct OrderTooLarge : std::runtime_error {
  explicit OrderTooLarge(int order, int bound)
      : std::runtime_error("det_laplace: order " + std::to_string(order) +
                           " exceeds the cofactor-expansion bound " + std::to_string(bound)) {}
};

/// The two determinant engines disagreed. This is a fatal internal error: it
/// can only mean a bug in the ring or in one of the engines.
struct AlgorithmDisagreement : std::logic_error {
  explicit AlgorithmDisagreement(const std::string& what) : std::logic_error(what) {}
};

enum class SeqKind {
  phi_at_a,
  moment_weighted,
  dowling_first,
  dowling_second,
  dowling_third,
  bell_classical,
};

/// A concrete sequence to take Hankel determinants of: a Whitney/Dowling family
/// plus optional exact substitutions. bell_classical is the first-form Dowling
/// sequence evaluated at q = 1 (integer Bell numbers when (m,r) = (1,0)).
struct SeqSpec {
  Params params{1, 0};
  SeqKind kind = SeqKind::phi_at_a;
  std::optional<Rational> q_sub;
  std::optional<Rational> a_sub;
};

/// Entry cache for one SeqSpec; entries are computed once and reused across
/// matrix orders during sweeps. Single-writer, then shareable read-only.
class SeqCache {
 public:
  explicit SeqCache(SeqSpec spec) : spec_(std::move(spec)) { check_params(spec_.params); }

  const SeqSpec& spec() const { return spec_; }

  const SymPoly& at(int n) {
    if (n < 0) throw std::invalid_argument("SeqCache: require n >= 0");
    while (static_cast<int>(vals_.size()) <= n) {
      SymPoly v = raw(static_cast<int>(vals_.size()));
      if (spec_.q_sub) v = v.subst_q(*spec_.q_sub);
      if (spec_.a_sub) v = v.subst_a(*spec_.a_sub);
      vals_.push_back(std::move(v));
    }
    return vals_[n];
  }

 private:
  SymPoly raw(int n) const {
    switch (spec_.kind) {
      case SeqKind::phi_at_a: return moment_value(spec_.params, n, MomentVariant::phi_at_a);
      case SeqKind::moment_weighted:
        return moment_value(spec_.params, n, MomentVariant::moment_weighted);
      case SeqKind::dowling_first: return dowling(spec_.params, n, WhitneyForm::first);
      case SeqKind::dowling_second: return dowling(spec_.params, n, WhitneyForm::second);
      case SeqKind::dowling_third: return dowling(spec_.params, n, WhitneyForm::third);
      case SeqKind::bell_classical:
        return dowling(spec_.params, n, WhitneyForm::first).subst_q(1);
    }
    throw std::logic_error("SeqCache: bad kind");
  }

  SeqSpec spec_;
  std::vector<SymPoly> vals_;
};

/// Square matrix with entry(i,j) = s_{i+j+offset}; symmetric and constant along
/// anti-diagonals by construction.
struct HankelMatrix {
  int order = 1;
  int offset = 0;
  std::vector<SymPoly> entries;  // row-major, order*order

  const SymPoly& at(int i, int j) const { return entries[static_cast<std::size_t>(i) * order + j]; }

  std::vector<std::vector<SymPoly>> rows() const {
    std::vector<std::vector<SymPoly>> out(order);
    for (int i = 0; i < order; ++i)
      out[i].assign(entries.begin() + static_cast<std::ptrdiff_t>(i) * order,
                    entries.begin() + static_cast<std::ptrdiff_t>(i + 1) * order);
    return out;
  }
};

inline HankelMatrix hankel_matrix(SeqCache& cache, int order, int offset) {
  if (order < 1) throw std::invalid_argument("hankel_matrix: require order >= 1");
  if (offset != 0 && offset != 1) throw std::invalid_argument("hankel_matrix: offset must be 0 or 1");
  HankelMatrix mat{order, offset, {}};
  mat.entries.reserve(static_cast<std::size_t>(order) * order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) mat.entries.push_back(cache.at(i + j + offset));
  return mat;
}

inline HankelMatrix hankel_matrix(const SeqSpec& spec, int order, int offset) {
  SeqCache cache(spec);
  return hankel_matrix(cache, order, offset);
}

using Matrix = std::vector<std::vector<SymPoly>>;

inline constexpr int kLaplaceMaxOrder = 8;

/// Division-free determinant oracle: cofactor expansion memoized on column
/// subsets (2^d subproblems). Bounded because the cost is exponential.
inline SymPoly det_laplace(const Matrix& m, int max_order = kLaplaceMaxOrder) {
  const int d = static_cast<int>(m.size());
  if (d == 0) return SymPoly(1);
  if (d > max_order) throw OrderTooLarge(d, max_order);
  std::vector<std::optional<SymPoly>> memo(std::size_t(1) << d);
  const std::function<const SymPoly&(int, unsigned)> go = [&](int row,
                                                              unsigned mask) -> const SymPoly& {
    auto& slot = memo[mask];
    if (!slot) {
      if (row == d) {
        slot = SymPoly(1);
      } else {
        SymPoly acc;
        int pos = 0;
        for (int j = 0; j < d; ++j) {
          if (!(mask & (1u << j))) continue;
          if (!m[row][j].is_zero()) {
            const SymPoly prod = m[row][j] * go(row + 1, mask ^ (1u << j));
            if (pos % 2 == 0)
              acc += prod;
            else
              acc -= prod;
          }
          ++pos;
        }
        slot = std::move(acc);
      }
    }
    return *slot;
  };
  return go(0, (1u << d) - 1);
}

/// Fraction-free Bareiss elimination. Every interior division is exact; a
/// NotDivisible escape indicates an internal bug, never a property of the input.
inline SymPoly det_bareiss(const Matrix& input) {
  const int d = static_cast<int>(input.size());
  if (d == 0) return SymPoly(1);
  Matrix m = input;
  SymPoly prev(1);
  int sign = 1;
  for (int k = 0; k + 1 < d; ++k) {
    if (m[k][k].is_zero()) {
      int pivot = -1;
      for (int i = k + 1; i < d; ++i) {
        if (!m[i][k].is_zero()) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) return {};  // the trailing minors vanish with the column
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < d; ++i)
      for (int j = k + 1; j < d; ++j)
        m[i][j] = exact_divide(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  return sign < 0 ? -m[d - 1][d - 1] : m[d - 1][d - 1];
}

inline SymPoly det_laplace(const HankelMatrix& m, int max_order = kLaplaceMaxOrder) {
  return det_laplace(m.rows(), max_order);
}
inline SymPoly det_bareiss(const HankelMatrix& m) { return det_bareiss(m.rows()); }

enum class DetAlgo { laplace, bareiss, both };

/// Hankel determinant of the sequence at the given order and offset. With
/// DetAlgo::both the two engines must agree exactly or the call aborts.
inline SymPoly hankel_transform(SeqCache& cache, int order, int offset,
                                DetAlgo algo = DetAlgo::both) {
  const HankelMatrix mat = hankel_matrix(cache, order, offset);
  const Matrix rows = mat.rows();
  switch (algo) {
    case DetAlgo::laplace: return det_laplace(rows);
    case DetAlgo::bareiss: return det_bareiss(rows);
    case DetAlgo::both: {
      SymPoly l = det_laplace(rows);
      SymPoly b = det_bareiss(rows);
      if (l != b)
        throw AlgorithmDisagreement("hankel_transform: determinant engines disagree at order " +
                                    std::to_string(order) + ", offset " + std::to_string(offset) +
                                    ": laplace = " + l.str() + ", bareiss = " + b.str());
      return l;
    }
  }
  throw std::logic_error("hankel_transform: bad algo");
}

inline SymPoly hankel_transform(const SeqSpec& spec, int order, int offset,
                                DetAlgo algo = DetAlgo::both) {
  SeqCache cache(spec);
  return hankel_transform(cache, order, offset, algo);
}

}  // namespace qhankel
