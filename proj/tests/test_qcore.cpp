#include "qhankel/qcore.hpp"

#include "test_util.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qhankel;
using qhtest::PolyGen;

namespace {
// classical binomial for the q -> 1 limit
long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long v = 1;
  for (int i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
  return v;
}
}  // namespace

TEST_CASE("q-integers") {
  CHECK(qint(0).is_zero());
  CHECK(qint(1).is_one());
  CHECK(qint(3).str() == "1 + q + q^2");
  CHECK(qint(2, 3) == SymPoly(1) + SymPoly::q(3));
  for (int n = 0; n <= 8; ++n) {
    CHECK(qint(n).subst_q(1) == SymPoly(n));
    CHECK(qint(n, 4) == qint(n).subst_q_power(4));
  }
  CHECK_THROWS_AS(qint(-1), std::invalid_argument);
  CHECK_THROWS_AS(qint(2, 0), std::invalid_argument);
}

TEST_CASE("q-factorials") {
  CHECK(qfactorial(0).is_one());
  CHECK(qfactorial(3) == qint(1) * qint(2) * qint(3));
  CHECK(qfactorial(4).subst_q(1) == SymPoly(24));
  CHECK(qfactorial(3, 2) == qint(1, 2) * qint(2, 2) * qint(3, 2));
}

TEST_CASE("Gaussian binomials") {
  CHECK(qbinomial(2, 1).str() == "1 + q");
  CHECK(qbinomial(4, 2).str() == "1 + q + 2*q^2 + q^3 + q^4");
  CHECK(qbinomial(4, 2) == (SymPoly(1) + SymPoly::q(2)) * qint(3));
  CHECK(qbinomial(3, -1).is_zero());
  CHECK(qbinomial(3, 4).is_zero());
  for (int n = 0; n <= 8; ++n) CHECK(qbinomial(n, 0).is_one());
  for (int n = 0; n <= 10; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK(qbinomial(n, k) == qbinomial(n, n - k));
      CHECK(qbinomial(n, k).subst_q(1) == SymPoly(Rational(binom(n, k))));
    }
}

TEST_CASE("q-Pascal recurrence variant") {
  // [n+1, k] = [n, k] + q^{n+1-k} [n, k-1]
  for (int n = 0; n <= 10; ++n)
    for (int k = 0; k <= n + 1; ++k)
      CHECK(qbinomial(n + 1, k) ==
            qbinomial(n, k) + qbinomial(n, k - 1).shifted(n + 1 - k));
}

TEST_CASE("q-Pochhammer products") {
  CHECK(qpochhammer(SymPoly::a(), 0).is_one());
  CHECK(qpochhammer(SymPoly::a(), 2) ==
        (SymPoly(1) - SymPoly::a()) * (SymPoly(1) - SymPoly::q() * SymPoly::a()));
  CHECK(qpochhammer(SymPoly(1), 1).is_zero());
  CHECK(qpochhammer(SymPoly(1), 3).is_zero());
}

TEST_CASE("q-derivative monomial rule") {
  CHECK(qderiv(SymPoly(5)).is_zero());
  CHECK(qderiv(SymPoly::x(2)) == qint(2) * SymPoly::x());
  CHECK(qderiv(SymPoly::x(3), 2) == qint(3, 2) * SymPoly::x(2));
  CHECK(qderiv(SymPoly::a() * SymPoly::x()) == SymPoly::a());
}

TEST_CASE("q-derivative agrees with the quotient definition") {
  PolyGen gen(47);
  for (int i = 0; i < 100; ++i) {
    const SymPoly f = gen.poly(4, 3, 2, 3);
    const int t = gen.integer(1, 3);
    const SymPoly num = f - f.subst_x(SymPoly::q(t) * SymPoly::x());
    const SymPoly den = (SymPoly(1) - SymPoly::q(t)) * SymPoly::x();
    CHECK(exact_divide(num, den) == qderiv(f, t));
  }
}
