#include "qhankel/closedform.hpp"
#include "qhankel/report.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qhankel;

namespace {
const Params kP10{1, 0};
const Params kP12{1, 2};
const Params kP21{2, 1};
const Params kP32{3, 2};

SymPoly hand_order2(const Params& p) {  // q^{2r} [m]_q a (1 - (1-q)a)
  return (qint(p.m) * (SymPoly(1) - SymPoly::a() + SymPoly::a().shifted(1)))
      .shifted(2 * p.r, 1, 0);
}
}  // namespace

TEST_CASE("Bell Hankel product") {
  CHECK(bell_hankel_product(0) == 1);
  CHECK(bell_hankel_product(1) == 1);
  CHECK(bell_hankel_product(2) == 2);
  CHECK(bell_hankel_product(4) == 288);
  CHECK(bell_hankel_product(5) == 34560);
}

TEST_CASE("closed form for the Phi Hankel determinant") {
  for (auto p : {kP10, kP21}) {
    CHECK(phi_hankel_closed(p, 0).is_one());
    CHECK(phi_hankel_closed(p, 1).is_one());
    CHECK(phi_hankel_closed(p, 2) == hand_order2(p));
  }
  CHECK(phi_hankel_closed(kP10, 2).subst_q(1).subst_a(1) == SymPoly(1));
  // the corrected variant only differs for m > 1, starting at n = 3
  for (int n = 0; n <= 5; ++n)
    CHECK(phi_hankel_closed(kP10, n, true) == phi_hankel_closed(kP10, n));
  for (int n = 0; n <= 2; ++n)
    CHECK(phi_hankel_closed(kP21, n, true) == phi_hankel_closed(kP21, n));
  CHECK(phi_hankel_closed(kP21, 3, true) != phi_hankel_closed(kP21, 3));
}

TEST_CASE("the m = 1 specialization") {
  CHECK(cigler_closed(0, 1).is_one());
  CHECK(cigler_closed(0, 2) ==
        SymPoly::a() - SymPoly::a(2) + SymPoly::q() * SymPoly::a(2));
  for (int r = 0; r <= 2; ++r)
    for (int n = 0; n <= 5; ++n) CHECK(cigler_closed(r, n) == phi_hankel_closed({1, r}, n));
}

TEST_CASE("the unsimplified coefficient product agrees with the closed form") {
  for (auto p : {kP10, kP12, kP21, kP32}) {
    CHECK(c_product_closed(p, 0).is_one());
    CHECK(c_product_closed(p, 1).is_one());
    CHECK(c_product_closed(p, 2) == printed_recurrence_coeffs(p, 1).c);
    for (int n = 0; n <= 5; ++n) CHECK(c_product_closed(p, n) == phi_hankel_closed(p, n));
  }
}

TEST_CASE("first-form Dowling closed form") {
  CHECK(dowling_first_hankel_closed(kP21, 0).is_one());
  CHECK(dowling_first_hankel_closed(kP21, 2) == qint(kP21.m).shifted(2 * kP21.r + 1));
  // Bell limit: d = 3 determinant of the classical Bell numbers
  CHECK(dowling_first_hankel_closed(kP10, 3).subst_q(1) == SymPoly(2));
  // the literal printed statement keeps a free a and drops a^{binom(n,2)}
  CHECK(dowling_first_hankel_closed(kP21, 2, true) ==
        phi_hankel_closed(kP21, 2).shifted(0, -1, 0));
  CHECK(dowling_first_hankel_closed(kP21, 3, false, true) ==
        phi_hankel_closed(kP21, 3, true).subst_a(1));
}

TEST_CASE("second-form Dowling closed form") {
  for (auto p : {kP10, kP21}) {
    CHECK(dowling_second_hankel_closed(p, 0).is_one());
    CHECK(dowling_second_hankel_closed(p, 1).is_one());
    CHECK(dowling_second_hankel_closed(p, 2) == qint(p.m).shifted(p.r));
  }
  CHECK(dowling_second_hankel_closed(kP10, 3).subst_q(1) == SymPoly(2));
  CHECK(dowling_second_hankel_closed(kP21, 3, true) ==
        dowling_second_hankel_closed(kP21, 3).shifted(kP21.m - 1));
}

TEST_CASE("third-form Dowling closed form and its sign variant") {
  CHECK(dowling_third_hankel_closed(kP21, 0).is_one());
  CHECK(dowling_third_hankel_closed(kP21, 1) == qint(kP21.m).shifted(-2 * kP21.r));
  CHECK(dowling_third_hankel_closed(kP21, 1, true) == qint(kP21.m).shifted(2 * kP21.r));
  // includes the q^{m*binom(n+1,3)} prefactor: q * [2]_q at (1,0), n = 2,
  // confirmed by the determinant oracle
  CHECK(dowling_third_hankel_closed(kP10, 2) == qint(2).shifted(1));
}

TEST_CASE("shifted closed form variants") {
  for (auto v : {ShiftedVariant::printed, ShiftedVariant::gram_schmidt})
    CHECK(phi_shifted_hankel_closed(kP21, 0, v).is_one());
  CHECK(phi_shifted_hankel_closed(kP21, 1, ShiftedVariant::gram_schmidt) ==
        qint(kP21.r) + SymPoly::monomial(1, kP21.r, 1, 0));
  // printed statement at n = 1: -(1 + a [r]_q / q^r)
  CHECK(phi_shifted_hankel_closed(kP21, 1, ShiftedVariant::printed) ==
        SymPoly(-1) - (qint(kP21.r) * SymPoly::a()).shifted(-kP21.r));
}

TEST_CASE("empty-product sanity of the evaluators") {
  for (auto p : {kP10, kP21}) {
    for (int n = 0; n <= 1; ++n) {
      CHECK(phi_hankel_closed(p, n).is_one());
      CHECK(cigler_closed(p.r, n).is_one());
      CHECK(c_product_closed(p, n).is_one());
      CHECK(dowling_first_hankel_closed(p, n).is_one());
      CHECK(dowling_second_hankel_closed(p, n).is_one());
      CHECK(SymPoly(Rational(bell_hankel_product(n))).is_one());
    }
    CHECK(dowling_third_hankel_closed(p, 0).is_one());
    CHECK(phi_shifted_hankel_closed(p, 0, ShiftedVariant::printed).is_one());
    CHECK(phi_shifted_hankel_closed(p, 0, ShiftedVariant::gram_schmidt).is_one());
  }
}

TEST_CASE("verification sweep: Bell numbers") {
  const auto rep = verify(Target::bell, kP10, 4);
  CHECK(!rep.first_mismatch);
  REQUIRE(rep.rows.size() == 5);
  for (const auto& row : rep.rows) {
    CHECK(row.order == row.n + 1);
    CHECK(row.match);
    CHECK(row.lhs == SymPoly(Rational(bell_hankel_product(row.n))));
  }
}

TEST_CASE("verification sweep: Phi closed form") {
  // matches through n = 2 at every parameter set, and fully for m = 1
  for (auto p : {kP10, kP12}) CHECK(!verify(Target::phi, p, 4).first_mismatch);
  for (auto p : {kP21, kP32}) {
    const auto rep = verify(Target::phi, p, 3);
    CHECK(rep.rows[2].match);
    CHECK(rep.rows[2].lhs == hand_order2(p));
    REQUIRE(rep.first_mismatch.has_value());
    CHECK(*rep.first_mismatch == 3);  // the printed exponents are m = 1 shadows
  }
  // the repaired exponents match everywhere tested
  VerifyOptions corrected;
  corrected.base_qm_corrected = true;
  for (auto p : {kP10, kP12, kP21, kP32})
    CHECK(!verify(Target::phi, p, 4, corrected).first_mismatch);
}

TEST_CASE("verification sweep: weighted moments mismatch at n = 2") {
  VerifyOptions opt;
  opt.moments = MomentVariant::moment_weighted;
  const auto rep = verify(Target::phi, kP21, 2, opt);
  CHECK(rep.seq == SeqKind::moment_weighted);
  REQUIRE(rep.first_mismatch.has_value());
  CHECK(*rep.first_mismatch == 2);
  const SymPoly expected_lhs =
      qint(kP21.m).shifted(3 * kP21.r, 1, 0) +
      (SymPoly::q(2 * kP21.m) - SymPoly(1)).shifted(4 * kP21.r, 2, 0);
  CHECK(rep.rows[2].diff == expected_lhs - phi_hankel_closed(kP21, 2));
}

TEST_CASE("verification sweep: remaining targets") {
  CHECK(!verify(Target::c_product, kP10, 4).first_mismatch);
  CHECK(!verify(Target::cigler, kP12, 4).first_mismatch);
  CHECK_THROWS_AS(verify(Target::cigler, kP21, 2), std::invalid_argument);

  CHECK(!verify(Target::dowling_first, kP12, 3).first_mismatch);
  const auto d1 = verify(Target::dowling_first, kP21, 3);
  CHECK(d1.first_mismatch == 3);

  CHECK(!verify(Target::dowling_second, kP12, 3).first_mismatch);
  const auto d2 = verify(Target::dowling_second, kP21, 3);
  CHECK(d2.first_mismatch == 3);
  VerifyOptions corrected;
  corrected.base_qm_corrected = true;
  CHECK(!verify(Target::dowling_second, kP21, 4, corrected).first_mismatch);
  CHECK(!verify(Target::dowling_second, kP32, 4, corrected).first_mismatch);
}

TEST_CASE("verification sweep: third form records the sign divergence") {
  const auto rep = verify(Target::dowling_third, kP21, 3);
  REQUIRE(rep.first_mismatch.has_value());
  CHECK(*rep.first_mismatch == 1);
  CHECK(rep.rows[1].lhs == qint(kP21.m).shifted(2 * kP21.r));
  CHECK(rep.rows[1].rhs == qint(kP21.m).shifted(-2 * kP21.r));

  VerifyOptions flip;
  flip.flip_r_sign = true;
  const auto flipped = verify(Target::dowling_third, kP21, 3, flip);
  CHECK(!flipped.first_mismatch);
  // with r = 0 there is no sign to flip and the literal form holds
  CHECK(!verify(Target::dowling_third, kP10, 3).first_mismatch);
}

TEST_CASE("verification sweep: shifted determinants") {
  VerifyOptions gs;
  gs.shifted = ShiftedVariant::gram_schmidt;
  for (auto p : {kP10, kP21}) CHECK(!verify(Target::phi_shifted, p, 3, gs).first_mismatch);

  const auto printed = verify(Target::phi_shifted, kP21, 3);
  REQUIRE(printed.first_mismatch.has_value());
  CHECK(*printed.first_mismatch == 1);
  CHECK(printed.rows[1].diff.str() == "2 + q^-1*a + q*a");
}

TEST_CASE("report emission is deterministic and canonical") {
  const auto rep = verify(Target::bell, kP10, 1);
  const std::string json = emit_report(rep, ReportFormat::json);
  CHECK(json ==
        "{\n"
        "  \"tool\": \"qhankel\",\n"
        "  \"schema\": 1,\n"
        "  \"params\": {\n"
        "    \"m\": 1,\n"
        "    \"r\": 0,\n"
        "    \"target\": \"bell\",\n"
        "    \"seq\": \"bell_classical\"\n"
        "  },\n"
        "  \"rows\": [\n"
        "    {\n"
        "      \"n\": 0,\n"
        "      \"order\": 1,\n"
        "      \"lhs\": \"1\",\n"
        "      \"rhs\": \"1\",\n"
        "      \"diff\": \"0\",\n"
        "      \"match\": true\n"
        "    },\n"
        "    {\n"
        "      \"n\": 1,\n"
        "      \"order\": 2,\n"
        "      \"lhs\": \"1\",\n"
        "      \"rhs\": \"1\",\n"
        "      \"diff\": \"0\",\n"
        "      \"match\": true\n"
        "    }\n"
        "  ],\n"
        "  \"first_mismatch\": null\n"
        "}\n");
  CHECK(emit_report(rep, ReportFormat::csv) ==
        "n,order,lhs,rhs,diff,match\n"
        "0,1,1,1,0,true\n"
        "1,2,1,1,0,true\n");
  CHECK(emit_report(rep, ReportFormat::text) ==
        "target=bell m=1 r=0 seq=bell_classical\n"
        "n=0 order=1 match=true lhs=1 rhs=1 diff=0\n"
        "n=1 order=2 match=true lhs=1 rhs=1 diff=0\n"
        "first_mismatch=none\n");
}

TEST_CASE("emitted polynomial strings round-trip through the parser") {
  VerifyOptions opt;
  for (auto target : {Target::phi, Target::dowling_third, Target::phi_shifted}) {
    const auto rep = verify(target, kP21, 2, opt);
    for (const auto& row : rep.rows) {
      CHECK(SymPoly::parse(row.lhs.str()) == row.lhs);
      CHECK(SymPoly::parse(row.rhs.str()) == row.rhs);
      CHECK(SymPoly::parse(row.diff.str()) == row.diff);
    }
  }
}

TEST_CASE("first-mismatch bookkeeping") {
  const auto rep = verify(Target::dowling_third, kP21, 0);
  CHECK(!rep.first_mismatch);
  REQUIRE(rep.rows.size() == 1);
  CHECK(rep.rows[0].order == 1);
  CHECK(rep.rows[0].lhs.is_one());
  CHECK_THROWS_AS(verify(Target::bell, kP10, -1), std::invalid_argument);
}
