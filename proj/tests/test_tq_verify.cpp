#include <doctest.h>

#include <set>
#include <stdexcept>

#include "cyloops/tq_verify.hpp"

using namespace cyloops;

TEST_CASE("T from Q and P at N = 1") {
  const IdentityCheck c = verify_t_form(build_fsz(1));
  CHECK(c.ok);
  CHECK(c.identity == "t_form");
  CHECK(c.N == 1);
}

TEST_CASE("identities hold N = 1..25") {
  for (int N = 1; N <= 25; ++N) {
    CAPTURE(N);
    const FszSolution s = build_fsz(N);
    CHECK(verify_t_form(s).ok);
    CHECK(verify_wronskian(s).ok);
    const TqTpCheck tqtp = verify_tq_tp(s);
    CHECK(tqtp.tq.ok);
    CHECK(tqtp.tp.ok);
  }
}

TEST_CASE("broken P is caught with a coefficient index") {
  FszSolution s = build_fsz(3);
  s.P = s.P + CycPolynomial::monomial(Cyclotomic(Rational(1, 1000)), 2);
  const IdentityCheck w = verify_wronskian(s);
  CHECK_FALSE(w.ok);
  REQUIRE(w.mismatch_index.has_value());
  const TqTpCheck tqtp = verify_tq_tp(s);
  CHECK(tqtp.tq.ok);
  CHECK_FALSE(tqtp.tp.ok);
  CHECK_FALSE(tqtp.ok());
  CHECK_FALSE(verify_t_form(s).ok);
}

TEST_CASE("broken T is caught by the T-Q check") {
  FszSolution s = build_fsz(2);
  s.T = CycPolynomial::one_plus_x_pow(3);
  const TqTpCheck tqtp = verify_tq_tp(s);
  CHECK_FALSE(tqtp.tq.ok);
  CHECK(tqtp.tq.mismatch_index.has_value());
}

TEST_CASE("suite report shape") {
  const VerifyReport all1 = verify_suite(1, Suite::all);
  CHECK(all1.all_passed());
  CHECK(all1.rows.size() == suite_identities(Suite::all).size());
  std::set<std::string> names;
  for (const auto& r : all1.rows) names.insert(r.identity);
  CHECK(names.size() == all1.rows.size());

  const VerifyReport all4 = verify_suite(4, Suite::all);
  CHECK(all4.all_passed());
  CHECK(all4.rows.size() == 4 * suite_identities(Suite::all).size());
  CHECK(all4.first_failure() == nullptr);

  CHECK(verify_suite(8, Suite::kummer).rows.size() == 8);
  CHECK(verify_suite(3, Suite::tq).rows.size() == 12);
  CHECK_THROWS_AS(verify_suite(0, Suite::tq), std::invalid_argument);
}

TEST_CASE("suite report is deterministic") {
  const VerifyReport a = verify_suite(3, Suite::all);
  const VerifyReport b = verify_suite(3, Suite::all);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t k = 0; k < a.rows.size(); ++k) {
    CHECK(a.rows[k].identity == b.rows[k].identity);
    CHECK(a.rows[k].ok == b.rows[k].ok);
    CHECK(a.rows[k].detail == b.rows[k].detail);
  }
}

TEST_CASE("suite names") {
  CHECK(parse_suite("fsz") == Suite::fsz);
  CHECK(parse_suite("all") == Suite::all);
  CHECK_FALSE(parse_suite("bogus").has_value());
  CHECK(to_string(Suite::kummer) == "kummer");
}
