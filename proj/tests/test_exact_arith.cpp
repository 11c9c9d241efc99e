#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "cyloops/cyclotomic.hpp"
#include "cyloops/errors.hpp"
#include "cyloops/pochhammer.hpp"
#include "cyloops/polynomial.hpp"
#include "cyloops/rational.hpp"
#include "random_inputs.hpp"

using namespace cyloops;
using cyloops::testing::random_cyclotomic;
using cyloops::testing::random_rational;

TEST_CASE("rational: lowest terms, positive denominator") {
  const Rational r(6, -8);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 4);
  CHECK(r.str() == "-3/4");
  CHECK(Rational(10, 5).str() == "2");
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) < Rational(3, 4));
  CHECK(Rational(2).pow(-3) == Rational(1, 8));
}

TEST_CASE("rational: division by zero throws") {
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
}

TEST_CASE("rational: decimal rendering uses '.'") {
  CHECK(Rational(1, 8).decimal() == "0.125");
  CHECK(Rational(17, 160).decimal(5) == "0.10625");
}

TEST_CASE("cyclotomic: root-of-unity relations") {
  const Cyclotomic w = Cyclotomic::omega();
  CHECK(w * w == w - Cyclotomic(1));
  CHECK(w.pow(3) == Cyclotomic(-1));
  CHECK(w.pow(6) == Cyclotomic(1));
  CHECK(w + w.inverse() == Cyclotomic(1));
  CHECK(Cyclotomic::i_sqrt3() == w - w.inverse());
  CHECK(Cyclotomic::i_sqrt3().pow(2) == Cyclotomic(-3));
  CHECK(w.conj() == w.inverse());
  CHECK(w.real_part() == Rational(1, 2));
  CHECK(stochastic_q() == w);
}

TEST_CASE("cyclotomic: (1+q^2)(1+q^-2) = 1") {
  const Cyclotomic q = stochastic_q();
  CHECK((Cyclotomic(1) + q.pow(2)) * (Cyclotomic(1) + q.pow(-2)) == Cyclotomic(1));
}

TEST_CASE("cyclotomic: as_rational guards the w-component") {
  CHECK(Cyclotomic(Rational(3, 7)).as_rational() == Rational(3, 7));
  CHECK_THROWS_AS(Cyclotomic::omega().as_rational(), std::domain_error);
  CHECK_THROWS_AS(Cyclotomic().inverse(), std::domain_error);
}

TEST_CASE("property: field axioms on random elements") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const Cyclotomic x = random_cyclotomic(rng);
    const Cyclotomic y = random_cyclotomic(rng);
    const Cyclotomic z = random_cyclotomic(rng);
    CHECK((x * y) * z == x * (y * z));
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    CHECK(x * x.conj() == Cyclotomic(x.norm()));
    if (!x.is_zero()) {
      CHECK(x * x.inverse() == Cyclotomic(1));
      CHECK((y / x) * x == y);
    }
  }
}

TEST_CASE("property: exact arithmetic agrees with complex floats") {
  std::mt19937_64 rng(77);
  const auto close = [](std::complex<double> a, std::complex<double> b) {
    return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b));
  };
  for (int trial = 0; trial < 300; ++trial) {
    const Cyclotomic x = random_cyclotomic(rng);
    const Cyclotomic y = random_cyclotomic(rng);
    const auto fx = x.to_complex();
    const auto fy = y.to_complex();
    CHECK(close((x + y).to_complex(), fx + fy));
    CHECK(close((x - y).to_complex(), fx - fy));
    CHECK(close((x * y).to_complex(), fx * fy));
    if (!y.is_zero()) CHECK(close((x / y).to_complex(), fx / fy));
  }
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(Rational(7, 5), 0) == Rational(1));
  CHECK(pochhammer(Rational(1, 3), 2) == Rational(4, 9));
  CHECK(pochhammer(Rational(1, 3), 1).pow(2) == Rational(1, 9));
  CHECK(pochhammer(Rational(-2), 3) == Rational(0));
}

TEST_CASE("property: pochhammer splits over a+m") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Rational a = random_rational(rng, 20, 12);
    const unsigned m = static_cast<unsigned>(rng() % 6);
    const unsigned n = static_cast<unsigned>(rng() % 6);
    CHECK(pochhammer(a, m + n) == pochhammer(a, m) * pochhammer(a + Rational(m), n));
  }
}

TEST_CASE("gamma_ratio") {
  CHECK(gamma_ratio(Rational(2, 3), 1) == Rational(2, 3));
  CHECK(gamma_ratio(Rational(-1, 3), 1) == Rational(-1, 3));
  CHECK(gamma_ratio(Rational(1, 3), -1) == Rational(-3, 2));
  CHECK(gamma_ratio(Rational(5, 2), 0) == Rational(1));
  CHECK_THROWS_AS(gamma_ratio(Rational(0), 2), PoleError);
  CHECK_THROWS_AS(gamma_ratio(Rational(2), -3), PoleError);
  CHECK_THROWS_AS(gamma_ratio(Rational(-3), 1), PoleError);
}

TEST_CASE("property: gamma_ratio composes") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto k = static_cast<std::int64_t>(rng() % 40) - 20;
    if (k % 3 == 0) continue;
    const Rational a(k, 3);
    const int s = static_cast<int>(rng() % 9) - 4;
    const int t = static_cast<int>(rng() % 9) - 4;
    CHECK(gamma_ratio(a, s) * gamma_ratio(a + Rational(s), t) == gamma_ratio(a, s + t));
  }
}

TEST_CASE("polynomial: scale_arg") {
  const Cyclotomic q = stochastic_q();
  const CycPolynomial p{Cyclotomic(1), Cyclotomic(1)};
  CHECK(poly_scale_arg(p, Cyclotomic(1)) == p);
  const CycPolynomial lin{Cyclotomic(Rational(-1, 2)), Cyclotomic(1)};
  CHECK(poly_scale_arg(lin, q.pow(2)) == CycPolynomial{Cyclotomic(Rational(-1, 2)), q.pow(2)});
  const CycPolynomial sq = CycPolynomial::monomial(Cyclotomic(1), 2);
  CHECK(poly_scale_arg(sq, q.pow(3)) == sq);
}

TEST_CASE("polynomial: exact division") {
  const CycPolynomial fq{Cyclotomic(Rational(-1, 2)), Cyclotomic(0), Cyclotomic(Rational(3, 2)), Cyclotomic(1)};
  const CycPolynomial fp{Cyclotomic(-2), Cyclotomic(-3), Cyclotomic(0), Cyclotomic(1)};
  const CycPolynomial t = CycPolynomial::one_plus_x_pow(2);
  CHECK(poly_divide_exact(fq, t) == CycPolynomial{Cyclotomic(Rational(-1, 2)), Cyclotomic(1)});
  CHECK(poly_divide_exact(fp, t) == CycPolynomial{Cyclotomic(-2), Cyclotomic(1)});
  CHECK_THROWS_AS(poly_divide_exact(t, CycPolynomial::one_plus_x_pow(3)), NotDivisible);
  CHECK_THROWS_AS(poly_divide_exact(t, CycPolynomial{}), std::domain_error);
  try {
    poly_divide_exact(CycPolynomial::one_plus_x_pow(2) + CycPolynomial{Cyclotomic(1)}, CycPolynomial::one_plus_x_pow(1));
    FAIL("expected NotDivisible");
  } catch (const NotDivisible& e) {
    CHECK(e.remainder() == CycPolynomial{Cyclotomic(1)});
  }
}

TEST_CASE("polynomial: canonical degree and derivative") {
  CHECK(CycPolynomial{Cyclotomic(1), Cyclotomic(0), Cyclotomic(0)}.degree() == 0);
  CHECK(CycPolynomial{}.degree() == -1);
  CHECK(CycPolynomial::one_minus_x_pow(3).derivative() ==
        CycPolynomial{Cyclotomic(-3), Cyclotomic(6), Cyclotomic(-3)});
}

TEST_CASE("property: multiplication then division round-trips") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Cyclotomic> a(1 + rng() % 5);
    std::vector<Cyclotomic> b(1 + rng() % 4);
    for (auto& c : a) c = random_cyclotomic(rng);
    for (auto& c : b) c = random_cyclotomic(rng);
    b.back() = Cyclotomic(1) + Cyclotomic::omega();
    const CycPolynomial pa(a);
    const CycPolynomial pb(b);
    CHECK(poly_divide_exact(pa * pb, pb) == pa);
    const Cyclotomic x = random_cyclotomic(rng);
    CHECK((pa * pb).evaluate(x) == pa.evaluate(x) * pb.evaluate(x));
  }
}
