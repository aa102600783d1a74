#include <doctest.h>

#include <random>

#include "padicops/scalar.hpp"

using namespace padic;

TEST_CASE("from_integer factors out the prime") {
  auto a = PadicScalar::from_integer(6, 2, 3);
  CHECK(a.valuation() == 1);
  CHECK(a.mantissa() == 3);

  auto z = PadicScalar::from_integer(0, 5, 4);
  CHECK(z.below_precision());
  CHECK(z.precision_floor() == 4);

  auto b = PadicScalar::from_integer(49, 7, 2);
  CHECK(b.valuation() == 2);
  CHECK(b.mantissa() == 1);
}

TEST_CASE("from_integer rejects composite p") {
  CHECK_THROWS_AS(PadicScalar::from_integer(1, 6, 2), padic_error);
}

TEST_CASE("addition") {
  auto one = PadicScalar::from_integer(1, 2, 3);
  auto two = one + one;
  CHECK(two.valuation() == 1);
  CHECK(two.mantissa() == 1);

  auto x = PadicScalar::from_integer(11, 3, 4);
  CHECK((x + (-x)).below_precision());

  auto s = PadicScalar::from_integer(3, 7, 2) + PadicScalar::from_integer(4, 7, 2);
  CHECK(s.valuation() == 1);
  CHECK(s.mantissa() == 1);
}

TEST_CASE("addition requires matching context") {
  auto a = PadicScalar::from_integer(1, 2, 3);
  auto b = PadicScalar::from_integer(1, 3, 3);
  auto c = PadicScalar::from_integer(1, 2, 4);
  CHECK_THROWS_AS(a + b, padic_error);
  CHECK_THROWS_AS(a + c, padic_error);
}

TEST_CASE("multiplication") {
  auto p = PadicScalar::from_integer(2, 2, 4);
  auto psq = p * p;
  CHECK(psq.valuation() == 2);
  CHECK(psq.mantissa() == 1);

  auto x = PadicScalar::from_integer(13, 5, 3);
  auto one = PadicScalar::from_integer(1, 5, 3);
  CHECK((x * one).congruent(x));

  auto prod = PadicScalar::from_integer(6, 2, 4) * PadicScalar::from_integer(10, 2, 4);
  CHECK(prod.valuation() == 2);
  CHECK(prod.mantissa() == 15);
}

TEST_CASE("inversion") {
  auto one = PadicScalar::from_integer(1, 5, 2);
  CHECK(one.invert().congruent(one));

  auto three = PadicScalar::from_integer(3, 5, 2);
  CHECK(three.invert().mantissa() == 17);

  auto p = PadicScalar::from_integer(5, 5, 2);
  CHECK_THROWS_AS(p.invert(), padic_error);
  CHECK_THROWS_AS(PadicScalar::zero(5, 2).invert(), padic_error);
}

TEST_CASE("norms") {
  CHECK(PadicScalar::from_integer(1, 3, 4).norm() == NormValue::exact(0));
  CHECK(PadicScalar::from_integer(9, 3, 4).norm() == NormValue::exact(2));
  CHECK(PadicScalar::zero(3, 4).norm() == NormValue::upper(4));
}

TEST_CASE("hensel square roots") {
  // -1 is a square mod 5: canonical branch starts at residue 2, but the
  // smallest residue root of -1 mod 5 is 2, and 2 lifts to ...7 mod 25.
  auto minus_one = -PadicScalar::from_integer(1, 5, 2);
  auto r = hensel_sqrt(minus_one);
  CHECK((r * r - minus_one).below_precision());
  CHECK(r.mantissa() % 5 == 2);

  auto four = PadicScalar::from_integer(4, 7, 3);
  auto r2 = hensel_sqrt(four);
  CHECK(r2.mantissa() == 2);

  auto m1p3 = -PadicScalar::from_integer(1, 3, 2);
  CHECK_THROWS_AS(hensel_sqrt(m1p3), padic_error);
  CHECK_THROWS_AS(hensel_sqrt(PadicScalar::from_integer(7, 2, 3)), padic_error);
  CHECK_THROWS_AS(hensel_sqrt(PadicScalar::from_integer(5, 5, 2)), padic_error);
}

TEST_CASE("hensel square roots at depth") {
  auto c = PadicScalar::from_integer(2, 7, 32);
  auto r = hensel_sqrt(c);
  CHECK((r * r - c).below_precision());
}

TEST_CASE("binomial coefficients") {
  auto seven = PadicScalar::from_integer(7, 5, 6);
  CHECK(padic_binomial(seven, 2).lift() == 21);

  auto minus_one = -PadicScalar::from_integer(1, 5, 6);
  CHECK(padic_binomial(minus_one, 2).lift() == mpz_class(1));

  // x = 1/(1-3) = -1/2 == 13 mod 27: binom(x,2) = x(x-1)/2 == 24 mod 27.
  auto x = PadicScalar::from_integer(13, 3, 3);
  auto b = padic_binomial(x, 2);
  CHECK(b.lift() % 27 == 24);
}

TEST_CASE("binomial precision exhaustion") {
  auto x = PadicScalar::from_integer(7, 2, 3);
  // v_2(8!) = 7 >= 3
  CHECK_THROWS_AS(padic_binomial(x, 8), padic_error);
}

TEST_CASE("mahler coefficients") {
  long p = 5;
  int N = 8;
  auto val = [&](long n) { return PadicScalar::from_integer(n, p, N); };

  std::vector<PadicScalar> constant{val(1), val(1), val(1), val(1)};
  auto c = mahler_coefficients(constant);
  CHECK(c[0].lift() == 1);
  for (size_t i = 1; i < c.size(); ++i) CHECK(c[i].is_zero());

  std::vector<PadicScalar> id{val(0), val(1), val(2), val(3)};
  c = mahler_coefficients(id);
  CHECK(c[0].is_zero());
  CHECK(c[1].lift() == 1);
  CHECK(c[2].is_zero());
  CHECK(c[3].is_zero());

  std::vector<PadicScalar> squares{val(0), val(1), val(4), val(9), val(16)};
  c = mahler_coefficients(squares);
  CHECK(c[0].is_zero());
  CHECK(c[1].lift() == 1);
  CHECK(c[2].lift() == 2);
  CHECK(c[3].is_zero());
  CHECK(c[4].is_zero());
}

TEST_CASE("mahler round trip") {
  long p = 3;
  int N = 10;
  std::mt19937_64 rng(7);
  std::vector<PadicScalar> values;
  for (int i = 0; i < 8; ++i)
    values.push_back(PadicScalar::from_integer(
        static_cast<long>(rng() % 729), p, N));
  auto coeffs = mahler_coefficients(values);
  for (int k = 0; k < 8; ++k) {
    auto rebuilt = mahler_sum(coeffs, PadicScalar::from_integer(k, p, N));
    CHECK(rebuilt.congruent(values[static_cast<size_t>(k)]));
  }
}

TEST_CASE("ultrametric law on random pairs") {
  std::mt19937_64 rng(42);
  for (long p : {2L, 3L, 5L}) {
    for (int iter = 0; iter < 200; ++iter) {
      long a = static_cast<long>(rng() % 10000) - 5000;
      long b = static_cast<long>(rng() % 10000) - 5000;
      auto x = PadicScalar::from_integer(a, p, 12);
      auto y = PadicScalar::from_integer(b, p, 12);
      auto sum = x + y;
      CHECK(norm_le(sum.norm(), norm_max(x.norm(), y.norm())));
      if (x.norm().is_exact() && y.norm().is_exact() &&
          x.norm().exponent != y.norm().exponent) {
        CHECK(sum.norm() == norm_max(x.norm(), y.norm()));
      }
      // Multiplicativity for exact norms.
      if (x.norm().is_exact() && y.norm().is_exact()) {
        auto prod = x * y;
        CHECK(prod.norm().exponent == x.norm().exponent + y.norm().exponent);
      }
    }
  }
}

TEST_CASE("ring laws against integer arithmetic mod p^N") {
  std::mt19937_64 rng(1234);
  long p = 3;
  int N = 6;
  mpz_class mod = pow_p(p, N);
  for (int iter = 0; iter < 300; ++iter) {
    long a = static_cast<long>(rng() % 100000);
    long b = static_cast<long>(rng() % 100000);
    long c = static_cast<long>(rng() % 100000);
    auto x = PadicScalar::from_integer(a, p, N);
    auto y = PadicScalar::from_integer(b, p, N);
    auto z = PadicScalar::from_integer(c, p, N);
    // (x+y)z == xz+yz and (xy)z == x(yz), compared to plain integers modulo
    // the absolute precision the result actually carries.
    auto r = (x + y) * z;
    mpz_class rmod = pow_p(p, r.abs_precision());
    mpz_class want = (mpz_class(a) + b) * c % rmod;
    CHECK(r.lift() % rmod == want);
    CHECK(r.abs_precision() >= N);
    auto lhs2 = ((x * y) * z - x * (y * z));
    CHECK(lhs2.is_zero());
    CHECK((x * y - y * x).is_zero());
  }
}
