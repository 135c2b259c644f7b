#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/error.hpp"
#include "core/exactnum.hpp"
#include "core/rational.hpp"
#include "core/rng.hpp"

using namespace lcz;

TEST_CASE("rational canonical form and string round trip") {
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(-4, 6).str() == "-2/3");
  CHECK(Rational(3, -4).str() == "-3/4");  // sign moves to the numerator
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational::parse("7").str() == "7");
  CHECK(Rational::parse("+7") == Rational(7));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("rational arithmetic is exact and division by zero throws") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK((-a).str() == "-1/3");
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(-2).pow(0) == Rational(1));
}

TEST_CASE("canonical form is closed under arithmetic (randomized)") {
  SplitMix64 gen(2024);
  auto canonical = [](const Rational& r) {
    if (r.den() <= 0) return false;
    BigInt g;
    BigInt n = r.num();
    mpz_abs(n.get_mpz_t(), n.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), r.den().get_mpz_t());
    return r.is_zero() ? r.den() == 1 : g == 1;
  };
  Rational acc(1, 2);
  int performed = 0;
  for (int i = 0; i < 300; ++i) {
    const Rational x = random_coefficient(gen);
    const Rational sum = acc + x;
    const Rational diff = acc - x;
    const Rational prod = acc * x;
    CHECK(canonical(sum));
    CHECK(canonical(diff));
    CHECK(canonical(prod));
    performed += 3;
    if (!x.is_zero()) {
      const Rational quot = acc / x;
      CHECK(canonical(quot));
      acc = quot + Rational(1, 7);
      ++performed;
    } else {
      acc = sum + Rational(1, 7);
    }
  }
  CHECK(performed >= 1000);
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == Rational(1));
  CHECK(factorial(5) == Rational(120));
  // iterative product oracle for the frozen value
  BigInt prod(1);
  for (unsigned i = 1; i <= 10; ++i) prod *= i;
  CHECK(factorial(10) == Rational(prod));
  CHECK(factorial(10) == Rational(3628800));
}

TEST_CASE("q_integer") {
  CHECK(q_integer(1, Rational(9, 7)) == Rational(1));
  CHECK(q_integer(3, Rational(2)) == Rational(7));  // 1 + 2 + 4
  CHECK(q_integer(4, Rational(1)) == Rational(4));
  CHECK(q_integer(2, Rational(-1)) == Rational(0));
  CHECK(q_integer(3, Rational(1, 2)) == Rational(7, 4));
  CHECK_THROWS_AS(q_integer(0, Rational(2)), std::invalid_argument);
}

TEST_CASE("q_factorial") {
  CHECK(q_factorial(0, Rational(2)) == Rational(1));
  CHECK(q_factorial(3, Rational(2)) == Rational(21));  // 1 * 3 * 7
  CHECK(q_factorial(4, Rational(1)) == Rational(24));
  for (unsigned n = 0; n <= 30; ++n) CHECK(q_factorial(n, Rational(1)) == factorial(n));
}

TEST_CASE("gaussian_binomial values") {
  CHECK(gaussian_binomial(4, 0, Rational(7)) == Rational(1));
  // 35 is cross-checked against subspace enumeration in the oracle tests
  CHECK(gaussian_binomial(4, 2, Rational(2)) == Rational(35));
  CHECK(gaussian_binomial(3, 1, Rational(3)) == Rational(13));  // (3^3-1)/(3-1)
  CHECK_THROWS_AS(gaussian_binomial(3, 4, Rational(2)), std::invalid_argument);
}

TEST_CASE("gaussian_binomial rejects degenerate q naming the factor") {
  CHECK_THROWS_WITH_AS(gaussian_binomial(3, 1, Rational(-1)),
                       doctest::Contains("[2]_q = 0"), std::domain_error);
}

TEST_CASE("gaussian_binomial symmetry and integrality") {
  const Rational samples[] = {Rational(2), Rational(3), Rational(1, 2), Rational(-2),
                              Rational(5, 3)};
  for (const Rational& q : samples)
    for (unsigned n = 0; n <= 12; ++n)
      for (unsigned k = 0; k <= n; ++k)
        CHECK(gaussian_binomial(n, k, q) == gaussian_binomial(n, n - k, q));

  for (long qi = 2; qi <= 3; ++qi)
    for (unsigned n = 0; n <= 12; ++n)
      for (unsigned k = 0; k <= n; ++k) {
        const Rational g = gaussian_binomial(n, k, Rational(qi));
        CHECK(g.is_integer());
        CHECK(g.sign() > 0);
      }
}

TEST_CASE("galois_number") {
  CHECK(galois_number(0, Rational(5)) == Rational(1));
  CHECK(galois_number(2, Rational(2)) == Rational(5));   // 1 + 3 + 1
  CHECK(galois_number(3, Rational(2)) == Rational(16));  // 1 + 7 + 7 + 1
  for (unsigned n = 0; n <= 8; ++n) {
    Rational sum(0);
    for (unsigned k = 0; k <= n; ++k) sum += gaussian_binomial(n, k, Rational(2));
    CHECK(galois_number(n, Rational(2)) == sum);
  }
  CHECK_THROWS_AS(galois_number(2, Rational(-1)), std::domain_error);
}
