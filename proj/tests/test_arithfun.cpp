#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "core/arithfun.hpp"
#include "core/error.hpp"
#include "core/json_io.hpp"
#include "core/rng.hpp"

using namespace lcz;

namespace {

// divisor-loop oracle, independent of the convolution code path
Rational naive_tau(std::uint64_t n) {
  long count = 0;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) ++count;
  return Rational(count);
}

ArithFun random_fun(SplitMix64& gen, std::uint64_t bound) {
  return ArithFun(random_values(gen, bound));
}

}  // namespace

TEST_CASE("factorize") {
  CHECK(factorize(1).prime_powers.empty());
  CHECK(factorize(12).prime_powers == std::vector<PrimePower>{{2, 2}, {3, 1}});
  CHECK(factorize(30).prime_powers == std::vector<PrimePower>{{2, 1}, {3, 1}, {5, 1}});
  CHECK(factorize(2147483647).prime_powers == std::vector<PrimePower>{{2147483647, 1}});
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
  CHECK_THROWS_AS(factorize((std::uint64_t{1} << 63) + 1), LimitError);
}

TEST_CASE("omega and big_omega") {
  CHECK(omega(1) == 0);
  CHECK(omega(12) == 2);
  CHECK(omega(30030) == 6);  // product of the first six primes
  CHECK(big_omega(12) == 3);
  CHECK(max_omega_upto(1) == 0);
  CHECK(max_omega_upto(29) == 2);
  CHECK(max_omega_upto(30) == 3);
  CHECK(max_omega_upto(510510) == 7);
  const auto om = omega_table(1000);
  for (std::uint64_t m = 1; m <= 1000; ++m) CHECK(om[m] == omega(m));
}

TEST_CASE("evaluation outside the table is an error") {
  const ArithFun f = builtin(Builtin::zeta, 10);
  CHECK_THROWS_AS(f.at(0), std::out_of_range);
  CHECK_THROWS_AS(f.at(11), std::out_of_range);
}

TEST_CASE("dirichlet convolution") {
  const ArithFun zeta = builtin(Builtin::zeta, 100);
  const ArithFun tau = dirichlet_conv(zeta, zeta);
  CHECK(tau.at(6) == Rational(4));
  CHECK(tau.at(12) == Rational(6));
  for (std::uint64_t n = 1; n <= 100; ++n) CHECK(tau.at(n) == naive_tau(n));

  const ArithFun eps = builtin(Builtin::identity_eps, 100);
  SplitMix64 gen(11);
  const ArithFun f = random_fun(gen, 100);
  CHECK(dirichlet_conv(f, eps) == f);
  CHECK(unitary_conv(f, eps) == f);

  const ArithFun small = builtin(Builtin::zeta, 50);
  CHECK_THROWS_AS(dirichlet_conv(f, small), std::invalid_argument);
}

TEST_CASE("unitary convolution") {
  const ArithFun zeta = builtin(Builtin::zeta, 200);
  const ArithFun u = unitary_conv(zeta, zeta);
  CHECK(u.at(1) == Rational(1));
  CHECK(u.at(12) == Rational(4));  // unitary divisors 1, 3, 4, 12
  CHECK(u.at(30) == Rational(8));
  for (std::uint64_t m = 1; m <= 200; ++m) CHECK(u.at(m) == Rational(2).pow(omega(m)));
}

TEST_CASE("convolutions are commutative and associative") {
  SplitMix64 gen(3);
  for (int round = 0; round < 5; ++round) {
    const ArithFun f = random_fun(gen, 200);
    const ArithFun g = random_fun(gen, 200);
    const ArithFun h = random_fun(gen, 200);
    CHECK(dirichlet_conv(f, g) == dirichlet_conv(g, f));
    CHECK(dirichlet_conv(dirichlet_conv(f, g), h) == dirichlet_conv(f, dirichlet_conv(g, h)));
    CHECK(unitary_conv(f, g) == unitary_conv(g, f));
    CHECK(unitary_conv(unitary_conv(f, g), h) == unitary_conv(f, unitary_conv(g, h)));
  }
}

TEST_CASE("complete multiplicativity distributes over dirichlet convolution") {
  const ArithFun square = builtin(Builtin::nth_power, 150, 2);
  SplitMix64 gen(17);
  for (int round = 0; round < 10; ++round) {
    const ArithFun g = random_fun(gen, 150);
    const ArithFun h = random_fun(gen, 150);
    CHECK(pointwise_mul(square, dirichlet_conv(g, h)) ==
          dirichlet_conv(pointwise_mul(square, g), pointwise_mul(square, h)));
  }
}

TEST_CASE("pointwise operations") {
  const ArithFun zeta = builtin(Builtin::zeta, 20);
  const ArithFun tau = builtin(Builtin::tau, 20);
  const ArithFun id = builtin(Builtin::nth_power, 20, 1);
  CHECK(pointwise_mul(tau, zeta) == tau);
  CHECK(pointwise_add(tau, pointwise_scale(Rational(0), tau)) == tau);
  CHECK(pointwise_mul(id, tau).at(4) == Rational(12));  // 4 * tau(4)
}

TEST_CASE("builtins") {
  const ArithFun zeta = builtin(Builtin::zeta, 5);
  for (std::uint64_t n = 1; n <= 5; ++n) CHECK(zeta.at(n) == Rational(1));
  CHECK(builtin(Builtin::tau, 10).at(4) == Rational(3));
  CHECK(builtin(Builtin::big_omega, 12).at(12) == Rational(3));
  CHECK(builtin(Builtin::small_omega, 12).at(12) == Rational(2));
  CHECK(builtin(Builtin::nth_power, 10, 3).at(2) == Rational(8));
  CHECK(builtin(Builtin::identity_eps, 4).at(1) == Rational(1));
  CHECK(builtin(Builtin::identity_eps, 4).at(4) == Rational(0));
}

TEST_CASE("classify") {
  const ArithFun square = builtin(Builtin::nth_power, 100, 2);
  CHECK(classify(square, ClassifyKind::completely_multiplicative).holds);

  const ArithFun tau = builtin(Builtin::tau, 100);
  const ClassifyResult tau_cm = classify(tau, ClassifyKind::completely_multiplicative);
  CHECK_FALSE(tau_cm.holds);
  REQUIRE(tau_cm.witness.has_value());
  CHECK(tau_cm.witness->m == 2);
  CHECK(tau_cm.witness->n == 2);
  CHECK(tau_cm.witness->lhs == Rational(3));
  CHECK(tau_cm.witness->rhs == Rational(4));
  // tau is multiplicative over coprime pairs
  CHECK(classify(tau, ClassifyKind::multiplicative).holds);

  CHECK(classify(builtin(Builtin::big_omega, 100), ClassifyKind::completely_additive).holds);
  const ClassifyResult om_ca =
      classify(builtin(Builtin::small_omega, 100), ClassifyKind::completely_additive);
  CHECK_FALSE(om_ca.holds);
  REQUIRE(om_ca.witness.has_value());
  CHECK(om_ca.witness->m == 2);
  CHECK(om_ca.witness->n == 2);
  CHECK(classify(builtin(Builtin::small_omega, 100), ClassifyKind::additive).holds);

  // all-zero function: vacuously multiplicative, flagged
  const ArithFun zero(std::vector<Rational>(50, Rational(0)));
  const ClassifyResult z = classify(zero, ClassifyKind::completely_multiplicative);
  CHECK(z.holds);
  CHECK(z.vacuous);
  CHECK(classify(zero, ClassifyKind::completely_additive).holds);
  CHECK_FALSE(classify(zero, ClassifyKind::completely_additive).vacuous);

  CHECK_THROWS_AS(classify(builtin(Builtin::zeta, 3), ClassifyKind::multiplicative),
                  std::invalid_argument);
}

TEST_CASE("function JSON round trip") {
  SplitMix64 gen(23);
  const ArithFun f = random_fun(gen, 30);
  CHECK(arithfun_from_json(arithfun_to_json(f)) == f);
  CHECK_THROWS_AS(arithfun_from_json(parse_json_text(R"({"bound": 3, "values": ["1"]})")),
                  ParseError);
  CHECK_THROWS_AS(arithfun_from_json(parse_json_text(R"({"bound": 0, "values": []})")),
                  ParseError);
}
