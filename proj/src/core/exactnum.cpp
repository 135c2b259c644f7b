#include "core/exactnum.hpp"

#include <stdexcept>
#include <vector>

namespace lcz {

Rational factorial(unsigned n) {
  BigInt acc(1);
  for (unsigned i = 2; i <= n; ++i) acc *= i;
  return Rational(acc);
}

Rational q_integer(unsigned i, const Rational& q) {
  if (i == 0) throw std::invalid_argument("q_integer: index must be >= 1");
  // [i]_q = q [i-1]_q + 1
  Rational acc(1);
  for (unsigned j = 2; j <= i; ++j) acc = acc * q + Rational(1);
  return acc;
}

Rational q_factorial(unsigned n, const Rational& q) {
  Rational qint(1);
  Rational acc(1);
  for (unsigned i = 2; i <= n; ++i) {
    qint = qint * q + Rational(1);
    acc *= qint;
  }
  return acc;
}

namespace {

// [1]_q..[n]_q, throwing on a vanishing factor so quotients stay well defined.
std::vector<Rational> q_integers_checked(unsigned n, const Rational& q) {
  std::vector<Rational> qints;
  qints.reserve(n);
  Rational qint(1);
  for (unsigned i = 1; i <= n; ++i) {
    if (i >= 2) qint = qint * q + Rational(1);
    if (qint.is_zero())
      throw std::domain_error("degenerate q: [" + std::to_string(i) + "]_q = 0 at q = " + q.str());
    qints.push_back(qint);
  }
  return qints;
}

}  // namespace

Rational gaussian_binomial(unsigned n, unsigned k, const Rational& q) {
  if (k > n) throw std::invalid_argument("gaussian_binomial: k > n");
  const auto qints = q_integers_checked(n, q);
  // [n]_q .. [n-k+1]_q over [1]_q .. [k]_q, the shorter side
  const unsigned kk = k <= n - k ? k : n - k;
  Rational acc(1);
  for (unsigned i = 1; i <= kk; ++i) acc = acc * qints[n - i] / qints[i - 1];
  return acc;
}

Rational galois_number(unsigned n, const Rational& q) {
  const auto qints = q_integers_checked(n, q);
  std::vector<Rational> qfact(n + 1, Rational(1));
  for (unsigned i = 1; i <= n; ++i) qfact[i] = qfact[i - 1] * qints[i - 1];
  Rational acc(0);
  for (unsigned k = 0; k <= n; ++k) acc += qfact[n] / (qfact[k] * qfact[n - k]);
  return acc;
}

}  // namespace lcz
