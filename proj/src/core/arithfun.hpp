#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/rational.hpp"

namespace lcz {

/// Arithmetical function tabulated on 1..M. Evaluation outside the table is
/// a hard error: zero-extending would fabricate counterexamples in
/// convolutions near the bound.
class ArithFun {
public:
  /// bound = values.size(); values[i] is f(i+1). Must be non-empty.
  explicit ArithFun(std::vector<Rational> values);

  std::uint64_t bound() const { return values_.size(); }
  const Rational& at(std::uint64_t n) const;
  const std::vector<Rational>& values() const { return values_; }

  friend bool operator==(const ArithFun& a, const ArithFun& b) { return a.values_ == b.values_; }

private:
  std::vector<Rational> values_;
};

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical factorization m = prod p^e, primes strictly increasing. m = 1
/// gives the empty list.
struct Factorization {
  std::uint64_t value;
  std::vector<PrimePower> prime_powers;
};

/// Trial division; supported for m <= 2^63 (LimitError beyond).
Factorization factorize(std::uint64_t m);

/// Number of distinct prime factors; omega(1) = 0.
unsigned omega(std::uint64_t m);

/// Number of prime factors counted with multiplicity; big_omega(1) = 0.
unsigned big_omega(std::uint64_t m);

/// Largest omega(m) over 1 <= m <= bound: the number of primes in the
/// longest primorial <= bound.
unsigned max_omega_upto(std::uint64_t bound);

/// omega(m) for every m <= bound as a byte table (index 0 unused), built by
/// an additive sieve.
std::vector<std::uint8_t> omega_table(std::uint64_t bound);

/// Dirichlet convolution (f*g)(n) = sum over d|n of f(d) g(n/d). Bounds must
/// match; the result is tabulated on the same 1..M.
ArithFun dirichlet_conv(const ArithFun& f, const ArithFun& g);

/// Unitary convolution: the divisor sum restricted to gcd(d, n/d) = 1.
ArithFun unitary_conv(const ArithFun& f, const ArithFun& g);

ArithFun pointwise_mul(const ArithFun& f, const ArithFun& g);
ArithFun pointwise_add(const ArithFun& f, const ArithFun& g);
ArithFun pointwise_scale(const Rational& c, const ArithFun& f);

/// Smallest n (1-based) where the tables differ, if any. Bounds must match.
std::optional<std::uint64_t> first_difference(const ArithFun& f, const ArithFun& g);

enum class Builtin { zeta, tau, identity_eps, nth_power, big_omega, small_omega };

/// Tabulates a named function on 1..bound. tau is computed as zeta *_D zeta;
/// nth_power takes the exponent in power_k.
ArithFun builtin(Builtin which, std::uint64_t bound, unsigned power_k = 0);

enum class ClassifyKind {
  completely_multiplicative,
  multiplicative,
  completely_additive,
  additive,
};

struct ClassifyWitness {
  std::uint64_t m;
  std::uint64_t n;
  Rational lhs;  // f(mn), or f(m+n) for the binomial kinds
  Rational rhs;  // f(m) f(n) or f(m) + f(n)
};

struct ClassifyResult {
  bool holds;
  bool vacuous;  // all tabulated values are zero (multiplicative kinds only)
  std::optional<ClassifyWitness> witness;
};

/// Tests the defining functional equation over all pairs m <= n with
/// mn <= bound (coprime pairs only for the non-complete kinds). No f(1)=1
/// side condition is imposed; the all-zero function passes the
/// multiplicative kinds and is flagged vacuous. Requires bound >= 4.
/// The witness is the lexicographically first violating pair.
ClassifyResult classify(const ArithFun& f, ClassifyKind kind);

}  // namespace lcz
