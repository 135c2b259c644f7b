#include "core/arithfun.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "core/error.hpp"

namespace lcz {

ArithFun::ArithFun(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("ArithFun: bound must be >= 1");
}

const Rational& ArithFun::at(std::uint64_t n) const {
  if (n < 1 || n > values_.size())
    throw std::out_of_range("ArithFun: evaluation at " + std::to_string(n) +
                            " outside tabulated range 1.." + std::to_string(values_.size()));
  return values_[n - 1];
}

Factorization factorize(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("factorize: m must be >= 1");
  if (m > (std::uint64_t{1} << 63))
    throw LimitError("factorize: " + std::to_string(m) + " exceeds the supported range 2^63");
  Factorization out{m, {}};
  std::uint64_t rest = m;
  auto strip = [&](std::uint64_t p) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) out.prime_powers.push_back({p, e});
  };
  strip(2);
  for (std::uint64_t p = 3; p * p <= rest; p += 2) strip(p);
  if (rest > 1) out.prime_powers.push_back({rest, 1});
  return out;
}

unsigned omega(std::uint64_t m) {
  return static_cast<unsigned>(factorize(m).prime_powers.size());
}

unsigned big_omega(std::uint64_t m) {
  unsigned total = 0;
  for (const auto& pp : factorize(m).prime_powers) total += pp.exponent;
  return total;
}

unsigned max_omega_upto(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("max_omega_upto: bound must be >= 1");
  auto is_prime = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  unsigned count = 0;
  std::uint64_t primorial = 1;
  std::uint64_t p = 2;
  while (primorial <= bound / p) {  // overflow-safe primorial * p <= bound
    primorial *= p;
    ++count;
    do ++p;
    while (!is_prime(p));
  }
  return count;
}

std::vector<std::uint8_t> omega_table(std::uint64_t bound) {
  std::vector<std::uint8_t> om(bound + 1, 0);
  for (std::uint64_t p = 2; p <= bound; ++p) {
    if (om[p] != 0) continue;  // p has a smaller prime factor
    for (std::uint64_t m = p; m <= bound; m += p) ++om[m];
  }
  return om;
}

namespace {

std::uint64_t common_bound(const ArithFun& f, const ArithFun& g, const char* op) {
  if (f.bound() != g.bound())
    throw std::invalid_argument(std::string(op) + ": bound mismatch (" +
                                std::to_string(f.bound()) + " vs " + std::to_string(g.bound()) +
                                ")");
  return f.bound();
}

}  // namespace

ArithFun dirichlet_conv(const ArithFun& f, const ArithFun& g) {
  const std::uint64_t m = common_bound(f, g, "dirichlet_conv");
  std::vector<Rational> out(m, Rational(0));
  for (std::uint64_t d = 1; d <= m; ++d)
    for (std::uint64_t n = d; n <= m; n += d) out[n - 1] += f.at(d) * g.at(n / d);
  return ArithFun(std::move(out));
}

ArithFun unitary_conv(const ArithFun& f, const ArithFun& g) {
  const std::uint64_t m = common_bound(f, g, "unitary_conv");
  std::vector<Rational> out(m, Rational(0));
  for (std::uint64_t d = 1; d <= m; ++d)
    for (std::uint64_t n = d; n <= m; n += d)
      if (std::gcd(d, n / d) == 1) out[n - 1] += f.at(d) * g.at(n / d);
  return ArithFun(std::move(out));
}

ArithFun pointwise_mul(const ArithFun& f, const ArithFun& g) {
  const std::uint64_t m = common_bound(f, g, "pointwise_mul");
  std::vector<Rational> out;
  out.reserve(m);
  for (std::uint64_t n = 1; n <= m; ++n) out.push_back(f.at(n) * g.at(n));
  return ArithFun(std::move(out));
}

ArithFun pointwise_add(const ArithFun& f, const ArithFun& g) {
  const std::uint64_t m = common_bound(f, g, "pointwise_add");
  std::vector<Rational> out;
  out.reserve(m);
  for (std::uint64_t n = 1; n <= m; ++n) out.push_back(f.at(n) + g.at(n));
  return ArithFun(std::move(out));
}

ArithFun pointwise_scale(const Rational& c, const ArithFun& f) {
  std::vector<Rational> out;
  out.reserve(f.bound());
  for (const Rational& v : f.values()) out.push_back(c * v);
  return ArithFun(std::move(out));
}

std::optional<std::uint64_t> first_difference(const ArithFun& f, const ArithFun& g) {
  const std::uint64_t m = common_bound(f, g, "first_difference");
  for (std::uint64_t n = 1; n <= m; ++n)
    if (f.at(n) != g.at(n)) return n;
  return std::nullopt;
}

ArithFun builtin(Builtin which, std::uint64_t bound, unsigned power_k) {
  if (bound < 1) throw std::invalid_argument("builtin: bound must be >= 1");
  std::vector<Rational> out;
  out.reserve(bound);
  switch (which) {
    case Builtin::zeta:
      out.assign(bound, Rational(1));
      break;
    case Builtin::tau: {
      ArithFun z = builtin(Builtin::zeta, bound);
      return dirichlet_conv(z, z);
    }
    case Builtin::identity_eps:
      out.assign(bound, Rational(0));
      out[0] = Rational(1);
      break;
    case Builtin::nth_power:
      for (std::uint64_t n = 1; n <= bound; ++n) {
        BigInt v;
        mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(n), power_k);
        out.push_back(Rational(v));
      }
      break;
    case Builtin::big_omega:
      for (std::uint64_t n = 1; n <= bound; ++n) out.push_back(Rational(long(big_omega(n))));
      break;
    case Builtin::small_omega:
      for (std::uint64_t n = 1; n <= bound; ++n) out.push_back(Rational(long(omega(n))));
      break;
  }
  return ArithFun(std::move(out));
}

ClassifyResult classify(const ArithFun& f, ClassifyKind kind) {
  if (f.bound() < 4) throw std::invalid_argument("classify: bound must be >= 4");
  const bool complete = kind == ClassifyKind::completely_multiplicative ||
                        kind == ClassifyKind::completely_additive;
  const bool additive =
      kind == ClassifyKind::completely_additive || kind == ClassifyKind::additive;
  const std::uint64_t bound = f.bound();
  for (std::uint64_t m = 1; m * m <= bound; ++m) {
    for (std::uint64_t n = m; m * n <= bound; ++n) {
      if (!complete && std::gcd(m, n) != 1) continue;
      const Rational lhs = f.at(m * n);
      const Rational rhs = additive ? f.at(m) + f.at(n) : f.at(m) * f.at(n);
      if (lhs != rhs) return {false, false, ClassifyWitness{m, n, lhs, rhs}};
    }
  }
  bool vacuous = false;
  if (!additive) {
    vacuous = true;
    for (const Rational& v : f.values())
      if (!v.is_zero()) {
        vacuous = false;
        break;
      }
  }
  return {true, vacuous, std::nullopt};
}

}  // namespace lcz
