#include "core/bintype.hpp"

#include <stdexcept>

#include "core/exactnum.hpp"

namespace lcz {

BinomialType::BinomialType(std::string name, BinomialFamily family, std::optional<Rational> q,
                           std::vector<Rational> b)
    : name_(std::move(name)), family_(family), q_(std::move(q)), b_(std::move(b)) {
  if (b_.size() < 2)
    throw std::invalid_argument("BinomialType: need at least B(0) and B(1) (N >= 1)");
  if (!b_[0].is_one()) throw std::invalid_argument("BinomialType: B(0) must be 1");
  if (!b_[1].is_one()) throw std::invalid_argument("BinomialType: B(1) must be 1");
  for (unsigned n = 0; n < b_.size(); ++n)
    if (b_[n].is_zero())
      throw std::invalid_argument("BinomialType: B(" + std::to_string(n) + ") must be nonzero");
}

BinomialType BinomialType::make_factorial(unsigned n) {
  std::vector<Rational> b;
  b.reserve(n + 1);
  for (unsigned i = 0; i <= n; ++i) b.push_back(factorial(i));
  return BinomialType("factorial", BinomialFamily::factorial, std::nullopt, std::move(b));
}

BinomialType BinomialType::make_ones(unsigned n) {
  return BinomialType("ones", BinomialFamily::ones, std::nullopt,
                      std::vector<Rational>(n + 1, Rational(1)));
}

BinomialType BinomialType::make_q(const Rational& q, unsigned n) {
  std::vector<Rational> b;
  b.reserve(n + 1);
  Rational qint(1);
  Rational acc(1);
  b.push_back(acc);
  for (unsigned i = 1; i <= n; ++i) {
    if (i >= 2) qint = qint * q + Rational(1);
    if (qint.is_zero())
      throw std::invalid_argument("BinomialType: q-integer [" + std::to_string(i) +
                                  "]_q vanishes at q = " + q.str());
    acc *= qint;
    b.push_back(acc);
  }
  return BinomialType("q=" + q.str(), BinomialFamily::q_factorial, q, std::move(b));
}

BinomialType BinomialType::make_custom(std::string name, std::vector<Rational> b) {
  return BinomialType(std::move(name), BinomialFamily::custom, std::nullopt, std::move(b));
}

const Rational& BinomialType::b(unsigned n) const {
  if (n >= b_.size())
    throw std::out_of_range("BinomialType: B(" + std::to_string(n) + ") beyond tabulated order " +
                            std::to_string(max_order()));
  return b_[n];
}

Rational BinomialType::ell_binomial(unsigned m, unsigned k) const {
  if (k > m) throw std::invalid_argument("ell_binomial: k > m");
  return b(m) / (b(k) * b(m - k));
}

Rational BinomialType::t_number(unsigned n) const {
  Rational acc(0);
  for (unsigned k = 0; k <= n; ++k) acc += ell_binomial(n, k);
  return acc;
}

BinomialArithFun::BinomialArithFun(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("BinomialArithFun: need at least the value at 0");
}

const Rational& BinomialArithFun::at(unsigned m) const {
  if (m >= values_.size())
    throw std::out_of_range("BinomialArithFun: evaluation at " + std::to_string(m) +
                            " outside tabulated range 0.." + std::to_string(bound()));
  return values_[m];
}

namespace {

unsigned common_bound(const BinomialArithFun& f, const BinomialArithFun& g, const char* op) {
  if (f.bound() != g.bound())
    throw std::invalid_argument(std::string(op) + ": bound mismatch (" +
                                std::to_string(f.bound()) + " vs " + std::to_string(g.bound()) +
                                ")");
  return f.bound();
}

}  // namespace

BinomialArithFun m_convolution(const BinomialType& bt, const BinomialArithFun& f,
                               const BinomialArithFun& g) {
  const unsigned bound = common_bound(f, g, "m_convolution");
  if (bound > bt.max_order())
    throw std::out_of_range("m_convolution: bound " + std::to_string(bound) +
                            " exceeds the B table (N = " + std::to_string(bt.max_order()) + ")");
  std::vector<Rational> out(bound + 1, Rational(0));
  for (unsigned m = 0; m <= bound; ++m)
    for (unsigned k = 0; k <= m; ++k) out[m] += bt.ell_binomial(m, k) * f.at(k) * g.at(m - k);
  return BinomialArithFun(std::move(out));
}

BinomialArithFun pointwise_mul(const BinomialArithFun& f, const BinomialArithFun& g) {
  const unsigned bound = common_bound(f, g, "pointwise_mul");
  std::vector<Rational> out;
  out.reserve(bound + 1);
  for (unsigned m = 0; m <= bound; ++m) out.push_back(f.at(m) * g.at(m));
  return BinomialArithFun(std::move(out));
}

BinomialArithFun pointwise_add(const BinomialArithFun& f, const BinomialArithFun& g) {
  const unsigned bound = common_bound(f, g, "pointwise_add");
  std::vector<Rational> out;
  out.reserve(bound + 1);
  for (unsigned m = 0; m <= bound; ++m) out.push_back(f.at(m) + g.at(m));
  return BinomialArithFun(std::move(out));
}

std::optional<unsigned> first_difference(const BinomialArithFun& f, const BinomialArithFun& g) {
  const unsigned bound = common_bound(f, g, "first_difference");
  for (unsigned m = 0; m <= bound; ++m)
    if (f.at(m) != g.at(m)) return m;
  return std::nullopt;
}

BinomialArithFun eta_m(const BinomialType& bt, const TruncatedSeries& f) {
  if (f.order() > bt.max_order())
    throw std::out_of_range("eta_m: series order " + std::to_string(f.order()) +
                            " exceeds the B table (N = " + std::to_string(bt.max_order()) + ")");
  std::vector<Rational> out;
  out.reserve(f.order() + 1);
  for (unsigned m = 0; m <= f.order(); ++m) out.push_back(f.coeff(m) * bt.b(m));
  return BinomialArithFun(std::move(out));
}

TruncatedSeries eta_m_inv(const BinomialType& bt, const BinomialArithFun& f) {
  if (f.bound() > bt.max_order())
    throw std::out_of_range("eta_m_inv: bound " + std::to_string(f.bound()) +
                            " exceeds the B table (N = " + std::to_string(bt.max_order()) + ")");
  std::vector<Rational> out;
  out.reserve(f.bound() + 1);
  for (unsigned m = 0; m <= f.bound(); ++m) out.push_back(f.at(m) / bt.b(m));
  return TruncatedSeries(std::move(out));
}

ArithFun eta(const TruncatedSeries& f, std::uint64_t bound) {
  if (bound < 1) throw std::invalid_argument("eta: bound must be >= 1");
  const unsigned needed = max_omega_upto(bound);
  if (f.order() < needed)
    throw std::domain_error("eta: series order " + std::to_string(f.order()) +
                            " too small; omega(m) reaches " + std::to_string(needed) +
                            " below " + std::to_string(bound));
  const auto om = omega_table(bound);
  std::vector<Rational> weighted;  // omega-class values k! a_k
  weighted.reserve(needed + 1);
  for (unsigned k = 0; k <= needed; ++k) weighted.push_back(factorial(k) * f.coeff(k));
  std::vector<Rational> out;
  out.reserve(bound);
  for (std::uint64_t m = 1; m <= bound; ++m) out.push_back(weighted[om[m]]);
  return ArithFun(std::move(out));
}

ClassifyResult binomial_classify(const BinomialArithFun& f, BinomialClassifyKind kind) {
  if (f.bound() < 2) throw std::invalid_argument("binomial_classify: bound must be >= 2");
  const bool additive = kind == BinomialClassifyKind::binomial_additive;
  for (unsigned m = 0; 2 * m <= f.bound(); ++m) {
    for (unsigned n = m; m + n <= f.bound(); ++n) {
      const Rational lhs = f.at(m + n);
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

TruncatedSeries odot(const BinomialType& bt, const TruncatedSeries& f, const TruncatedSeries& g) {
  const unsigned n = std::min(f.order(), g.order());
  if (n > bt.max_order())
    throw std::out_of_range("odot: order " + std::to_string(n) + " exceeds the B table (N = " +
                            std::to_string(bt.max_order()) + ")");
  std::vector<Rational> out;
  out.reserve(n + 1);
  for (unsigned i = 0; i <= n; ++i) out.push_back(bt.b(i) * f.coeff(i) * g.coeff(i));
  return TruncatedSeries(std::move(out));
}

TruncatedSeries closed_form_series(const BinomialType& bt, Variant variant, const Rational& a1,
                                   unsigned order) {
  if (a1.is_zero()) throw std::invalid_argument("closed_form_series: a_1 must be nonzero");
  if (order > bt.max_order())
    throw std::out_of_range("closed_form_series: order " + std::to_string(order) +
                            " exceeds the B table (N = " + std::to_string(bt.max_order()) + ")");
  std::vector<Rational> out;
  out.reserve(order + 1);
  for (unsigned n = 0; n <= order; ++n) {
    const Rational num =
        variant == Variant::multiplicative ? a1.pow(n) : Rational(long(n)) * a1;
    out.push_back(num / bt.b(n));
  }
  return TruncatedSeries(std::move(out));
}

}  // namespace lcz
