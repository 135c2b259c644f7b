#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/arithfun.hpp"
#include "core/rational.hpp"
#include "core/series.hpp"

namespace lcz {

enum class Variant { multiplicative, additive };

enum class BinomialFamily { factorial, ones, q_factorial, custom };

/// Parameter family B(0..N) of a convolution algebra of full binomial type:
/// B(0) = B(1) = 1 and B(n) != 0 everywhere. Derived quantities are the
/// ell-binomials (m k) = B(m)/(B(k) B(m-k)) and t(n) = sum over k of (n k).
///
/// Custom tables are accepted on purely algebraic grounds; they need not
/// arise from any combinatorial structure.
class BinomialType {
public:
  static BinomialType make_factorial(unsigned n);
  static BinomialType make_ones(unsigned n);
  /// Validates that no q-integer [i]_q, i <= n, vanishes.
  static BinomialType make_q(const Rational& q, unsigned n);
  static BinomialType make_custom(std::string name, std::vector<Rational> b);

  const std::string& name() const { return name_; }
  BinomialFamily family() const { return family_; }
  const std::optional<Rational>& q() const { return q_; }
  unsigned max_order() const { return static_cast<unsigned>(b_.size()) - 1; }

  const Rational& b(unsigned n) const;
  Rational ell_binomial(unsigned m, unsigned k) const;
  Rational t_number(unsigned n) const;

private:
  BinomialType(std::string name, BinomialFamily family, std::optional<Rational> q,
               std::vector<Rational> b);

  std::string name_;
  BinomialFamily family_;
  std::optional<Rational> q_;
  std::vector<Rational> b_;
};

/// Arithmetical function with domain extended to include 0, tabulated on
/// 0..N. Out-of-range evaluation is an error.
class BinomialArithFun {
public:
  /// bound = values.size() - 1; the vector must be non-empty.
  explicit BinomialArithFun(std::vector<Rational> values);

  unsigned bound() const { return static_cast<unsigned>(values_.size()) - 1; }
  const Rational& at(unsigned m) const;
  const std::vector<Rational>& values() const { return values_; }

  friend bool operator==(const BinomialArithFun& a, const BinomialArithFun& b) {
    return a.values_ == b.values_;
  }

private:
  std::vector<Rational> values_;
};

/// (f *_M g)(m) = sum over k of (m k) f(k) g(m-k). Bounds must match and fit
/// inside the tabulated B.
BinomialArithFun m_convolution(const BinomialType& bt, const BinomialArithFun& f,
                               const BinomialArithFun& g);

BinomialArithFun pointwise_mul(const BinomialArithFun& f, const BinomialArithFun& g);
BinomialArithFun pointwise_add(const BinomialArithFun& f, const BinomialArithFun& g);
std::optional<unsigned> first_difference(const BinomialArithFun& f, const BinomialArithFun& g);

/// eta_M: series -> M-convolution algebra, (eta_M F)(m) = a_m B(m).
BinomialArithFun eta_m(const BinomialType& bt, const TruncatedSeries& f);

/// Inverse direction: a_m = f(m)/B(m).
TruncatedSeries eta_m_inv(const BinomialType& bt, const BinomialArithFun& f);

/// Classical embedding into the unitary ring: (eta F)(m) = omega(m)! a_{omega(m)},
/// tabulated on 1..bound. The series must cover every omega value realized
/// below the bound, otherwise a std::domain_error names the missing order.
ArithFun eta(const TruncatedSeries& f, std::uint64_t bound);

enum class BinomialClassifyKind { binomial_multiplicative, binomial_additive };

/// f(m+n) = f(m) f(n) (resp. +) over all pairs m <= n with m+n <= bound.
/// Requires bound >= 2; witness is the first violating pair.
ClassifyResult binomial_classify(const BinomialArithFun& f, BinomialClassifyKind kind);

/// B-weighted coefficient product: coefficient n of F (.) G is B(n) a_n b_n,
/// to the common order. B must be tabulated at least that far.
TruncatedSeries odot(const BinomialType& bt, const TruncatedSeries& f, const TruncatedSeries& g);

/// The canonical series of the multiplicative (a_n = a_1^n / B(n)) or
/// additive (a_n = n a_1 / B(n)) characterization, with a_1 != 0.
TruncatedSeries closed_form_series(const BinomialType& bt, Variant variant, const Rational& a1,
                                   unsigned order);

}  // namespace lcz
