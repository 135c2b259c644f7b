#pragma once

#include <vector>

#include "core/rational.hpp"

namespace lcz {

/// Formal power series truncated at a fixed order: coefficients a_0..a_N.
/// Binary operations are valid to the minimum of the two orders and the
/// result records that order; nothing is ever zero-padded.
class TruncatedSeries {
public:
  /// order = coeffs.size() - 1; the vector must be non-empty.
  explicit TruncatedSeries(std::vector<Rational> coeffs);
  static TruncatedSeries zero(unsigned order);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
  const Rational& coeff(unsigned n) const;
  void set_coeff(unsigned n, Rational v);
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

private:
  std::vector<Rational> coeffs_;
};

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries scale(const Rational& c, const TruncatedSeries& f);

/// Cauchy product: c_n = sum over k of a_k b_{n-k}, to the common order.
TruncatedSeries cauchy_mul(const TruncatedSeries& f, const TruncatedSeries& g);

/// The first order+1 coefficients as a new series; order <= f.order().
TruncatedSeries truncate(const TruncatedSeries& f, unsigned order);

struct SeriesComparison {
  bool equal;
  unsigned first_mismatch;  // meaningful only when !equal
};

/// Coefficient-wise equality for n <= up_to; up_to must not exceed either
/// order. On inequality reports the smallest mismatching index.
SeriesComparison equals_to_order(const TruncatedSeries& f, const TruncatedSeries& g,
                                 unsigned up_to);

}  // namespace lcz
