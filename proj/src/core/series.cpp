#include "core/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcz {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw std::invalid_argument("TruncatedSeries: need at least the order-0 coefficient");
}

TruncatedSeries TruncatedSeries::zero(unsigned order) {
  return TruncatedSeries(std::vector<Rational>(order + 1, Rational(0)));
}

const Rational& TruncatedSeries::coeff(unsigned n) const {
  if (n >= coeffs_.size())
    throw std::out_of_range("TruncatedSeries: coefficient index " + std::to_string(n) +
                            " beyond order " + std::to_string(order()));
  return coeffs_[n];
}

void TruncatedSeries::set_coeff(unsigned n, Rational v) {
  if (n >= coeffs_.size())
    throw std::out_of_range("TruncatedSeries: coefficient index " + std::to_string(n) +
                            " beyond order " + std::to_string(order()));
  coeffs_[n] = std::move(v);
}

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g) {
  const unsigned n = std::min(f.order(), g.order());
  std::vector<Rational> out;
  out.reserve(n + 1);
  for (unsigned i = 0; i <= n; ++i) out.push_back(f.coeff(i) + g.coeff(i));
  return TruncatedSeries(std::move(out));
}

TruncatedSeries scale(const Rational& c, const TruncatedSeries& f) {
  std::vector<Rational> out;
  out.reserve(f.order() + 1);
  for (const Rational& a : f.coeffs()) out.push_back(c * a);
  return TruncatedSeries(std::move(out));
}

TruncatedSeries cauchy_mul(const TruncatedSeries& f, const TruncatedSeries& g) {
  const unsigned n = std::min(f.order(), g.order());
  std::vector<Rational> out(n + 1, Rational(0));
  for (unsigned i = 0; i <= n; ++i)
    for (unsigned j = 0; i + j <= n; ++j) out[i + j] += f.coeff(i) * g.coeff(j);
  return TruncatedSeries(std::move(out));
}

TruncatedSeries truncate(const TruncatedSeries& f, unsigned order) {
  if (order > f.order())
    throw std::invalid_argument("truncate: order " + std::to_string(order) +
                                " exceeds series order " + std::to_string(f.order()));
  return TruncatedSeries(
      std::vector<Rational>(f.coeffs().begin(), f.coeffs().begin() + order + 1));
}

SeriesComparison equals_to_order(const TruncatedSeries& f, const TruncatedSeries& g,
                                 unsigned up_to) {
  if (up_to > f.order() || up_to > g.order())
    throw std::invalid_argument("equals_to_order: up_to " + std::to_string(up_to) +
                                " exceeds the common order " +
                                std::to_string(std::min(f.order(), g.order())));
  for (unsigned i = 0; i <= up_to; ++i)
    if (f.coeff(i) != g.coeff(i)) return {false, i};
  return {true, 0};
}

}  // namespace lcz
