#include "core/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "core/error.hpp"

namespace lcz {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
  mpq_set_num(v_.get_mpq_t(), num.get_mpz_t());
  mpq_set_den(v_.get_mpq_t(), den.get_mpz_t());
  v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational Rational::parse(std::string_view text) {
  const std::string_view full = text;
  auto fail = [&full]() -> Rational {
    throw ParseError("not a rational: \"" + std::string(full) + "\"");
  };

  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };

  std::string_view num_part = text;
  std::string_view den_part;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num_part = text.substr(0, slash);
    den_part = text.substr(slash + 1);
    if (!digits(den_part)) fail();
  }
  if (!digits(num_part)) fail();

  BigInt num(std::string(num_part), 10);
  if (negative) num = -num;
  BigInt den = den_part.empty() ? BigInt(1) : BigInt(std::string(den_part), 10);
  if (sgn(den) == 0) throw ParseError("not a rational (zero denominator): \"" + std::string(full) + "\"");
  return Rational(num, den);
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::pow(unsigned long e) const {
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), e);
  // canonical inputs stay canonical under coordinate-wise powers
  Rational out;
  mpq_set_num(out.v_.get_mpq_t(), n.get_mpz_t());
  mpq_set_den(out.v_.get_mpq_t(), d.get_mpz_t());
  return out;
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& r) {
  v_ += r.v_;
  return *this;
}
Rational& Rational::operator-=(const Rational& r) {
  v_ -= r.v_;
  return *this;
}
Rational& Rational::operator*=(const Rational& r) {
  v_ *= r.v_;
  return *this;
}
Rational& Rational::operator/=(const Rational& r) {
  if (r.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= r.v_;
  return *this;
}

Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace lcz
