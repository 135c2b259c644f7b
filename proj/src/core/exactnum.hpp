#pragma once

#include "core/rational.hpp"

namespace lcz {

/// n! as an exact rational (denominator 1).
Rational factorial(unsigned n);

/// q-integer [i]_q = 1 + q + ... + q^{i-1}, i >= 1.
Rational q_integer(unsigned i, const Rational& q);

/// q-factorial [n]_q! = [1]_q [2]_q ... [n]_q; the empty product is 1.
Rational q_factorial(unsigned n, const Rational& q);

/// Gaussian binomial [n]_q! / ([k]_q! [n-k]_q!), k <= n. Throws
/// std::domain_error naming the vanishing factor when some [i]_q = 0, i <= n.
Rational gaussian_binomial(unsigned n, unsigned k, const Rational& q);

/// Galois number G_n(q) = sum over k of the Gaussian binomials (n k)_q.
Rational galois_number(unsigned n, const Rational& q);

}  // namespace lcz
