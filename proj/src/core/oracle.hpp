#pragma once

#include <cstdint>

#include "core/rational.hpp"

namespace lcz {

/// Chains of subsets {} = S_0 < S_1 < ... < S_n = {1..n} with |S_i| = i,
/// counted by explicit enumeration over element insertions. n <= 8.
BigInt count_subset_chains(unsigned n);

/// k-dimensional subspaces of the n-dimensional space over the prime field
/// F_q, counted by enumerating reduced row echelon bases. Requires q prime
/// and q^n <= 2^16.
BigInt count_subspaces(unsigned n, unsigned k, unsigned q);

/// Complete flags 0 = V_0 < V_1 < ... < V_n = F_q^n (dim V_i = i), counted
/// by recursive enumeration of extension vectors. Requires q prime and
/// q^n <= 2^12.
BigInt count_complete_flags(unsigned n, unsigned q);

}  // namespace lcz
