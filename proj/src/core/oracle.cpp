#include "core/oracle.hpp"

#include <stdexcept>
#include <vector>

#include "core/error.hpp"

namespace lcz {

namespace {

void require_prime(unsigned q) {
  if (q < 2) throw std::invalid_argument("oracle: q must be a prime (got " + std::to_string(q) + ")");
  for (unsigned d = 2; d * d <= q; ++d)
    if (q % d == 0)
      throw std::invalid_argument("oracle: q must be a prime (got " + std::to_string(q) + ")");
}

// q^n with the feasibility cap applied; LimitError past the cap.
std::uint64_t checked_power(unsigned q, unsigned n, std::uint64_t cap, const char* op) {
  std::uint64_t v = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (v > cap / q)
      throw LimitError(std::string(op) + ": q^n exceeds the feasibility cap " +
                       std::to_string(cap));
    v *= q;
  }
  if (v > cap)
    throw LimitError(std::string(op) + ": q^n exceeds the feasibility cap " + std::to_string(cap));
  return v;
}

}  // namespace

BigInt count_subset_chains(unsigned n) {
  if (n > 8) throw LimitError("count_subset_chains: n must be <= 8");
  // Depth-first over strictly growing subsets, one element per step.
  const unsigned full = (1u << n) - 1;
  BigInt count = 0;
  std::vector<unsigned> stack = {0};
  while (!stack.empty()) {
    const unsigned mask = stack.back();
    stack.pop_back();
    if (mask == full) {
      count += 1;
      continue;
    }
    for (unsigned e = 0; e < n; ++e)
      if (!(mask & (1u << e))) stack.push_back(mask | (1u << e));
  }
  return count;
}

namespace {

// Vectors of F_q^n encoded as base-q digit strings in a uint32.
class VectorSpace {
public:
  VectorSpace(unsigned n, unsigned q, std::uint64_t size)
      : n_(n), q_(q), size_(static_cast<std::uint32_t>(size)) {}

  std::uint32_t size() const { return size_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t out = 0;
    std::uint32_t place = 1;
    for (unsigned i = 0; i < n_; ++i) {
      const unsigned da = a % q_;
      const unsigned db = b % q_;
      out += ((da + db) % q_) * place;
      a /= q_;
      b /= q_;
      place *= q_;
    }
    return out;
  }

  std::uint32_t scalar_mul(unsigned c, std::uint32_t v) const {
    std::uint32_t out = 0;
    std::uint32_t place = 1;
    for (unsigned i = 0; i < n_; ++i) {
      out += ((c * (v % q_)) % q_) * place;
      v /= q_;
      place *= q_;
    }
    return out;
  }

private:
  unsigned n_;
  unsigned q_;
  std::uint32_t size_;
};

// Membership table of a subspace, grown by one generator at a time.
struct SubspaceSet {
  explicit SubspaceSet(const VectorSpace& space)
      : member(space.size(), false), elements{0}, dim(0) {
    member[0] = true;
  }

  // span(V, w) for w outside V: adds q^dim (q-1) new elements.
  void extend(const VectorSpace& space, unsigned q, std::uint32_t w) {
    const std::vector<std::uint32_t> base = elements;
    for (unsigned c = 1; c < q; ++c) {
      const std::uint32_t cw = space.scalar_mul(c, w);
      for (const std::uint32_t v : base) {
        const std::uint32_t u = space.add(v, cw);
        member[u] = true;
        elements.push_back(u);
      }
    }
    ++dim;
  }

  std::vector<bool> member;
  std::vector<std::uint32_t> elements;
  unsigned dim;
};

BigInt flags_above(const VectorSpace& space, unsigned n, unsigned q, const SubspaceSet& current) {
  if (current.dim == n) return BigInt(1);
  // Each (dim+1)-dimensional W over V arises from exactly q^{dim+1} - q^dim
  // extension vectors w in W \ V, so divide the vector-level count back out.
  BigInt total = 0;
  for (std::uint32_t w = 1; w < space.size(); ++w) {
    if (current.member[w]) continue;
    SubspaceSet next = current;
    next.extend(space, q, w);
    total += flags_above(space, n, q, next);
  }
  std::uint64_t q_dim = 1;
  for (unsigned i = 0; i < current.dim; ++i) q_dim *= q;
  const BigInt multiplicity = BigInt(static_cast<unsigned long>(q_dim * (q - 1)));
  if (mpz_divisible_p(total.get_mpz_t(), multiplicity.get_mpz_t()) == 0)
    throw std::logic_error("flag enumeration count not divisible by the extension multiplicity");
  BigInt out;
  mpz_divexact(out.get_mpz_t(), total.get_mpz_t(), multiplicity.get_mpz_t());
  return out;
}

}  // namespace

BigInt count_complete_flags(unsigned n, unsigned q) {
  require_prime(q);
  const std::uint64_t size = checked_power(q, n, 1u << 12, "count_complete_flags");
  if (n == 0) return BigInt(1);
  const VectorSpace space(n, q, size);
  return flags_above(space, n, q, SubspaceSet(space));
}

namespace {

// Enumerates k x n matrices in reduced row echelon form with the given pivot
// columns by running through all free-entry assignments; validates each
// matrix before counting it.
class RrefEnumerator {
public:
  RrefEnumerator(unsigned n, unsigned k, unsigned q) : n_(n), k_(k), q_(q) {}

  BigInt count() {
    std::vector<unsigned> pivots;
    BigInt total = 0;
    choose_pivots(0, 0, pivots, total);
    return total;
  }

private:
  void choose_pivots(unsigned from, unsigned chosen, std::vector<unsigned>& pivots,
                     BigInt& total) {
    if (chosen == k_) {
      count_for_pivots(pivots, total);
      return;
    }
    for (unsigned col = from; col + (k_ - chosen) <= n_; ++col) {
      pivots.push_back(col);
      choose_pivots(col + 1, chosen + 1, pivots, total);
      pivots.pop_back();
    }
  }

  // Free entries: row i, column j with j > pivot(i) and j not a pivot column
  // of any row (entries above each pivot are forced to zero, left of the
  // pivot as well).
  void count_for_pivots(const std::vector<unsigned>& pivots, BigInt& total) {
    std::vector<std::pair<unsigned, unsigned>> free_cells;
    std::vector<bool> is_pivot(n_, false);
    for (unsigned col : pivots) is_pivot[col] = true;
    for (unsigned row = 0; row < k_; ++row)
      for (unsigned col = pivots[row] + 1; col < n_; ++col)
        if (!is_pivot[col]) free_cells.emplace_back(row, col);

    std::vector<unsigned> values(free_cells.size(), 0);
    while (true) {
      std::vector<std::vector<unsigned>> mat(k_, std::vector<unsigned>(n_, 0));
      for (unsigned row = 0; row < k_; ++row) mat[row][pivots[row]] = 1;
      for (std::size_t i = 0; i < free_cells.size(); ++i)
        mat[free_cells[i].first][free_cells[i].second] = values[i];
      if (!valid_rref(mat, pivots)) throw std::logic_error("RREF enumeration produced a non-RREF matrix");
      total += 1;

      // odometer step over the free entries
      std::size_t pos = 0;
      while (pos < values.size() && ++values[pos] == q_) values[pos++] = 0;
      if (pos == values.size()) break;
    }
  }

  bool valid_rref(const std::vector<std::vector<unsigned>>& mat,
                  const std::vector<unsigned>& pivots) const {
    for (unsigned row = 0; row < k_; ++row) {
      const unsigned p = pivots[row];
      for (unsigned col = 0; col < p; ++col)
        if (mat[row][col] != 0) return false;
      if (mat[row][p] != 1) return false;
      for (unsigned other = 0; other < k_; ++other)
        if (other != row && mat[other][p] != 0) return false;
    }
    for (unsigned row = 1; row < k_; ++row)
      if (pivots[row] <= pivots[row - 1]) return false;
    return true;
  }

  unsigned n_;
  unsigned k_;
  unsigned q_;
};

}  // namespace

BigInt count_subspaces(unsigned n, unsigned k, unsigned q) {
  if (k > n) throw std::invalid_argument("count_subspaces: k > n");
  require_prime(q);
  checked_power(q, n, 1u << 16, "count_subspaces");
  if (k == 0) return BigInt(1);  // only the zero subspace
  return RrefEnumerator(n, k, q).count();
}

}  // namespace lcz
