#include "soslen/monomial.hpp"

#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <tuple>

#include "soslen/errors.hpp"

namespace soslen {

namespace {

// C(a, b) in 64 bits, 0 when b > a; throws on overflow.
std::size_t small_binomial(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  unsigned __int128 r = 1;
  for (long i = 1; i <= b; ++i) {
    r = r * static_cast<unsigned __int128>(a - b + i) / static_cast<unsigned __int128>(i);
    if (r > std::numeric_limits<std::size_t>::max()) {
      throw ArgumentError("binomial coefficient overflows 64 bits");
    }
  }
  return static_cast<std::size_t>(r);
}

}  // namespace

int Monomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

std::size_t num_monomials(int n, int e) {
  if (n < 1 || e < 0) throw ArgumentError("num_monomials requires n >= 1 and e >= 0");
  return small_binomial(n + e - 1, n - 1);
}

std::size_t mono_rank(std::span<const int> exponents) {
  const int n = static_cast<int>(exponents.size());
  if (n < 1) throw ArgumentError("monomial needs at least one variable");
  int remaining = 0;
  for (int a : exponents) {
    if (a < 0) throw ArgumentError("negative exponent");
    remaining += a;
  }
  // Count vectors with the same prefix and a larger entry at position i.
  std::size_t rank = 0;
  for (int i = 0; i + 1 < n; ++i) {
    const int a = exponents[static_cast<std::size_t>(i)];
    const int above = remaining - a - 1;
    if (above >= 0) rank += small_binomial(above + n - i - 1, n - i - 1);
    remaining -= a;
  }
  return rank;
}

std::size_t mono_rank(std::span<const int> exponents, int degree) {
  const int total = std::accumulate(exponents.begin(), exponents.end(), 0);
  if (total != degree) {
    throw ArgumentError("monomial degree " + std::to_string(total) + " does not match " +
                        std::to_string(degree));
  }
  return mono_rank(exponents);
}

std::vector<int> mono_unrank(int n, int e, std::size_t index) {
  const std::size_t total = num_monomials(n, e);
  if (index >= total) {
    throw ArgumentError("monomial index " + std::to_string(index) + " out of range " +
                        std::to_string(total));
  }
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  int remaining = e;
  for (int i = 0; i + 1 < n; ++i) {
    // Largest entry first: block of vectors with entry a at position i has
    // size C(remaining - a + n - i - 2, n - i - 2).
    int a = remaining;
    for (;; --a) {
      const std::size_t block = small_binomial(remaining - a + n - i - 2, n - i - 2);
      if (index < block) break;
      index -= block;
    }
    exps[static_cast<std::size_t>(i)] = a;
    remaining -= a;
  }
  exps[static_cast<std::size_t>(n - 1)] = remaining;
  return exps;
}

MonomialBasis::MonomialBasis(int n, int e) : n_(n), e_(e), size_(num_monomials(n, e)) {
  flat_.reserve(size_ * static_cast<std::size_t>(n));
  // Walk the lex order directly: the successor of a vector moves one unit
  // from the last nonzero non-final slot to the next slot and gathers the tail.
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  cur[0] = e;
  for (std::size_t k = 0; k < size_; ++k) {
    flat_.insert(flat_.end(), cur.begin(), cur.end());
    if (k + 1 == size_) break;
    int i = n - 2;
    while (cur[static_cast<std::size_t>(i)] == 0) --i;
    const int tail = cur[static_cast<std::size_t>(n - 1)];
    cur[static_cast<std::size_t>(n - 1)] = 0;
    --cur[static_cast<std::size_t>(i)];
    cur[static_cast<std::size_t>(i + 1)] = tail + 1;
  }
}

ProductTable::ProductTable(int n, int a, int b)
    : rows_(num_monomials(n, a)), cols_(num_monomials(n, b)), table_(rows_ * cols_) {
  const MonomialBasis& left = monomial_basis(n, a);
  const MonomialBasis& right = monomial_basis(n, b);
  std::vector<int> sum(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < rows_; ++i) {
    const auto ei = left.exponents(i);
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto ej = right.exponents(j);
      for (std::size_t v = 0; v < sum.size(); ++v) sum[v] = ei[v] + ej[v];
      table_[i * cols_ + j] = static_cast<std::uint32_t>(mono_rank(sum));
    }
  }
}

namespace {

std::mutex& table_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

const MonomialBasis& monomial_basis(int n, int e) {
  static std::map<std::pair<int, int>, std::unique_ptr<MonomialBasis>> cache;
  std::lock_guard lock(table_mutex());
  auto& slot = cache[{n, e}];
  if (!slot) slot = std::make_unique<MonomialBasis>(n, e);
  return *slot;
}

const ProductTable& product_table(int n, int a, int b) {
  static std::map<std::tuple<int, int, int>, std::unique_ptr<ProductTable>> cache;
  {
    std::lock_guard lock(table_mutex());
    auto it = cache.find({n, a, b});
    if (it != cache.end()) return *it->second;
  }
  // Built outside the lock: the constructor itself takes it for the bases.
  auto table = std::make_unique<ProductTable>(n, a, b);
  std::lock_guard lock(table_mutex());
  auto& slot = cache[{n, a, b}];
  if (!slot) slot = std::move(table);
  return *slot;
}

}  // namespace soslen
