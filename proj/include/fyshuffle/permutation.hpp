#ifndef FYSHUFFLE_PERMUTATION_HPP_
#define FYSHUFFLE_PERMUTATION_HPP_

// Factorials and the Lehmer-code bijection between permutations of
// {0, ..., n-1} and ranks in [0, n!). Identity has rank 0, the reversal has
// rank n! - 1.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace fyshuffle {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

// Exact for n <= 20.
inline std::uint64_t factorial_u64(unsigned n) {
  if (n > 20) throw std::overflow_error("factorial exceeds 64 bits");
  std::uint64_t f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

struct PermIndex {
  std::uint64_t rank = 0;
  friend auto operator<=>(const PermIndex&, const PermIndex&) = default;
};

inline PermIndex perm_rank(std::span<const std::size_t> p) {
  const std::size_t n = p.size();
  if (n > 20) throw std::invalid_argument("permutation too long to rank");
  std::vector<bool> seen(n, false);
  for (auto v : p) {
    if (v >= n || seen[v]) {
      throw std::invalid_argument("input is not a permutation of 0..n-1");
    }
    seen[v] = true;
  }
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t smaller_after = 0;
    for (std::size_t k = i + 1; k < n; ++k) smaller_after += p[k] < p[i];
    rank = rank * (n - i) + smaller_after;
  }
  return {rank};
}

inline std::vector<std::size_t> perm_unrank(PermIndex index, std::size_t n) {
  if (index.rank >= factorial_u64(static_cast<unsigned>(n))) {
    throw std::invalid_argument("rank out of range for n");
  }
  // Factorial-base digits, least significant last.
  std::vector<std::size_t> digits(n);
  std::uint64_t r = index.rank;
  for (std::size_t i = n; i-- > 0;) {
    const std::size_t base = n - i;
    digits[i] = r % base;
    r /= base;
  }
  std::vector<std::size_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;
  std::vector<std::size_t> out;
  out.reserve(n);
  for (auto d : digits) {
    out.push_back(pool[d]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return out;
}

inline std::vector<std::size_t> identity_permutation(std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  return p;
}

// Number of cycles, counting fixed points as cycles of length one.
inline std::size_t cycle_count(std::span<const std::size_t> p) {
  std::vector<bool> seen(p.size(), false);
  std::size_t cycles = 0;
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (std::size_t k = start; !seen[k]; k = p[k]) seen[k] = true;
  }
  return cycles;
}

}  // namespace fyshuffle

#endif  // FYSHUFFLE_PERMUTATION_HPP_
