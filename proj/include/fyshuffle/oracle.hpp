#ifndef FYSHUFFLE_ORACLE_HPP_
#define FYSHUFFLE_ORACLE_HPP_

// Exact output distributions, computed without sampling.
//
// Two independent routes:
//
//   compositional  Takes the uniform sampler's 1/n per value as given and
//                  multiplies masses down the shuffle recursion. No bits.
//   bit level      Assumes only fair bits. Runs a sampler on every bit prefix
//                  up to a depth cutoff; a run that finishes after reading k
//                  bits contributes the cylinder mass 2^-k to its outcome.
//                  Prefixes still running at the cutoff are reported as
//                  unresolved mass, giving a [lower, lower + unresolved]
//                  interval per outcome.
//
// Disagreement between the two localizes a bug to the uniform sampler or to
// the shuffle logic. All arithmetic is exact rational.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "fyshuffle/bitsource.hpp"
#include "fyshuffle/permutation.hpp"
#include "fyshuffle/sampler.hpp"
#include "fyshuffle/shuffle.hpp"

namespace fyshuffle {

using Rational = boost::multiprecision::cpp_rational;

// The oracle declined an input outside its guarded range.
class OracleRefusal : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r) << '/'
     << boost::multiprecision::denominator(r);
  return os.str();
}

inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(BigInt(text));
  return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

inline Rational pow2_inverse(unsigned k) {
  return Rational(BigInt(1), BigInt(1) << k);
}

template <class O>
struct ExactDistribution {
  std::map<O, Rational> mass;

  Rational at(const O& outcome) const {
    auto it = mass.find(outcome);
    return it == mass.end() ? Rational(0) : it->second;
  }

  Rational total() const {
    Rational sum = 0;
    for (const auto& [o, m] : mass) sum += m;
    return sum;
  }
};

template <class O>
struct IntervalDistribution {
  std::map<O, Rational> lower;
  Rational unresolved = 0;

  Rational lower_at(const O& outcome) const {
    auto it = lower.find(outcome);
    return it == lower.end() ? Rational(0) : it->second;
  }
  Rational upper_at(const O& outcome) const {
    return lower_at(outcome) + unresolved;
  }
  bool brackets(const O& outcome, const Rational& p) const {
    return lower_at(outcome) <= p && p <= upper_at(outcome);
  }
  Rational resolved() const {
    Rational sum = 0;
    for (const auto& [o, m] : lower) sum += m;
    return sum;
  }
};

inline std::ostream& operator<<(std::ostream& os, PermIndex p) {
  return os << p.rank;
}

// One "<outcome> <numerator>/<denominator>" line per outcome.
template <class O>
std::string to_text(const ExactDistribution<O>& dist) {
  std::ostringstream os;
  for (const auto& [o, m] : dist.mass) os << o << ' ' << to_string(m) << '\n';
  return os.str();
}

// One "<outcome> <lower> <upper>" line per outcome, then "unresolved <mass>".
template <class O>
std::string to_text(const IntervalDistribution<O>& dist) {
  std::ostringstream os;
  for (const auto& [o, m] : dist.lower) {
    os << o << ' ' << to_string(m) << ' ' << to_string(m + dist.unresolved)
       << '\n';
  }
  os << "unresolved " << to_string(dist.unresolved) << '\n';
  return os.str();
}

// Parses the ExactDistribution text form back, keyed by outcome text.
inline std::map<std::string, Rational> parse_distribution_text(
    const std::string& text) {
  std::map<std::string, Rational> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto space = line.rfind(' ');
    if (space == std::string::npos) {
      throw std::invalid_argument("distribution line " +
                                  std::to_string(lineno) + " has no mass");
    }
    out[line.substr(0, space)] = parse_rational(line.substr(space + 1));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Compositional route.

namespace detail {

// Probability that Shuffle(xs, i) agrees with `target` on positions i.. .
// Split on the first draw: exactly one j in [i, n) moves target[i] into
// position i (mass 1/(n-i)), and the remaining shuffle must then produce
// target[i+1..] from swap(xs, i, j). The two factors multiply because the
// draw's value is independent of the bits it leaves behind.
inline Rational prefix_match_probability(const std::vector<std::size_t>& xs,
                                         const std::vector<std::size_t>& target,
                                         std::size_t i) {
  const std::size_t n = xs.size();
  if (n <= 1 + i) {
    for (std::size_t k = i; k < n; ++k) {
      if (xs[k] != target[k]) return 0;
    }
    return 1;
  }
  for (std::size_t j = i; j < n; ++j) {
    if (xs[j] == target[i]) {
      const Rational first(1, static_cast<long long>(n - i));
      return first *
             prefix_match_probability(swap_elements(xs, i, j), target, i + 1);
    }
  }
  return 0;
}

}  // namespace detail

inline ExactDistribution<PermIndex> exact_shuffle_distribution(unsigned n) {
  if (n < 1 || n > 8) {
    throw OracleRefusal("exact shuffle distribution supports 1 <= n <= 8");
  }
  const auto xs = identity_permutation(n);
  const std::uint64_t count = factorial_u64(n);
  ExactDistribution<PermIndex> dist;
  for (std::uint64_t r = 0; r < count; ++r) {
    const auto target = perm_unrank({r}, n);
    dist.mass.emplace(PermIndex{r},
                      detail::prefix_match_probability(xs, target, 0));
  }
  return dist;
}

// ---------------------------------------------------------------------------
// Path enumeration for the three in-place variants.

struct DrawPath {
  std::vector<std::size_t> draws;
  std::vector<std::size_t> result;
  // Product of the interval widths; the path's mass is 1/denominator.
  std::uint64_t denominator;
};

namespace detail {

inline std::pair<std::size_t, std::size_t> draw_range(ShuffleVariant v,
                                                      std::size_t step,
                                                      std::size_t n) {
  switch (v) {
    case ShuffleVariant::fisher_yates: return {step, n};
    case ShuffleVariant::sattolo: return {step + 1, n};
    case ShuffleVariant::naive: return {0, n};
  }
  return {0, 0};
}

inline std::size_t step_count(ShuffleVariant v, std::size_t n) {
  if (v == ShuffleVariant::naive) return n;
  return n > 1 ? n - 1 : 0;
}

template <class Visit>
void walk_paths(ShuffleVariant v, std::size_t n, std::size_t step,
                std::vector<std::size_t>& a, std::vector<std::size_t>& draws,
                std::uint64_t denominator, Visit& visit) {
  if (step == step_count(v, n)) {
    visit(DrawPath{draws, a, denominator});
    return;
  }
  const auto [lo, hi] = draw_range(v, step, n);
  for (std::size_t j = lo; j < hi; ++j) {
    std::swap(a[step], a[j]);
    draws.push_back(j);
    walk_paths(v, n, step + 1, a, draws, denominator * (hi - lo), visit);
    draws.pop_back();
    std::swap(a[step], a[j]);
  }
}

}  // namespace detail

// Calls visit(const DrawPath&) once for every sequence of draws the variant
// can make on the identity array of length n.
template <class Visit>
void enumerate_draw_paths(ShuffleVariant v, std::size_t n, Visit visit) {
  auto a = identity_permutation(n);
  std::vector<std::size_t> draws;
  detail::walk_paths(v, n, 0, a, draws, 1, visit);
}

inline ExactDistribution<PermIndex> exact_variant_distribution(
    ShuffleVariant variant, unsigned n) {
  if (n < 1 || n > 7) {
    throw OracleRefusal("exact variant distribution supports 1 <= n <= 7");
  }
  // Paths sharing an outcome and a denominator are summed as integers first.
  std::map<PermIndex, std::map<std::uint64_t, std::uint64_t>> tally;
  enumerate_draw_paths(variant, n, [&](const DrawPath& path) {
    ++tally[perm_rank(path.result)][path.denominator];
  });
  ExactDistribution<PermIndex> dist;
  for (const auto& [rank, by_den] : tally) {
    Rational m = 0;
    for (const auto& [den, count] : by_den) {
      m += Rational(BigInt(count), BigInt(den));
    }
    dist.mass.emplace(rank, m);
  }
  return dist;
}

// ---------------------------------------------------------------------------
// Bit-level route.

inline constexpr std::size_t kDefaultOutcomeCap = 1u << 16;
inline constexpr unsigned kDefaultBitDepth = 48;

template <class O>
IntervalDistribution<O> bitlevel_distribution(
    const Sampler<O>& sampler, unsigned depth,
    std::size_t max_outcomes = kDefaultOutcomeCap) {
  if (depth > 64) throw OracleRefusal("bit-level depth is capped at 64");
  // Masses are accumulated as integer multiples of 2^-depth.
  std::map<O, BigInt> hits;
  BigInt open = 0;
  std::vector<std::vector<bool>> stack{{}};
  while (!stack.empty()) {
    std::vector<bool> prefix = std::move(stack.back());
    stack.pop_back();
    const auto len = static_cast<unsigned>(prefix.size());
    BitSource src = BitSource::from_tape(RecordedTape{prefix});
    try {
      O value = sampler(src);
      // The run examined every bit of the prefix (the prefix only grows when
      // the sampler asks for more), so its cylinder is the whole preimage.
      hits[std::move(value)] += BigInt(1) << (depth - len);
      if (hits.size() > max_outcomes) {
        throw OracleRefusal("bit-level enumeration exceeded " +
                            std::to_string(max_outcomes) + " outcomes");
      }
    } catch (const TapeExhausted&) {
      if (len == depth) {
        open += 1;
        continue;
      }
      prefix.push_back(true);
      stack.push_back(prefix);
      prefix.back() = false;
      stack.push_back(std::move(prefix));
    }
  }
  const BigInt scale = BigInt(1) << depth;
  IntervalDistribution<O> dist;
  for (auto& [o, h] : hits) dist.lower.emplace(o, Rational(h, scale));
  dist.unresolved = Rational(open, scale);
  return dist;
}

inline Sampler<PermIndex> shuffle_rank_sampler(std::size_t n) {
  return map(shuffle_model(identity_permutation(n)),
             [](const std::vector<std::size_t>& p) { return perm_rank(p); });
}

inline IntervalDistribution<PermIndex> bitlevel_shuffle_check(
    unsigned n, unsigned depth = kDefaultBitDepth) {
  if (n < 1 || n > 4) {
    throw OracleRefusal("bit-level shuffle check supports 1 <= n <= 4");
  }
  if (depth > 64) throw OracleRefusal("bit-level depth is capped at 64");
  return bitlevel_distribution(shuffle_rank_sampler(n), depth);
}

// ---------------------------------------------------------------------------
// Factorization of a joint distribution into its marginals.

struct FactorizationReport {
  bool factorizes = true;
  std::size_t cells_checked = 0;
  std::string first_violation;
};

namespace detail {

// Checks joint(a, b) * total == left(a) * right(b) for every pair of observed
// marginal values, including pairs absent from the joint.
template <class A, class B>
FactorizationReport check_product(const std::map<std::pair<A, B>, Rational>& joint) {
  std::map<A, Rational> left;
  std::map<B, Rational> right;
  Rational total = 0;
  for (const auto& [ab, m] : joint) {
    left[ab.first] += m;
    right[ab.second] += m;
    total += m;
  }
  FactorizationReport report;
  for (const auto& [a, ma] : left) {
    for (const auto& [b, mb] : right) {
      ++report.cells_checked;
      auto it = joint.find({a, b});
      const Rational jm = it == joint.end() ? Rational(0) : it->second;
      if (jm * total != ma * mb && report.factorizes) {
        report.factorizes = false;
        std::ostringstream os;
        os << "cell (" << a << ", " << b << "): joint " << to_string(jm)
           << " vs product " << to_string(ma * mb / total);
        report.first_violation = os.str();
      }
    }
  }
  return report;
}

}  // namespace detail

// For the Fisher-Yates path enumeration on n elements: the first draw j and
// the permutation the remaining draws apply to positions 1..n-1 are
// independent, i.e. their joint exact mass is the product of the marginals.
inline FactorizationReport shuffle_draw_factorization(
    unsigned n, ShuffleVariant variant = ShuffleVariant::fisher_yates) {
  if (n < 2 || n > 6) {
    throw OracleRefusal("draw factorization check supports 2 <= n <= 6");
  }
  std::map<std::pair<std::size_t, std::uint64_t>, Rational> joint;
  enumerate_draw_paths(variant, n, [&](const DrawPath& path) {
    // Replay draws 1.. on a fresh identity to get the "rest" permutation.
    auto rest = identity_permutation(n);
    const auto steps = path.draws.size();
    for (std::size_t s = 1; s < steps; ++s) {
      std::swap(rest[s], rest[path.draws[s]]);
    }
    joint[{path.draws.empty() ? 0 : path.draws[0], perm_rank(rest).rank}] +=
        Rational(BigInt(1), BigInt(path.denominator));
  });
  return detail::check_product(joint);
}

// Runs `first`, then reads tail_bits fair bits, and enumerates at bit level.
// Conditioned on the runs that finished within `depth` bits, checks that the
// value and the tail pattern are independent. Truncation discards whole
// rejection rounds, so for a well-behaved sampler the resolved part factorizes
// exactly.
template <class V>
FactorizationReport value_rest_factorization(const Sampler<V>& first,
                                             unsigned tail_bits,
                                             unsigned depth) {
  if (tail_bits > 16) throw OracleRefusal("tail_bits is capped at 16");
  auto joint_sampler =
      bind(first, [tail_bits](const V& v) {
        return Sampler<std::pair<V, std::uint32_t>>(
            [v, tail_bits](BitSource& src) {
              std::uint32_t pattern = 0;
              for (unsigned b = 0; b < tail_bits; ++b) {
                pattern = (pattern << 1) | static_cast<std::uint32_t>(src.next_bit());
              }
              return std::pair<V, std::uint32_t>(v, pattern);
            });
      });
  auto dist = bitlevel_distribution(joint_sampler, depth);
  return detail::check_product(dist.lower);
}

}  // namespace fyshuffle

#endif  // FYSHUFFLE_ORACLE_HPP_
