#ifndef FYSHUFFLE_STATS_HPP_
#define FYSHUFFLE_STATS_HPP_

// Pearson chi-squared detectors at significance 0.001.
//
// chi_squared_uniformity      goodness of fit against equal bins
// shuffle_bias_audit          permutation histogram of a shuffle variant
// independence_test           value of a sampler vs. the next coin
// measure_preservation_test   tail bits after a sampler, per value
//
// All detectors draw from a single ChaCha20 source keyed by the caller, so a
// report is a pure function of its arguments. Inputs that cannot support a
// valid test (too few samples per cell, too few bins) raise TestRefused
// rather than producing a verdict.

#include <array>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <map>
#include <sstream>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "fyshuffle/bitsource.hpp"
#include "fyshuffle/detail/chi2_table.hpp"
#include "fyshuffle/oracle.hpp"
#include "fyshuffle/permutation.hpp"
#include "fyshuffle/sampler.hpp"
#include "fyshuffle/shuffle.hpp"

namespace fyshuffle {

inline constexpr double kSignificance = 0.001;
inline constexpr double kMinExpectedPerCell = 5.0;

class TestRefused : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Verdict { pass, fail };

inline std::string_view to_string(Verdict v) {
  return v == Verdict::pass ? "pass" : "fail";
}

inline double chi2_critical_value(unsigned degrees_of_freedom) {
  if (degrees_of_freedom == 0 ||
      degrees_of_freedom > static_cast<unsigned>(detail::kChi2TableMaxDf)) {
    throw TestRefused("no critical value for " +
                      std::to_string(degrees_of_freedom) +
                      " degrees of freedom (table covers 1..5040)");
  }
  return detail::kChi2Critical001[degrees_of_freedom - 1];
}

namespace detail {

inline std::string format_real(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

}  // namespace detail

struct ChiSquaredReport {
  std::string test;
  double statistic = 0;
  unsigned degrees_of_freedom = 0;
  double critical_value = 0;
  Verdict verdict = Verdict::pass;
  std::uint64_t sample_count = 0;

  std::string to_text() const {
    std::ostringstream os;
    os << "test " << test << '\n'
       << "statistic " << detail::format_real(statistic) << '\n'
       << "degrees_of_freedom " << degrees_of_freedom << '\n'
       << "critical_value " << detail::format_real(critical_value) << '\n'
       << "significance " << kSignificance << '\n'
       << "sample_count " << sample_count << '\n'
       << "verdict " << to_string(verdict) << '\n';
    return os.str();
  }
};

struct IndependenceReport {
  std::vector<std::string> row_labels;
  std::vector<std::string> column_labels;
  std::vector<std::vector<std::uint64_t>> contingency;
  double statistic = 0;
  unsigned degrees_of_freedom = 0;
  double critical_value = 0;
  Verdict verdict = Verdict::pass;
  std::uint64_t sample_count = 0;

  std::string to_text() const {
    std::ostringstream os;
    os << "test independence\n";
    for (std::size_t r = 0; r < contingency.size(); ++r) {
      os << "row " << row_labels[r];
      for (auto c : contingency[r]) os << ' ' << c;
      os << '\n';
    }
    os << "statistic " << detail::format_real(statistic) << '\n'
       << "degrees_of_freedom " << degrees_of_freedom << '\n'
       << "critical_value " << detail::format_real(critical_value) << '\n'
       << "sample_count " << sample_count << '\n'
       << "verdict " << to_string(verdict) << '\n';
    return os.str();
  }
};

inline ChiSquaredReport chi_squared_uniformity(
    std::span<const std::uint64_t> observed, std::uint64_t expected_total) {
  if (observed.size() < 2) throw TestRefused("need at least 2 bins");
  std::uint64_t sum = 0;
  for (auto o : observed) sum += o;
  if (sum != expected_total) {
    throw std::invalid_argument("observed counts sum to " + std::to_string(sum) +
                                ", expected " + std::to_string(expected_total));
  }
  const double expected =
      static_cast<double>(expected_total) / static_cast<double>(observed.size());
  if (expected < kMinExpectedPerCell) {
    throw TestRefused("expected count per bin " + detail::format_real(expected) +
                      " is below 5");
  }
  double statistic = 0;
  for (auto o : observed) {
    const double d = static_cast<double>(o) - expected;
    statistic += d * d / expected;
  }
  ChiSquaredReport report;
  report.test = "uniformity";
  report.statistic = statistic;
  report.degrees_of_freedom = static_cast<unsigned>(observed.size() - 1);
  report.critical_value = chi2_critical_value(report.degrees_of_freedom);
  report.verdict =
      statistic <= report.critical_value ? Verdict::pass : Verdict::fail;
  report.sample_count = expected_total;
  return report;
}

// Noncentrality plus degrees of freedom: the mean Pearson statistic when
// samples are drawn from `masses` but tested against equal bins.
inline double expected_uniformity_statistic(std::span<const Rational> masses,
                                            std::uint64_t samples) {
  const auto bins = static_cast<double>(masses.size());
  Rational sum_sq = 0;
  const Rational uniform(1, static_cast<long long>(masses.size()));
  for (const auto& p : masses) sum_sq += (p - uniform) * (p - uniform);
  const double lambda =
      static_cast<double>(samples) * bins * sum_sq.convert_to<double>();
  return (bins - 1) + lambda;
}

// Mass per permutation rank, with zero for ranks the distribution omits.
inline std::vector<Rational> masses_by_rank(
    const ExactDistribution<PermIndex>& dist, unsigned n) {
  std::vector<Rational> out(factorial_u64(n));
  for (const auto& [rank, m] : dist.mass) out.at(rank.rank) = m;
  return out;
}

inline ChiSquaredReport shuffle_bias_audit(ShuffleVariant variant, unsigned n,
                                           std::uint64_t samples,
                                           const SeedKey& key) {
  if (n < 2 || n > 7) throw TestRefused("shuffle audit supports 2 <= n <= 7");
  const std::uint64_t bins = factorial_u64(n);
  if (samples < 5 * bins) {
    throw TestRefused("need at least " + std::to_string(5 * bins) +
                      " samples for n = " + std::to_string(n));
  }
  std::vector<std::uint64_t> counts(bins, 0);
  BitSource src = BitSource::from_seed(key);
  std::vector<std::size_t> a(n);
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (std::size_t i = 0; i < n; ++i) a[i] = i;
    shuffle_variant_in_place(variant, std::span<std::size_t>(a), src);
    ++counts[perm_rank(a).rank];
  }
  auto report = chi_squared_uniformity(counts, samples);
  report.test = "shuffle_bias_audit " + std::string(to_string(variant)) +
                " n=" + std::to_string(n);
  return report;
}

namespace detail {

template <class S>
std::string label_of(const S& value) {
  std::ostringstream os;
  if constexpr (std::is_same_v<S, bool>) {
    os << (value ? "true" : "false");
  } else {
    os << value;
  }
  return os.str();
}

}  // namespace detail

// For each run: v = first(src), then c = the next bit of the same source.
// Tests the (v, c) contingency table for independence.
template <class S>
IndependenceReport independence_test(const Sampler<S>& first,
                                     std::uint64_t samples,
                                     const SeedKey& key) {
  std::map<S, std::array<std::uint64_t, 2>> table;
  BitSource src = BitSource::from_seed(key);
  for (std::uint64_t s = 0; s < samples; ++s) {
    S v = first(src);
    const bool c = src.next_bit();
    ++table[v][c ? 1 : 0];
    if (table.size() > 16) {
      throw TestRefused("independence test supports at most 16 values");
    }
  }
  if (table.size() < 2) {
    throw TestRefused("sampler produced a single value; nothing to test");
  }
  std::array<std::uint64_t, 2> col{0, 0};
  for (const auto& [v, row] : table) {
    col[0] += row[0];
    col[1] += row[1];
  }
  IndependenceReport report;
  report.column_labels = {"false", "true"};
  report.sample_count = samples;
  const auto total = static_cast<double>(samples);
  double statistic = 0;
  for (const auto& [v, row] : table) {
    report.row_labels.push_back(detail::label_of(v));
    report.contingency.push_back({row[0], row[1]});
    const double row_sum = static_cast<double>(row[0] + row[1]);
    for (int c = 0; c < 2; ++c) {
      const double expected = row_sum * static_cast<double>(col[c]) / total;
      if (expected < kMinExpectedPerCell) {
        throw TestRefused("expected count " + detail::format_real(expected) +
                          " in cell (" + detail::label_of(v) + ", " +
                          (c ? "true" : "false") + ") is below 5");
      }
      const double d = static_cast<double>(row[c]) - expected;
      statistic += d * d / expected;
    }
  }
  report.statistic = statistic;
  report.degrees_of_freedom = static_cast<unsigned>(table.size() - 1);
  report.critical_value = chi2_critical_value(report.degrees_of_freedom);
  report.verdict =
      statistic <= report.critical_value ? Verdict::pass : Verdict::fail;
  return report;
}

// For each run: v = first(src), then the next tail_bits bits as a pattern.
// Within every observed value v, the patterns must be uniform over
// 2^tail_bits; the per-value Pearson sums are pooled into one statistic with
// V * (2^tail_bits - 1) degrees of freedom. A sampler that leaves the source
// fair but correlated with its value fails here.
template <class S>
ChiSquaredReport measure_preservation_test(const Sampler<S>& first,
                                           unsigned tail_bits,
                                           std::uint64_t samples,
                                           const SeedKey& key) {
  if (tail_bits < 1 || tail_bits > 8) {
    throw TestRefused("tail_bits must be in 1..8");
  }
  const std::size_t patterns = std::size_t{1} << tail_bits;
  std::map<S, std::vector<std::uint64_t>> table;
  BitSource src = BitSource::from_seed(key);
  for (std::uint64_t s = 0; s < samples; ++s) {
    S v = first(src);
    std::size_t pattern = 0;
    for (unsigned b = 0; b < tail_bits; ++b) {
      pattern = (pattern << 1) | static_cast<std::size_t>(src.next_bit());
    }
    auto [it, fresh] = table.try_emplace(v, patterns, 0);
    ++it->second[pattern];
  }
  double statistic = 0;
  for (const auto& [v, counts] : table) {
    std::uint64_t row = 0;
    for (auto c : counts) row += c;
    const double expected =
        static_cast<double>(row) / static_cast<double>(patterns);
    if (expected < kMinExpectedPerCell) {
      throw TestRefused("expected count " + detail::format_real(expected) +
                        " per tail pattern for value " + detail::label_of(v) +
                        " is below 5");
    }
    for (auto c : counts) {
      const double d = static_cast<double>(c) - expected;
      statistic += d * d / expected;
    }
  }
  ChiSquaredReport report;
  report.test = "measure_preservation tail_bits=" + std::to_string(tail_bits);
  report.statistic = statistic;
  report.degrees_of_freedom =
      static_cast<unsigned>(table.size() * (patterns - 1));
  report.critical_value = chi2_critical_value(report.degrees_of_freedom);
  report.verdict =
      statistic <= report.critical_value ? Verdict::pass : Verdict::fail;
  report.sample_count = samples;
  return report;
}

}  // namespace fyshuffle

#endif  // FYSHUFFLE_STATS_HPP_
