#ifndef FYSHUFFLE_SHUFFLE_HPP_
#define FYSHUFFLE_SHUFFLE_HPP_

// Fisher-Yates in two forms, plus two biased variants kept as negative
// controls for the audit tooling.
//
// shuffle_model / shuffle_functional  recursive, on values (sequences)
// shuffle_in_place                    loop over a mutable span
//
// Both draw j from [i, n) for i = 0 .. n-2 and swap positions i and j. Run on
// the same bits they produce the same permutation and consume the same
// number of bits.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fyshuffle/bitsource.hpp"
#include "fyshuffle/sampler.hpp"

namespace fyshuffle {

template <class T>
struct ShuffleRun {
  std::vector<T> output;
  std::uint64_t bits_consumed;
};

template <class T>
std::vector<T> swap_elements(std::vector<T> xs, std::size_t i, std::size_t j) {
  if (i >= xs.size() || j >= xs.size()) {
    throw std::out_of_range("swap index out of range");
  }
  using std::swap;
  swap(xs[i], xs[j]);
  return xs;
}

// Shuffle(xs, i) as a sampler: while |xs| > 1 + i draw j from [i, |xs|),
// swap i and j, continue at i + 1. Positions below i are never touched.
template <class T>
Sampler<std::vector<T>> shuffle_model(std::vector<T> xs, std::size_t i = 0) {
  if (i > xs.size()) throw std::invalid_argument("shuffle start beyond end");
  if (xs.size() > 1 + i) {
    const auto n = static_cast<std::int64_t>(xs.size());
    return bind(interval_sample(static_cast<std::int64_t>(i), n),
                [xs = std::move(xs), i](std::int64_t j) {
                  return shuffle_model(
                      swap_elements(xs, i, static_cast<std::size_t>(j)),
                      i + 1);
                });
  }
  return return_(std::move(xs));
}

template <class T>
ShuffleRun<T> shuffle_functional_run(std::vector<T> xs, std::size_t i,
                                     BitSource& src) {
  auto outcome = shuffle_model(std::move(xs), i).run(src);
  return {std::move(outcome.value), outcome.bits_consumed};
}

template <class T>
std::vector<T> shuffle_functional(std::vector<T> xs, std::size_t i,
                                  BitSource& src) {
  return shuffle_model(std::move(xs), i)(src);
}

// In-place Fisher-Yates. If the source runs dry mid-loop, TapeExhausted
// propagates and `a` holds the swaps completed so far (still a permutation
// of the input).
template <class T>
void shuffle_in_place(std::span<T> a, BitSource& src) {
  const std::size_t n = a.size();
  if (n > 1) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const auto j = static_cast<std::size_t>(draw_interval(
          src, static_cast<std::int64_t>(i), static_cast<std::int64_t>(n)));
      using std::swap;
      swap(a[i], a[j]);
    }
  }
}

template <class T>
void shuffle_in_place(std::vector<T>& a, BitSource& src) {
  shuffle_in_place(std::span<T>(a), src);
}

enum class ShuffleVariant { fisher_yates, sattolo, naive };

inline std::string_view to_string(ShuffleVariant v) {
  switch (v) {
    case ShuffleVariant::fisher_yates: return "fisher_yates";
    case ShuffleVariant::sattolo: return "sattolo";
    case ShuffleVariant::naive: return "naive";
  }
  return "unknown";
}

inline ShuffleVariant parse_variant(std::string_view name) {
  if (name == "fisher_yates") return ShuffleVariant::fisher_yates;
  if (name == "sattolo") return ShuffleVariant::sattolo;
  if (name == "naive") return ShuffleVariant::naive;
  throw std::invalid_argument("unknown shuffle variant '" + std::string(name) +
                              "'");
}

namespace controls {

// Off-by-one lower bound: j from [i+1, n). Only ever yields permutations
// with a single cycle.
template <class T>
void sattolo_in_place(std::span<T> a, BitSource& src) {
  const std::size_t n = a.size();
  if (n == 0) throw std::invalid_argument("sattolo requires a non-empty array");
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto j = static_cast<std::size_t>(draw_interval(
        src, static_cast<std::int64_t>(i + 1), static_cast<std::int64_t>(n)));
    using std::swap;
    swap(a[i], a[j]);
  }
}

// j from [0, n) at every one of n steps: n^n equally likely paths onto n!
// outcomes, so generally biased.
template <class T>
void naive_in_place(std::span<T> a, BitSource& src) {
  const std::size_t n = a.size();
  if (n == 0) throw std::invalid_argument("naive shuffle requires a non-empty array");
  for (std::size_t i = 0; i < n; ++i) {
    const auto j = static_cast<std::size_t>(
        draw_interval(src, 0, static_cast<std::int64_t>(n)));
    using std::swap;
    swap(a[i], a[j]);
  }
}

}  // namespace controls

template <class T>
void shuffle_variant_in_place(ShuffleVariant variant, std::span<T> a,
                              BitSource& src) {
  switch (variant) {
    case ShuffleVariant::fisher_yates: shuffle_in_place(a, src); return;
    case ShuffleVariant::sattolo: controls::sattolo_in_place(a, src); return;
    case ShuffleVariant::naive: controls::naive_in_place(a, src); return;
  }
}

}  // namespace fyshuffle

#endif  // FYSHUFFLE_SHUFFLE_HPP_
