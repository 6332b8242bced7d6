#ifndef FYSHUFFLE_SAMPLER_HPP_
#define FYSHUFFLE_SAMPLER_HPP_

// Bit-consuming samplers composed as a state monad over a BitSource.
//
// A Sampler<T> is an immutable description of a computation that reads some
// bits from a source and yields a T. Running it advances the source by the
// bits it read; the next sampler sees only what is left. The pair
// (value, advanced source) plays the role of a (value, rest-of-stream)
// result.

#include <concepts>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <type_traits>
#include <utility>

#include "fyshuffle/bitsource.hpp"

namespace fyshuffle {

template <class T>
struct SampleOutcome {
  T value;
  std::uint64_t bits_consumed;
};

template <class T>
class Sampler {
 public:
  using value_type = T;
  using Body = std::function<T(BitSource&)>;

  explicit Sampler(Body body)
      : body_(std::make_shared<const Body>(std::move(body))) {}

  T operator()(BitSource& src) const { return (*body_)(src); }

  SampleOutcome<T> run(BitSource& src) const {
    const std::uint64_t before = src.consumed();
    T value = (*body_)(src);
    return {std::move(value), src.consumed() - before};
  }

 private:
  std::shared_ptr<const Body> body_;
};

template <class T>
Sampler<std::decay_t<T>> return_(T&& x) {
  return Sampler<std::decay_t<T>>(
      [x = std::forward<T>(x)](BitSource&) { return x; });
}

template <class S, class F>
  requires std::invocable<const F&, const S&>
auto bind(Sampler<S> m, F f) {
  using Next = std::invoke_result_t<const F&, const S&>;
  using T = typename Next::value_type;
  return Sampler<T>([m = std::move(m), f = std::move(f)](BitSource& src) {
    S x = m(src);
    return f(x)(src);
  });
}

// bind followed by return_, without the intermediate sampler.
template <class S, class F>
  requires std::invocable<const F&, const S&>
auto map(Sampler<S> m, F f) {
  using T = std::decay_t<std::invoke_result_t<const F&, const S&>>;
  return Sampler<T>([m = std::move(m), f = std::move(f)](BitSource& src) {
    return f(m(src));
  });
}

inline Sampler<bool> coin() {
  return Sampler<bool>([](BitSource& src) { return src.next_bit(); });
}

// Uniform on [0, n) by the Fast Dice Roller: keep a candidate c uniform on
// [0, v), doubling v and appending one bit (MSB-first) per step. Once v >= n,
// accept c if c < n; otherwise keep the leftover c - n, uniform on
// [0, v - n), and continue. Each value has measure exactly 1/n, for n = 2^k
// exactly k bits are read, and after k bits the mass still undecided is
// (2^k mod n) / 2^k.
inline std::uint64_t draw_uniform(BitSource& src, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform(n) requires n >= 1");
  if (n == 1) return 0;
  if (n > (std::uint64_t{1} << 62)) {
    throw std::invalid_argument("uniform(n) supports n <= 2^62");
  }
  std::uint64_t v = 1;
  std::uint64_t c = 0;
  for (;;) {
    v <<= 1;
    c = (c << 1) | static_cast<std::uint64_t>(src.next_bit());
    if (v >= n) {
      if (c < n) return c;
      v -= n;
      c -= n;
    }
  }
}

// The imperative interval draw: a + draw_uniform(b - a).
inline std::int64_t draw_interval(BitSource& src, std::int64_t a,
                                  std::int64_t b) {
  if (!(a < b)) throw std::invalid_argument("interval_sample requires a < b");
  const std::uint64_t width =
      static_cast<std::uint64_t>(b) - static_cast<std::uint64_t>(a);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) +
                                   draw_uniform(src, width));
}

inline Sampler<std::uint64_t> uniform(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform(n) requires n >= 1");
  return Sampler<std::uint64_t>(
      [n](BitSource& src) { return draw_uniform(src, n); });
}

inline Sampler<std::int64_t> interval_sample(std::int64_t a, std::int64_t b) {
  if (!(a < b)) throw std::invalid_argument("interval_sample requires a < b");
  const std::uint64_t width =
      static_cast<std::uint64_t>(b) - static_cast<std::uint64_t>(a);
  return map(uniform(width), [a](std::uint64_t x) {
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) + x);
  });
}

// Deliberately broken samplers for exercising the detectors. Do not use them
// for anything else.
namespace controls {

// Returns the head bit but leaves it in the stream, so the next reader sees
// the same bit again.
inline Sampler<bool> bad_coin() {
  return Sampler<bool>([](BitSource& src) { return src.peek_bit(); });
}

}  // namespace controls

}  // namespace fyshuffle

#endif  // FYSHUFFLE_SAMPLER_HPP_
