#ifndef FYSHUFFLE_BITSOURCE_HPP_
#define FYSHUFFLE_BITSOURCE_HPP_

// Replayable sources of fair bits.
//
// A BitSource hands out one bit at a time and counts how many it has served.
// Three backings exist:
//
//   * seeded  - ChaCha20 keystream (RFC 8439, zero nonce, block counter from
//               0) keyed by a 32-byte SeedKey. Bits are taken from each
//               keystream byte most-significant-bit first. This is the only
//               backing used for anything that must be reproducible.
//   * tape    - a finite, recorded bit sequence. Reading past its end throws
//               TapeExhausted.
//   * entropy - std::mt19937_64 seeded from std::random_device. Statistical
//               smoke tests only; never used for token tables.
//
// A source is single-consumer. It may be moved between threads but must not
// be read concurrently.

#include <sodium.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fyshuffle {

// Thrown when a tape-backed source is asked for more bits than it holds.
class TapeExhausted : public std::runtime_error {
 public:
  explicit TapeExhausted(std::uint64_t length)
      : std::runtime_error("bit tape exhausted after " +
                           std::to_string(length) + " bits"),
        length_(length) {}
  std::uint64_t tape_length() const noexcept { return length_; }

 private:
  std::uint64_t length_;
};

class TapeFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SeedKey {
  std::array<std::uint8_t, 32> bytes{};

  // Up to 64 hex digits; shorter strings are left-padded with zeros.
  static SeedKey from_hex(std::string_view hex) {
    if (hex.size() > 64) {
      throw std::invalid_argument("seed longer than 64 hex digits");
    }
    std::string padded(64 - hex.size(), '0');
    padded.append(hex);
    SeedKey key;
    for (std::size_t i = 0; i < 32; ++i) {
      key.bytes[i] = static_cast<std::uint8_t>(hex_digit(padded[2 * i]) << 4 |
                                               hex_digit(padded[2 * i + 1]));
    }
    return key;
  }

  std::string to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve(64);
    for (auto b : bytes) {
      out.push_back(kDigits[b >> 4]);
      out.push_back(kDigits[b & 0xf]);
    }
    return out;
  }

  friend bool operator==(const SeedKey&, const SeedKey&) = default;

 private:
  static int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument(std::string("invalid hex digit '") + c + "'");
  }
};

// A finite bit sequence captured from (or destined for) a BitSource.
struct RecordedTape {
  std::vector<bool> bits;

  std::size_t size() const noexcept { return bits.size(); }
  bool empty() const noexcept { return bits.empty(); }
  friend bool operator==(const RecordedTape&, const RecordedTape&) = default;
};

namespace detail {

class BitEngine {
 public:
  virtual ~BitEngine() = default;
  virtual bool next() = 0;
  virtual std::unique_ptr<BitEngine> clone() const = 0;
};

inline void ensure_sodium() {
  static const bool ready = [] {
    if (sodium_init() < 0) throw std::runtime_error("libsodium init failed");
    return true;
  }();
  (void)ready;
}

class ChaChaEngine final : public BitEngine {
 public:
  explicit ChaChaEngine(const SeedKey& key) : key_(key.bytes) {
    ensure_sodium();
  }

  bool next() override {
    if (bit_pos_ == kBlockBits) refill();
    const std::uint8_t byte = block_[bit_pos_ >> 3];
    const bool bit = (byte >> (7 - (bit_pos_ & 7))) & 1u;
    ++bit_pos_;
    return bit;
  }

  std::unique_ptr<BitEngine> clone() const override {
    return std::make_unique<ChaChaEngine>(*this);
  }

 private:
  static constexpr std::size_t kBlockBits = 512;

  void refill() {
    if (counter_ > 0xffffffffull) {
      throw std::runtime_error("ChaCha20 block counter exhausted");
    }
    static constexpr std::array<std::uint8_t, 12> kNonce{};
    static constexpr std::array<std::uint8_t, 64> kZeros{};
    crypto_stream_chacha20_ietf_xor_ic(
        block_.data(), kZeros.data(), kZeros.size(), kNonce.data(),
        static_cast<std::uint32_t>(counter_), key_.data());
    ++counter_;
    bit_pos_ = 0;
  }

  std::array<std::uint8_t, 32> key_;
  std::array<std::uint8_t, 64> block_{};
  std::uint64_t counter_ = 0;
  std::size_t bit_pos_ = kBlockBits;
};

class TapeEngine final : public BitEngine {
 public:
  explicit TapeEngine(std::shared_ptr<const std::vector<bool>> bits)
      : bits_(std::move(bits)) {}

  bool next() override {
    if (pos_ >= bits_->size()) throw TapeExhausted(bits_->size());
    return (*bits_)[pos_++];
  }

  std::unique_ptr<BitEngine> clone() const override {
    return std::make_unique<TapeEngine>(*this);
  }

 private:
  std::shared_ptr<const std::vector<bool>> bits_;
  std::size_t pos_ = 0;
};

class EntropyEngine final : public BitEngine {
 public:
  EntropyEngine() {
    std::random_device rd;
    std::seed_seq seq{rd(), rd(), rd(), rd(), rd(), rd(), rd(), rd()};
    gen_.seed(seq);
  }

  bool next() override {
    if (left_ == 0) {
      word_ = gen_();
      left_ = 64;
    }
    --left_;
    return (word_ >> left_) & 1u;
  }

  std::unique_ptr<BitEngine> clone() const override {
    return std::make_unique<EntropyEngine>(*this);
  }

 private:
  std::mt19937_64 gen_;
  std::uint64_t word_ = 0;
  int left_ = 0;
};

}  // namespace detail

class BitSource {
 public:
  static BitSource from_seed(const SeedKey& key) {
    return BitSource(std::make_unique<detail::ChaChaEngine>(key));
  }

  static BitSource from_tape(RecordedTape tape) {
    return BitSource(std::make_unique<detail::TapeEngine>(
        std::make_shared<const std::vector<bool>>(std::move(tape.bits))));
  }

  static BitSource from_bits(std::initializer_list<int> bits) {
    RecordedTape tape;
    for (int b : bits) tape.bits.push_back(b != 0);
    return from_tape(std::move(tape));
  }

  // Non-cryptographic, nondeterministic. Statistical tests only.
  static BitSource from_entropy() {
    return BitSource(std::make_unique<detail::EntropyEngine>());
  }

  BitSource(BitSource&&) noexcept = default;
  BitSource& operator=(BitSource&&) noexcept = default;
  BitSource(const BitSource&) = delete;
  BitSource& operator=(const BitSource&) = delete;

  bool next_bit() {
    bool bit;
    if (lookahead_) {
      bit = *lookahead_;
      lookahead_.reset();
    } else {
      bit = engine_->next();
    }
    ++consumed_;
    if (recorder_) recorder_->bits.push_back(bit);
    return bit;
  }

  // Reads the next bit without consuming it. Only the bad_coin negative
  // control uses this.
  bool peek_bit() {
    if (!lookahead_) lookahead_ = engine_->next();
    return *lookahead_;
  }

  std::uint64_t consumed() const noexcept { return consumed_; }

  // Independent copy in the same state; future bits are identical.
  BitSource clone() const {
    BitSource copy(engine_->clone());
    copy.lookahead_ = lookahead_;
    copy.consumed_ = consumed_;
    return copy;
  }

  friend std::pair<BitSource, std::shared_ptr<const RecordedTape>>
  fork_recording(const BitSource& src);

 private:
  explicit BitSource(std::unique_ptr<detail::BitEngine> engine)
      : engine_(std::move(engine)) {}

  std::unique_ptr<detail::BitEngine> engine_;
  std::optional<bool> lookahead_;
  std::uint64_t consumed_ = 0;
  std::shared_ptr<RecordedTape> recorder_;
};

// Returns a source in the same state as `src`, plus a tape that grows with
// every bit the returned source serves. `src` itself is left untouched.
inline std::pair<BitSource, std::shared_ptr<const RecordedTape>>
fork_recording(const BitSource& src) {
  BitSource fork = src.clone();
  auto tape = std::make_shared<RecordedTape>();
  fork.recorder_ = tape;
  return {std::move(fork), std::move(tape)};
}

// Tape file: "FYTAPE1\n", big-endian u64 bit count, bits packed MSB-first,
// last byte zero-padded.
inline constexpr std::string_view kTapeMagic{"FYTAPE1\n", 8};

inline void write_tape(std::ostream& out, const RecordedTape& tape) {
  out.write(kTapeMagic.data(), static_cast<std::streamsize>(kTapeMagic.size()));
  const std::uint64_t n = tape.bits.size();
  for (int shift = 56; shift >= 0; shift -= 8) {
    out.put(static_cast<char>((n >> shift) & 0xff));
  }
  std::vector<char> packed((n + 7) / 8, 0);
  for (std::uint64_t i = 0; i < n; ++i) {
    if (tape.bits[i]) packed[i / 8] |= static_cast<char>(0x80u >> (i % 8));
  }
  out.write(packed.data(), static_cast<std::streamsize>(packed.size()));
  if (!out) throw TapeFormatError("failed writing tape");
}

inline RecordedTape read_tape(std::istream& in) {
  std::array<char, 8> magic{};
  in.read(magic.data(), magic.size());
  if (!in || std::string_view(magic.data(), magic.size()) != kTapeMagic) {
    throw TapeFormatError("not a tape file (bad magic)");
  }
  std::array<unsigned char, 8> len{};
  in.read(reinterpret_cast<char*>(len.data()), len.size());
  if (!in) throw TapeFormatError("truncated tape header");
  std::uint64_t n = 0;
  for (auto b : len) n = (n << 8) | b;
  const std::uint64_t nbytes = n / 8 + (n % 8 != 0);
  std::vector<char> packed;
  packed.resize(nbytes);
  in.read(packed.data(), static_cast<std::streamsize>(nbytes));
  if (static_cast<std::uint64_t>(in.gcount()) != nbytes) {
    throw TapeFormatError("truncated tape payload");
  }
  RecordedTape tape;
  tape.bits.resize(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    tape.bits[i] = (static_cast<unsigned char>(packed[i / 8]) >> (7 - i % 8)) & 1u;
  }
  return tape;
}

inline void save_tape(const RecordedTape& tape, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw TapeFormatError("cannot open " + path + " for writing");
  write_tape(out, tape);
}

inline RecordedTape load_tape(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TapeFormatError("cannot open " + path);
  return read_tape(in);
}

}  // namespace fyshuffle

#endif  // FYSHUFFLE_BITSOURCE_HPP_
