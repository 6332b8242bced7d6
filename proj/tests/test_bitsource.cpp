#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>

#include "fyshuffle/bitsource.hpp"
#include "fyshuffle/sampler.hpp"
#include "fyshuffle/shuffle.hpp"

namespace fyshuffle {
namespace {

std::uint64_t first_word(BitSource& src) {
  std::uint64_t w = 0;
  for (int i = 0; i < 64; ++i) w = (w << 1) | src.next_bit();
  return w;
}

TEST(BitSource, SameSeedSameBits) {
  const auto key = SeedKey::from_hex("deadbeef");
  auto a = BitSource::from_seed(key);
  auto b = BitSource::from_seed(key);
  for (int i = 0; i < 1024; ++i) ASSERT_EQ(a.next_bit(), b.next_bit()) << i;
}

// Golden values from tests/oracles/reference.py (independent ChaCha20).
TEST(BitSource, ZeroKeyGoldenPrefix) {
  // RFC 8439 A.1 keystream begins 76 b8: 0111 0110 1011 1000.
  auto src = BitSource::from_seed(SeedKey{});
  std::string bits;
  for (int i = 0; i < 16; ++i) bits += src.next_bit() ? '1' : '0';
  EXPECT_EQ(bits, "0111011010111000");
}

TEST(BitSource, DistinctKeysDiffer) {
  auto a = BitSource::from_seed(SeedKey::from_hex("01"));
  auto b = BitSource::from_seed(SeedKey::from_hex("02"));
  const auto wa = first_word(a);
  const auto wb = first_word(b);
  EXPECT_EQ(wa, 0x4540f05a9f1fb296ull);
  EXPECT_EQ(wb, 0x251ac826398ab38dull);
  EXPECT_NE(wa, wb);
}

TEST(BitSource, ConsumedCountsEveryBit) {
  auto src = BitSource::from_seed(SeedKey::from_hex("7"));
  EXPECT_EQ(src.consumed(), 0u);
  for (int k = 1; k <= 1000; ++k) {
    src.next_bit();
    ASSERT_EQ(src.consumed(), static_cast<std::uint64_t>(k));
  }
}

TEST(BitSource, TapeServesThenExhausts) {
  auto src = BitSource::from_bits({1, 0, 1});
  EXPECT_TRUE(src.next_bit());
  EXPECT_FALSE(src.next_bit());
  EXPECT_TRUE(src.next_bit());
  EXPECT_THROW(src.next_bit(), TapeExhausted);
  EXPECT_EQ(src.consumed(), 3u);
}

TEST(BitSource, PeekDoesNotConsume) {
  auto src = BitSource::from_bits({0, 1});
  EXPECT_FALSE(src.peek_bit());
  EXPECT_FALSE(src.peek_bit());
  EXPECT_EQ(src.consumed(), 0u);
  EXPECT_FALSE(src.next_bit());
  EXPECT_TRUE(src.next_bit());
}

TEST(BitSource, RecordAndReplay) {
  auto src = BitSource::from_seed(SeedKey::from_hex("abc"));
  auto [rec, tape] = fork_recording(src);
  std::vector<bool> seen;
  for (int i = 0; i < 128; ++i) seen.push_back(rec.next_bit());
  ASSERT_EQ(tape->size(), 128u);
  EXPECT_EQ(tape->bits, seen);
  // The fork does not disturb the original.
  for (int i = 0; i < 128; ++i) ASSERT_EQ(src.next_bit(), seen[i]);
  auto replay = BitSource::from_tape(*tape);
  for (int i = 0; i < 128; ++i) ASSERT_EQ(replay.next_bit(), seen[i]);
  EXPECT_THROW(replay.next_bit(), TapeExhausted);
}

TEST(BitSource, EmptyRunRecordsNothing) {
  auto src = BitSource::from_seed(SeedKey{});
  auto [rec, tape] = fork_recording(src);
  (void)uniform(1)(rec);
  EXPECT_TRUE(tape->empty());
}

TEST(BitSource, ReplayedUniformDrawMatches) {
  auto src = BitSource::from_seed(SeedKey::from_hex("6"));
  for (int trial = 0; trial < 50; ++trial) {
    auto [rec, tape] = fork_recording(src);
    const auto v = uniform(6)(rec);
    auto replay = BitSource::from_tape(*tape);
    EXPECT_EQ(uniform(6)(replay), v);
    EXPECT_EQ(replay.consumed(), tape->size());
    src.next_bit();  // move to a fresh position for the next trial
  }
}

TEST(BitSource, RecordedInPlaceShuffleReplaysFunctionally) {
  auto src = BitSource::from_seed(SeedKey::from_hex("44"));
  auto [rec, tape] = fork_recording(src);
  std::vector<int> a{10, 20, 30, 40};
  shuffle_in_place(a, rec);
  auto replay = BitSource::from_tape(*tape);
  EXPECT_EQ(shuffle_functional(std::vector<int>{10, 20, 30, 40}, 0, replay), a);
}

TEST(TapeFile, RoundTripAndLayout) {
  RecordedTape tape{{true, false, true, true, false, false, false, false, true}};
  std::stringstream buf;
  write_tape(buf, tape);
  const std::string bytes = buf.str();
  ASSERT_EQ(bytes.size(), 8u + 8u + 2u);
  EXPECT_EQ(bytes.substr(0, 8), "FYTAPE1\n");
  EXPECT_EQ(static_cast<unsigned char>(bytes[15]), 9u);  // big-endian count
  EXPECT_EQ(static_cast<unsigned char>(bytes[16]), 0xb0u);
  EXPECT_EQ(static_cast<unsigned char>(bytes[17]), 0x80u);
  EXPECT_EQ(read_tape(buf), tape);
}

TEST(TapeFile, RejectsGarbage) {
  std::stringstream bad("NOTATAPE........");
  EXPECT_THROW(read_tape(bad), TapeFormatError);
  RecordedTape tape{std::vector<bool>(20, true)};
  std::stringstream buf;
  write_tape(buf, tape);
  std::stringstream cut(buf.str().substr(0, buf.str().size() - 1));
  EXPECT_THROW(read_tape(cut), TapeFormatError);
}

TEST(SeedKey, HexIsLeftPadded) {
  EXPECT_EQ(SeedKey::from_hex("1").to_hex(), std::string(63, '0') + "1");
  EXPECT_EQ(SeedKey::from_hex(""), SeedKey{});
  EXPECT_THROW(SeedKey::from_hex("zz"), std::invalid_argument);
  EXPECT_THROW(SeedKey::from_hex(std::string(65, '0')), std::invalid_argument);
}

// Monobit and lag-1 serial correlation within 4 sigma over 10^6 bits.
TEST(BitSource, Fairness) {
  auto src = BitSource::from_seed(SeedKey::from_hex("fa17"));
  constexpr int kN = 1'000'000;
  long ones = 0;
  long agree = 0;
  bool prev = src.next_bit();
  ones += prev;
  for (int i = 1; i < kN; ++i) {
    const bool b = src.next_bit();
    ones += b;
    agree += (b == prev);
    prev = b;
  }
  const double sigma = std::sqrt(kN * 0.25);
  EXPECT_LT(std::abs(ones - kN / 2.0), 4 * sigma);
  // Under independence, agreements ~ Binomial(n-1, 1/2).
  const double sigma_pairs = std::sqrt((kN - 1) * 0.25);
  EXPECT_LT(std::abs(agree - (kN - 1) / 2.0), 4 * sigma_pairs);
}

TEST(BitSource, EntropyModeProducesBits) {
  auto src = BitSource::from_entropy();
  long ones = 0;
  for (int i = 0; i < 100000; ++i) ones += src.next_bit();
  EXPECT_GT(ones, 45000);
  EXPECT_LT(ones, 55000);
}

}  // namespace
}  // namespace fyshuffle
