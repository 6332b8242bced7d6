#include <gtest/gtest.h>

#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fyshuffle/oracle.hpp"
#include "fyshuffle/permutation.hpp"
#include "fyshuffle/tokenizer.hpp"

namespace fyshuffle {
namespace {

const SeedKey kKey = SeedKey::from_hex("5eed");

std::string tmp_path(const std::string& name) {
  return std::string(FYSHUFFLE_TEST_TMPDIR) + "/" + name;
}

// Shared across tests; building it shuffles 10^5 entries.
const TokenTable& five_digits() {
  static const TokenTable table = build_table(parse_format("DDDDD"), kKey);
  return table;
}

void rewrite_checksum(std::vector<std::uint8_t>& bytes) {
  bytes.resize(bytes.size() - 32);
  const auto d = sha256(bytes);
  bytes.insert(bytes.end(), d.begin(), d.end());
}

TEST(ParseFormat, BuiltinClasses) {
  const auto spec = parse_format("DDDDD");
  EXPECT_EQ(spec.domain_size(), 100000u);
  EXPECT_EQ(spec.class_slot_count(), 5u);
  EXPECT_EQ(parse_format("A").domain_size(), 26u);
  EXPECT_EQ(parse_format("aD").domain_size(), 260u);
}

TEST(ParseFormat, LiteralsDoNotCount) {
  const auto spec = parse_format("D-D");
  EXPECT_EQ(spec.domain_size(), 100u);
  EXPECT_EQ(spec.slots().size(), 3u);
  EXPECT_EQ(spec.class_slot_count(), 2u);
  EXPECT_FALSE(spec.slots()[1].is_class());
  EXPECT_EQ(spec.radices(), (std::vector<std::uint64_t>{10, 10}));
}

TEST(ParseFormat, ExplicitAlphabetsAndEscapes) {
  EXPECT_EQ(parse_format("[a-f0-9]").domain_size(), 16u);
  EXPECT_EQ(parse_format("[xyz-]").domain_size(), 4u);
  EXPECT_EQ(parse_format("[\\]\\\\]").domain_size(), 2u);
  const auto esc = parse_format("\\D[01]");
  EXPECT_EQ(esc.domain_size(), 2u);
  EXPECT_FALSE(esc.slots()[0].is_class());
}

TEST(ParseFormat, CanonicalRoundTrip) {
  for (const char* t : {"DDDDD", "D-D", "[a-c]\\DA", "[\\]x]-a", "[αβγ]D"}) {
    const auto spec = parse_format(t);
    EXPECT_EQ(parse_format(spec.canonical()), spec) << t;
  }
}

TEST(ParseFormat, ErrorsCarryPositions) {
  try {
    parse_format("DD[ab");
    FAIL();
  } catch (const FormatParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  try {
    parse_format("D[]");
    FAIL();
  } catch (const EmptyClassError& e) {
    EXPECT_EQ(e.position(), 1u);
  }
  try {
    parse_format("[aba]");
    FAIL();
  } catch (const FormatParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
  EXPECT_THROW(parse_format("[z-a]"), FormatParseError);
  EXPECT_THROW(parse_format("D\\"), FormatParseError);
  EXPECT_THROW(parse_format("---"), FormatParseError);
  EXPECT_THROW(parse_format(""), FormatParseError);
  EXPECT_THROW(parse_format("\xff"), FormatParseError);
}

TEST(ParseFormat, DomainCap) {
  EXPECT_EQ(parse_format("[0-9a-z]DDD").domain_size(), 36000u);
  // Exactly 10^6 is refused; the cap is exclusive.
  try {
    parse_format("DDDDDD");
    FAIL();
  } catch (const DomainTooLarge& e) {
    EXPECT_EQ(e.domain_size(), 1000000u);
  }
  EXPECT_THROW(parse_format("DDD-DD-DDDD"), DomainTooLarge);
  EXPECT_THROW(parse_format("DDDDDDD"), DomainTooLarge);
  EXPECT_EQ(parse_format("[0-9]DDDD").domain_size(), 100000u);
  EXPECT_EQ(parse_format("AAAD").domain_size(), 175760u);
  // 26^20 overflows 64 bits; reported as saturated rather than wrapped.
  EXPECT_THROW(parse_format(std::string(20, 'A')), DomainTooLarge);
}

TEST(Rank, MixedRadixExamples) {
  const auto spec = parse_format("DDDDD");
  EXPECT_EQ(rank("00042", spec), 42u);
  EXPECT_EQ(rank("99999", spec), 99999u);
  EXPECT_EQ(unrank(0, spec), "00000");
  EXPECT_EQ(unrank(31415, spec), "31415");
  const auto dash = parse_format("D-D");
  EXPECT_EQ(rank("4-2", dash), 42u);
  EXPECT_EQ(unrank(7, dash), "0-7");
  const auto mixed = parse_format("[ab]D");
  EXPECT_EQ(rank("b3", mixed), 13u);
  EXPECT_THROW(unrank(20, mixed), std::out_of_range);
}

TEST(Rank, RoundTripsWholeDomain) {
  for (const char* t : {"D-D", "[xy]aA", "[αβ]\\-D"}) {
    const auto spec = parse_format(t);
    for (std::uint64_t i = 0; i < spec.domain_size(); ++i) {
      ASSERT_EQ(rank(unrank(i, spec), spec), i) << t;
    }
  }
}

TEST(Rank, MismatchPositions) {
  const auto spec = parse_format("D-D");
  auto position_of = [&](const std::string& v) -> std::size_t {
    try {
      rank(v, spec);
    } catch (const ValueMismatch& e) {
      return e.position();
    }
    return Slot::npos;
  };
  EXPECT_EQ(position_of("4_2"), 1u);
  EXPECT_EQ(position_of("x-2"), 0u);
  EXPECT_EQ(position_of("4-"), 2u);
  EXPECT_EQ(position_of("4-22"), 3u);
  EXPECT_EQ(position_of("4-2"), Slot::npos);
}

TEST(Rank, Utf8Alphabet) {
  const auto spec = parse_format("[αβγ]D");
  EXPECT_EQ(spec.domain_size(), 30u);
  EXPECT_EQ(rank("β7", spec), 17u);
  EXPECT_EQ(unrank(29, spec), "γ9");
  EXPECT_THROW(rank("\xce", spec), ValueMismatch);
}

TEST(Table, FingerprintGolden) {
  EXPECT_EQ(to_hex(key_fingerprint(kKey)), "4a61298e62d7da667a4ab35ed9865798");
}

// Goldens from tests/oracles/reference.py.
TEST(Table, FiveDigitGolden) {
  const auto& t = five_digits();
  EXPECT_EQ(to_hex(t.forward_digest()),
            "0b2e545ad43fe000b431140fda6c98b91f41ecfb6bf2c325d4d6831533106e86");
  const std::vector<std::uint32_t> head(t.forward().begin(), t.forward().begin() + 4);
  EXPECT_EQ(head, (std::vector<std::uint32_t>{44101, 9758, 12865, 94084}));
  EXPECT_EQ(t.tokenize("00042"), "41541");
  EXPECT_EQ(t.detokenize("41541"), "00042");
}

TEST(Table, Deterministic) {
  const auto spec = parse_format("[a-f]DD");
  EXPECT_EQ(build_table(spec, kKey), build_table(spec, kKey));
  EXPECT_NE(build_table(spec, kKey).forward_digest(),
            build_table(spec, SeedKey::from_hex("5eee")).forward_digest());
  // Same key, different template: a different seed.
  EXPECT_NE(to_hex(table_seed(kKey, spec).bytes),
            to_hex(table_seed(kKey, parse_format("[a-f]D-D")).bytes));
}

TEST(Table, SingletonDomain) {
  const auto t = build_table(parse_format("[x]"), kKey);
  EXPECT_EQ(t.tokenize("x"), "x");
  EXPECT_EQ(t.detokenize("x"), "x");
}

TEST(Table, WholeDomainIsABijection) {
  const auto& t = five_digits();
  const auto& spec = t.spec();
  std::vector<bool> seen(spec.domain_size(), false);
  for (std::uint64_t i = 0; i < spec.domain_size(); ++i) {
    const std::string v = unrank(i, spec);
    const std::string tok = t.tokenize(v);
    const auto r = rank(tok, spec);
    ASSERT_FALSE(seen[r]) << v;
    seen[r] = true;
    ASSERT_EQ(t.detokenize(tok), v);
  }
}

TEST(Table, PreservesFormat) {
  const auto spec = parse_format("A[0-9a-f]-D");
  const auto t = build_table(spec, kKey);
  std::mt19937_64 rng(77);
  for (int k = 0; k < 10000; ++k) {
    const std::string v = unrank(rng() % spec.domain_size(), spec);
    const std::string tok = t.tokenize(v);
    ASSERT_EQ(tok.size(), v.size());
    ASSERT_EQ(tok[2], '-');
    ASSERT_NO_THROW(rank(tok, spec));
    ASSERT_EQ(t.detokenize(tok), v);
  }
  EXPECT_THROW(t.tokenize("a0-1"), ValueMismatch);
}

TEST(Table, KeyVerification) {
  const auto& t = five_digits();
  EXPECT_NO_THROW(t.verify_key(kKey));
  EXPECT_THROW(t.verify_key(SeedKey::from_hex("5eee")), TableKeyMismatch);
}

TEST(TableFile, SaveLoadRoundTrip) {
  const std::string path = tmp_path("five.fytbl");
  save_table(five_digits(), path);
  const auto loaded = load_table(path);
  EXPECT_EQ(loaded, five_digits());
  EXPECT_EQ(loaded.tokenize("00042"), "41541");
  std::ifstream in(path, std::ios::binary | std::ios::ate);
  EXPECT_EQ(static_cast<std::uint64_t>(in.tellg()), 400073u);
  std::remove(path.c_str());
  EXPECT_THROW(load_table(path), TableFileError);
}

TEST(TableFile, SerializationIsStable) {
  EXPECT_EQ(serialize_table(five_digits()), serialize_table(five_digits()));
}

TEST(TableFile, DetectsCorruption) {
  const auto t = build_table(parse_format("[ab]D"), kKey);
  const auto good = serialize_table(t);
  EXPECT_EQ(deserialize_table(good), t);

  for (std::size_t at = 8; at < good.size(); at += 7) {
    auto bad = good;
    bad[at] ^= 0x01;
    EXPECT_THROW(deserialize_table(bad), TableFileError) << "byte " << at;
  }
  auto flipped = good;
  flipped[good.size() - 40] ^= 0x80;
  EXPECT_THROW(deserialize_table(flipped), TableChecksumMismatch);

  auto magic = good;
  magic[0] = 'X';
  EXPECT_THROW(deserialize_table(magic), TableBadMagic);
  auto version = good;
  version[7] = 2;
  EXPECT_THROW(deserialize_table(version), TableVersionMismatch);

  for (std::size_t len : {std::size_t{0}, std::size_t{5}, std::size_t{20}, good.size() - 1}) {
    const std::vector<std::uint8_t> cut(good.begin(), good.begin() + static_cast<std::ptrdiff_t>(len));
    EXPECT_THROW(deserialize_table(cut), TableTruncated) << len;
  }
  auto longer = good;
  longer.push_back(0);
  EXPECT_THROW(deserialize_table(longer), TableFormatMismatch);
}

TEST(TableFile, RejectsNonPermutationWithValidChecksum) {
  auto bytes = serialize_table(build_table(parse_format("[ab]D"), kKey));
  const std::size_t payload = bytes.size() - 32 - 4 * 20;
  std::copy_n(bytes.begin() + static_cast<std::ptrdiff_t>(payload), 4,
              bytes.begin() + static_cast<std::ptrdiff_t>(payload + 4));
  rewrite_checksum(bytes);
  EXPECT_THROW(deserialize_table(bytes), TableNotPermutation);
}

TEST(TableFile, RejectsInconsistentTemplate) {
  auto bytes = serialize_table(build_table(parse_format("[ab]D"), kKey));
  // "[ab]D" -> "[ac]D": same length, same domain size, still parses.
  bytes[7 + 1 + 4 + 2] = 'c';
  rewrite_checksum(bytes);
  EXPECT_NO_THROW(deserialize_table(bytes));
  // "[ab]D" -> "[aa]D": duplicate member.
  bytes[7 + 1 + 4 + 2] = 'a';
  rewrite_checksum(bytes);
  EXPECT_THROW(deserialize_table(bytes), TableFormatMismatch);
}

// A table is one Fisher-Yates run over the identity; on a 4-value domain the
// bit-level oracle brackets every one of the 24 tables at 1/24.
TEST(TableUniformity, FourValueDomain) {
  const auto spec = parse_format("[ab][xy]");
  ASSERT_EQ(spec.domain_size(), 4u);
  const Sampler<PermIndex> table_rank([&](BitSource& src) {
    std::vector<std::uint32_t> forward{0, 1, 2, 3};
    shuffle_in_place(std::span<std::uint32_t>(forward), src);
    const std::vector<std::size_t> p(forward.begin(), forward.end());
    return perm_rank(p);
  });
  const auto d = bitlevel_distribution(table_rank, 40);
  ASSERT_EQ(d.lower.size(), 24u);
  for (std::uint64_t r = 0; r < 24; ++r) {
    EXPECT_TRUE(d.brackets({r}, Rational(1, 24))) << r;
  }
  EXPECT_LE(d.unresolved, pow2_inverse(32));
}

}  // namespace
}  // namespace fyshuffle
