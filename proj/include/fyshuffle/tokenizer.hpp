#ifndef FYSHUFFLE_TOKENIZER_HPP_
#define FYSHUFFLE_TOKENIZER_HPP_

// Truth-table tokenization for small formats.
//
// The table is a Fisher-Yates permutation of the format's domain, indices in
// lexicographic order. tokenize(v) = unrank(forward[rank(v)]) and
// detokenize inverts it. The table is exactly as secret as the key it was
// built from: anyone holding the file can detokenize.
//
// Table file layout (integers little-endian unless noted):
//
//   7   magic "FYTBL1\0"
//   1   version (1)
//   4   template length L
//   L   canonical template, UTF-8
//   8   domain size N
//   16  key fingerprint
//   4N  forward[0..N)
//   32  SHA-256 of every preceding byte

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fyshuffle/bitsource.hpp"
#include "fyshuffle/digest.hpp"
#include "fyshuffle/format.hpp"
#include "fyshuffle/shuffle.hpp"

namespace fyshuffle {

using KeyFingerprint = std::array<std::uint8_t, 16>;

class TableFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class TableTruncated : public TableFileError {
 public:
  using TableFileError::TableFileError;
};
class TableBadMagic : public TableFileError {
 public:
  using TableFileError::TableFileError;
};
class TableVersionMismatch : public TableFileError {
 public:
  using TableFileError::TableFileError;
};
class TableChecksumMismatch : public TableFileError {
 public:
  using TableFileError::TableFileError;
};
class TableNotPermutation : public TableFileError {
 public:
  using TableFileError::TableFileError;
};
class TableFormatMismatch : public TableFileError {
 public:
  using TableFileError::TableFileError;
};
class TableKeyMismatch : public TableFileError {
 public:
  using TableFileError::TableFileError;
};

inline constexpr std::string_view kTableMagic{"FYTBL1\0", 7};
inline constexpr std::uint8_t kTableVersion = 1;

inline KeyFingerprint key_fingerprint(const SeedKey& key) {
  const auto full = sha256(std::span<const std::uint8_t>(key.bytes));
  KeyFingerprint fp{};
  std::copy_n(full.begin(), fp.size(), fp.begin());
  return fp;
}

// Seed for a format's table: key XOR SHA-256(canonical template), so one key
// yields unrelated tables for different formats.
inline SeedKey table_seed(const SeedKey& key, const FormatSpec& spec) {
  const auto digest = sha256(spec.canonical());
  SeedKey seed;
  for (std::size_t i = 0; i < seed.bytes.size(); ++i) {
    seed.bytes[i] = key.bytes[i] ^ digest[i];
  }
  return seed;
}

class TokenTable {
 public:
  TokenTable(FormatSpec spec, KeyFingerprint fingerprint,
             std::vector<std::uint32_t> forward)
      : spec_(std::move(spec)),
        fingerprint_(fingerprint),
        forward_(std::move(forward)),
        inverse_(forward_.size()) {
    if (forward_.size() != spec_.domain_size()) {
      throw TableNotPermutation("table has " + std::to_string(forward_.size()) +
                                " entries for a domain of " +
                                std::to_string(spec_.domain_size()));
    }
    std::vector<bool> seen(forward_.size(), false);
    for (std::size_t i = 0; i < forward_.size(); ++i) {
      const auto t = forward_[i];
      if (t >= forward_.size() || seen[t]) {
        throw TableNotPermutation("entry " + std::to_string(i) +
                                  " breaks the permutation");
      }
      seen[t] = true;
      inverse_[t] = static_cast<std::uint32_t>(i);
    }
  }

  const FormatSpec& spec() const noexcept { return spec_; }
  const KeyFingerprint& fingerprint() const noexcept { return fingerprint_; }
  std::span<const std::uint32_t> forward() const noexcept { return forward_; }
  std::span<const std::uint32_t> inverse() const noexcept { return inverse_; }

  std::string tokenize(std::string_view value) const {
    return unrank(forward_[rank(value, spec_)], spec_);
  }

  std::string detokenize(std::string_view token) const {
    return unrank(inverse_[rank(token, spec_)], spec_);
  }

  // Throws TableKeyMismatch unless the table was built from `key`.
  void verify_key(const SeedKey& key) const {
    if (key_fingerprint(key) != fingerprint_) {
      throw TableKeyMismatch("table was not built from the supplied key");
    }
  }

  // SHA-256 of forward[] as 4-byte little-endian entries.
  Sha256Digest forward_digest() const {
    Sha256 h;
    for (auto v : forward_) {
      const std::array<std::uint8_t, 4> le{
          static_cast<std::uint8_t>(v), static_cast<std::uint8_t>(v >> 8),
          static_cast<std::uint8_t>(v >> 16), static_cast<std::uint8_t>(v >> 24)};
      h.update(le);
    }
    return h.finish();
  }

  friend bool operator==(const TokenTable& a, const TokenTable& b) {
    return a.spec_ == b.spec_ && a.fingerprint_ == b.fingerprint_ &&
           a.forward_ == b.forward_;
  }

 private:
  FormatSpec spec_;
  KeyFingerprint fingerprint_;
  std::vector<std::uint32_t> forward_;
  std::vector<std::uint32_t> inverse_;
};

inline TokenTable build_table(const FormatSpec& spec, const SeedKey& key) {
  std::vector<std::uint32_t> forward(spec.domain_size());
  for (std::size_t i = 0; i < forward.size(); ++i) {
    forward[i] = static_cast<std::uint32_t>(i);
  }
  BitSource src = BitSource::from_seed(table_seed(key, spec));
  shuffle_in_place(std::span<std::uint32_t>(forward), src);
  return TokenTable(spec, key_fingerprint(key), std::move(forward));
}

namespace detail {

inline void put_le(std::vector<std::uint8_t>& out, std::uint64_t v, int bytes) {
  for (int i = 0; i < bytes; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

inline std::uint64_t get_le(std::span<const std::uint8_t> in, std::size_t at,
                            int bytes) {
  std::uint64_t v = 0;
  for (int i = bytes; i-- > 0;) v = (v << 8) | in[at + static_cast<std::size_t>(i)];
  return v;
}

}  // namespace detail

inline std::vector<std::uint8_t> serialize_table(const TokenTable& table) {
  std::vector<std::uint8_t> out;
  const std::string tmpl = table.spec().canonical();
  out.reserve(kTableMagic.size() + 1 + 4 + tmpl.size() + 8 + 16 +
              4 * table.forward().size() + 32);
  out.insert(out.end(), kTableMagic.begin(), kTableMagic.end());
  out.push_back(kTableVersion);
  detail::put_le(out, tmpl.size(), 4);
  out.insert(out.end(), tmpl.begin(), tmpl.end());
  detail::put_le(out, table.spec().domain_size(), 8);
  out.insert(out.end(), table.fingerprint().begin(), table.fingerprint().end());
  for (auto v : table.forward()) detail::put_le(out, v, 4);
  const auto digest = sha256(out);
  out.insert(out.end(), digest.begin(), digest.end());
  return out;
}

// Checks, in order: length, magic, version, checksum, template, permutation.
inline TokenTable deserialize_table(std::span<const std::uint8_t> bytes) {
  const std::size_t fixed_head = kTableMagic.size() + 1 + 4;
  if (bytes.size() < fixed_head) throw TableTruncated("table header truncated");
  if (!std::equal(kTableMagic.begin(), kTableMagic.end(), bytes.begin(),
                  [](char a, std::uint8_t b) {
                    return static_cast<std::uint8_t>(a) == b;
                  })) {
    throw TableBadMagic("not a token table file");
  }
  if (bytes[kTableMagic.size()] != kTableVersion) {
    throw TableVersionMismatch("unsupported table version " +
                               std::to_string(bytes[kTableMagic.size()]));
  }
  const std::size_t tmpl_len = detail::get_le(bytes, kTableMagic.size() + 1, 4);
  const std::size_t size_at = fixed_head + tmpl_len;
  if (bytes.size() < size_at + 8 + 16) throw TableTruncated("table header truncated");
  const std::uint64_t domain = detail::get_le(bytes, size_at, 8);
  if (domain >= kMaxDomainSize) {
    throw TableFormatMismatch("domain size " + std::to_string(domain) +
                              " exceeds the cap");
  }
  const std::size_t payload_at = size_at + 8 + 16;
  const std::size_t expected = payload_at + 4 * domain + 32;
  if (bytes.size() < expected) throw TableTruncated("table payload truncated");
  if (bytes.size() > expected) throw TableFormatMismatch("trailing bytes after table");
  const auto digest = sha256(bytes.first(expected - 32));
  if (!std::equal(digest.begin(), digest.end(), bytes.begin() + static_cast<std::ptrdiff_t>(expected - 32))) {
    throw TableChecksumMismatch("table checksum mismatch");
  }
  const std::string tmpl(bytes.begin() + static_cast<std::ptrdiff_t>(fixed_head),
                         bytes.begin() + static_cast<std::ptrdiff_t>(size_at));
  FormatSpec spec = [&] {
    try {
      return parse_format(tmpl);
    } catch (const FormatError& e) {
      throw TableFormatMismatch(std::string("stored template invalid: ") + e.what());
    }
  }();
  if (spec.domain_size() != domain) {
    throw TableFormatMismatch("stored domain size disagrees with template");
  }
  KeyFingerprint fp{};
  std::copy_n(bytes.begin() + static_cast<std::ptrdiff_t>(size_at + 8), fp.size(), fp.begin());
  std::vector<std::uint32_t> forward(domain);
  for (std::size_t i = 0; i < domain; ++i) {
    forward[i] = static_cast<std::uint32_t>(detail::get_le(bytes, payload_at + 4 * i, 4));
  }
  return TokenTable(std::move(spec), fp, std::move(forward));
}

inline void save_table(const TokenTable& table, const std::string& path) {
  const auto bytes = serialize_table(table);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw TableFileError("cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw TableFileError("failed writing " + path);
}

inline TokenTable load_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TableFileError("cannot open " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return deserialize_table(bytes);
}

}  // namespace fyshuffle

#endif  // FYSHUFFLE_TOKENIZER_HPP_
