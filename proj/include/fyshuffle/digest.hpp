#ifndef FYSHUFFLE_DIGEST_HPP_
#define FYSHUFFLE_DIGEST_HPP_

#include <sodium.h>

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "fyshuffle/bitsource.hpp"

namespace fyshuffle {

using Sha256Digest = std::array<std::uint8_t, 32>;

// Incremental SHA-256 (libsodium).
class Sha256 {
 public:
  Sha256() {
    detail::ensure_sodium();
    crypto_hash_sha256_init(&state_);
  }

  Sha256& update(std::span<const std::uint8_t> bytes) {
    crypto_hash_sha256_update(&state_, bytes.data(), bytes.size());
    return *this;
  }

  Sha256& update(std::string_view text) {
    return update(std::span<const std::uint8_t>(
        reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
  }

  Sha256Digest finish() {
    Sha256Digest out{};
    crypto_hash_sha256_final(&state_, out.data());
    return out;
  }

 private:
  crypto_hash_sha256_state state_;
};

inline Sha256Digest sha256(std::span<const std::uint8_t> bytes) {
  return Sha256().update(bytes).finish();
}

inline Sha256Digest sha256(std::string_view text) {
  return Sha256().update(text).finish();
}

template <std::size_t N>
std::string to_hex(const std::array<std::uint8_t, N>& bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * N);
  for (auto b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

}  // namespace fyshuffle

#endif  // FYSHUFFLE_DIGEST_HPP_
