#ifndef FYSHUFFLE_FORMAT_HPP_
#define FYSHUFFLE_FORMAT_HPP_

// Token formats: a template of literal characters and character classes.
//
// Template grammar (one slot per code point):
//   D        digit        0-9
//   A        uppercase    A-Z
//   a        lowercase    a-z
//   [...]    explicit alphabet, in the order written; "x-y" is an inclusive
//            code point range and "\c" escapes c. Duplicates are rejected.
//   \c       the literal character c
//   other    itself, as a literal
//
// The domain is every string matching the template, ordered
// lexicographically by class position with the leftmost class slot most
// significant. Its size is the product of the class sizes and must stay
// below 1,000,000.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fyshuffle {

inline constexpr std::uint64_t kMaxDomainSize = 1'000'000;  // exclusive

class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class FormatParseError : public FormatError {
 public:
  FormatParseError(std::size_t position, const std::string& what)
      : FormatError("format template, position " + std::to_string(position) +
                    ": " + what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class EmptyClassError : public FormatParseError {
 public:
  explicit EmptyClassError(std::size_t position)
      : FormatParseError(position, "empty character class") {}
};

class DomainTooLarge : public FormatError {
 public:
  // `saturated` means the true size exceeds what a 64-bit counter can hold.
  DomainTooLarge(std::uint64_t domain_size, bool saturated)
      : FormatError(std::string("domain size ") + (saturated ? ">= " : "") +
                    std::to_string(domain_size) +
                    " is not below the 1,000,000 cap for truth-table "
                    "tokenization"),
        domain_size_(domain_size) {}
  std::uint64_t domain_size() const noexcept { return domain_size_; }

 private:
  std::uint64_t domain_size_;
};

// Input text does not match the format.
class ValueMismatch : public std::invalid_argument {
 public:
  ValueMismatch(std::size_t position, const std::string& what)
      : std::invalid_argument("value does not match format at position " +
                              std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class Utf8Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::u32string decode_utf8(std::string_view text) {
  std::u32string out;
  std::size_t i = 0;
  while (i < text.size()) {
    const auto lead = static_cast<unsigned char>(text[i]);
    int extra;
    char32_t cp;
    if (lead < 0x80) {
      extra = 0;
      cp = lead;
    } else if ((lead & 0xe0) == 0xc0) {
      extra = 1;
      cp = lead & 0x1f;
    } else if ((lead & 0xf0) == 0xe0) {
      extra = 2;
      cp = lead & 0x0f;
    } else if ((lead & 0xf8) == 0xf0) {
      extra = 3;
      cp = lead & 0x07;
    } else {
      throw Utf8Error("invalid UTF-8 lead byte at offset " + std::to_string(i));
    }
    if (i + static_cast<std::size_t>(extra) >= text.size()) {
      throw Utf8Error("truncated UTF-8 sequence at offset " + std::to_string(i));
    }
    for (int k = 1; k <= extra; ++k) {
      const auto cont = static_cast<unsigned char>(text[i + static_cast<std::size_t>(k)]);
      if ((cont & 0xc0) != 0x80) {
        throw Utf8Error("invalid UTF-8 continuation at offset " +
                        std::to_string(i + static_cast<std::size_t>(k)));
      }
      cp = (cp << 6) | (cont & 0x3f);
    }
    static constexpr char32_t kMinForLength[] = {0, 0x80, 0x800, 0x10000};
    if (cp < kMinForLength[extra] || cp > 0x10ffff ||
        (cp >= 0xd800 && cp <= 0xdfff)) {
      throw Utf8Error("invalid UTF-8 code point at offset " + std::to_string(i));
    }
    out.push_back(cp);
    i += static_cast<std::size_t>(extra) + 1;
  }
  return out;
}

inline void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xc0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xe0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  } else {
    out.push_back(static_cast<char>(0xf0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  }
}

inline std::string encode_utf8(std::u32string_view cps) {
  std::string out;
  for (auto cp : cps) append_utf8(out, cp);
  return out;
}

enum class SlotKind { literal, digit, upper, lower, alphabet };

struct Slot {
  SlotKind kind = SlotKind::literal;
  // The literal character, or the class members in rank order.
  std::u32string chars;

  bool is_class() const noexcept { return kind != SlotKind::literal; }
  std::uint64_t radix() const noexcept { return chars.size(); }

  std::size_t index_of(char32_t c) const {
    switch (kind) {
      case SlotKind::digit:
        return c >= U'0' && c <= U'9' ? c - U'0' : npos;
      case SlotKind::upper:
        return c >= U'A' && c <= U'Z' ? c - U'A' : npos;
      case SlotKind::lower:
        return c >= U'a' && c <= U'z' ? c - U'a' : npos;
      default: {
        const auto pos = chars.find(c);
        return pos == std::u32string::npos ? npos : pos;
      }
    }
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

class FormatSpec {
 public:
  const std::vector<Slot>& slots() const noexcept { return slots_; }
  std::uint64_t domain_size() const noexcept { return domain_size_; }

  std::size_t class_slot_count() const noexcept {
    std::size_t n = 0;
    for (const auto& s : slots_) n += s.is_class();
    return n;
  }

  // Radix of each class slot, left to right.
  std::vector<std::uint64_t> radices() const {
    std::vector<std::uint64_t> out;
    for (const auto& s : slots_) {
      if (s.is_class()) out.push_back(s.radix());
    }
    return out;
  }

  // Re-serialized template; equal for templates that parse to the same slots
  // written the same way.
  std::string canonical() const {
    std::string out;
    for (const auto& s : slots_) {
      switch (s.kind) {
        case SlotKind::digit: out += 'D'; break;
        case SlotKind::upper: out += 'A'; break;
        case SlotKind::lower: out += 'a'; break;
        case SlotKind::literal: {
          const char32_t c = s.chars[0];
          if (c == U'D' || c == U'A' || c == U'a' || c == U'[' || c == U'\\') {
            out += '\\';
          }
          append_utf8(out, c);
          break;
        }
        case SlotKind::alphabet: {
          out += '[';
          for (auto c : s.chars) {
            if (c == U']' || c == U'\\' || c == U'-' || c == U'[') out += '\\';
            append_utf8(out, c);
          }
          out += ']';
          break;
        }
      }
    }
    return out;
  }

  friend bool operator==(const FormatSpec& a, const FormatSpec& b) {
    if (a.slots_.size() != b.slots_.size()) return false;
    for (std::size_t i = 0; i < a.slots_.size(); ++i) {
      if (a.slots_[i].kind != b.slots_[i].kind ||
          a.slots_[i].chars != b.slots_[i].chars) {
        return false;
      }
    }
    return true;
  }

  friend FormatSpec parse_format(std::string_view template_string);

 private:
  std::vector<Slot> slots_;
  std::uint64_t domain_size_ = 1;
};

namespace detail {

inline std::u32string char_range(char32_t first, char32_t last) {
  std::u32string out;
  for (char32_t c = first; c <= last; ++c) out.push_back(c);
  return out;
}

}  // namespace detail

inline FormatSpec parse_format(std::string_view template_string) {
  std::u32string t;
  try {
    t = decode_utf8(template_string);
  } catch (const Utf8Error& e) {
    throw FormatParseError(0, e.what());
  }
  FormatSpec spec;
  std::size_t i = 0;
  while (i < t.size()) {
    const char32_t c = t[i];
    Slot slot;
    if (c == U'D') {
      slot.kind = SlotKind::digit;
      slot.chars = detail::char_range(U'0', U'9');
      ++i;
    } else if (c == U'A') {
      slot.kind = SlotKind::upper;
      slot.chars = detail::char_range(U'A', U'Z');
      ++i;
    } else if (c == U'a') {
      slot.kind = SlotKind::lower;
      slot.chars = detail::char_range(U'a', U'z');
      ++i;
    } else if (c == U'\\') {
      if (i + 1 >= t.size()) throw FormatParseError(i, "dangling escape");
      slot.kind = SlotKind::literal;
      slot.chars = std::u32string(1, t[i + 1]);
      i += 2;
    } else if (c == U'[') {
      const std::size_t open = i++;
      std::u32string members;
      bool closed = false;
      while (i < t.size()) {
        char32_t m = t[i];
        if (m == U']') {
          closed = true;
          ++i;
          break;
        }
        const std::size_t at = i;
        if (m == U'\\') {
          if (i + 1 >= t.size()) throw FormatParseError(i, "dangling escape");
          m = t[++i];
        }
        ++i;
        // Range "m-last", unless the dash is the final member.
        if (i + 1 < t.size() && t[i] == U'-' && t[i + 1] != U']') {
          char32_t last = t[i + 1];
          std::size_t next = i + 2;
          if (last == U'\\') {
            if (i + 2 >= t.size()) throw FormatParseError(i + 1, "dangling escape");
            last = t[i + 2];
            next = i + 3;
          }
          if (last < m) throw FormatParseError(at, "reversed range");
          if (last - m >= kMaxDomainSize) throw DomainTooLarge(last - m + 1, false);
          for (char32_t r = m; r <= last; ++r) {
            if (members.find(r) != std::u32string::npos) {
              throw FormatParseError(at, "duplicate character in class");
            }
            members.push_back(r);
          }
          i = next;
        } else {
          if (members.find(m) != std::u32string::npos) {
            throw FormatParseError(at, "duplicate character in class");
          }
          members.push_back(m);
        }
      }
      if (!closed) throw FormatParseError(open, "unterminated '['");
      if (members.empty()) throw EmptyClassError(open);
      slot.kind = SlotKind::alphabet;
      slot.chars = std::move(members);
    } else {
      slot.kind = SlotKind::literal;
      slot.chars = std::u32string(1, c);
      ++i;
    }
    spec.slots_.push_back(std::move(slot));
  }
  if (spec.class_slot_count() == 0) {
    throw FormatParseError(0, "template has no character class slots");
  }
  std::uint64_t size = 1;
  for (const auto& s : spec.slots_) {
    if (!s.is_class()) continue;
    // Saturate instead of overflowing; anything this big is refused anyway.
    if (size > UINT64_MAX / s.radix()) {
      throw DomainTooLarge(UINT64_MAX, true);
    }
    size *= s.radix();
  }
  if (size >= kMaxDomainSize) throw DomainTooLarge(size, false);
  spec.domain_size_ = size;
  return spec;
}

// Mixed-radix position of `value` within the domain.
inline std::uint64_t rank(std::string_view value, const FormatSpec& spec) {
  std::u32string cps;
  try {
    cps = decode_utf8(value);
  } catch (const Utf8Error& e) {
    throw ValueMismatch(0, e.what());
  }
  const auto& slots = spec.slots();
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (i >= cps.size()) throw ValueMismatch(i, "value is too short");
    const Slot& s = slots[i];
    if (!s.is_class()) {
      if (cps[i] != s.chars[0]) {
        throw ValueMismatch(i, "expected literal '" + encode_utf8(s.chars) + "'");
      }
      continue;
    }
    const std::size_t digit = s.index_of(cps[i]);
    if (digit == Slot::npos) {
      throw ValueMismatch(i, "character not in class");
    }
    index = index * s.radix() + digit;
  }
  if (cps.size() > slots.size()) {
    throw ValueMismatch(slots.size(), "value is too long");
  }
  return index;
}

inline std::string unrank(std::uint64_t index, const FormatSpec& spec) {
  if (index >= spec.domain_size()) {
    throw std::out_of_range("index " + std::to_string(index) +
                            " outside domain of size " +
                            std::to_string(spec.domain_size()));
  }
  const auto& slots = spec.slots();
  std::u32string out(slots.size(), U'\0');
  for (std::size_t i = slots.size(); i-- > 0;) {
    const Slot& s = slots[i];
    if (!s.is_class()) {
      out[i] = s.chars[0];
      continue;
    }
    out[i] = s.chars[index % s.radix()];
    index /= s.radix();
  }
  return encode_utf8(out);
}

}  // namespace fyshuffle

#endif  // FYSHUFFLE_FORMAT_HPP_
