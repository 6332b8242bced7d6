#ifndef FYSHUFFLE_CLI_HPP_
#define FYSHUFFLE_CLI_HPP_

// Command bodies for the fyshuffle tool, separated from argument parsing so
// tests can drive them with string streams.
//
// Exit codes: 0 success, 1 a verification or audit failed, 2 usage error,
// 3 I/O or format error. Code 1 never means bad input.

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fyshuffle/bitsource.hpp"
#include "fyshuffle/oracle.hpp"
#include "fyshuffle/permutation.hpp"
#include "fyshuffle/shuffle.hpp"
#include "fyshuffle/stats.hpp"
#include "fyshuffle/tokenizer.hpp"

namespace fyshuffle::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kUsageError = 2,
  kIoError = 3,
};

inline int cmd_shuffle(std::istream& in, std::ostream& out, BitSource& src) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(std::move(line));
  if (in.bad()) return kIoError;
  shuffle_in_place(lines, src);
  for (const auto& line : lines) out << line << '\n';
  out.flush();
  return out ? kSuccess : kIoError;
}

enum class VerifyMode { exact, bitlevel };

namespace detail {

inline std::string describe_permutation(PermIndex r, unsigned n) {
  std::string s = "rank " + std::to_string(r.rank) + " [";
  const auto p = perm_unrank(r, n);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(p[i]);
  }
  return s + "]";
}

}  // namespace detail

inline int cmd_verify(unsigned n, VerifyMode mode, std::optional<unsigned> depth,
                      std::ostream& out, std::ostream& err) {
  const std::uint64_t perms = n <= 20 ? factorial_u64(n) : 0;
  const Rational expected(BigInt(1), factorial(n));
  if (mode == VerifyMode::exact) {
    if (n < 1 || n > 8) {
      err << "verify: exact mode supports 1 <= n <= 8\n";
      return kUsageError;
    }
    const auto dist = exact_shuffle_distribution(n);
    out << to_text(dist);
    if (dist.mass.size() != perms) {
      err << "verify: FAIL, only " << dist.mass.size() << " of " << perms
          << " permutations reachable\n";
      return kCheckFailed;
    }
    for (const auto& [rank, m] : dist.mass) {
      if (m != expected) {
        err << "verify: FAIL at " << detail::describe_permutation(rank, n)
            << ": mass " << to_string(m) << " != " << to_string(expected) << '\n';
        return kCheckFailed;
      }
    }
    err << "verify: all " << perms << " permutations have mass exactly "
        << to_string(expected) << '\n';
    return kSuccess;
  }

  const unsigned d = depth.value_or(kDefaultBitDepth);
  if (n < 1 || n > 4 || d > 64) {
    err << "verify: bitlevel mode supports 1 <= n <= 4 and depth <= 64\n";
    return kUsageError;
  }
  const auto dist = bitlevel_shuffle_check(n, d);
  out << to_text(dist);
  for (std::uint64_t r = 0; r < perms; ++r) {
    if (!dist.brackets(PermIndex{r}, expected)) {
      err << "verify: FAIL at " << detail::describe_permutation({r}, n)
          << ": [" << to_string(dist.lower_at({r})) << ", "
          << to_string(dist.upper_at({r})) << "] excludes "
          << to_string(expected) << '\n';
      return kCheckFailed;
    }
  }
  err << "verify: all " << perms << " intervals contain " << to_string(expected)
      << "; width " << to_string(dist.unresolved) << " (~"
      << dist.unresolved.convert_to<double>() << ")\n";
  return kSuccess;
}

inline int cmd_audit(ShuffleVariant variant, unsigned n, std::uint64_t samples,
                     const SeedKey& key, std::ostream& out, std::ostream& err) {
  try {
    const auto report = shuffle_bias_audit(variant, n, samples, key);
    out << report.to_text();
    return report.verdict == Verdict::pass ? kSuccess : kCheckFailed;
  } catch (const TestRefused& e) {
    err << "audit: " << e.what() << '\n';
    return kUsageError;
  }
}

inline int cmd_table_gen(const std::string& format, const SeedKey& key,
                         const std::string& table_path, std::ostream& err) {
  FormatSpec spec;
  try {
    spec = parse_format(format);
  } catch (const FormatError& e) {
    err << "table gen: " << e.what() << '\n';
    return kUsageError;
  }
  try {
    save_table(build_table(spec, key), table_path);
  } catch (const TableFileError& e) {
    err << "table gen: " << e.what() << '\n';
    return kIoError;
  }
  err << "table gen: wrote " << spec.domain_size() << " entries to "
      << table_path
      << "\nwarning: the table file is key-equivalent material; protect it "
         "like the key\n";
  return kSuccess;
}

enum class Direction { tokenize, detokenize };

// Transforms `values`, or every line of `in` when `values` is empty.
inline int cmd_table_transform(Direction direction, const std::string& table_path,
                               const std::optional<SeedKey>& key,
                               const std::vector<std::string>& values,
                               std::istream& in, std::ostream& out,
                               std::ostream& err) {
  const char* name = direction == Direction::tokenize ? "tokenize" : "detokenize";
  std::optional<TokenTable> table;
  try {
    table.emplace(load_table(table_path));
    if (key) table->verify_key(*key);
  } catch (const TableFileError& e) {
    err << "table " << name << ": " << e.what() << '\n';
    return kIoError;
  }
  auto apply = [&](const std::string& v) {
    return direction == Direction::tokenize ? table->tokenize(v)
                                            : table->detokenize(v);
  };
  try {
    if (!values.empty()) {
      for (const auto& v : values) out << apply(v) << '\n';
    } else {
      for (std::string line; std::getline(in, line);) out << apply(line) << '\n';
    }
  } catch (const std::invalid_argument& e) {
    err << "table " << name << ": " << e.what() << '\n';
    return kIoError;
  }
  out.flush();
  return out ? kSuccess : kIoError;
}

}  // namespace fyshuffle::cli

#endif  // FYSHUFFLE_CLI_HPP_
