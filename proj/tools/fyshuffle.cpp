// fyshuffle: shuffle lines, verify shuffle distributions, audit shuffle
// variants for bias, and run truth-table tokenization.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "fyshuffle/cli.hpp"

namespace {

using namespace fyshuffle;

// Either --seed or --entropy must be given; never silently random.
std::optional<BitSource> source_from(const std::string& seed, bool entropy) {
  if (entropy) return BitSource::from_entropy();
  if (seed.empty()) return std::nullopt;
  return BitSource::from_seed(SeedKey::from_hex(seed));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fisher-Yates shuffling, distribution checks and tokenization"};
  app.require_subcommand(1);

  std::string seed;
  bool entropy = false;

  auto* shuffle = app.add_subcommand("shuffle", "Shuffle input lines");
  std::string input_path;
  shuffle->add_option("file", input_path, "Input file (default: stdin)");
  shuffle->add_option("--seed", seed, "Seed, up to 64 hex digits");
  shuffle->add_flag("--entropy", entropy, "Use a nondeterministic OS-seeded source");

  auto* verify = app.add_subcommand("verify", "Check that every permutation has mass 1/n!");
  unsigned verify_n = 0;
  std::string mode = "exact";
  std::optional<unsigned> depth;
  verify->add_option("-n,--n", verify_n, "Number of elements")->required();
  verify->add_option("--mode", mode, "exact or bitlevel")
      ->check(CLI::IsMember({"exact", "bitlevel"}));
  verify->add_option("--depth", depth, "Bit-level enumeration depth (default 48)");

  auto* audit = app.add_subcommand("audit", "Chi-squared bias audit of a shuffle variant");
  std::string variant = "fisher_yates";
  unsigned audit_n = 0;
  std::uint64_t samples = 100000;
  audit->add_option("--variant", variant, "fisher_yates, sattolo or naive")
      ->check(CLI::IsMember({"fisher_yates", "sattolo", "naive"}));
  audit->add_option("-n,--n", audit_n, "Number of elements")->required();
  audit->add_option("--samples", samples, "Number of shuffles");
  audit->add_option("--seed", seed, "Seed, up to 64 hex digits");
  audit->add_flag("--entropy", entropy, "Use a nondeterministic OS-seeded source");

  auto* table = app.add_subcommand("table", "Truth-table tokenization");
  table->require_subcommand(1);
  std::string format;
  std::string table_path;
  std::vector<std::string> values;
  auto* gen = table->add_subcommand("gen", "Build a table file for a format");
  gen->add_option("--format", format, "Format template, e.g. DDDDD")->required();
  gen->add_option("--seed", seed, "Key, up to 64 hex digits")->required();
  gen->add_option("--table", table_path, "Output table file")->required();
  auto* tokenize = table->add_subcommand("tokenize", "Replace values by tokens");
  auto* detokenize = table->add_subcommand("detokenize", "Recover values from tokens");
  for (auto* sub : {tokenize, detokenize}) {
    sub->add_option("--table", table_path, "Table file")->required();
    sub->add_option("--seed", seed, "Key to check the table against");
    sub->add_option("values", values, "Values (default: stdin lines)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kUsageError;
  }

  try {
    if (*shuffle) {
      auto src = source_from(seed, entropy);
      if (!src) {
        std::cerr << "shuffle: pass --seed <hex> or --entropy\n";
        return cli::kUsageError;
      }
      if (input_path.empty()) return cli::cmd_shuffle(std::cin, std::cout, *src);
      std::ifstream in(input_path);
      if (!in) {
        std::cerr << "shuffle: cannot read " << input_path << '\n';
        return cli::kIoError;
      }
      return cli::cmd_shuffle(in, std::cout, *src);
    }
    if (*verify) {
      return cli::cmd_verify(
          verify_n, mode == "exact" ? cli::VerifyMode::exact : cli::VerifyMode::bitlevel,
          depth, std::cout, std::cerr);
    }
    if (*audit) {
      if (entropy) {
        std::cerr << "audit: reports from --entropy runs are not reproducible\n";
      } else if (seed.empty()) {
        std::cerr << "audit: pass --seed <hex> or --entropy\n";
        return cli::kUsageError;
      }
      SeedKey key;
      if (entropy) {
        auto src = BitSource::from_entropy();
        for (auto& b : key.bytes) {
          for (int i = 0; i < 8; ++i) b = static_cast<std::uint8_t>(b << 1 | src.next_bit());
        }
      } else {
        key = SeedKey::from_hex(seed);
      }
      return cli::cmd_audit(parse_variant(variant), audit_n, samples, key,
                            std::cout, std::cerr);
    }
    if (*gen) {
      return cli::cmd_table_gen(format, SeedKey::from_hex(seed), table_path, std::cerr);
    }
    const auto direction = *tokenize ? cli::Direction::tokenize : cli::Direction::detokenize;
    std::optional<SeedKey> key;
    if (!seed.empty()) key = SeedKey::from_hex(seed);
    return cli::cmd_table_transform(direction, table_path, key, values, std::cin,
                                    std::cout, std::cerr);
  } catch (const std::invalid_argument& e) {
    // Malformed seeds and similar argument problems.
    std::cerr << "error: " << e.what() << '\n';
    return cli::kUsageError;
  }
}
