// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fyshuffle/bitsource.hpp"
#include "fyshuffle/oracle.hpp"
#include "fyshuffle/permutation.hpp"
#include "fyshuffle/sampler.hpp"
#include "fyshuffle/shuffle.hpp"
#include "fyshuffle/stats.hpp"
#include "fyshuffle/tokenizer.hpp"

using namespace fyshuffle;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects failed sub-checks; a criterion passes when none failed.
struct Check {
  std::vector<std::string> failures;
  std::ostringstream note;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

SeedKey key_from_index(std::uint64_t i) {
  SeedKey k;
  for (int b = 0; b < 8; ++b) k.bytes[31 - b] = static_cast<std::uint8_t>(i >> (8 * b));
  return k;
}

// Fixed seed for the statistical "must pass" cases.
const SeedKey kAuditSeed = SeedKey::from_hex("1");

void exact_uniformity(Check& c) {
  const auto t0 = Clock::now();
  for (unsigned n = 1; n <= 8; ++n) {
    const auto d = exact_shuffle_distribution(n);
    const Rational expected(BigInt(1), factorial(n));
    bool ok = d.mass.size() == factorial_u64(n);
    for (const auto& [rank, m] : d.mass) ok = ok && m == expected;
    c.expect(ok, "n=" + std::to_string(n) + " not exactly 1/n!");
  }
  const double s = seconds_since(t0);
  c.expect(s < 10.0, "runtime " + std::to_string(s) + " s >= 10 s");
  c.note << "n=1..8 exact, " << s << " s";
}

void bitlevel_bracket(Check& c) {
  const auto t0 = Clock::now();
  const auto three = bitlevel_shuffle_check(3, 48);
  for (std::uint64_t r = 0; r < 6; ++r) {
    c.expect(three.brackets({r}, Rational(1, 6)), "n=3 rank " + std::to_string(r));
  }
  c.expect(three.unresolved <= pow2_inverse(40), "n=3 width > 2^-40");
  const auto four = bitlevel_shuffle_check(4, 56);
  for (std::uint64_t r = 0; r < 24; ++r) {
    c.expect(four.brackets({r}, Rational(1, 24)), "n=4 rank " + std::to_string(r));
  }
  const double s = seconds_since(t0);
  c.expect(s < 60.0, "runtime " + std::to_string(s) + " s >= 60 s");
  c.note << "n=3 width " << three.unresolved.convert_to<double>() << ", n=4 width "
         << four.unresolved.convert_to<double>() << ", " << s << " s";
}

void functional_equivalence(Check& c) {
  std::size_t mismatches = 0;
  for (std::size_t n = 0; n <= 32; ++n) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      auto base = BitSource::from_seed(key_from_index(1000 * n + seed));
      auto [rec, tape] = fork_recording(base);
      auto a = identity_permutation(n);
      shuffle_in_place(a, rec);
      auto replay = BitSource::from_tape(*tape);
      const auto run = shuffle_functional_run(identity_permutation(n), 0, replay);
      if (run.output != a || run.bits_consumed != tape->size()) ++mismatches;
    }
  }
  c.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
  c.note << "3300 runs, " << mismatches << " mismatches";
}

void negative_controls(Check& c) {
  // Exact distributions by path enumeration come first.
  const auto sattolo3 = exact_variant_distribution(ShuffleVariant::sattolo, 3);
  c.expect(sattolo3.at({3}) == Rational(1, 2) && sattolo3.at({4}) == Rational(1, 2) &&
               sattolo3.total() == 1,
           "sattolo n=3 not {1/2, 1/2} on the 3-cycles");
  const auto naive3 = exact_variant_distribution(ShuffleVariant::naive, 3);
  bool in_set = naive3.mass.size() == 6;
  for (const auto& [rank, m] : naive3.mass) {
    in_set = in_set && (m == Rational(4, 27) || m == Rational(5, 27));
  }
  c.expect(in_set && naive3.total() == 1, "naive n=3 masses not in {4/27, 5/27}");

  const std::uint64_t samples = 100000;
  const double sattolo_expected = expected_uniformity_statistic(
      masses_by_rank(exact_variant_distribution(ShuffleVariant::sattolo, 4), 4), samples);
  const double naive_expected =
      expected_uniformity_statistic(masses_by_rank(naive3, 3), samples);
  c.expect(sattolo_expected >= 10 * chi2_critical_value(23), "sattolo effect too small");
  c.expect(naive_expected >= 10 * chi2_critical_value(5), "naive effect too small");

  const auto sattolo = shuffle_bias_audit(ShuffleVariant::sattolo, 4, samples, kAuditSeed);
  const auto naive = shuffle_bias_audit(ShuffleVariant::naive, 3, samples, kAuditSeed);
  const auto fy = shuffle_bias_audit(ShuffleVariant::fisher_yates, 4, samples, kAuditSeed);
  c.expect(sattolo.verdict == Verdict::fail, "sattolo n=4 audit passed");
  c.expect(naive.verdict == Verdict::fail, "naive n=3 audit passed");
  c.expect(fy.verdict == Verdict::pass, "fisher_yates n=4 audit failed");
  c.note << "chi2 sattolo " << sattolo.statistic << " naive " << naive.statistic
         << " fisher_yates " << fy.statistic << " (crit " << fy.critical_value << ")";
}

void sampler_axioms(Check& c) {
  Rational widest = 0;
  for (std::uint64_t n = 2; n <= 8; ++n) {
    const auto d = bitlevel_distribution(uniform(n), 64);
    const Rational target(1, static_cast<long long>(n));
    for (std::uint64_t v = 0; v < n; ++v) {
      c.expect(d.brackets(v, target), "uniform(" + std::to_string(n) + ") at " +
                                          std::to_string(v));
    }
    c.expect(d.unresolved <= pow2_inverse(32), "uniform(" + std::to_string(n) + ") width");
    if (d.unresolved > widest) widest = d.unresolved;
  }
  for (std::int64_t a : {-3, 0, 5}) {
    for (std::int64_t w = 1; w <= 8; ++w) {
      const auto d = bitlevel_distribution(interval_sample(a, a + w), 64);
      const Rational target(1, w);
      for (std::int64_t v = a; v < a + w; ++v) {
        c.expect(d.brackets(v, target), "interval_sample(" + std::to_string(a) + ", " +
                                            std::to_string(a + w) + ")");
      }
      c.expect(d.lower.size() == static_cast<std::size_t>(w), "interval support");
      c.expect(d.unresolved <= pow2_inverse(32), "interval width");
    }
  }
  c.note << "widest interval " << widest.convert_to<double>();
}

void independence(Check& c) {
  const std::uint64_t samples = 100000;
  const auto coin_ind = independence_test(coin(), samples, kAuditSeed);
  const auto u3_ind = independence_test(uniform(3), samples, kAuditSeed);
  const auto bad_ind = independence_test(controls::bad_coin(), samples, kAuditSeed);
  c.expect(coin_ind.verdict == Verdict::pass, "coin independence failed");
  c.expect(u3_ind.verdict == Verdict::pass, "uniform(3) independence failed");
  c.expect(bad_ind.verdict == Verdict::fail, "bad_coin independence passed");

  const auto u3_mp = measure_preservation_test(uniform(3), 3, samples, kAuditSeed);
  const auto bad_mp = measure_preservation_test(controls::bad_coin(), 1, samples, kAuditSeed);
  c.expect(u3_mp.verdict == Verdict::pass, "uniform(3) measure preservation failed");
  c.expect(bad_mp.verdict == Verdict::fail, "bad_coin measure preservation passed");

  std::size_t cells = 0;
  for (unsigned n = 2; n <= 4; ++n) {
    const auto r = shuffle_draw_factorization(n);
    c.expect(r.factorizes, "factorization n=" + std::to_string(n) + ": " + r.first_violation);
    cells += r.cells_checked;
  }
  c.note << "independence chi2 coin " << coin_ind.statistic << " bad_coin "
         << bad_ind.statistic << "; factorization " << cells << " cells";
}

void tokenization(Check& c) {
  const auto t0 = Clock::now();
  const auto spec = parse_format("DDDDD");
  const auto key = SeedKey::from_hex("5eed");
  const auto table = build_table(spec, key);
  std::vector<bool> seen(spec.domain_size(), false);
  std::size_t bad = 0;
  for (std::uint64_t i = 0; i < spec.domain_size(); ++i) {
    const std::string v = unrank(i, spec);
    const std::string tok = table.tokenize(v);
    const auto r = rank(tok, spec);
    if (seen[r] || table.detokenize(tok) != v) ++bad;
    seen[r] = true;
  }
  const double s = seconds_since(t0);
  c.expect(bad == 0, std::to_string(bad) + " roundtrip or distinctness failures");
  c.expect(s < 10.0, "runtime " + std::to_string(s) + " s >= 10 s");

  bool refused = false;
  try {
    parse_format("DDDDDDD");
  } catch (const DomainTooLarge&) {
    refused = true;
  }
  c.expect(refused, "DDDDDDD accepted");

  const auto bytes = serialize_table(table);
  const auto reloaded = deserialize_table(bytes);
  c.expect(reloaded == table && serialize_table(reloaded) == bytes, "save/load not bit-exact");
  std::size_t undetected = 0;
  std::mt19937_64 rng(99);
  for (int k = 0; k < 64; ++k) {
    auto corrupt = bytes;
    corrupt[rng() % corrupt.size()] ^= static_cast<std::uint8_t>(1u << (rng() % 8));
    try {
      deserialize_table(corrupt);
      ++undetected;
    } catch (const TableFileError&) {
    }
  }
  c.expect(undetected == 0, std::to_string(undetected) + " corruptions undetected");

  const std::string golden =
      "0b2e545ad43fe000b431140fda6c98b91f41ecfb6bf2c325d4d6831533106e86";
  const auto first = to_hex(table.forward_digest());
  const auto second = to_hex(build_table(spec, key).forward_digest());
  c.expect(first == golden && second == golden, "table digest differs from golden");
  c.note << "100000 values in " << s << " s; digest " << first.substr(0, 16) << "...";
}

RecordedTape random_tape(std::mt19937_64& rng) {
  RecordedTape tape;
  const std::size_t len = rng() % 97;
  for (std::size_t i = 0; i < len; ++i) tape.bits.push_back(rng() & 1u);
  return tape;
}

template <class T>
std::optional<std::pair<T, std::uint64_t>> observe(const Sampler<T>& s,
                                                   const RecordedTape& tape) {
  auto src = BitSource::from_tape(tape);
  try {
    auto out = s.run(src);
    return std::make_pair(out.value, out.bits_consumed);
  } catch (const TapeExhausted&) {
    return std::nullopt;
  }
}

void monad_laws(Check& c) {
  std::mt19937_64 rng(2024);
  const auto m = uniform(5);
  auto f = [](std::uint64_t x) { return uniform(x + 2); };
  auto g = [](std::uint64_t y) {
    return bind(coin(), [y](bool b) { return return_(2 * y + b); });
  };
  int left = 0, right = 0, assoc = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto tape = random_tape(rng);
    const std::uint64_t x = rng() % 7;
    if (observe(bind(return_(x), f), tape) != observe(f(x), tape)) ++left;
    if (observe(bind(m, [](std::uint64_t v) { return return_(v); }), tape) !=
        observe(m, tape)) {
      ++right;
    }
    if (observe(bind(bind(m, f), g), tape) !=
        observe(bind(m, [f, g](std::uint64_t v) { return bind(f(v), g); }), tape)) {
      ++assoc;
    }
  }
  c.expect(left == 0, "left identity: " + std::to_string(left));
  c.expect(right == 0, "right identity: " + std::to_string(right));
  c.expect(assoc == 0, "associativity: " + std::to_string(assoc));
  c.note << "3 laws x 1000 tapes, " << left + right + assoc << " violations";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"exact uniformity", exact_uniformity},
      {"bit-level bracket", bitlevel_bracket},
      {"functional/imperative equivalence", functional_equivalence},
      {"negative controls", negative_controls},
      {"sampler axioms", sampler_axioms},
      {"independence and measure preservation", independence},
      {"tokenization", tokenization},
      {"monad laws", monad_laws},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = c.failures.empty();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << " ("
              << criteria[i].first << "): " << c.note.str();
    for (const auto& f : c.failures) std::cout << "\n    " << f;
    std::cout << std::endl;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
