// Command-line front end: hashing, homomorphic combine, growth and
// freeness experiments, girth bounds, preimage searches, statistical
// testing and export, and an operation-count benchmark.
//
// Exit codes: 0 success, 2 usage error, 3 computation error, 4 budget or
// resource limit. The enumeration budget can be overridden with the
// CAYLEY_ENUM_BUDGET environment variable.

#include <chrono>
#include <cstdint>
#include <map>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cayley/cayley.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitComputation = 3;
constexpr int kExitBudget = 4;

std::uint64_t enum_budget() {
    if (const char* env = std::getenv("CAYLEY_ENUM_BUDGET"))
        return std::strtoull(env, nullptr, 10);
    return cayley::kDefaultEnumBudget;
}

struct PrimeOpts {
    std::string preset;
    std::string prime_decimal;
    unsigned prime_bits = 0;
    bool generate = false;
    std::uint64_t seed = 1;

    void attach(CLI::App* cmd) {
        auto* preset_opt =
            cmd->add_option("--preset", preset,
                            "named parameter preset (paper-256, paper-512)");
        auto* prime_opt = cmd->add_option("--prime", prime_decimal,
                                          "prime modulus, decimal");
        auto* bits_opt = cmd->add_option("--prime-bits", prime_bits,
                                         "bit size for a generated prime");
        cmd->add_flag("--generate", generate,
                      "generate a random prime of --prime-bits bits");
        cmd->add_option("--seed", seed, "RNG seed");
        preset_opt->excludes(prime_opt);
        preset_opt->excludes(bits_opt);
        prime_opt->excludes(bits_opt);
    }

    cayley::HashParams resolve() const {
        if (!preset.empty()) return cayley::HashParams::preset_by_name(preset);
        if (!prime_decimal.empty())
            return cayley::HashParams::create(cayley::Int(prime_decimal));
        if (prime_bits > 0 && generate) {
            auto p = cayley::generate_prime(prime_bits, seed);
            std::cerr << "# generated prime: " << p.get_str() << "\n";
            return cayley::HashParams::create(std::move(p), "", true);
        }
        return cayley::HashParams::preset_by_name("paper-256");
    }
};

struct InputOpts {
    std::string bits;
    std::string in_path;
    bool use_stdin = false;
    std::string format = "bits";
    CLI::Option* bits_opt = nullptr;

    void attach(CLI::App* cmd) {
        bits_opt = cmd->add_option("--bits", bits,
                                   "inline bit string ('0'/'1')");
        auto* in_opt = cmd->add_option("--in", in_path, "input file");
        auto* stdin_flag =
            cmd->add_flag("--stdin", use_stdin, "read input from stdin");
        cmd->add_option("--format", format,
                        "input interpretation: bits (ASCII '0'/'1') or bytes "
                        "(raw, MSB-first)")
            ->check(CLI::IsMember({"bits", "bytes"}));
        bits_opt->excludes(in_opt);
        bits_opt->excludes(stdin_flag);
        in_opt->excludes(stdin_flag);
    }

    std::vector<std::uint8_t> resolve() const {
        if (bits_opt->count() > 0) return cayley::parse_bit_string(bits);
        if (!in_path.empty()) {
            if (format == "bytes")
                return cayley::bytes_to_bits(cayley::read_file_bytes(in_path));
            return cayley::parse_bit_string(cayley::read_file_text(in_path));
        }
        if (use_stdin) {
            if (format == "bytes") {
                std::vector<std::uint8_t> bytes(
                    (std::istreambuf_iterator<char>(std::cin)),
                    std::istreambuf_iterator<char>());
                return cayley::bytes_to_bits(bytes);
            }
            std::string text((std::istreambuf_iterator<char>(std::cin)),
                             std::istreambuf_iterator<char>());
            return cayley::parse_bit_string(text);
        }
        throw CLI::ValidationError("input",
                                   "one of --bits, --in, --stdin is required");
    }
};

cayley::Mat2Z parse_matrix(const std::string& csv) {
    std::vector<cayley::Int> entries;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) entries.emplace_back(item);
    if (entries.size() != 4)
        throw std::invalid_argument("--matrix expects a,b,c,d");
    return {entries[0], entries[1], entries[2], entries[3]};
}

const char* outcome_name(cayley::SearchOutcome outcome) {
    switch (outcome) {
        case cayley::SearchOutcome::kFound: return "found";
        case cayley::SearchOutcome::kExhausted: return "exhausted";
        default: return "budget";
    }
}

void print_stats(const cayley::SearchStats& stats) {
    std::cout << "stats: outcome=" << outcome_name(stats.outcome)
              << " nodes=" << stats.nodes
              << " backtracks=" << stats.backtracks
              << " max_depth=" << stats.max_depth
              << " branching_steps=" << stats.branching_steps << "/"
              << stats.descent_steps << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cayley hashing with cookies: hash, analyze, attack, test"};
    app.require_subcommand(1);

    // ---- hash
    auto* hash_cmd = app.add_subcommand("hash", "hash a bit string");
    PrimeOpts hash_prime;
    hash_prime.attach(hash_cmd);
    InputOpts hash_input;
    hash_input.attach(hash_cmd);
    bool raw = false, count_ops = false;
    hash_cmd->add_flag("--raw", raw, "skip the 000 padding");
    hash_cmd->add_flag("--count-ops", count_ops,
                       "print addition/multiplication counters");

    // ---- combine
    auto* combine_cmd =
        app.add_subcommand("combine", "multiply two padded digests");
    PrimeOpts combine_prime;
    combine_prime.attach(combine_cmd);
    std::string hex1, hex2;
    combine_cmd->add_option("digest1", hex1, "first digest, hex")->required();
    combine_cmd->add_option("digest2", hex2, "second digest, hex")->required();

    // ---- growth
    auto* growth_cmd =
        app.add_subcommand("growth", "entry growth experiments");
    std::string growth_set = "cookie-ABC";
    std::string growth_mode = "random";
    int growth_len = 1000, growth_max_len = 12;
    std::uint64_t growth_trials = 1000, growth_seed = 1;
    bool growth_csv = false;
    growth_cmd->add_option("--set", growth_set, "generator set name");
    growth_cmd->add_option("--mode", growth_mode, "exhaustive or random")
        ->check(CLI::IsMember({"exhaustive", "random"}));
    growth_cmd->add_option("--len", growth_len, "word length (random mode)");
    growth_cmd->add_option("--max-len", growth_max_len,
                           "max word length (exhaustive mode)");
    growth_cmd->add_option("--trials", growth_trials, "trial count");
    growth_cmd->add_option("--seed", growth_seed, "RNG seed");
    growth_cmd->add_flag("--csv", growth_csv, "CSV output");

    // ---- freeness
    auto* freeness_cmd = app.add_subcommand(
        "freeness", "exhaustive collision search among short words");
    std::string freeness_set = "cookie-ABC";
    int freeness_max_len = 8;
    freeness_cmd->add_option("--set", freeness_set, "generator set name");
    freeness_cmd->add_option("--max-len", freeness_max_len, "max word length")
        ->required();

    // ---- girth-bound
    auto* girth_cmd = app.add_subcommand(
        "girth-bound", "collision-free length lower bound");
    unsigned girth_bits = 0;
    std::string girth_prime, girth_preset, girth_rate = "cookie";
    girth_cmd->add_option("--prime-bits", girth_bits, "p of order 2^bits");
    girth_cmd->add_option("--prime", girth_prime, "explicit p, decimal");
    girth_cmd->add_option("--preset", girth_preset, "named preset");
    girth_cmd->add_option("--rate", girth_rate,
                          "growth rate: cookie (~2.618) or 1.93")
        ->check(CLI::IsMember({"cookie", "1.93"}));

    // ---- preimage
    auto* preimage_cmd = app.add_subcommand("preimage", "preimage searches");
    PrimeOpts preimage_prime;
    preimage_prime.attach(preimage_cmd);
    std::string preimage_mode, preimage_word, preimage_matrix, preimage_digest;
    int preimage_max_len = 64;
    std::uint64_t preimage_budget = 1'000'000;
    preimage_cmd
        ->add_option("--mode", preimage_mode,
                     "greedy2 (2-generator, over Z), backtrack3 (cookie hash "
                     "over Z), brute (mod p)")
        ->required()
        ->check(CLI::IsMember({"greedy2", "backtrack3", "brute"}));
    preimage_cmd->add_option(
        "--word", preimage_word,
        "build the target from this bit string (round-trip demo)");
    preimage_cmd->add_option("--matrix", preimage_matrix,
                             "target integer matrix a,b,c,d");
    preimage_cmd->add_option("--digest", preimage_digest,
                             "target digest hex (brute mode)");
    preimage_cmd->add_option("--max-len", preimage_max_len, "max word length");
    preimage_cmd->add_option("--budget", preimage_budget, "node budget");

    // ---- nist-export
    auto* export_cmd = app.add_subcommand(
        "nist-export", "write digest streams for the external STS suite");
    PrimeOpts export_prime;
    export_prime.attach(export_cmd);
    std::string export_dir;
    std::size_t export_count = 1, export_input_bits = 1024,
                export_target = 0;
    export_cmd->add_option("--out", export_dir, "output directory")
        ->required();
    export_cmd->add_option("--count", export_count, "number of hashed inputs");
    export_cmd->add_option("--input-bits", export_input_bits,
                           "random input length per hash");
    export_cmd->add_option("--target-bits", export_target,
                           "sequence length (0: one file per digest)");

    // ---- randtest
    auto* randtest_cmd = app.add_subcommand(
        "randtest", "built-in statistical tests on digest streams");
    PrimeOpts randtest_prime;
    randtest_prime.attach(randtest_cmd);
    std::size_t rt_count = 100, rt_input_bits = 1024, rt_target = 0,
                rt_block = 128;
    randtest_cmd->add_option("--count", rt_count, "number of hashed inputs");
    randtest_cmd->add_option("--input-bits", rt_input_bits,
                             "random input length per hash");
    randtest_cmd->add_option("--target-bits", rt_target,
                             "sequence length (0: one sequence per digest)");
    randtest_cmd->add_option("--block-size", rt_block,
                             "block frequency block size M");

    // ---- bench
    auto* bench_cmd =
        app.add_subcommand("bench", "hashing throughput and operation counts");
    PrimeOpts bench_prime;
    bench_prime.attach(bench_cmd);
    std::size_t bench_bits = 1'000'000;
    bench_cmd->add_option("--bits", bench_bits, "input length in bits");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*hash_cmd) {
            auto params = hash_prime.resolve();
            cayley::CookieHasher hasher(params);
            hasher.absorb_bits(hash_input.resolve());
            cayley::Digest digest =
                raw ? hasher.finalize_raw() : hasher.finalize_padded();
            std::cout << digest.to_hex() << "\n";
            if (count_ops)
                std::cout << "ops: additions=" << hasher.counters().additions
                          << " multiplications="
                          << hasher.counters().multiplications << "\n";
        } else if (*combine_cmd) {
            auto params = combine_prime.resolve();
            auto d1 = cayley::Digest::from_hex(hex1, params);
            auto d2 = cayley::Digest::from_hex(hex2, params);
            std::cout << cayley::combine(d1, d2).to_hex() << "\n";
        } else if (*growth_cmd) {
            auto set = cayley::set_by_name(growth_set);
            cayley::GrowthReport report;
            if (growth_mode == "random") {
                report = cayley::random_growth(set, growth_len, growth_trials,
                                               growth_seed);
            } else {
                report = cayley::exhaustive_growth_report(set, growth_max_len,
                                                          enum_budget());
            }
            if (growth_csv) {
                std::cout << cayley::growth_report_csv(report);
            } else {
                std::cout << "set=" << report.set_name
                          << " mode=" << report.mode
                          << " fitted_base=" << report.fitted_base << "\n";
            }
        } else if (*freeness_cmd) {
            auto set = cayley::set_by_name(freeness_set);
            auto result =
                cayley::freeness_check(set, freeness_max_len, enum_budget());
            if (result.free) {
                std::cout << "free up to length " << result.max_len << " ("
                          << result.words_checked << " words)\n";
            } else {
                std::cout << "collision: " << result.witness->word1 << " = "
                          << result.witness->word2 << "\n";
                return kExitComputation;
            }
        } else if (*girth_cmd) {
            auto rate = girth_rate == "cookie" ? cayley::GrowthRate::kCookie
                                               : cayley::GrowthRate::kRate193;
            long bound;
            if (girth_bits > 0)
                bound = cayley::collision_bound_bits(girth_bits, rate);
            else if (!girth_prime.empty())
                bound = cayley::collision_bound(cayley::Int(girth_prime), rate);
            else if (!girth_preset.empty())
                bound = cayley::collision_bound(
                    cayley::HashParams::preset_by_name(girth_preset).p, rate);
            else
                throw CLI::ValidationError(
                    "girth-bound", "need --prime-bits, --prime, or --preset");
            std::cout << bound << "\n";
        } else if (*preimage_cmd) {
            cayley::PreimageResult result;
            if (preimage_mode == "brute") {
                auto params = preimage_prime.resolve();
                if (preimage_digest.empty())
                    throw CLI::ValidationError("preimage",
                                               "brute mode needs --digest");
                auto digest =
                    cayley::Digest::from_hex(preimage_digest, params);
                result = cayley::brute_force_preimage(
                    digest, preimage_max_len, params, preimage_budget);
            } else {
                cayley::Mat2Z target;
                if (!preimage_matrix.empty()) {
                    target = parse_matrix(preimage_matrix);
                } else if (!preimage_word.empty()) {
                    auto bits = cayley::parse_bit_string(preimage_word);
                    target = preimage_mode == "greedy2"
                                 ? cayley::h1_integer_hash(bits)
                                 : cayley::integer_hash(bits);
                } else {
                    throw CLI::ValidationError(
                        "preimage", "need --word or --matrix");
                }
                result = preimage_mode == "greedy2"
                             ? cayley::greedy_preimage_2gen(target,
                                                            preimage_budget)
                             : cayley::backtrack_preimage_3gen(
                                   target, preimage_max_len, preimage_budget);
            }
            if (result.bits) std::cout << "word: " << *result.bits << "\n";
            print_stats(result.stats);
            if (result.stats.outcome == cayley::SearchOutcome::kBudget)
                return kExitBudget;
            if (!result.bits) return kExitComputation;
        } else if (*export_cmd) {
            auto params = export_prime.resolve();
            auto stream = cayley::hash_stream_generate(
                params, export_count, export_input_bits, export_prime.seed,
                export_target);
            auto paths = cayley::sts_export(stream.sequences, export_dir);
            std::cout << "wrote " << paths.size() << " sequence files to "
                      << export_dir << "\n";
        } else if (*randtest_cmd) {
            auto params = randtest_prime.resolve();
            auto stream = cayley::hash_stream_generate(
                params, rt_count, rt_input_bits, randtest_prime.seed,
                rt_target);
            std::cout << "test,param,statistic,p_value,verdict\n";
            std::map<std::string, std::pair<int, int>> tally;
            for (const auto& seq : stream.sequences)
                for (const auto& report :
                     cayley::run_builtin_tests(seq, rt_block)) {
                    std::cout << report.csv() << "\n";
                    auto& [pass, total] = tally[report.test + report.param];
                    pass += report.pass;
                    ++total;
                }
            for (const auto& [key, counts] : tally)
                std::cout << "# pass-rate " << key << " " << counts.first
                          << "/" << counts.second << "\n";
        } else if (*bench_cmd) {
            auto params = bench_prime.resolve();
            auto rng = cayley::make_rng(bench_prime.seed);
            auto bits = cayley::random_bits(rng, bench_bits);
            cayley::CookieHasher hasher(params);
            auto start = std::chrono::steady_clock::now();
            hasher.absorb_bits(bits);
            auto digest = hasher.finalize_raw();
            auto elapsed = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
            (void)digest;
            std::cout << "bits=" << bench_bits
                      << " seconds=" << elapsed
                      << " bits_per_sec=" << double(bench_bits) / elapsed
                      << " additions_per_bit="
                      << double(hasher.counters().additions) / bench_bits
                      << " multiplications="
                      << hasher.counters().multiplications << "\n";
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const cayley::ResourceLimitError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    }
    return kExitOk;
}
