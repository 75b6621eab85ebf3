// rsamod: generate RSA moduli with a prescribed bit window, verify pattern
// membership, and run the exact-count / character-sum analysis commands.
// All randomness flows from --seed; identical invocations print identical
// bytes.  Exit codes: 0 success, 1 algorithmic failure, 2 usage error.
#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rsamod/bitnum.hpp"
#include "rsamod/charsum.hpp"
#include "rsamod/generator.hpp"
#include "rsamod/oracle.hpp"
#include "rsamod/primes.hpp"
#include "rsamod/rng.hpp"

using nlohmann::json;
using namespace rsamod;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
    unsigned n = 0;
    unsigned m = 0;
    bool m_given = false;
    std::string sigma_text;
    std::string modulus_text;
    std::uint64_t seed = 0;
    std::uint64_t max_rounds = 0;
    std::uint64_t trials = 100;
    std::string format = "json";
    std::string mode = "ordered";
    bool hex = false;
    unsigned sieve_ceiling = kDefaultSieveCeiling;
    unsigned char_ceiling = kDefaultCharCeiling;
    unsigned threads = 1;
    // charsum
    std::uint64_t t0 = 0;
    std::uint64_t length = 0;
    bool max_only = false;
    bool dump = false;
    bool scan = false;
    unsigned n_from = 12;
    unsigned n_to = 20;
    unsigned l_shift = 2;
};

std::string dec(const mpz_class& x) { return x.get_str(); }
std::string rat(const mpq_class& q) { return q.get_str(); }

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

BitString sigma_for(const Options& opt, bool zeros) {
    if (zeros) return BitString::zeros(opt.m);
    BitString sigma = BitString::from_text(opt.sigma_text);
    if (opt.m_given && sigma.length() != opt.m)
        throw std::invalid_argument("sigma length does not match --m");
    return sigma;
}

void print_theorem_advisory(unsigned n, unsigned m, std::ostream& os) {
    const auto tm = theorem_m(n);
    if (tm)
        os << "theorem_m(" << n << ") = " << *tm << "; requested m = " << m << " is "
           << (m <= *tm ? "inside" : "outside") << " the proven regime\n";
    else
        os << "theorem_m(" << n << ") undefined (formula nonpositive at this size); "
           << "requested m = " << m << " is outside the proven regime\n";
}

int emit_modulus(const Options& opt, const GeneratedModulus& rec) {
    if (opt.format == "json") {
        print_theorem_advisory(rec.n, rec.m, std::cerr);
        json j{{"p", dec(rec.p)},
               {"l", dec(rec.ell)},
               {"M", dec(rec.modulus)},
               {"n", rec.n},
               {"m", rec.m},
               {"sigma", rec.sigma.text()},
               {"rounds", rec.rounds},
               {"seed", std::to_string(rec.seed)}};
        print_json(j);
    } else {
        std::cout << "p      = " << dec(rec.p) << "\n"
                  << "l      = " << dec(rec.ell) << "\n"
                  << "M      = " << dec(rec.modulus) << "\n";
        if (opt.hex)
            std::cout << "M(hex) = 0x" << rec.modulus.get_str(16) << "\n";
        std::cout << "n      = " << rec.n << "\n"
                  << "m      = " << rec.m << "\n"
                  << "sigma  = " << rec.sigma.text() << "\n"
                  << "rounds = " << rec.rounds << "\n"
                  << "seed   = " << rec.seed << "\n";
        print_theorem_advisory(rec.n, rec.m, std::cout);
    }
    return kExitOk;
}

int cmd_gen(const Options& opt, bool zeros) {
    const BitString sigma = sigma_for(opt, zeros);
    const unsigned m = opt.m_given ? opt.m : static_cast<unsigned>(sigma.length());
    Rng rng(opt.seed);
    GenOptions gen_opts;
    gen_opts.max_rounds = opt.max_rounds;
    const auto rec = rsa_modulus(opt.n, m, sigma, rng, gen_opts);
    if (!rec) {
        std::cerr << "generation failed: no acceptable prime pair within "
                  << (opt.max_rounds ? opt.max_rounds : 64ULL * opt.n) << " rounds\n";
        print_theorem_advisory(opt.n, m, std::cerr);
        return kExitFailure;
    }
    return emit_modulus(opt, *rec);
}

int cmd_verify(const Options& opt) {
    const BitString sigma = sigma_for(opt, false);
    const unsigned m = opt.m_given ? opt.m : static_cast<unsigned>(sigma.length());
    mpz_class M;
    if (M.set_str(opt.modulus_text, 0) != 0)
        throw std::invalid_argument("--modulus is not a valid integer");
    const bool match = verify(M, opt.n, m, sigma);
    const BitString window = extract_bits(M, opt.n - 1, opt.n - m);
    if (opt.format == "json") {
        json j{{"modulus", dec(M)},
               {"n", opt.n},
               {"m", m},
               {"sigma", sigma.text()},
               {"extracted", window.text()},
               {"match", match}};
        print_json(j);
    } else {
        std::cout << "bits " << opt.n - 1 << ".." << opt.n - m << " of M = " << window.text()
                  << (match ? "  (match)" : "  (no match)") << "\n";
    }
    return match ? kExitOk : kExitFailure;
}

int cmd_oracle(const Options& opt) {
    const BitString sigma = sigma_for(opt, false);
    const CountMode mode = opt.mode == "distinct" ? CountMode::ordered_distinct
                                                  : CountMode::ordered_with_equal;
    const CountReport rep =
        count_report(opt.n, opt.m_given ? opt.m : static_cast<unsigned>(sigma.length()), sigma,
                     mode, opt.sieve_ceiling, opt.threads);
    const bool include_counts = rep.counts.size() <= (1u << 16);
    if (opt.format == "json") {
        json j{{"n", rep.n},
               {"m", rep.m},
               {"sigma", rep.sigma.text()},
               {"mode", mode == CountMode::ordered_distinct ? "ordered-distinct"
                                                            : "ordered-with-equal"},
               {"prime_count", rep.prime_count},
               {"total", rep.total},
               {"main_term", rat(rep.main_term)},
               {"delta", rat(rep.delta)},
               {"bound_ratio", rep.bound_ratio},
               {"counts_included", include_counts}};
        if (include_counts) j["counts"] = rep.counts;
        print_json(j);
    } else {
        std::cout << "#P_" << rep.n << "      = " << rep.prime_count << "\n"
                  << "sum N(k)  = " << rep.total << "\n"
                  << "main term = " << rat(rep.main_term) << "\n"
                  << "delta     = " << rat(rep.delta) << "\n"
                  << "|delta| / (2^{n-m} #P / n^2) = " << rep.bound_ratio << "\n";
    }
    return kExitOk;
}

int cmd_charsum(const Options& opt) {
    if (opt.scan) {
        std::cout << "n,L,t0,max_magnitude,argmax_alpha,argmax_beta,ratio\n";
        for (unsigned n = opt.n_from; n <= opt.n_to; ++n) {
            if (opt.l_shift >= n) throw std::invalid_argument("--l-shift must be < n");
            const std::uint64_t L = 1ULL << (n - opt.l_shift);
            const MaxSumResult r = max_nonprincipal_sum(opt.t0, L, n, opt.char_ceiling);
            std::cout << n << "," << L << "," << opt.t0 << "," << r.magnitude << ","
                      << r.argmax.alpha << "," << r.argmax.beta << ","
                      << r.magnitude / double(L) << "\n";
        }
        return kExitOk;
    }
    if (opt.dump) {
        const ShortSumTable table = all_short_sums(opt.t0, opt.length, opt.n, opt.char_ceiling);
        std::cout << "alpha,beta,re,im\n";
        for (std::size_t i = 0; i < table.size(); ++i) {
            const CharacterIndex chi = table.index_of(i);
            std::cout << chi.alpha << "," << chi.beta << "," << table.flat(i).real() << ","
                      << table.flat(i).imag() << "\n";
        }
        return kExitOk;
    }
    const MaxSumResult r = max_nonprincipal_sum(opt.t0, opt.length, opt.n, opt.char_ceiling);
    json j{{"n", opt.n},
           {"t0", std::to_string(opt.t0)},
           {"L", std::to_string(opt.length)},
           {"max_magnitude", r.magnitude},
           {"argmax_alpha", r.argmax.alpha},
           {"argmax_beta", r.argmax.beta},
           {"ratio", r.magnitude / double(opt.length)}};
    if (!opt.max_only) {
        const ShortSumTable table = all_short_sums(opt.t0, opt.length, opt.n, opt.char_ceiling);
        j["principal"] = table.at(CharacterIndex{0, 0}).real();
    }
    print_json(j);
    return kExitOk;
}

int cmd_stats(const Options& opt) {
    if (opt.trials == 0) throw std::invalid_argument("--trials must be positive");
    const BitString sigma = sigma_for(opt, false);
    const unsigned m = opt.m_given ? opt.m : static_cast<unsigned>(sigma.length());
    GenOptions gen_opts;
    gen_opts.max_rounds = opt.max_rounds;
    const RoundStats st = round_stats(opt.n, m, sigma, opt.trials, opt.seed, gen_opts);
    if (opt.format == "json") {
        json j{{"n", st.n},
               {"m", st.m},
               {"sigma", st.sigma.text()},
               {"seed", std::to_string(st.seed)},
               {"trials", st.trials},
               {"successes", st.successes},
               {"failures", st.failures},
               {"success_rate", st.success_rate},
               {"mean_rounds", st.mean_rounds},
               {"median_rounds", st.median_rounds},
               {"max_rounds_observed", st.max_rounds_observed}};
        print_json(j);
    } else {
        std::cout << "trials        = " << st.trials << "\n"
                  << "successes     = " << st.successes << "\n"
                  << "success rate  = " << st.success_rate << "\n"
                  << "mean rounds   = " << st.mean_rounds << "\n"
                  << "median rounds = " << st.median_rounds << "\n"
                  << "max rounds    = " << st.max_rounds_observed << "\n";
    }
    return st.successes > 0 ? kExitOk : kExitFailure;
}

int run(int argc, char** argv) {
    CLI::App app{"RSA moduli with a prescribed bit window: generation, verification,\n"
                 "exact pair counts and character-sum tables modulo 2^n"};
    app.require_subcommand(1);
    Options opt;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "output format: json or human")
            ->check(CLI::IsMember({"json", "human"}));
    };

    CLI::App* gen = app.add_subcommand("gen", "generate a modulus whose bits n-1..n-m spell sigma");
    gen->add_option("--n", opt.n, "bit length of each prime factor")->required();
    gen->add_option("--m", opt.m, "pattern width")->each([&](const std::string&) { opt.m_given = true; });
    gen->add_option("--sigma", opt.sigma_text, "bit pattern, MSB first")->required();
    gen->add_option("--seed", opt.seed, "RNG seed (default 0)");
    gen->add_option("--max-rounds", opt.max_rounds, "round cap (default 64*n)");
    gen->add_flag("--hex", opt.hex, "also print M in hexadecimal (human format)");
    add_format(gen);

    CLI::App* sparse = app.add_subcommand("sparse", "generate a modulus with m zero bits below the top");
    sparse->add_option("--n", opt.n, "bit length of each prime factor")->required();
    sparse->add_option("--m", opt.m, "number of forced-zero bits")
        ->required()
        ->each([&](const std::string&) { opt.m_given = true; });
    sparse->add_option("--seed", opt.seed, "RNG seed (default 0)");
    sparse->add_option("--max-rounds", opt.max_rounds, "round cap (default 64*n)");
    sparse->add_flag("--hex", opt.hex, "also print M in hexadecimal (human format)");
    add_format(sparse);

    CLI::App* verify_cmd = app.add_subcommand("verify", "check the bit window of a modulus");
    verify_cmd->add_option("--modulus", opt.modulus_text, "integer, decimal or 0x-prefixed hex")
        ->required();
    verify_cmd->add_option("--n", opt.n, "bit length of each prime factor")->required();
    verify_cmd->add_option("--m", opt.m, "pattern width")->each([&](const std::string&) { opt.m_given = true; });
    verify_cmd->add_option("--sigma", opt.sigma_text, "expected pattern")->required();
    add_format(verify_cmd);

    CLI::App* oracle = app.add_subcommand("oracle", "exact N(k) table, main term and delta");
    oracle->add_option("--n", opt.n, "prime window exponent")->required();
    oracle->add_option("--m", opt.m, "pattern width")->each([&](const std::string&) { opt.m_given = true; });
    oracle->add_option("--sigma", opt.sigma_text, "bit pattern")->required();
    oracle->add_option("--mode", opt.mode, "pair convention: ordered (p = l admitted) or distinct")
        ->check(CLI::IsMember({"ordered", "distinct"}));
    oracle->add_option("--sieve-ceiling", opt.sieve_ceiling, "max n the sieve will accept");
    oracle->add_option("--threads", opt.threads, "worker threads for the pair scan (0 = auto)");
    add_format(oracle);

    CLI::App* charsum = app.add_subcommand("charsum", "interval character sums over all characters");
    charsum->add_option("--n", opt.n, "modulus exponent");
    charsum->add_option("--t0", opt.t0, "interval start");
    charsum->add_option("--L", opt.length, "interval length");
    charsum->add_flag("--max", opt.max_only, "print only the maximal nonprincipal sum");
    charsum->add_flag("--dump", opt.dump, "CSV of every character's sum");
    charsum->add_flag("--scan", opt.scan, "CSV scan of max|sum|/L over a range of n");
    charsum->add_option("--n-from", opt.n_from, "scan start (with --scan)");
    charsum->add_option("--n-to", opt.n_to, "scan end, inclusive (with --scan)");
    charsum->add_option("--l-shift", opt.l_shift, "scan uses L = 2^{n - l_shift}");
    charsum->add_option("--char-ceiling", opt.char_ceiling, "max n the tables will accept");

    CLI::App* stats = app.add_subcommand("stats", "round-count statistics over repeated runs");
    stats->add_option("--n", opt.n, "bit length of each prime factor")->required();
    stats->add_option("--m", opt.m, "pattern width")->each([&](const std::string&) { opt.m_given = true; });
    stats->add_option("--sigma", opt.sigma_text, "bit pattern")->required();
    stats->add_option("--trials", opt.trials, "number of independent runs");
    stats->add_option("--seed", opt.seed, "base RNG seed (default 0)");
    stats->add_option("--max-rounds", opt.max_rounds, "per-trial round cap (default 64*n)");
    add_format(stats);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(opt, false);
        if (sparse->parsed()) return cmd_gen(opt, true);
        if (verify_cmd->parsed()) return cmd_verify(opt);
        if (oracle->parsed()) return cmd_oracle(opt);
        if (charsum->parsed()) return cmd_charsum(opt);
        if (stats->parsed()) return cmd_stats(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
