#include "dnawords/bench.hpp"

#include "dnawords/errors.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>
#include <unordered_set>

namespace dnawords {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Code sample_random_code(std::size_t n, std::size_t length, Alphabet alphabet,
                        std::uint64_t seed)
{
    if (n < 1)
        throw InvalidParameter("need at least one word");
    const std::size_t bits = alphabet == Alphabet::binary() ? 1 : 2;
    // capacity = 2^(bits*l); only compare when it fits in 64 bits
    if (bits * length < 64 && n > (std::uint64_t{1} << (bits * length)))
        throw InvalidParameter("only " +
                               std::to_string(std::uint64_t{1}
                                              << (bits * length)) +
                               " distinct words of length " +
                               std::to_string(length) + " exist, need " +
                               std::to_string(n));
    std::mt19937_64 rng(seed);
    const std::string_view symbols = alphabet.symbols();
    std::unordered_set<std::string> seen;
    std::vector<Word> words;
    words.reserve(n);
    while (words.size() < n) {
        std::string w(length, ' ');
        for (char &c : w)
            c = symbols[static_cast<std::size_t>(rng() >> (64 - bits))];
        if (seen.insert(w).second)
            words.emplace_back(alphabet, std::move(w));
    }
    return Code(std::move(words));
}

namespace {

bool sample_passes(std::size_t n, std::size_t length, Alphabet alphabet,
                   const ConstraintSpec &spec, std::uint64_t seed)
{
    for (std::size_t p = 1; p <= 6; ++p)
        if (spec.is_enabled(static_cast<int>(p)) && spec.k[p] > length)
            return false;
    const Code code = sample_random_code(n, length, alphabet, seed);
    return check_all(code, spec, nullptr, 1).empty();
}

bool feasible_count(std::size_t n, std::size_t length, Alphabet alphabet)
{
    const std::size_t bits = alphabet == Alphabet::binary() ? 1 : 2;
    return bits * length >= 64 || n <= (std::uint64_t{1} << (bits * length));
}

} // namespace

std::vector<BenchRecord> compare_lengths(const BenchConfig &config)
{
    if (config.trials == 0)
        throw InvalidParameter("trials must be positive");
    std::vector<BenchRecord> records;
    std::uint64_t cell = 0;
    for (std::size_t n : config.ns) {
        for (std::size_t k : config.ks) {
            const auto start = std::chrono::steady_clock::now();
            BenchRecord rec;
            rec.pipeline = config.pipeline;
            rec.n = n;
            rec.spec = ConstraintSpec::uniform(k);
            rec.spec.gamma = config.gamma;
            rec.spec.d = config.d;
            rec.trials = config.trials;
            rec.seed = splitmix64(config.seed + cell++);

            const GenerateResult gen =
                generate(rec.spec, n, config.pipeline, config.options);
            rec.deterministic_length = gen.length;
            rec.spec.enabled = gen.verified.enabled;

            const Alphabet alphabet = config.pipeline == Pipeline::C14
                                          ? Alphabet::binary()
                                          : Alphabet::dna();
            for (std::size_t l = 1; l <= 2 * gen.length; ++l) {
                if (!feasible_count(n, l, alphabet))
                    continue;
                std::size_t pass = 0;
                for (std::size_t t = 0; t < config.trials; ++t) {
                    const std::uint64_t s =
                        splitmix64(rec.seed ^ splitmix64(l * 1000003ULL + t));
                    pass += sample_passes(n, l, alphabet, rec.spec, s);
                    // stop once the majority question is settled
                    if (2 * pass >= config.trials ||
                        2 * (pass + config.trials - t - 1) < config.trials)
                        break;
                }
                if (2 * pass >= config.trials) {
                    rec.baseline_length = l;
                    break;
                }
            }
            rec.wall_seconds = std::chrono::duration<double>(
                                   std::chrono::steady_clock::now() - start)
                                   .count();
            records.push_back(rec);
        }
    }
    return records;
}

std::string format_bench_table(const std::vector<BenchRecord> &records,
                               bool timing)
{
    std::ostringstream os;
    os << std::left << std::setw(9) << "pipeline" << std::right
       << std::setw(6) << "n" << std::setw(4) << "k" << std::setw(8)
       << "det_len" << std::setw(10) << "baseline" << std::setw(8)
       << "trials" << std::setw(22) << "seed";
    if (timing)
        os << std::setw(10) << "time_s";
    os << "\n";
    for (const auto &r : records) {
        os << std::left << std::setw(9) << pipeline_name(r.pipeline)
           << std::right << std::setw(6) << r.n << std::setw(4) << r.spec.k[1]
           << std::setw(8) << r.deterministic_length << std::setw(10)
           << (r.baseline_length ? std::to_string(*r.baseline_length)
                                 : std::string("none"))
           << std::setw(8) << r.trials << std::setw(22) << r.seed;
        if (timing)
            os << std::setw(10) << std::fixed << std::setprecision(3)
               << r.wall_seconds;
        os << "\n";
    }
    return os.str();
}

} // namespace dnawords
