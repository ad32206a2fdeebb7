#include "dnawords/transforms.hpp"

#include "dnawords/errors.hpp"

#include <algorithm>
#include <cmath>

namespace dnawords {

namespace {

void require_binary(const Word &w)
{
    if (w.alphabet() != Alphabet::binary())
        throw InvalidAlphabet("expected a binary word, got " + w.str());
}

void require_binary(const Code &c)
{
    if (c.alphabet() != Alphabet::binary())
        throw InvalidAlphabet("expected a binary code");
}

void require_gamma(double gamma)
{
    if (!(gamma >= 0.0 && gamma <= 1.0))
        throw InvalidParameter("gamma must lie in [0, 1]");
}

char flip(char bit) { return bit == '0' ? '1' : '0'; }

template <typename F>
Code map_words(const Code &code, F f)
{
    std::vector<Word> out;
    out.reserve(code.size());
    for (const Word &w : code)
        out.push_back(f(w));
    return Code(std::move(out));
}

Word pad_ones(const Word &w, std::size_t k)
{
    const std::string ones(k, '1');
    return Word(Alphabet::binary(), ones + w.str() + ones);
}

/// break_runs output plus a mask of inserted positions.
std::pair<std::string, std::vector<bool>> break_runs_marked(const Word &x,
                                                            std::size_t d)
{
    require_binary(x);
    const BreakRunsLayout lay = break_runs_layout(x.length(), d);
    const std::string &s = x.str();
    // 1-based access into the input
    auto at = [&](std::size_t i) { return s[i - 1]; };
    const std::size_t l = x.length();

    std::string out;
    std::vector<bool> inserted;
    out.reserve(lay.output_length);
    inserted.reserve(lay.output_length);
    auto copy = [&](std::size_t from, std::size_t to) {
        for (std::size_t i = from; i <= to; ++i) {
            out.push_back(at(i));
            inserted.push_back(false);
        }
    };
    auto put = [&](char c) {
        out.push_back(c);
        inserted.push_back(true);
    };

    for (std::size_t i = 1; i <= lay.s; ++i) {
        copy((i - 1) * lay.u + 1, i * lay.u);
        put(flip(at(i * lay.u)));
    }
    copy(lay.t + 1, lay.mid);
    put(flip(at(lay.mid)));
    put(lay.amended ? at(lay.mid) : flip(at(lay.mid + 1)));
    copy(lay.mid + 1, l - lay.t);
    for (std::size_t i = lay.s; i >= 1; --i) {
        put(flip(at(l - i * lay.u + 1)));
        copy(l - i * lay.u + 1, l - (i - 1) * lay.u);
    }
    return {std::move(out), std::move(inserted)};
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

std::vector<std::size_t> balanced(std::size_t total, std::size_t parts)
{
    std::vector<std::size_t> sizes(parts, parts ? total / parts : 0);
    for (std::size_t i = 0; i < (parts ? total % parts : 0); ++i)
        ++sizes[i];
    return sizes;
}

void require_band(double gamma, std::size_t d)
{
    const double lo = 1.0 / static_cast<double>(d + 1);
    const double hi = static_cast<double>(d) / static_cast<double>(d + 1);
    if (gamma < lo - 1e-9 || gamma > hi + 1e-9)
        throw InvalidParameter(
            "gamma=" + std::to_string(gamma) + " is outside [1/(d+1), d/(d+1)] = [" +
            std::to_string(lo) + ", " + std::to_string(hi) + "] for d=" +
            std::to_string(d));
}

std::size_t max_of(std::initializer_list<std::size_t> ks)
{
    return std::max(ks);
}

} // namespace

Word to_dna_at(const Word &binary)
{
    require_binary(binary);
    std::string out = binary.str();
    for (char &c : out)
        c = c == '0' ? 'A' : 'T';
    return Word(Alphabet::dna(), std::move(out));
}

Code build_c16(const Code &binary, std::size_t k2, std::size_t k3,
               std::size_t k5, std::size_t k6)
{
    require_binary(binary);
    const std::string pad(max_of({k2, k3, k5, k6}), 'C');
    return map_words(binary, [&](const Word &w) {
        return Word(Alphabet::dna(), pad + to_dna_at(w).str());
    });
}

std::vector<std::size_t> gc_positions(std::size_t length, double gamma)
{
    require_gamma(gamma);
    if (length < 1)
        throw InvalidParameter("gc_positions needs a positive length");
    const std::size_t m = gc_target(length, gamma);
    std::vector<std::size_t> pos;
    pos.reserve(m);
    for (std::size_t j = 1; j <= m; ++j)
        pos.push_back((j - 1) * length / m + 1);
    return pos;
}

Word substitute_gc(const Word &binary, const std::vector<bool> &gc)
{
    require_binary(binary);
    if (gc.size() != binary.length())
        throw LengthMismatch("class mask length differs from word length");
    std::string out = binary.str();
    for (std::size_t i = 0; i < out.size(); ++i) {
        const bool one = out[i] == '1';
        out[i] = gc[i] ? (one ? 'G' : 'C') : (one ? 'T' : 'A');
    }
    return Word(Alphabet::dna(), std::move(out));
}

namespace {

std::vector<bool> mask_from_positions(std::size_t length,
                                      const std::vector<std::size_t> &pos)
{
    std::vector<bool> mask(length, false);
    for (std::size_t p : pos)
        mask[p - 1] = true;
    return mask;
}

} // namespace

Code build_c17(const Code &binary, std::size_t k2, std::size_t k3,
               std::size_t k5, std::size_t k6, double gamma)
{
    require_binary(binary);
    require_gamma(gamma);
    const std::size_t k = max_of({k2, k3, k5, k6});
    const std::size_t l = binary.length() + 2 * k;
    const auto mask = mask_from_positions(l, gc_positions(l, gamma));
    return map_words(binary, [&](const Word &w) {
        return substitute_gc(pad_ones(w, k), mask);
    });
}

BreakRunsLayout break_runs_layout(std::size_t length, std::size_t d)
{
    if (d < 2)
        throw InvalidParameter("break_runs needs d >= 2");
    if (length < 2 || length % 2 != 0)
        throw InvalidParameter("break_runs needs an even length >= 2, got " +
                               std::to_string(length));
    BreakRunsLayout lay;
    lay.u = d - 1;
    lay.s = length / (2 * lay.u);
    lay.t = lay.s * lay.u;
    lay.mid = length / 2;
    lay.amended = lay.t == lay.mid;
    lay.output_length = length + 2 * lay.s + 2;
    return lay;
}

Word break_runs(const Word &x, std::size_t d)
{
    return Word(Alphabet::binary(), break_runs_marked(x, d).first);
}

std::vector<std::size_t> break_runs_inserted(std::size_t length, std::size_t d)
{
    const auto marked =
        break_runs_marked(Word(Alphabet::binary(), std::string(length, '0')), d);
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < marked.second.size(); ++i)
        if (marked.second[i])
            pos.push_back(i + 1);
    return pos;
}

std::size_t c12378_length(std::size_t l0, std::size_t k2, std::size_t k3,
                          std::size_t d)
{
    if (d < 2)
        throw InvalidParameter("d must be at least 2");
    const std::size_t l1 = l0 + l0 % 2;
    const std::size_t l2 = l1 + 2 * std::max(k2, k3);
    return l2 + 2 * (l2 / (2 * (d - 1))) + 2;
}

Code build_c12378(const Code &binary, std::size_t k2, std::size_t k3,
                  double gamma, std::size_t d)
{
    require_binary(binary);
    require_gamma(gamma);
    if (d < 2)
        throw InvalidParameter("d must be at least 2");
    const std::size_t k = std::max(k2, k3);
    const std::size_t l3 = c12378_length(binary.length(), k2, k3, d);
    const auto mask = mask_from_positions(l3, gc_positions(l3, gamma));
    return map_words(binary, [&](const Word &w) {
        const std::string even =
            w.length() % 2 == 0 ? w.str() : w.str() + "0";
        const Word padded = pad_ones(Word(Alphabet::binary(), even), k);
        return substitute_gc(break_runs(padded, d), mask);
    });
}

std::size_t GcPartition::gc_total() const
{
    std::size_t total = 0;
    bool gc = first_is_gc;
    for (std::size_t s : sizes) {
        if (gc)
            total += s;
        gc = !gc;
    }
    return total;
}

std::vector<bool> GcPartition::mask() const
{
    std::vector<bool> m;
    bool gc = first_is_gc;
    for (std::size_t s : sizes) {
        m.insert(m.end(), s, gc);
        gc = !gc;
    }
    return m;
}

GcPartition gc_partition(std::size_t length, double gamma, std::size_t d)
{
    require_gamma(gamma);
    if (d < 2)
        throw InvalidParameter("d must be at least 2");
    const std::size_t g = gc_target(length, gamma);
    const std::size_t a = length - g;
    const bool major_is_gc = g >= a;
    const std::size_t major = std::max(g, a);
    const std::size_t minor = std::min(g, a);

    GcPartition part;
    if (length == 0)
        return part;
    for (std::size_t rm = ceil_div(major, d); rm <= major; ++rm) {
        for (long long delta : {0LL, -1LL, 1LL}) {
            const long long rn_signed = static_cast<long long>(rm) + delta;
            if (rn_signed < 0)
                continue;
            const auto rn = static_cast<std::size_t>(rn_signed);
            if (minor < rn || minor > rn * d)
                continue;
            const auto big = balanced(major, rm);
            const auto small = balanced(minor, rn);
            // rn == rm: M m M m ..., rn == rm - 1: M m ... M,
            // rn == rm + 1: m M m ... m
            const bool minor_first = rn > rm;
            part.first_is_gc = minor_first ? !major_is_gc : major_is_gc;
            std::size_t bi = 0, si = 0;
            bool take_minor = minor_first;
            while (bi < big.size() || si < small.size()) {
                if (take_minor)
                    part.sizes.push_back(small[si++]);
                else
                    part.sizes.push_back(big[bi++]);
                take_minor = !take_minor;
            }
            return part;
        }
    }
    throw InvalidParameter("no G/C block partition of length " +
                           std::to_string(length) + " with blocks of size at "
                           "most d=" + std::to_string(d));
}

Code build_c18_direct(const Code &binary, std::size_t k2, std::size_t k3,
                      std::size_t k4, std::size_t k5, std::size_t k6,
                      double gamma, std::size_t d)
{
    require_binary(binary);
    require_gamma(gamma);
    if (d < 2)
        throw InvalidParameter("d must be at least 2");
    require_band(gamma, d);
    const std::size_t k = max_of({k2, k3, k4, k5, k6});
    const std::size_t l = binary.length() + 2 * k;
    const auto mask = gc_partition(l, gamma, d).mask();
    return map_words(binary, [&](const Word &w) {
        return substitute_gc(pad_ones(w, k), mask);
    });
}

Word c18_runs_binary(const Word &x, std::size_t k, std::size_t d)
{
    require_binary(x);
    if (d < 3)
        throw InvalidParameter("this construction needs d >= 3");
    const std::string &s = x.str();
    std::string body;
    for (std::size_t from = 0; from < s.size(); from += d - 1) {
        const std::size_t to = std::min(from + d - 1, s.size());
        body.append(s, from, to - from);
        body.push_back(flip(s[to - 1]));
    }
    std::string frame;
    const std::string unit = std::string(d - 1, '1') + "0";
    for (std::size_t c = 0; c < ceil_div(k, d - 2); ++c)
        frame += unit;
    return Word(Alphabet::binary(), frame + "1" + body + "0" + frame);
}

std::size_t c18_runs_length(std::size_t l0, std::size_t k, std::size_t d)
{
    if (d < 3)
        throw InvalidParameter("this construction needs d >= 3");
    const std::size_t l1 = l0 + ceil_div(l0, d - 1);
    const std::size_t l2 = l1 + 2;
    return l2 + 2 * ceil_div(k, d - 2) * d;
}

std::size_t best_runs_d(std::size_t l0, std::size_t k, std::size_t d)
{
    if (d < 3)
        throw InvalidParameter("this construction needs d >= 3");
    std::size_t best = 3;
    for (std::size_t c = 4; c <= d; ++c)
        if (c18_runs_length(l0, k, c) < c18_runs_length(l0, k, best))
            best = c;
    return best;
}

Code build_c18_runs(const Code &binary, std::size_t k2, std::size_t k3,
                    std::size_t k4, std::size_t k5, std::size_t k6,
                    double gamma, std::size_t d)
{
    require_binary(binary);
    require_gamma(gamma);
    const std::size_t k = max_of({k2, k3, k4, k5, k6});
    const std::size_t l3 = c18_runs_length(binary.length(), k, d);
    std::vector<bool> mask(l3, false);
    std::fill_n(mask.begin(), gc_target(l3, gamma), true);
    return map_words(binary, [&](const Word &w) {
        return substitute_gc(c18_runs_binary(w, k, d), mask);
    });
}

std::string_view pipeline_name(Pipeline p)
{
    switch (p) {
    case Pipeline::C14: return "c1-4";
    case Pipeline::C16: return "c1-6";
    case Pipeline::C17: return "c1-7";
    case Pipeline::C12378: return "c12378";
    case Pipeline::C18A: return "c1-8a";
    case Pipeline::C18B: return "c1-8b";
    }
    return "?";
}

Pipeline parse_pipeline(std::string_view name)
{
    for (Pipeline p : {Pipeline::C14, Pipeline::C16, Pipeline::C17,
                       Pipeline::C12378, Pipeline::C18A, Pipeline::C18B})
        if (pipeline_name(p) == name)
            return p;
    throw InvalidParameter("unknown pipeline '" + std::string(name) +
                           "' (expected c1-4, c1-6, c1-7, c12378, c1-8a or "
                           "c1-8b)");
}

std::bitset<10> pipeline_constraints(Pipeline p)
{
    ConstraintSpec s;
    switch (p) {
    case Pipeline::C14: s.enable({1, 4}); break;
    case Pipeline::C16: s.enable({1, 2, 3, 4, 5, 6}); break;
    case Pipeline::C17: s.enable({1, 2, 3, 4, 5, 6, 7}); break;
    case Pipeline::C12378: s.enable({1, 2, 3, 7, 8}); break;
    case Pipeline::C18A:
    case Pipeline::C18B: s.enable({1, 2, 3, 4, 5, 6, 7, 8}); break;
    }
    return s.enabled;
}

namespace {

/// Cheap parameter checks before the (expensive) derandomization.
void precheck(const ConstraintSpec &spec, Pipeline p,
              const GenerateOptions &opt)
{
    const bool needs_c4 =
        p == Pipeline::C14 || p == Pipeline::C16 || p == Pipeline::C17;
    if (opt.hamming_only && needs_c4)
        throw InvalidParameter(
            "--hamming-only applies only to c12378, c1-8a and c1-8b, whose "
            "builders consume C1 alone");
    if (!needs_c4 && spec.k[1] < 1)
        throw InvalidParameter("k1 must be at least 1 for this pipeline");
    if (opt.optimize_d && p != Pipeline::C18B)
        throw InvalidParameter("d optimization applies only to c1-8b");
    switch (p) {
    case Pipeline::C17:
    case Pipeline::C12378: require_gamma(spec.gamma); break;
    case Pipeline::C18A:
        require_gamma(spec.gamma);
        if (spec.d < 2)
            throw InvalidParameter("d must be at least 2");
        require_band(spec.gamma, spec.d);
        break;
    case Pipeline::C18B:
        require_gamma(spec.gamma);
        if (spec.d < 3)
            throw InvalidParameter("c1-8b needs d >= 3");
        break;
    default: break;
    }
    if (p == Pipeline::C12378 && spec.d < 2)
        throw InvalidParameter("d must be at least 2");
}

} // namespace

GenerateResult generate(const ConstraintSpec &spec, std::size_t n,
                        Pipeline pipeline, const GenerateOptions &options)
{
    precheck(spec, pipeline, options);
    const auto &k = spec.k;
    const bool needs_c4 = pipeline == Pipeline::C14 ||
                          pipeline == Pipeline::C16 ||
                          pipeline == Pipeline::C17;
    const std::size_t bk1 = k[1];
    const std::size_t bk4 = needs_c4 ? k[4] : (options.hamming_only ? 1 : k[1]);

    const LengthPlan plan = plan_length(n, bk1, bk4, options.delta);
    const std::size_t l0 =
        options.use_min_length ? min_length(n, bk1, bk4) : plan.ell_star;

    const DetWordsOptions dw{options.order, false};
    const Code binary =
        options.hamming_only ? det_words_hamming_only(n, l0, bk1, dw).code
                             : det_words(n, l0, bk1, bk4, dw).code;

    std::size_t d_used = spec.d;
    Code code = [&] {
        switch (pipeline) {
        case Pipeline::C16:
            return build_c16(binary, k[2], k[3], k[5], k[6]);
        case Pipeline::C17:
            return build_c17(binary, k[2], k[3], k[5], k[6], spec.gamma);
        case Pipeline::C12378:
            return build_c12378(binary, k[2], k[3], spec.gamma, spec.d);
        case Pipeline::C18A:
            return build_c18_direct(binary, k[2], k[3], k[4], k[5], k[6],
                                    spec.gamma, spec.d);
        case Pipeline::C18B:
            if (options.optimize_d)
                d_used = best_runs_d(
                    l0, max_of({k[2], k[3], k[4], k[5], k[6]}), spec.d);
            return build_c18_runs(binary, k[2], k[3], k[4], k[5], k[6],
                                  spec.gamma, d_used);
        default: return binary;
        }
    }();

    GenerateResult result{std::move(code), pipeline, plan, l0, 0, d_used, spec};
    result.length = result.code.length();

    result.verified = spec;
    result.verified.enabled = pipeline_constraints(pipeline);
    const Report report = check_all(result.code, result.verified);
    if (!report.empty())
        throw VerificationFailed(
            std::string(pipeline_name(pipeline)) + " output failed " +
            std::to_string(report.total) + " constraint instance(s); first: " +
            report[0].describe());
    return result;
}

} // namespace dnawords
