// transforms.hpp -- binary-to-DNA constructions and end-to-end generators

#pragma once

#include "dnawords/constraints.hpp"
#include "dnawords/core.hpp"
#include "dnawords/derandomizer.hpp"
#include "dnawords/length_planner.hpp"

#include <bitset>
#include <cstddef>
#include <string_view>
#include <vector>

namespace dnawords {

/// 0 -> A, 1 -> T position by position.
Word to_dna_at(const Word &binary);

/// A/T conversion followed by max{k2,k3,k5,k6} copies of C on the left.
Code build_c16(const Code &binary, std::size_t k2, std::size_t k3,
               std::size_t k5, std::size_t k6);

/// gc_target(l, gamma) evenly spread 1-based positions:
/// p_j = floor((j-1) l / m) + 1.
std::vector<std::size_t> gc_positions(std::size_t length, double gamma);

/// Substitute a padded binary word: 0/1 become C/G at `gc`, A/T elsewhere.
/// `gc` is a per-position class mask.
Word substitute_gc(const Word &binary, const std::vector<bool> &gc);

/// Pad 1^k on both ends, then C/G at gc_positions and A/T elsewhere.
Code build_c17(const Code &binary, std::size_t k2, std::size_t k3,
               std::size_t k5, std::size_t k6, double gamma);

struct BreakRunsLayout
{
    std::size_t u = 0;   ///< d - 1
    std::size_t s = 0;   ///< floor(l / 2u)
    std::size_t t = 0;   ///< s u
    std::size_t mid = 0; ///< l / 2
    /// The middle segment is empty (t == mid), so the middle pair is
    /// (x_mid)^c x_mid instead of (x_mid)^c (x_mid+1)^c.
    bool amended = false;
    std::size_t output_length = 0;
};

/// Requires even l >= 2 and d >= 2.
BreakRunsLayout break_runs_layout(std::size_t length, std::size_t d);

/// Insert complement bits so no run exceeds d. Length becomes
/// l + 2 floor(l / (2(d-1))) + 2.
Word break_runs(const Word &x, std::size_t d);

/// 1-based output positions holding inserted (not copied) characters.
std::vector<std::size_t> break_runs_inserted(std::size_t length, std::size_t d);

/// Exact output length of build_c12378 for input length l0.
std::size_t c12378_length(std::size_t l0, std::size_t k2, std::size_t k3,
                          std::size_t d);

/// Even-pad, pad 1^max{k2,k3} both ends, break runs, then C/G at
/// gc_positions and A/T elsewhere. Output satisfies C1, C2, C3, C7, C8.
Code build_c12378(const Code &binary, std::size_t k2, std::size_t k3,
                  double gamma, std::size_t d);

/// Alternating partition of [1, l] into G/C and A/T blocks of size 1..d.
struct GcPartition
{
    std::vector<std::size_t> sizes;
    bool first_is_gc = true;

    std::size_t gc_total() const;
    /// Per-position class mask (true = G/C).
    std::vector<bool> mask() const;
};

/// G/C blocks total gc_target(l, gamma). InvalidParameter if no such
/// partition exists.
GcPartition gc_partition(std::size_t length, double gamma, std::size_t d);

/// Pad 1^k (k = max{k2..k6}) on both ends, then substitute by a
/// gc_partition of the padded length. Requires
/// 1/(d+1) <= gamma <= d/(d+1).
Code build_c18_direct(const Code &binary, std::size_t k2, std::size_t k3,
                      std::size_t k4, std::size_t k5, std::size_t k6,
                      double gamma, std::size_t d);

/// Binary stage of build_c18_runs (before G/C assignment).
Word c18_runs_binary(const Word &x, std::size_t k, std::size_t d);

/// Exact output length of build_c18_runs. Requires d >= 3.
std::size_t c18_runs_length(std::size_t l0, std::size_t k, std::size_t d);

/// d' in [3, d] minimizing c18_runs_length (smallest on ties).
std::size_t best_runs_d(std::size_t l0, std::size_t k, std::size_t d);

/// Complement-bit insertion every d-1 bits, 1...0 framing, ceil(k/(d-2))
/// copies of 1^(d-1)0 on each end, then the leftmost gc_target(l, gamma)
/// characters become C/G and the rest A/T. Requires d >= 3.
Code build_c18_runs(const Code &binary, std::size_t k2, std::size_t k3,
                    std::size_t k4, std::size_t k5, std::size_t k6,
                    double gamma, std::size_t d);

enum class Pipeline { C14, C16, C17, C12378, C18A, C18B };

/// CLI names: c1-4, c1-6, c1-7, c12378, c1-8a, c1-8b.
std::string_view pipeline_name(Pipeline p);
/// Throws InvalidParameter for an unknown name.
Pipeline parse_pipeline(std::string_view name);
/// Constraints a pipeline's output is verified against.
std::bitset<10> pipeline_constraints(Pipeline p);

struct GenerateOptions
{
    double delta = 1.0;
    /// Use the computed minimal length instead of l*.
    bool use_min_length = false;
    /// C1-only derandomization (pipelines that only consume C1).
    bool hamming_only = false;
    /// For c1-8b: run with the d' <= d minimizing the output length.
    bool optimize_d = false;
    FillOrder order = FillOrder::ColumnMajor;
};

struct GenerateResult
{
    Code code;
    Pipeline pipeline = Pipeline::C14;
    LengthPlan plan;         ///< l* plan for the binary stage
    std::size_t binary_length = 0;
    std::size_t length = 0;
    std::size_t d_used = 0;  ///< run bound actually used (c1-8b may lower it)
    ConstraintSpec verified; ///< what check_all was run with
};

/// Derandomize the binary code, apply the pipeline's builder and verify
/// with check_all before returning (VerificationFailed otherwise).
GenerateResult generate(const ConstraintSpec &spec, std::size_t n,
                        Pipeline pipeline, const GenerateOptions &options = {});

} // namespace dnawords
