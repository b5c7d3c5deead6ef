// Splitting of long token sequences into model-sized chunks.
//
// A chunk is a contiguous core range whose predictions are kept, flanked by
// whole-statement context on either side whose predictions are discarded.
// Every rendered chunk is exactly `max_input_length` positions long.

#pragma once

#include "loggen/lexer.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace loggen {

enum class SplitPolicy {
    TruncateDiscard,
    TruncateSplit,
    AverageSplit,
    AverageSplitStatement,
};

std::string_view to_string(SplitPolicy policy);

struct SplitConfig {
    std::size_t max_input_length = 512;  // L
    std::size_t max_chunk_length = 300;  // m
    std::size_t context_statements = 5;  // k
    SplitPolicy policy = SplitPolicy::AverageSplitStatement;

    /// Per-side context budget floor((L - m) / 2).
    std::size_t context_budget() const;

    /// Throws InvalidConfig unless 0 < m <= L.
    void validate() const;
};

/// Parses a policy name. Accepts the bare names ("truncate-discard",
/// "truncate-split", "average-split", "average-split-statement") as well as
/// the parameterised ablation names ("average-split-300",
/// "average-split-300-statement-5"), whose numbers override `base`.
/// Throws UnknownPolicy.
SplitConfig parse_policy(std::string_view name, SplitConfig base = {});

/// Canonical ablation label, e.g. "average-split-300-statement-5".
std::string policy_label(const SplitConfig& cfg);

struct TokenRange {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const { return end - begin; }
    bool empty() const { return begin == end; }
    bool contains(std::size_t i) const { return i >= begin && i < end; }
    bool operator==(const TokenRange&) const = default;
};

struct Chunk {
    TokenRange core;
    TokenRange left_context;
    TokenRange right_context;
    std::size_t ordinal = 0;

    std::size_t content_length() const {
        return left_context.size() + core.size() + right_context.size();
    }
};

struct ChunkPlan {
    std::vector<Chunk> chunks;
    std::size_t total_tokens = 0;

    /// Index of the chunk whose core holds `token`, or chunks.size() if none
    /// (possible only under truncate-discard).
    std::size_t chunk_containing(std::size_t token) const;
};

/// Even split with statement snapping and whole-statement context, as
/// configured by `cfg.max_chunk_length` and `cfg.context_statements`.
ChunkPlan plan_chunks(std::span<const std::string> texts, const SplitConfig& cfg);
ChunkPlan plan_chunks(const TokenStream& stream, const SplitConfig& cfg);

/// Dispatches on `cfg.policy`.
ChunkPlan plan_for_policy(std::span<const std::string> texts, const SplitConfig& cfg);
ChunkPlan plan_for_policy(const TokenStream& stream, const SplitConfig& cfg);

inline constexpr std::string_view kPadToken = "<pad>";

struct RenderedChunk {
    std::vector<std::string> tokens;  // length L, right-padded
    std::vector<bool> core_mask;      // length L
    std::size_t content_length = 0;

    std::span<const std::string> content() const {
        return std::span<const std::string>(tokens).first(content_length);
    }
};

RenderedChunk render_chunk(std::span<const std::string> texts, const Chunk& chunk,
                           const SplitConfig& cfg, std::string_view pad = kPadToken);

/// Combines per-chunk score rows (each of length L, aligned to the rendered
/// chunk) into one score per token. Context and padding scores are dropped;
/// tokens outside every core receive 0. Throws ShapeMismatch.
std::vector<double> merge_scores(const ChunkPlan& plan,
                                 std::span<const std::vector<double>> per_chunk_scores,
                                 std::size_t max_input_length);

} // namespace loggen
