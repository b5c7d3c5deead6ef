// Two-stage logging statement insertion.
//
// Stage 1 scores every token (chunk by chunk for long methods) and picks the
// most probable anchor. Stage 2 masks that position, feeds the chunk holding
// the mask to the generator and splices the best candidate back into the
// untouched source.

#pragma once

#include "loggen/backend.hpp"
#include "loggen/chunker.hpp"
#include "loggen/insertion.hpp"
#include "loggen/lexer.hpp"
#include "loggen/statement.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace loggen {

struct PipelineConfig {
    SplitConfig split;
    std::size_t beam_size = kDefaultBeamSize;
    std::size_t suggest_budget = 10;
    double suggest_threshold = 0.01;

    /// Throws InvalidConfig.
    void validate() const;
};

struct PositionPrediction {
    std::size_t token_index = 0;
    double probability = 0.0;
    std::vector<std::pair<std::size_t, double>> ranked_alternatives;  // all anchors, best first
};

/// Argmax over `anchors` only; ties go to the smaller index. Throws NoAnchors.
PositionPrediction choose_position(std::span<const double> probabilities,
                                   std::span<const std::size_t> anchors);

/// Per-token probabilities for the whole stream, scored through the chunk plan.
std::vector<double> score_tokens(std::span<const std::string> texts, Backend& scorer,
                                 const SplitConfig& cfg);

PositionPrediction predict_position(const TokenStream& stream, Backend& scorer,
                                    const PipelineConfig& cfg);

/// Token texts with a mask inserted right after `token_index`. Throws IndexOutOfRange.
std::vector<std::string> build_masked_input(std::span<const std::string> texts,
                                            std::size_t token_index);

/// The model input for generation: the whole masked sequence when it fits,
/// otherwise the chunk (with its context) whose core holds the mask.
std::vector<std::string> select_mask_chunk(std::span<const std::string> masked,
                                           const SplitConfig& cfg);

struct StageTimings {
    double stage1_ms = 0.0;
    double stage2_ms = 0.0;

    double total_ms() const { return stage1_ms + stage2_ms; }
};

struct InsertionResult {
    std::string output_source;
    LoggingStatement inserted_statement;
    std::size_t insertion_token_index = 0;
    double probability = 0.0;
    std::size_t insertion_offset = 0;  // byte range of the inserted text in output_source
    std::size_t insertion_length = 0;
    std::vector<Candidate> candidates;
    StageTimings timings;

    /// output_source with the inserted bytes removed; equals the input.
    std::string strip_insertion() const;
};

/// Generates candidates for an insertion after `token_index`.
GenerateResponse generate_at(const TokenStream& stream, std::size_t token_index,
                             Backend& generator, const PipelineConfig& cfg,
                             std::size_t beam_size);

InsertionResult run(const TokenStream& stream, Backend& scorer, Backend& generator,
                    const PipelineConfig& cfg);

/// Splits `budget` over positions sorted by descending probability: passes
/// of p, p-1, ..., 1 positions, repeated until the budget is spent.
/// Throws EmptyPositions.
std::vector<std::size_t> allocate_budget(std::span<const double> descending_probabilities,
                                         std::size_t budget = 10);

struct Suggestion {
    std::size_t token_index = 0;
    double probability = 0.0;
    std::string statement;
    std::size_t rank = 0;            // overall, 0-based
    std::size_t position_rank = 0;
    std::size_t beam_rank = 0;
};

struct SuggestionSet {
    std::vector<Suggestion> suggestions;
    bool fell_back_to_argmax = false;
};

SuggestionSet suggest(const TokenStream& stream, Backend& scorer, Backend& generator,
                      const PipelineConfig& cfg);

} // namespace loggen
