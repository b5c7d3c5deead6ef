// Quality metrics for generated logging statements.

#pragma once

#include "loggen/statement.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace loggen {

/// Scores are on a 0-100 scale.
struct BleuScore {
    double bleu = 0.0;
    std::array<double, 4> precision{};  // BLEU-1..BLEU-4, modified n-gram precision
    double brevity_penalty = 0.0;
};

/// Sentence BLEU. BLEU-n values are unsmoothed clipped precisions; the
/// aggregate takes the brevity penalty times the geometric mean of p1 and
/// add-one smoothed p2..p4. Throws EmptyReference.
BleuScore bleu(std::span<const std::string> hypothesis, std::span<const std::string> reference);

struct RougeScore {
    double rouge1 = 0.0;
    double rouge2 = 0.0;
    double rougeL = 0.0;
};

/// F1 of unigram/bigram overlap and of the longest common subsequence.
/// Throws EmptyReference.
RougeScore rouge(std::span<const std::string> hypothesis, std::span<const std::string> reference);

std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b);

inline int level_distance(Level predicted, Level target) {
    const int d = rank(predicted) - rank(target);
    return d < 0 ? -d : d;
}

/// Empty when either side is unknown (reported in the ">2" bucket).
std::optional<int> level_distance(std::optional<Level> predicted, std::optional<Level> target);

inline std::size_t position_distance(std::size_t predicted, std::size_t target) {
    return predicted > target ? predicted - target : target - predicted;
}

struct PredictedInsertion {
    std::size_t token_index = 0;
    std::string statement;
};

struct SampleVerdict {
    bool position_ok = false;
    bool level_ok = false;
    bool message_ok = false;
    bool all3_ok = false;
};

SampleVerdict judge(const PredictedInsertion& prediction, const PredictedInsertion& target);

struct Accuracies {
    double position = 0.0;
    double level = 0.0;
    double message = 0.0;
    double all3 = 0.0;
};

/// Percentages over aligned sequences. Throws LengthMismatch or EmptyDataset.
Accuracies accuracies(std::span<const PredictedInsertion> predictions,
                      std::span<const PredictedInsertion> targets);

} // namespace loggen
