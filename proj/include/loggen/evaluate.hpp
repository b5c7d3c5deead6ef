// Dataset-level evaluation: accuracies, message similarity, distance
// histograms, per-sample stage timings and the splitting-policy ablation.

#pragma once

#include "loggen/backend.hpp"
#include "loggen/corpus.hpp"
#include "loggen/metrics.hpp"
#include "loggen/pipeline.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace loggen {

nlohmann::ordered_json to_json(const PipelineConfig& cfg);

struct SampleRecord {
    std::string id;
    bool evaluated = false;
    std::string error;  // set when the sample failed
    std::size_t input_tokens = 0;
    std::size_t target_index = 0;
    std::size_t predicted_index = 0;
    std::string target_statement;
    std::string predicted_statement;
    SampleVerdict verdict;
    std::optional<int> level_distance;
    std::size_t position_distance = 0;
    BleuScore bleu;
    RougeScore rouge;
    StageTimings timings;
};

struct HistogramBucket {
    std::string label;
    std::size_t count = 0;
    double percent = 0.0;
};

/// "0", "1", "2", ">2" (unknown levels count as ">2").
std::string level_bucket(std::optional<int> distance);
/// "≤10", "11-20", "21-50", "51-100", ">100".
std::string position_bucket(std::size_t distance);

const std::vector<std::string>& level_bucket_labels();
const std::vector<std::string>& position_bucket_labels();

struct EvalReport {
    nlohmann::ordered_json config;
    std::vector<SampleRecord> records;
    std::size_t evaluated = 0;
    std::size_t failed = 0;
    Accuracies accuracy;
    BleuScore mean_bleu;
    RougeScore mean_rouge;
    std::vector<HistogramBucket> level_histogram;
    std::vector<HistogramBucket> position_histogram;
    std::size_t position_exact = 0;
    double mean_stage1_s = 0.0;
    double mean_stage2_s = 0.0;
    double mean_total_s = 0.0;
    std::size_t jobs = 1;
};

/// Runs every sample through the pipeline at batch size 1. Samples that throw
/// are recorded as failures and left out of the quality aggregates.
/// Throws EmptyDataset.
EvalReport evaluate(const std::vector<Sample>& dataset, Backend& scorer, Backend& generator,
                    const PipelineConfig& cfg, std::size_t jobs = 1);

nlohmann::ordered_json to_json(const EvalReport& report, bool include_samples = true);
std::string to_csv(const EvalReport& report);

struct AblationRow {
    std::string policy;
    std::size_t short_correct = 0;  // inputs of at most L tokens
    std::size_t short_total = 0;
    std::size_t long_correct = 0;
    std::size_t long_total = 0;

    std::size_t total_correct() const { return short_correct + long_correct; }
    std::size_t total() const { return short_total + long_total; }
};

struct AblationTable {
    std::size_t length_threshold = 512;
    std::vector<AblationRow> rows;
};

/// Position accuracy of each splitting policy, split by input length.
AblationTable ablate(const std::vector<Sample>& dataset, Backend& scorer,
                     const std::vector<SplitConfig>& policies, std::size_t length_threshold);

nlohmann::ordered_json to_json(const AblationTable& table);
std::string render_table(const AblationTable& table);

} // namespace loggen
