// Logging-statement detection, sample extraction and the JSONL dataset format.

#pragma once

#include "loggen/lexer.hpp"
#include "loggen/statement.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <regex>
#include <string>
#include <vector>

namespace loggen {

struct SampleMeta {
    std::string repo;
    std::string path;
    std::optional<std::int64_t> stars;
    std::optional<std::string> created_at;
    nlohmann::ordered_json extra = nlohmann::ordered_json::object();

    bool operator==(const SampleMeta&) const = default;
};

/// One dataset unit: a method with its target logging statement removed.
struct Sample {
    std::string id;
    std::string method;
    std::size_t target_index = 0;
    std::string target_statement;
    std::optional<Level> target_level;
    SampleMeta meta;
    nlohmann::ordered_json extra = nlohmann::ordered_json::object();  // unknown fields

    bool operator==(const Sample&) const = default;
};

/// Receiver heuristic for logger calls; matched case-insensitively anywhere
/// in the receiver identifier.
class LoggerPattern {
  public:
    LoggerPattern() : LoggerPattern("log") {}
    explicit LoggerPattern(std::string pattern);

    bool matches(const std::string& receiver) const;
    const std::string& pattern() const { return pattern_; }

  private:
    std::string pattern_;
    std::regex regex_;
};

/// A detected `receiver.level(...);` statement; token indices inclusive.
struct LogSpan {
    std::size_t start = 0;
    std::size_t end = 0;
    Level level = Level::Info;

    bool operator==(const LogSpan&) const = default;
};

std::vector<LogSpan> detect_logging_statements(const TokenStream& stream,
                                               const LoggerPattern& pattern = {});

/// Removes the `span_choice`-th detected statement. Throws SpanNotDetected
/// or PrecedingTokenNotAnchor.
Sample extract_sample(const TokenStream& stream, std::size_t span_choice,
                      const LoggerPattern& pattern = {});

/// Method texts found in a Java file; a file without member declarations is
/// returned whole.
std::vector<std::string> split_methods(const TokenStream& file);

nlohmann::ordered_json to_json(const Sample& sample);
Sample sample_from_json(const nlohmann::json& j);

std::vector<Sample> read_dataset(std::istream& in);
std::vector<Sample> read_dataset(const std::filesystem::path& path);
void write_dataset(std::ostream& out, const std::vector<Sample>& samples);
void write_dataset(const std::filesystem::path& path, const std::vector<Sample>& samples);

struct CorpusStats {
    std::size_t count = 0;
    double mean_input_tokens = 0.0;
    double mean_target_tokens = 0.0;
};

/// Throws EmptyDataset.
CorpusStats corpus_stats(const std::vector<Sample>& samples);

/// Repository filters the dataset was mined under, carried for provenance.
struct ProvenanceFilters {
    std::string language = "Java";
    bool uses_log4j = true;
    std::string created_after = "2021-09-01";
    std::string created_before = "2023-05-01";
    std::int64_t min_stars = 10;
    bool exclude_forks = true;
};

struct DatasetManifest {
    ProvenanceFilters filters;
    std::size_t files = 0;
    std::size_t methods = 0;
    std::size_t samples = 0;
    std::size_t rejected = 0;
    CorpusStats stats;
    std::string receiver_pattern = "log";
};

nlohmann::ordered_json to_json(const DatasetManifest& manifest);
DatasetManifest manifest_from_json(const nlohmann::json& j);

struct ExtractOptions {
    LoggerPattern pattern;
    SampleMeta meta;  // template copied into every sample
    std::size_t jobs = 1;
};

/// Walks `src` for *.java files (sorted by path), splits them into methods and
/// emits one sample per detectable logging statement.
std::vector<Sample> extract_from_directory(const std::filesystem::path& src,
                                           const ExtractOptions& options,
                                           DatasetManifest* manifest = nullptr);

} // namespace loggen
