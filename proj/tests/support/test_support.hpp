// Helpers shared by the unit tests and the acceptance runner.
#pragma once

#include "loggen/backend.hpp"
#include "loggen/chunker.hpp"
#include "loggen/corpus.hpp"

#include <filesystem>
#include <functional>
#include <mutex>
#include <random>
#include <string>
#include <vector>

namespace loggen::testing {

std::filesystem::path fixture_path(const std::string& relative);
std::string read_text(const std::filesystem::path& path);

/// Every .java file under the fixture directories, sorted.
std::vector<std::filesystem::path> fixture_java_files();

std::vector<Sample> corpus_samples();        // generated corpus
std::vector<Sample> memorization_samples();  // 50 one-log methods

/// Random token texts: identifiers with terminators and anchors sprinkled in.
std::vector<std::string> random_texts(std::mt19937_64& rng, std::size_t n, double terminator_rate);

/// Empty when `plan` satisfies the partition, budget, whole-statement and
/// no-op properties for `texts` under `cfg`; otherwise the first violation.
std::string check_plan(std::span<const std::string> texts, const SplitConfig& cfg,
                       const ChunkPlan& plan);

/// Backend driven by callbacks; records every request it sees.
class ScriptedBackend final : public Backend {
  public:
    using ScoreFn = std::function<ScoreResponse(const ScoreRequest&)>;
    using GenerateFn = std::function<GenerateResponse(const GenerateRequest&)>;

    ScriptedBackend(ScoreFn score, GenerateFn generate)
        : score_fn_(std::move(score)), generate_fn_(std::move(generate)) {}

    ScoreResponse score(const ScoreRequest& req) override;
    GenerateResponse generate(const GenerateRequest& req) override;
    std::string describe() const override { return "scripted"; }

    std::vector<ScoreRequest> score_log;
    std::vector<GenerateRequest> generate_log;

  private:
    ScoreFn score_fn_;
    GenerateFn generate_fn_;
    std::mutex mu_;
};

/// Uniform random probabilities and random but well-formed statements.
class RandomBackend final : public Backend {
  public:
    explicit RandomBackend(std::uint64_t seed) : rng_(seed) {}
    ScoreResponse score(const ScoreRequest& req) override;
    GenerateResponse generate(const GenerateRequest& req) override;
    std::string describe() const override { return "random"; }

  private:
    std::mt19937_64 rng_;
    std::mutex mu_;
};

/// A generate response holding one candidate.
GenerateResponse single_candidate(const std::string& text, double score = -1.0);

} // namespace loggen::testing
