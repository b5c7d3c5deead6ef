// Deterministic statistical backend.
//
// Positions are scored by Laplace-smoothed insertion counts keyed on the
// tokens ending at each anchor, backing off from W tokens down to one.
// Statements are generated by nearest-context retrieval (Jaccard over the
// token sets around the insertion point). Training on a corpus and scoring
// the same corpus reproduces it exactly, which makes the backend a sanity
// oracle for the whole pipeline.

#pragma once

#include "loggen/backend.hpp"
#include "loggen/corpus.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace loggen {

struct BaselineConfig {
    std::size_t window = 4;
    double alpha = 1.0;

    bool operator==(const BaselineConfig&) const = default;
};

struct NgramCount {
    std::uint64_t insert_count = 0;
    std::uint64_t total_count = 0;

    bool operator==(const NgramCount&) const = default;
};

struct RetrievalEntry {
    std::size_t id = 0;
    std::vector<std::string> context;  // sorted, unique
    std::string statement;

    bool operator==(const RetrievalEntry&) const = default;
};

class BaselineModel {
  public:
    /// Throws EmptyCorpus, InvalidConfig (window 0 or alpha <= 0), or the
    /// lexer error of a malformed sample.
    static BaselineModel train(std::span<const Sample> corpus, BaselineConfig cfg = {});

    /// 0 for non-candidates; smoothed insertion probability otherwise.
    std::vector<double> score_positions(std::span<const std::string> tokens,
                                        std::span<const std::size_t> candidates) const;

    /// Probability for the anchor at `i`, from the longest seen window.
    double anchor_probability(std::span<const std::string> tokens, std::size_t i) const;

    /// Prior for an anchor whose every window is unseen.
    double unseen_prior() const;

    /// Top `beam_size` distinct statements by context similarity. Throws
    /// NoMask or EmptyModel.
    std::vector<Candidate> generate_retrieval(std::span<const std::string> masked_tokens,
                                              std::size_t beam_size) const;

    const BaselineConfig& config() const { return cfg_; }
    const std::map<std::vector<std::string>, NgramCount>& ngrams() const { return ngrams_; }
    const std::vector<RetrievalEntry>& index() const { return index_; }

    nlohmann::ordered_json to_json() const;
    static BaselineModel from_json(const nlohmann::json& j);
    void save(const std::filesystem::path& path) const;
    static BaselineModel load(const std::filesystem::path& path);

    bool operator==(const BaselineModel&) const = default;

  private:
    BaselineConfig cfg_;
    std::map<std::vector<std::string>, NgramCount> ngrams_;
    std::vector<RetrievalEntry> index_;
    std::uint64_t total_inserts_ = 0;
    std::uint64_t total_anchors_ = 0;
};

/// Context set used for retrieval: up to W tokens before the insertion point
/// (the anchor included) and up to W after it.
std::vector<std::string> insertion_context(std::span<const std::string> tokens,
                                           std::size_t left_end, std::size_t right_begin,
                                           std::size_t window);

double jaccard(std::span<const std::string> a, std::span<const std::string> b);

class BaselineBackend final : public Backend {
  public:
    explicit BaselineBackend(std::shared_ptr<const BaselineModel> model)
        : model_(std::move(model)) {}

    ScoreResponse score(const ScoreRequest& req) override;
    GenerateResponse generate(const GenerateRequest& req) override;
    std::string describe() const override { return "baseline"; }

  private:
    std::shared_ptr<const BaselineModel> model_;
};

} // namespace loggen
