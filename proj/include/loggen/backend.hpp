// Model backend contract.
//
// Everything learned sits behind this interface: per-token insertion
// probabilities for the position stage and ranked statement candidates for
// the generation stage. Tokens always travel as text arrays so a backend can
// never re-tokenize out of step with the pipeline's indices.

#pragma once

#include <nlohmann/json.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace loggen {

inline constexpr std::string_view kMaskToken = "<mask>";
inline constexpr std::size_t kDefaultBeamSize = 10;

struct ScoreRequest {
    std::vector<std::string> tokens;
    std::vector<std::size_t> candidate_indices;

    bool operator==(const ScoreRequest&) const = default;
};

struct ScoreResponse {
    std::vector<double> probabilities;

    bool operator==(const ScoreResponse&) const = default;
};

struct GenerateRequest {
    std::vector<std::string> tokens;
    std::size_t beam_size = kDefaultBeamSize;

    bool operator==(const GenerateRequest&) const = default;
};

struct Candidate {
    std::string text;
    double score = 0.0;

    bool operator==(const Candidate&) const = default;
};

struct GenerateResponse {
    std::vector<Candidate> candidates;

    bool operator==(const GenerateResponse&) const = default;
};

// Contract checks. Request violations throw ProtocolError (NoMask for a
// generate request whose mask count is not exactly one); response checks
// throw ProtocolError.
void validate(const ScoreRequest& req);
void validate(const GenerateRequest& req);
void validate(const ScoreResponse& resp, const ScoreRequest& req);
void validate(const GenerateResponse& resp, const GenerateRequest& req);

std::size_t count_masks(std::span<const std::string> tokens);

// Wire format. Decoders throw ProtocolError on missing or mistyped fields.
nlohmann::json to_json(const ScoreRequest& req);
nlohmann::json to_json(const ScoreResponse& resp);
nlohmann::json to_json(const GenerateRequest& req);
nlohmann::json to_json(const GenerateResponse& resp);
ScoreRequest score_request_from_json(const nlohmann::json& j);
ScoreResponse score_response_from_json(const nlohmann::json& j);
GenerateRequest generate_request_from_json(const nlohmann::json& j);
GenerateResponse generate_response_from_json(const nlohmann::json& j);

/// A model backend. Implementations must be callable from several threads at
/// once; single-threaded models serialize internally.
class Backend {
  public:
    virtual ~Backend() = default;

    virtual ScoreResponse score(const ScoreRequest& req) = 0;
    virtual GenerateResponse generate(const GenerateRequest& req) = 0;

    virtual std::string describe() const = 0;
};

} // namespace loggen
