#include "loggen/backend.hpp"

#include "loggen/error.hpp"

#include <algorithm>

namespace loggen {

using nlohmann::json;

namespace {

[[noreturn]] void protocol_error(const std::string& what) {
    throw Error(ErrorCode::ProtocolError, what);
}

const json& field(const json& j, const char* name) {
    if (!j.is_object())
        protocol_error("expected a JSON object");
    auto it = j.find(name);
    if (it == j.end())
        protocol_error(std::string("missing field '") + name + "'");
    return *it;
}

std::vector<std::string> string_array(const json& j, const char* name) {
    const json& a = field(j, name);
    if (!a.is_array())
        protocol_error(std::string("field '") + name + "' must be an array");
    std::vector<std::string> out;
    out.reserve(a.size());
    for (const auto& v : a) {
        if (!v.is_string())
            protocol_error(std::string("field '") + name + "' must hold strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

std::size_t non_negative(const json& v, const char* name) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
        protocol_error(std::string("field '") + name + "' must hold non-negative integers");
    return v.get<std::size_t>();
}

} // namespace

std::size_t count_masks(std::span<const std::string> tokens) {
    return static_cast<std::size_t>(std::count(tokens.begin(), tokens.end(), kMaskToken));
}

void validate(const ScoreRequest& req) {
    if (req.tokens.empty())
        protocol_error("score request has no tokens");
    for (std::size_t i : req.candidate_indices)
        if (i >= req.tokens.size())
            protocol_error("candidate index " + std::to_string(i) + " out of range");
}

void validate(const GenerateRequest& req) {
    if (req.beam_size == 0)
        protocol_error("beam_size must be positive");
    const std::size_t masks = count_masks(req.tokens);
    if (masks != 1)
        throw Error(ErrorCode::NoMask, "generate request must contain exactly one " +
                                           std::string(kMaskToken) + ", found " +
                                           std::to_string(masks));
}

void validate(const ScoreResponse& resp, const ScoreRequest& req) {
    if (resp.probabilities.size() != req.tokens.size())
        protocol_error("score response has " + std::to_string(resp.probabilities.size()) +
                       " probabilities for " + std::to_string(req.tokens.size()) + " tokens");
    for (double p : resp.probabilities)
        if (!(p >= 0.0 && p <= 1.0))
            protocol_error("probability outside [0,1]");
}

void validate(const GenerateResponse& resp, const GenerateRequest& req) {
    if (resp.candidates.size() > req.beam_size)
        protocol_error("more candidates than beam_size");
    for (const auto& c : resp.candidates) {
        const auto last = c.text.find_last_not_of(" \t\r\n");
        if (last == std::string::npos || c.text[last] != ';')
            protocol_error("candidate is not a statement ending with ';'");
    }
    for (std::size_t i = 1; i < resp.candidates.size(); ++i)
        if (resp.candidates[i].score > resp.candidates[i - 1].score)
            protocol_error("candidate scores must be non-increasing");
}

json to_json(const ScoreRequest& req) {
    return json{{"tokens", req.tokens}, {"candidate_indices", req.candidate_indices}};
}

json to_json(const ScoreResponse& resp) { return json{{"probabilities", resp.probabilities}}; }

json to_json(const GenerateRequest& req) {
    return json{{"tokens", req.tokens}, {"beam_size", req.beam_size}};
}

json to_json(const GenerateResponse& resp) {
    json cands = json::array();
    for (const auto& c : resp.candidates)
        cands.push_back(json{{"text", c.text}, {"score", c.score}});
    return json{{"candidates", std::move(cands)}};
}

ScoreRequest score_request_from_json(const json& j) {
    ScoreRequest req;
    req.tokens = string_array(j, "tokens");
    const json& idx = field(j, "candidate_indices");
    if (!idx.is_array())
        protocol_error("field 'candidate_indices' must be an array");
    for (const auto& v : idx)
        req.candidate_indices.push_back(non_negative(v, "candidate_indices"));
    return req;
}

ScoreResponse score_response_from_json(const json& j) {
    const json& probs = field(j, "probabilities");
    if (!probs.is_array())
        protocol_error("field 'probabilities' must be an array");
    ScoreResponse resp;
    for (const auto& v : probs) {
        if (!v.is_number())
            protocol_error("field 'probabilities' must hold numbers");
        resp.probabilities.push_back(v.get<double>());
    }
    return resp;
}

GenerateRequest generate_request_from_json(const json& j) {
    GenerateRequest req;
    req.tokens = string_array(j, "tokens");
    if (j.contains("beam_size"))
        req.beam_size = non_negative(j.at("beam_size"), "beam_size");
    return req;
}

GenerateResponse generate_response_from_json(const json& j) {
    const json& cands = field(j, "candidates");
    if (!cands.is_array())
        protocol_error("field 'candidates' must be an array");
    GenerateResponse resp;
    for (const auto& c : cands) {
        const json& text = field(c, "text");
        const json& score = field(c, "score");
        if (!text.is_string() || !score.is_number())
            protocol_error("candidate needs string 'text' and numeric 'score'");
        resp.candidates.push_back({text.get<std::string>(), score.get<double>()});
    }
    return resp;
}

} // namespace loggen
