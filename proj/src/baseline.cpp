#include "loggen/baseline.hpp"

#include "loggen/error.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <unordered_set>

namespace loggen {

using nlohmann::json;
using nlohmann::ordered_json;

std::vector<std::string> insertion_context(std::span<const std::string> tokens,
                                           std::size_t left_end, std::size_t right_begin,
                                           std::size_t window) {
    std::set<std::string> ctx;
    const std::size_t left_begin = left_end > window ? left_end - window : 0;
    for (std::size_t i = left_begin; i < left_end; ++i)
        ctx.insert(tokens[i]);
    for (std::size_t i = right_begin; i < std::min(tokens.size(), right_begin + window); ++i)
        ctx.insert(tokens[i]);
    return {ctx.begin(), ctx.end()};
}

double jaccard(std::span<const std::string> a, std::span<const std::string> b) {
    if (a.empty() && b.empty())
        return 1.0;
    std::size_t common = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++common;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return static_cast<double>(common) / static_cast<double>(a.size() + b.size() - common);
}

BaselineModel BaselineModel::train(std::span<const Sample> corpus, BaselineConfig cfg) {
    if (corpus.empty())
        throw Error(ErrorCode::EmptyCorpus, "cannot train on an empty corpus");
    if (cfg.window == 0 || !(cfg.alpha > 0.0))
        throw Error(ErrorCode::InvalidConfig, "baseline needs window >= 1 and alpha > 0");

    BaselineModel model;
    model.cfg_ = cfg;
    for (std::size_t id = 0; id < corpus.size(); ++id) {
        const Sample& sample = corpus[id];
        const auto texts = tokenize(sample.method).texts();
        for (std::size_t a : find_anchors(texts)) {
            const bool positive = a == sample.target_index;
            for (std::size_t w = 1; w <= std::min(cfg.window, a + 1); ++w) {
                std::vector<std::string> key(texts.begin() + static_cast<std::ptrdiff_t>(a + 1 - w),
                                             texts.begin() + static_cast<std::ptrdiff_t>(a + 1));
                auto& count = model.ngrams_[std::move(key)];
                ++count.total_count;
                if (positive)
                    ++count.insert_count;
            }
            ++model.total_anchors_;
            if (positive)
                ++model.total_inserts_;
        }
        const std::size_t split = std::min(sample.target_index + 1, texts.size());
        model.index_.push_back(
            {id, insertion_context(texts, split, split, cfg.window), sample.target_statement});
    }
    return model;
}

double BaselineModel::unseen_prior() const {
    const double a = cfg_.alpha;
    return 0.5 * (static_cast<double>(total_inserts_) + a) /
           (static_cast<double>(total_anchors_) + 2.0 * a);
}

double BaselineModel::anchor_probability(std::span<const std::string> tokens, std::size_t i) const {
    const double a = cfg_.alpha;
    for (std::size_t w = std::min(cfg_.window, i + 1); w >= 1; --w) {
        std::vector<std::string> key(tokens.begin() + static_cast<std::ptrdiff_t>(i + 1 - w),
                                     tokens.begin() + static_cast<std::ptrdiff_t>(i + 1));
        auto it = ngrams_.find(key);
        if (it != ngrams_.end() && it->second.total_count > 0)
            return (static_cast<double>(it->second.insert_count) + a) /
                   (static_cast<double>(it->second.total_count) + 2.0 * a);
    }
    return unseen_prior();
}

std::vector<double> BaselineModel::score_positions(std::span<const std::string> tokens,
                                                   std::span<const std::size_t> candidates) const {
    std::vector<double> probs(tokens.size(), 0.0);
    for (std::size_t i : candidates)
        if (i < tokens.size())
            probs[i] = anchor_probability(tokens, i);
    return probs;
}

std::vector<Candidate> BaselineModel::generate_retrieval(std::span<const std::string> masked,
                                                         std::size_t beam_size) const {
    if (count_masks(masked) != 1)
        throw Error(ErrorCode::NoMask, "retrieval needs exactly one mask token");
    if (index_.empty())
        throw Error(ErrorCode::EmptyModel, "retrieval index is empty");
    const std::size_t q = static_cast<std::size_t>(
        std::find(masked.begin(), masked.end(), kMaskToken) - masked.begin());
    const auto query = insertion_context(masked, q, q + 1, cfg_.window);

    std::vector<std::pair<double, std::size_t>> ranked;
    ranked.reserve(index_.size());
    for (std::size_t e = 0; e < index_.size(); ++e)
        ranked.emplace_back(jaccard(query, index_[e].context), e);
    std::stable_sort(ranked.begin(), ranked.end(), [this](const auto& x, const auto& y) {
        if (x.first != y.first)
            return x.first > y.first;
        return index_[x.second].id < index_[y.second].id;
    });

    std::vector<Candidate> out;
    std::unordered_set<std::string> seen;
    for (const auto& [sim, e] : ranked) {
        if (out.size() >= beam_size)
            break;
        if (seen.insert(index_[e].statement).second)
            out.push_back({index_[e].statement, sim});
    }
    return out;
}

ordered_json BaselineModel::to_json() const {
    ordered_json j;
    j["format"] = "loggen-baseline";
    j["version"] = 1;
    j["window"] = cfg_.window;
    j["alpha"] = cfg_.alpha;
    j["total_inserts"] = total_inserts_;
    j["total_anchors"] = total_anchors_;
    ordered_json grams = ordered_json::array();
    for (const auto& [key, count] : ngrams_)
        grams.push_back({{"key", key}, {"insert", count.insert_count}, {"total", count.total_count}});
    j["ngrams"] = std::move(grams);
    ordered_json index = ordered_json::array();
    for (const auto& e : index_)
        index.push_back({{"id", e.id}, {"context", e.context}, {"statement", e.statement}});
    j["index"] = std::move(index);
    return j;
}

BaselineModel BaselineModel::from_json(const json& j) {
    try {
        if (j.value("format", std::string()) != "loggen-baseline")
            throw Error(ErrorCode::ParseError, "not a loggen baseline model");
        BaselineModel model;
        model.cfg_.window = j.at("window").get<std::size_t>();
        model.cfg_.alpha = j.at("alpha").get<double>();
        model.total_inserts_ = j.at("total_inserts").get<std::uint64_t>();
        model.total_anchors_ = j.at("total_anchors").get<std::uint64_t>();
        for (const auto& g : j.at("ngrams")) {
            NgramCount c{g.at("insert").get<std::uint64_t>(), g.at("total").get<std::uint64_t>()};
            if (c.insert_count > c.total_count)
                throw Error(ErrorCode::ParseError, "n-gram insert count exceeds total");
            model.ngrams_[g.at("key").get<std::vector<std::string>>()] = c;
        }
        for (const auto& e : j.at("index"))
            model.index_.push_back({e.at("id").get<std::size_t>(),
                                    e.at("context").get<std::vector<std::string>>(),
                                    e.at("statement").get<std::string>()});
        return model;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("malformed baseline model: ") + e.what());
    }
}

void BaselineModel::save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::IoError, "cannot write " + path.string());
    out << to_json().dump() << '\n';
}

BaselineModel BaselineModel::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::IoError, "cannot open " + path.string());
    try {
        return from_json(json::parse(in));
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
    }
}

ScoreResponse BaselineBackend::score(const ScoreRequest& req) {
    validate(req);
    return {model_->score_positions(req.tokens, req.candidate_indices)};
}

GenerateResponse BaselineBackend::generate(const GenerateRequest& req) {
    validate(req);
    return {model_->generate_retrieval(req.tokens, req.beam_size)};
}

} // namespace loggen
