#include "loggen/pipeline.hpp"

#include "loggen/error.hpp"

#include <algorithm>
#include <chrono>

namespace loggen {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

} // namespace

void PipelineConfig::validate() const {
    split.validate();
    if (beam_size == 0)
        throw Error(ErrorCode::InvalidConfig, "beam size must be at least 1");
    if (suggest_budget == 0)
        throw Error(ErrorCode::InvalidConfig, "suggestion budget must be at least 1");
    if (!(suggest_threshold >= 0.0 && suggest_threshold <= 1.0))
        throw Error(ErrorCode::InvalidConfig, "suggestion threshold must lie in [0,1]");
}

PositionPrediction choose_position(std::span<const double> probabilities,
                                   std::span<const std::size_t> anchors) {
    if (anchors.empty())
        throw Error(ErrorCode::NoAnchors, "method has no '{', '}', ';' or ':' token");
    PositionPrediction pred;
    for (std::size_t a : anchors)
        pred.ranked_alternatives.emplace_back(a, a < probabilities.size() ? probabilities[a] : 0.0);
    std::stable_sort(pred.ranked_alternatives.begin(), pred.ranked_alternatives.end(),
                     [](const auto& x, const auto& y) {
                         if (x.second != y.second)
                             return x.second > y.second;
                         return x.first < y.first;
                     });
    pred.token_index = pred.ranked_alternatives.front().first;
    pred.probability = pred.ranked_alternatives.front().second;
    return pred;
}

std::vector<double> score_tokens(std::span<const std::string> texts, Backend& scorer,
                                 const SplitConfig& cfg) {
    const ChunkPlan plan = plan_for_policy(texts, cfg);
    std::vector<std::vector<double>> rows;
    rows.reserve(plan.chunks.size());
    for (const Chunk& chunk : plan.chunks) {
        const RenderedChunk rendered = render_chunk(texts, chunk, cfg);
        ScoreRequest req;
        req.tokens.assign(rendered.content().begin(), rendered.content().end());
        req.candidate_indices = find_anchors(req.tokens);
        std::vector<double> row(cfg.max_input_length, 0.0);
        if (!req.tokens.empty()) {
            const ScoreResponse resp = scorer.score(req);
            validate(resp, req);
            std::copy(resp.probabilities.begin(), resp.probabilities.end(), row.begin());
        }
        rows.push_back(std::move(row));
    }
    return merge_scores(plan, rows, cfg.max_input_length);
}

PositionPrediction predict_position(const TokenStream& stream, Backend& scorer,
                                    const PipelineConfig& cfg) {
    const auto texts = stream.texts();
    const auto anchors = find_anchors(texts);
    if (anchors.empty())
        throw Error(ErrorCode::NoAnchors, "method has no '{', '}', ';' or ':' token");
    const auto probs = score_tokens(texts, scorer, cfg.split);
    return choose_position(probs, anchors);
}

std::vector<std::string> build_masked_input(std::span<const std::string> texts,
                                            std::size_t token_index) {
    if (token_index >= texts.size())
        throw Error(ErrorCode::IndexOutOfRange,
                    "token index " + std::to_string(token_index) + " outside " +
                        std::to_string(texts.size()) + " tokens");
    std::vector<std::string> out;
    out.reserve(texts.size() + 1);
    out.insert(out.end(), texts.begin(), texts.begin() + static_cast<std::ptrdiff_t>(token_index + 1));
    out.emplace_back(kMaskToken);
    out.insert(out.end(), texts.begin() + static_cast<std::ptrdiff_t>(token_index + 1), texts.end());
    return out;
}

std::vector<std::string> select_mask_chunk(std::span<const std::string> masked,
                                           const SplitConfig& cfg) {
    if (count_masks(masked) != 1)
        throw Error(ErrorCode::NoMask, "masked input must contain exactly one mask token");
    const std::size_t L = cfg.max_input_length;
    if (masked.size() <= L)
        return {masked.begin(), masked.end()};

    const std::size_t q =
        static_cast<std::size_t>(std::find(masked.begin(), masked.end(), kMaskToken) - masked.begin());
    const ChunkPlan plan = plan_for_policy(masked, cfg);
    const std::size_t c = plan.chunk_containing(q);
    if (c < plan.chunks.size()) {
        const Chunk& chunk = plan.chunks[c];
        return {masked.begin() + static_cast<std::ptrdiff_t>(chunk.left_context.begin),
                masked.begin() + static_cast<std::ptrdiff_t>(chunk.right_context.end)};
    }
    // Only truncate-discard leaves tokens uncovered: centre an L-window on the mask.
    const std::size_t begin = std::min(q > L / 2 ? q - L / 2 : 0, masked.size() - L);
    return {masked.begin() + static_cast<std::ptrdiff_t>(begin),
            masked.begin() + static_cast<std::ptrdiff_t>(begin + L)};
}

std::string InsertionResult::strip_insertion() const {
    std::string out = output_source;
    out.erase(insertion_offset, insertion_length);
    return out;
}

GenerateResponse generate_at(const TokenStream& stream, std::size_t token_index,
                             Backend& generator, const PipelineConfig& cfg,
                             std::size_t beam_size) {
    const auto masked = build_masked_input(stream.texts(), token_index);
    GenerateRequest req{select_mask_chunk(masked, cfg.split), beam_size};
    GenerateResponse resp = generator.generate(req);
    validate(resp, req);
    return resp;
}

InsertionResult run(const TokenStream& stream, Backend& scorer, Backend& generator,
                    const PipelineConfig& cfg) {
    cfg.validate();
    InsertionResult result;

    auto t0 = Clock::now();
    const PositionPrediction pos = predict_position(stream, scorer, cfg);
    result.timings.stage1_ms = elapsed_ms(t0);

    t0 = Clock::now();
    GenerateResponse gen = generate_at(stream, pos.token_index, generator, cfg, cfg.beam_size);
    if (gen.candidates.empty())
        throw Error(ErrorCode::GenerationEmpty, "generator returned no candidate");
    Insertion ins = insert_statement(stream, pos.token_index, gen.candidates.front().text);
    result.timings.stage2_ms = elapsed_ms(t0);

    result.output_source = std::move(ins.output);
    result.insertion_offset = ins.offset;
    result.insertion_length = ins.length;
    result.insertion_token_index = pos.token_index;
    result.probability = pos.probability;
    result.inserted_statement = LoggingStatement::parse(gen.candidates.front().text);
    result.candidates = std::move(gen.candidates);
    return result;
}

std::vector<std::size_t> allocate_budget(std::span<const double> descending_probabilities,
                                         std::size_t budget) {
    const std::size_t p = descending_probabilities.size();
    if (p == 0)
        throw Error(ErrorCode::EmptyPositions, "no positions to allocate suggestions to");
    std::vector<std::size_t> counts(p, 0);
    std::size_t left = budget;
    while (left > 0) {
        for (std::size_t width = p; width >= 1 && left > 0; --width) {
            for (std::size_t i = 0; i < width && left > 0; ++i, --left)
                ++counts[i];
        }
    }
    return counts;
}

SuggestionSet suggest(const TokenStream& stream, Backend& scorer, Backend& generator,
                      const PipelineConfig& cfg) {
    cfg.validate();
    const PositionPrediction pred = predict_position(stream, scorer, cfg);

    SuggestionSet set;
    std::vector<std::pair<std::size_t, double>> kept;
    for (const auto& alt : pred.ranked_alternatives)
        if (alt.second >= cfg.suggest_threshold)
            kept.push_back(alt);
    if (kept.empty()) {
        kept.emplace_back(pred.token_index, pred.probability);
        set.fell_back_to_argmax = true;
    }
    std::vector<double> probs;
    for (const auto& k : kept)
        probs.push_back(k.second);
    const auto counts = allocate_budget(probs, cfg.suggest_budget);
    const std::size_t beam =
        std::max(cfg.beam_size, *std::max_element(counts.begin(), counts.end()));

    for (std::size_t r = 0; r < kept.size(); ++r) {
        if (counts[r] == 0)
            continue;
        const GenerateResponse gen = generate_at(stream, kept[r].first, generator, cfg, beam);
        const std::size_t take = std::min(counts[r], gen.candidates.size());
        for (std::size_t b = 0; b < take; ++b)
            set.suggestions.push_back({kept[r].first, kept[r].second, gen.candidates[b].text,
                                       set.suggestions.size(), r, b});
    }
    return set;
}

} // namespace loggen
