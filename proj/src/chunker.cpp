#include "loggen/chunker.hpp"

#include "loggen/error.hpp"

#include <algorithm>
#include <charconv>

namespace loggen {

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

// round(i * n / c) with halves rounded up.
std::size_t ideal_boundary(std::size_t i, std::size_t n, std::size_t c) {
    return (2 * i * n + c) / (2 * c);
}

ChunkPlan single_chunk(std::size_t n, std::size_t core_end) {
    ChunkPlan plan;
    plan.total_tokens = n;
    plan.chunks.push_back(Chunk{{0, core_end}, {0, 0}, {core_end, core_end}, 0});
    return plan;
}

bool parse_size(std::string_view s, std::size_t& out) {
    if (s.empty())
        return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

// Whole statements to the left of `at`, newest first, within count and token budget.
TokenRange left_context(std::span<const std::string> texts, std::span<const StatementSpan> spans,
                        std::size_t at, std::size_t k, std::size_t budget) {
    TokenRange ctx{at, at};
    if (at == 0 || k == 0 || !is_statement_terminator(texts[at - 1]))
        return ctx;
    auto it = std::lower_bound(spans.begin(), spans.end(), at - 1,
                               [](const StatementSpan& s, std::size_t e) { return s.end < e; });
    std::size_t taken = 0;
    for (auto rit = std::make_reverse_iterator(it + 1); rit != spans.rend() && taken < k;
         ++rit, ++taken) {
        if (ctx.size() + rit->size() > budget)
            break;
        ctx.begin = rit->start;
    }
    return ctx;
}

TokenRange right_context(std::span<const std::string> texts, std::span<const StatementSpan> spans,
                         std::size_t at, std::size_t k, std::size_t budget) {
    TokenRange ctx{at, at};
    if (at >= texts.size() || k == 0 || (at > 0 && !is_statement_terminator(texts[at - 1])))
        return ctx;
    auto it = std::lower_bound(spans.begin(), spans.end(), at,
                               [](const StatementSpan& s, std::size_t b) { return s.start < b; });
    for (std::size_t taken = 0; it != spans.end() && taken < k; ++it, ++taken) {
        if (ctx.size() + it->size() > budget)
            break;
        ctx.end = it->end + 1;
    }
    return ctx;
}

} // namespace

std::string_view to_string(SplitPolicy policy) {
    switch (policy) {
    case SplitPolicy::TruncateDiscard: return "truncate-discard";
    case SplitPolicy::TruncateSplit: return "truncate-split";
    case SplitPolicy::AverageSplit: return "average-split";
    case SplitPolicy::AverageSplitStatement: return "average-split-statement";
    }
    return "unknown";
}

std::size_t SplitConfig::context_budget() const {
    return max_input_length >= max_chunk_length ? (max_input_length - max_chunk_length) / 2 : 0;
}

void SplitConfig::validate() const {
    if (max_chunk_length == 0)
        throw Error(ErrorCode::InvalidConfig, "max chunk length must be positive");
    if (max_chunk_length > max_input_length)
        throw Error(ErrorCode::InvalidConfig,
                    "max chunk length " + std::to_string(max_chunk_length) +
                        " exceeds max model input length " + std::to_string(max_input_length));
}

SplitConfig parse_policy(std::string_view name, SplitConfig base) {
    SplitConfig cfg = base;
    if (name == "truncate-discard") {
        cfg.policy = SplitPolicy::TruncateDiscard;
        return cfg;
    }
    if (name == "truncate-split" || name == "truncated-split") {
        cfg.policy = SplitPolicy::TruncateSplit;
        return cfg;
    }
    if (name == "average-split" || name == "average-split-m") {
        cfg.policy = SplitPolicy::AverageSplit;
        return cfg;
    }
    if (name == "average-split-statement" || name == "average-split-m-statement-k") {
        cfg.policy = SplitPolicy::AverageSplitStatement;
        return cfg;
    }
    constexpr std::string_view prefix = "average-split-";
    if (name.starts_with(prefix)) {
        std::string_view rest = name.substr(prefix.size());
        constexpr std::string_view stmt = "-statement-";
        const auto pos = rest.find(stmt);
        std::size_t m = 0;
        if (pos == std::string_view::npos) {
            if (parse_size(rest, m)) {
                cfg.max_chunk_length = m;
                cfg.policy = SplitPolicy::AverageSplit;
                return cfg;
            }
        } else {
            std::size_t k = 0;
            if (parse_size(rest.substr(0, pos), m) && parse_size(rest.substr(pos + stmt.size()), k)) {
                cfg.max_chunk_length = m;
                cfg.context_statements = k;
                cfg.policy = SplitPolicy::AverageSplitStatement;
                return cfg;
            }
        }
    }
    throw Error(ErrorCode::UnknownPolicy, "unknown split policy '" + std::string(name) + "'");
}

std::string policy_label(const SplitConfig& cfg) {
    switch (cfg.policy) {
    case SplitPolicy::TruncateDiscard: return "truncate-discard";
    case SplitPolicy::TruncateSplit: return "truncate-split";
    case SplitPolicy::AverageSplit: return "average-split-" + std::to_string(cfg.max_chunk_length);
    case SplitPolicy::AverageSplitStatement:
        return "average-split-" + std::to_string(cfg.max_chunk_length) + "-statement-" +
               std::to_string(cfg.context_statements);
    }
    return "unknown";
}

std::size_t ChunkPlan::chunk_containing(std::size_t token) const {
    for (std::size_t i = 0; i < chunks.size(); ++i)
        if (chunks[i].core.contains(token))
            return i;
    return chunks.size();
}

ChunkPlan plan_chunks(std::span<const std::string> texts, const SplitConfig& cfg) {
    cfg.validate();
    const std::size_t n = texts.size();
    const std::size_t L = cfg.max_input_length;
    const std::size_t m = cfg.max_chunk_length;
    if (n <= L)
        return single_chunk(n, n);

    const std::size_t c = ceil_div(n, m);
    std::vector<std::size_t> ideal(c + 1);
    for (std::size_t i = 0; i <= c; ++i)
        ideal[i] = ideal_boundary(i, n, c);

    // Snap each interior boundary back to just past a terminator, but never so
    // far that the following core (ending at most at the next ideal boundary)
    // would exceed m.
    std::vector<std::size_t> bounds{0};
    for (std::size_t i = 1; i < c; ++i) {
        const std::size_t prev = bounds.back();
        const std::size_t next = ideal[i + 1];
        const std::size_t lo = std::max(prev + 1, next > m ? next - m : 0);
        std::size_t chosen = ideal[i];
        for (std::size_t e = ideal[i]; e >= lo; --e) {
            if (is_statement_terminator(texts[e - 1])) {
                chosen = e;
                break;
            }
        }
        bounds.push_back(chosen);
    }
    bounds.push_back(n);

    const auto spans = statement_spans(texts);
    const std::size_t budget = cfg.context_budget();
    const std::size_t k = cfg.policy == SplitPolicy::AverageSplit ? 0 : cfg.context_statements;

    ChunkPlan plan;
    plan.total_tokens = n;
    for (std::size_t i = 0; i < c; ++i) {
        Chunk chunk;
        chunk.ordinal = i;
        chunk.core = {bounds[i], bounds[i + 1]};
        chunk.left_context = left_context(texts, spans, chunk.core.begin, k, budget);
        chunk.right_context = right_context(texts, spans, chunk.core.end, k, budget);
        plan.chunks.push_back(chunk);
    }
    return plan;
}

ChunkPlan plan_chunks(const TokenStream& stream, const SplitConfig& cfg) {
    const auto texts = stream.texts();
    return plan_chunks(texts, cfg);
}

ChunkPlan plan_for_policy(std::span<const std::string> texts, const SplitConfig& cfg) {
    cfg.validate();
    const std::size_t n = texts.size();
    const std::size_t L = cfg.max_input_length;
    switch (cfg.policy) {
    case SplitPolicy::TruncateDiscard:
        return single_chunk(n, std::min(n, L));
    case SplitPolicy::TruncateSplit: {
        if (n <= L)
            return single_chunk(n, n);
        ChunkPlan plan;
        plan.total_tokens = n;
        for (std::size_t begin = 0, i = 0; begin < n; begin += L, ++i) {
            const std::size_t end = std::min(n, begin + L);
            plan.chunks.push_back(Chunk{{begin, end}, {begin, begin}, {end, end}, i});
        }
        return plan;
    }
    case SplitPolicy::AverageSplit:
    case SplitPolicy::AverageSplitStatement:
        return plan_chunks(texts, cfg);
    }
    throw Error(ErrorCode::UnknownPolicy, "unknown split policy");
}

ChunkPlan plan_for_policy(const TokenStream& stream, const SplitConfig& cfg) {
    const auto texts = stream.texts();
    return plan_for_policy(texts, cfg);
}

RenderedChunk render_chunk(std::span<const std::string> texts, const Chunk& chunk,
                           const SplitConfig& cfg, std::string_view pad) {
    const std::size_t L = cfg.max_input_length;
    RenderedChunk out;
    out.tokens.reserve(L);
    out.core_mask.reserve(L);
    for (std::size_t i = chunk.left_context.begin; i < chunk.right_context.end && out.tokens.size() < L;
         ++i) {
        out.tokens.push_back(texts[i]);
        out.core_mask.push_back(chunk.core.contains(i));
    }
    out.content_length = out.tokens.size();
    out.tokens.resize(L, std::string(pad));
    out.core_mask.resize(L, false);
    return out;
}

std::vector<double> merge_scores(const ChunkPlan& plan,
                                 std::span<const std::vector<double>> per_chunk_scores,
                                 std::size_t max_input_length) {
    if (per_chunk_scores.size() != plan.chunks.size())
        throw Error(ErrorCode::ShapeMismatch,
                    "expected " + std::to_string(plan.chunks.size()) + " score rows, got " +
                        std::to_string(per_chunk_scores.size()));
    std::vector<double> merged(plan.total_tokens, 0.0);
    for (std::size_t c = 0; c < plan.chunks.size(); ++c) {
        const auto& chunk = plan.chunks[c];
        const auto& row = per_chunk_scores[c];
        if (row.size() != max_input_length)
            throw Error(ErrorCode::ShapeMismatch,
                        "score row " + std::to_string(c) + " has length " +
                            std::to_string(row.size()) + ", expected " +
                            std::to_string(max_input_length));
        const std::size_t offset = chunk.left_context.size();
        for (std::size_t j = 0; j < chunk.core.size(); ++j)
            merged[chunk.core.begin + j] = row[offset + j];
    }
    return merged;
}

} // namespace loggen
