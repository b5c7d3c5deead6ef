#include "loggen/metrics.hpp"

#include "loggen/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace loggen {

namespace {

using Ngram = std::vector<std::string>;

std::map<Ngram, std::size_t> ngram_counts(std::span<const std::string> tokens, std::size_t n) {
    std::map<Ngram, std::size_t> counts;
    for (std::size_t i = 0; i + n <= tokens.size(); ++i)
        ++counts[Ngram(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                       tokens.begin() + static_cast<std::ptrdiff_t>(i + n))];
    return counts;
}

// Clipped matches and hypothesis n-gram total.
std::pair<std::size_t, std::size_t> overlap(std::span<const std::string> hyp,
                                            std::span<const std::string> ref, std::size_t n) {
    const auto h = ngram_counts(hyp, n);
    const auto r = ngram_counts(ref, n);
    std::size_t matched = 0;
    for (const auto& [gram, count] : h) {
        auto it = r.find(gram);
        if (it != r.end())
            matched += std::min(count, it->second);
    }
    const std::size_t total = hyp.size() >= n ? hyp.size() - n + 1 : 0;
    return {matched, total};
}

double f1(double matched, double hyp_total, double ref_total) {
    if (matched == 0.0 || hyp_total == 0.0 || ref_total == 0.0)
        return 0.0;
    const double p = matched / hyp_total;
    const double r = matched / ref_total;
    return 2.0 * p * r / (p + r);
}

void require_reference(std::span<const std::string> reference) {
    if (reference.empty())
        throw Error(ErrorCode::EmptyReference, "reference is empty");
}

} // namespace

BleuScore bleu(std::span<const std::string> hypothesis, std::span<const std::string> reference) {
    require_reference(reference);
    BleuScore s;
    double log_sum = 0.0;
    bool zero = false;
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto [matched, total] = overlap(hypothesis, reference, n);
        s.precision[n - 1] = total == 0 ? 0.0 : 100.0 * static_cast<double>(matched) / total;
        double p = 0.0;
        if (n == 1)
            p = total == 0 ? 0.0 : static_cast<double>(matched) / total;
        else
            p = (static_cast<double>(matched) + 1.0) / (static_cast<double>(total) + 1.0);
        if (p == 0.0)
            zero = true;
        else
            log_sum += std::log(p);
    }
    const double c = static_cast<double>(hypothesis.size());
    const double r = static_cast<double>(reference.size());
    s.brevity_penalty = c == 0.0 ? 0.0 : (c > r ? 1.0 : std::exp(1.0 - r / c));
    s.bleu = zero ? 0.0 : 100.0 * s.brevity_penalty * std::exp(log_sum / 4.0);
    return s;
}

std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b) {
    std::vector<std::size_t> prev(b.size() + 1, 0);
    std::vector<std::size_t> cur(b.size() + 1, 0);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        for (std::size_t j = 1; j <= b.size(); ++j)
            cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

RougeScore rouge(std::span<const std::string> hypothesis, std::span<const std::string> reference) {
    require_reference(reference);
    RougeScore s;
    auto rouge_n = [&](std::size_t n) {
        const auto [matched, hyp_total] = overlap(hypothesis, reference, n);
        const std::size_t ref_total = reference.size() >= n ? reference.size() - n + 1 : 0;
        return 100.0 * f1(static_cast<double>(matched), static_cast<double>(hyp_total),
                          static_cast<double>(ref_total));
    };
    s.rouge1 = rouge_n(1);
    s.rouge2 = rouge_n(2);
    s.rougeL = 100.0 * f1(static_cast<double>(lcs_length(hypothesis, reference)),
                          static_cast<double>(hypothesis.size()),
                          static_cast<double>(reference.size()));
    return s;
}

std::optional<int> level_distance(std::optional<Level> predicted, std::optional<Level> target) {
    if (!predicted || !target)
        return std::nullopt;
    return level_distance(*predicted, *target);
}

SampleVerdict judge(const PredictedInsertion& prediction, const PredictedInsertion& target) {
    const auto pred = LoggingStatement::parse(prediction.statement);
    const auto ref = LoggingStatement::parse(target.statement);
    SampleVerdict v;
    v.position_ok = prediction.token_index == target.token_index;
    v.level_ok = pred.level && ref.level && *pred.level == *ref.level;
    v.message_ok = pred.message_tokens == ref.message_tokens;
    v.all3_ok = v.position_ok && v.level_ok && v.message_ok;
    return v;
}

Accuracies accuracies(std::span<const PredictedInsertion> predictions,
                      std::span<const PredictedInsertion> targets) {
    if (predictions.size() != targets.size())
        throw Error(ErrorCode::LengthMismatch,
                    std::to_string(predictions.size()) + " predictions for " +
                        std::to_string(targets.size()) + " targets");
    if (targets.empty())
        throw Error(ErrorCode::EmptyDataset, "no samples to score");
    std::size_t pos = 0, lvl = 0, msg = 0, all = 0;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const auto v = judge(predictions[i], targets[i]);
        pos += v.position_ok;
        lvl += v.level_ok;
        msg += v.message_ok;
        all += v.all3_ok;
    }
    const double n = static_cast<double>(targets.size());
    return {100.0 * pos / n, 100.0 * lvl / n, 100.0 * msg / n, 100.0 * all / n};
}

} // namespace loggen
