#include "loggen/evaluate.hpp"

#include "loggen/error.hpp"

#include <cstdio>
#include <future>
#include <sstream>

namespace loggen {

using nlohmann::ordered_json;

ordered_json to_json(const PipelineConfig& cfg) {
    ordered_json j;
    j["max_input_length"] = cfg.split.max_input_length;
    j["max_chunk_length"] = cfg.split.max_chunk_length;
    j["context_statements"] = cfg.split.context_statements;
    j["policy"] = policy_label(cfg.split);
    j["beam_size"] = cfg.beam_size;
    j["suggest_budget"] = cfg.suggest_budget;
    j["suggest_threshold"] = cfg.suggest_threshold;
    return j;
}

const std::vector<std::string>& level_bucket_labels() {
    static const std::vector<std::string> labels = {"0", "1", "2", ">2"};
    return labels;
}

const std::vector<std::string>& position_bucket_labels() {
    static const std::vector<std::string> labels = {"≤10", "11-20", "21-50", "51-100", ">100"};
    return labels;
}

std::string level_bucket(std::optional<int> distance) {
    if (!distance || *distance > 2)
        return ">2";
    return std::to_string(*distance);
}

std::string position_bucket(std::size_t d) {
    if (d <= 10)
        return "≤10";
    if (d <= 20)
        return "11-20";
    if (d <= 50)
        return "21-50";
    if (d <= 100)
        return "51-100";
    return ">100";
}

namespace {

SampleRecord evaluate_one(const Sample& sample, Backend& scorer, Backend& generator,
                          const PipelineConfig& cfg) {
    SampleRecord rec;
    rec.id = sample.id;
    rec.target_index = sample.target_index;
    rec.target_statement = sample.target_statement;
    try {
        const TokenStream stream = tokenize(sample.method);
        rec.input_tokens = stream.size();
        const InsertionResult result = run(stream, scorer, generator, cfg);
        rec.predicted_index = result.insertion_token_index;
        rec.predicted_statement = result.inserted_statement.raw_text;
        rec.timings = result.timings;

        const PredictedInsertion pred{rec.predicted_index, rec.predicted_statement};
        const PredictedInsertion target{sample.target_index, sample.target_statement};
        rec.verdict = judge(pred, target);
        const auto hyp = LoggingStatement::parse(rec.predicted_statement);
        const auto ref = LoggingStatement::parse(sample.target_statement);
        rec.level_distance = level_distance(hyp.level, ref.level);
        rec.position_distance = position_distance(rec.predicted_index, sample.target_index);
        rec.bleu = bleu(hyp.message_tokens, ref.message_tokens);
        rec.rouge = rouge(hyp.message_tokens, ref.message_tokens);
        rec.evaluated = true;
    } catch (const Error& e) {
        rec.error = std::string(to_string(e.code())) + ": " + e.what();
    }
    return rec;
}

std::vector<HistogramBucket> histogram(const std::vector<std::string>& labels,
                                       const std::vector<std::string>& values) {
    std::vector<HistogramBucket> out;
    for (const auto& label : labels) {
        HistogramBucket b{label, 0, 0.0};
        for (const auto& v : values)
            b.count += v == label;
        b.percent = values.empty() ? 0.0 : 100.0 * b.count / static_cast<double>(values.size());
        out.push_back(b);
    }
    return out;
}

ordered_json histogram_json(const std::vector<HistogramBucket>& buckets) {
    ordered_json arr = ordered_json::array();
    for (const auto& b : buckets)
        arr.push_back({{"bucket", b.label}, {"count", b.count}, {"percent", b.percent}});
    return arr;
}

} // namespace

EvalReport evaluate(const std::vector<Sample>& dataset, Backend& scorer, Backend& generator,
                    const PipelineConfig& cfg, std::size_t jobs) {
    if (dataset.empty())
        throw Error(ErrorCode::EmptyDataset, "dataset is empty");
    cfg.validate();
    EvalReport report;
    report.config = to_json(cfg);
    report.jobs = std::max<std::size_t>(1, jobs);

    report.records.resize(dataset.size());
    if (report.jobs == 1) {
        for (std::size_t i = 0; i < dataset.size(); ++i)
            report.records[i] = evaluate_one(dataset[i], scorer, generator, cfg);
    } else {
        for (std::size_t base = 0; base < dataset.size(); base += report.jobs) {
            std::vector<std::future<SampleRecord>> batch;
            for (std::size_t i = base; i < std::min(dataset.size(), base + report.jobs); ++i)
                batch.push_back(std::async(std::launch::async, evaluate_one, std::cref(dataset[i]),
                                           std::ref(scorer), std::ref(generator), std::cref(cfg)));
            for (std::size_t i = 0; i < batch.size(); ++i)
                report.records[base + i] = batch[i].get();
        }
    }

    std::vector<PredictedInsertion> preds;
    std::vector<PredictedInsertion> targets;
    std::vector<std::string> level_values;
    std::vector<std::string> position_values;
    for (const auto& rec : report.records) {
        if (!rec.evaluated) {
            ++report.failed;
            continue;
        }
        ++report.evaluated;
        preds.push_back({rec.predicted_index, rec.predicted_statement});
        targets.push_back({rec.target_index, rec.target_statement});
        level_values.push_back(level_bucket(rec.level_distance));
        position_values.push_back(position_bucket(rec.position_distance));
        report.position_exact += rec.position_distance == 0;
        report.mean_bleu.bleu += rec.bleu.bleu;
        report.mean_bleu.brevity_penalty += rec.bleu.brevity_penalty;
        for (std::size_t n = 0; n < 4; ++n)
            report.mean_bleu.precision[n] += rec.bleu.precision[n];
        report.mean_rouge.rouge1 += rec.rouge.rouge1;
        report.mean_rouge.rouge2 += rec.rouge.rouge2;
        report.mean_rouge.rougeL += rec.rouge.rougeL;
        report.mean_stage1_s += rec.timings.stage1_ms / 1000.0;
        report.mean_stage2_s += rec.timings.stage2_ms / 1000.0;
    }
    if (report.evaluated > 0) {
        const double n = static_cast<double>(report.evaluated);
        report.accuracy = accuracies(preds, targets);
        report.mean_bleu.bleu /= n;
        report.mean_bleu.brevity_penalty /= n;
        for (auto& p : report.mean_bleu.precision)
            p /= n;
        report.mean_rouge.rouge1 /= n;
        report.mean_rouge.rouge2 /= n;
        report.mean_rouge.rougeL /= n;
        report.mean_stage1_s /= n;
        report.mean_stage2_s /= n;
        report.mean_total_s = report.mean_stage1_s + report.mean_stage2_s;
    }
    report.level_histogram = histogram(level_bucket_labels(), level_values);
    report.position_histogram = histogram(position_bucket_labels(), position_values);
    return report;
}

ordered_json to_json(const EvalReport& r, bool include_samples) {
    ordered_json j;
    j["schema"] = "loggen.eval-report";
    j["version"] = 1;
    j["config"] = r.config;
    j["counts"] = {{"samples", r.records.size()}, {"evaluated", r.evaluated}, {"failed", r.failed}};
    j["accuracy"] = {{"position", r.accuracy.position},
                     {"level", r.accuracy.level},
                     {"message", r.accuracy.message},
                     {"all3", r.accuracy.all3}};
    j["message_similarity"] = {{"BLEU", r.mean_bleu.bleu},
                               {"BLEU-1", r.mean_bleu.precision[0]},
                               {"BLEU-2", r.mean_bleu.precision[1]},
                               {"BLEU-3", r.mean_bleu.precision[2]},
                               {"BLEU-4", r.mean_bleu.precision[3]},
                               {"ROUGE-1", r.mean_rouge.rouge1},
                               {"ROUGE-2", r.mean_rouge.rouge2},
                               {"ROUGE-L", r.mean_rouge.rougeL}};
    j["level_distance"] = {{"buckets", histogram_json(r.level_histogram)}};
    j["position_distance"] = {{"exact", r.position_exact},
                              {"buckets", histogram_json(r.position_histogram)}};
    j["timing"] = {{"batch_size", 1},
                   {"jobs", r.jobs},
                   {"mean_total_s", r.mean_total_s},
                   {"mean_stage1_s", r.mean_stage1_s},
                   {"mean_stage2_s", r.mean_stage2_s}};
    ordered_json failures = ordered_json::array();
    for (const auto& rec : r.records)
        if (!rec.evaluated)
            failures.push_back({{"id", rec.id}, {"error", rec.error}});
    j["failures"] = std::move(failures);
    if (include_samples) {
        ordered_json samples = ordered_json::array();
        for (const auto& rec : r.records) {
            if (!rec.evaluated)
                continue;
            samples.push_back({
                {"id", rec.id},
                {"input_tokens", rec.input_tokens},
                {"target_index", rec.target_index},
                {"predicted_index", rec.predicted_index},
                {"predicted_statement", rec.predicted_statement},
                {"position_ok", rec.verdict.position_ok},
                {"level_ok", rec.verdict.level_ok},
                {"message_ok", rec.verdict.message_ok},
                {"all3_ok", rec.verdict.all3_ok},
                {"level_distance", rec.level_distance ? ordered_json(*rec.level_distance)
                                                      : ordered_json(nullptr)},
                {"position_distance", rec.position_distance},
                {"bleu", rec.bleu.bleu},
                {"rouge_l", rec.rouge.rougeL},
                {"stage1_ms", rec.timings.stage1_ms},
                {"stage2_ms", rec.timings.stage2_ms},
                {"total_ms", rec.timings.total_ms()},
            });
        }
        j["samples"] = std::move(samples);
    }
    return j;
}

namespace {

std::string csv_field(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

std::string to_csv(const EvalReport& r) {
    std::ostringstream out;
    out << "id,evaluated,input_tokens,target_index,predicted_index,position_ok,level_ok,"
           "message_ok,all3_ok,level_distance,position_distance,bleu,bleu1,bleu2,bleu3,bleu4,"
           "rouge1,rouge2,rougeL,stage1_ms,stage2_ms,total_ms,error\n";
    for (const auto& rec : r.records) {
        out << csv_field(rec.id) << ',' << rec.evaluated << ',' << rec.input_tokens << ','
            << rec.target_index << ',' << rec.predicted_index << ',' << rec.verdict.position_ok
            << ',' << rec.verdict.level_ok << ',' << rec.verdict.message_ok << ','
            << rec.verdict.all3_ok << ','
            << (rec.level_distance ? std::to_string(*rec.level_distance) : std::string()) << ','
            << rec.position_distance << ',' << rec.bleu.bleu;
        for (double p : rec.bleu.precision)
            out << ',' << p;
        out << ',' << rec.rouge.rouge1 << ',' << rec.rouge.rouge2 << ',' << rec.rouge.rougeL << ','
            << rec.timings.stage1_ms << ',' << rec.timings.stage2_ms << ','
            << rec.timings.total_ms() << ',' << csv_field(rec.error) << '\n';
    }
    return out.str();
}

AblationTable ablate(const std::vector<Sample>& dataset, Backend& scorer,
                     const std::vector<SplitConfig>& policies, std::size_t length_threshold) {
    if (dataset.empty())
        throw Error(ErrorCode::EmptyDataset, "dataset is empty");
    AblationTable table;
    table.length_threshold = length_threshold;
    std::vector<TokenStream> streams;
    streams.reserve(dataset.size());
    for (const auto& s : dataset)
        streams.push_back(tokenize(s.method));

    for (const SplitConfig& split : policies) {
        AblationRow row;
        row.policy = policy_label(split);
        PipelineConfig cfg;
        cfg.split = split;
        for (std::size_t i = 0; i < dataset.size(); ++i) {
            const bool is_long = streams[i].size() > length_threshold;
            bool correct = false;
            try {
                correct = predict_position(streams[i], scorer, cfg).token_index ==
                          dataset[i].target_index;
            } catch (const Error& e) {
                if (e.code() != ErrorCode::NoAnchors)
                    throw;
            }
            if (is_long) {
                ++row.long_total;
                row.long_correct += correct;
            } else {
                ++row.short_total;
                row.short_correct += correct;
            }
        }
        table.rows.push_back(row);
    }
    return table;
}

namespace {

double pct(std::size_t correct, std::size_t total) {
    return total == 0 ? 0.0 : 100.0 * static_cast<double>(correct) / static_cast<double>(total);
}

} // namespace

ordered_json to_json(const AblationTable& t) {
    const std::string le = "≤" + std::to_string(t.length_threshold);
    const std::string gt = ">" + std::to_string(t.length_threshold);
    ordered_json j;
    j["schema"] = "loggen.ablation";
    j["version"] = 1;
    j["length_threshold"] = t.length_threshold;
    j["columns"] = {le + " Correct Predictions", le + " Accuracy",  gt + " Correct Predictions",
                    gt + " Accuracy",            "Total Correct Predictions", "Total Accuracy"};
    ordered_json rows = ordered_json::array();
    for (const auto& r : t.rows) {
        rows.push_back({
            {"policy", r.policy},
            {le, {{"correct", r.short_correct}, {"total", r.short_total},
                  {"accuracy", pct(r.short_correct, r.short_total)}}},
            {gt, {{"correct", r.long_correct}, {"total", r.long_total},
                  {"accuracy", pct(r.long_correct, r.long_total)}}},
            {"Total", {{"correct", r.total_correct()}, {"total", r.total()},
                       {"accuracy", pct(r.total_correct(), r.total())}}},
        });
    }
    j["rows"] = std::move(rows);
    return j;
}

std::string render_table(const AblationTable& t) {
    const std::string le = "≤" + std::to_string(t.length_threshold);
    const std::string gt = ">" + std::to_string(t.length_threshold);
    std::ostringstream out;
    out << "Splitting Strategy | " << le << " Correct Predictions | " << le << " Accuracy | " << gt
        << " Correct Predictions | " << gt << " Accuracy | Total Correct Predictions | Total Accuracy\n";
    char buf[64];
    for (const auto& r : t.rows) {
        out << r.policy << " | " << r.short_correct << " | ";
        std::snprintf(buf, sizeof buf, "%.2f%%", pct(r.short_correct, r.short_total));
        out << buf << " | " << r.long_correct << " | ";
        std::snprintf(buf, sizeof buf, "%.2f%%", pct(r.long_correct, r.long_total));
        out << buf << " | " << r.total_correct() << " | ";
        std::snprintf(buf, sizeof buf, "%.2f%%", pct(r.total_correct(), r.total()));
        out << buf << '\n';
    }
    return out.str();
}

} // namespace loggen
