#include "loggen/cli.hpp"

#include "loggen/baseline.hpp"
#include "loggen/chunker.hpp"
#include "loggen/corpus.hpp"
#include "loggen/error.hpp"
#include "loggen/evaluate.hpp"
#include "loggen/http_backend.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace loggen {

using nlohmann::json;
using nlohmann::ordered_json;

void ToolConfig::validate() const { pipeline.validate(); }

void ToolConfig::apply(const json& file) {
    if (!file.is_object())
        throw Error(ErrorCode::InvalidConfig, "config file must hold a JSON object");
    try {
        auto& split = pipeline.split;
        if (file.contains("policy"))
            split = parse_policy(file.at("policy").get<std::string>(), split);
        split.max_input_length = file.value("max_input_length", split.max_input_length);
        split.max_chunk_length = file.value("max_chunk_length", split.max_chunk_length);
        split.context_statements = file.value("context_statements", split.context_statements);
        pipeline.beam_size = file.value("beam_size", pipeline.beam_size);
        pipeline.suggest_budget = file.value("suggest_budget", pipeline.suggest_budget);
        pipeline.suggest_threshold = file.value("suggest_threshold", pipeline.suggest_threshold);
        backend = file.value("backend", backend);
        logger_pattern = file.value("logger_pattern", logger_pattern);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidConfig, std::string("bad config value: ") + e.what());
    }
}

ordered_json ToolConfig::to_json() const {
    ordered_json j = loggen::to_json(pipeline);
    j["backend"] = backend;
    j["logger_pattern"] = logger_pattern;
    return j;
}

std::unique_ptr<Backend> open_backend(const std::string& locator) {
    constexpr std::string_view baseline = "baseline:";
    if (locator.starts_with(baseline)) {
        auto model = std::make_shared<const BaselineModel>(
            BaselineModel::load(locator.substr(baseline.size())));
        return std::make_unique<BaselineBackend>(std::move(model));
    }
    if (locator.starts_with("http://") || locator.starts_with("https://"))
        return std::make_unique<HttpBackend>(locator);
    throw Error(ErrorCode::InvalidConfig,
                "backend must be 'baseline:<model.json>' or 'http://host:port', got '" + locator +
                    "'");
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::IoError, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::IoError, "cannot write " + path);
    out << content;
}

ordered_json range_json(const TokenRange& r) { return ordered_json::array({r.begin, r.end}); }

/// Flags that override the config file when given.
struct Overrides {
    std::string config_path;
    std::optional<std::size_t> L, m, k, beam, budget;
    std::optional<std::string> policy, backend, logger_pattern;
    std::optional<double> threshold;
    bool json = false;

    void add_split(CLI::App* app) {
        app->add_option("--policy", policy, "splitting policy, e.g. average-split-300-statement-5");
        app->add_option("--L", L, "max model input length (default 512)");
        app->add_option("--m", m, "max chunk length (default 300)");
        app->add_option("--k", k, "context statements per side (default 5)");
    }
    void add_backend(CLI::App* app) {
        app->add_option("--backend", backend, "baseline:<model.json> or http://host:port");
        app->add_option("--beam", beam, "beam size (default 10)");
    }
    void add_common(CLI::App* app) {
        app->add_option("--config", config_path, "JSON config file");
        app->add_flag("--json", json, "machine-readable JSON output");
    }

    ToolConfig resolve() const {
        ToolConfig cfg;
        if (!config_path.empty())
            cfg.apply(json::parse(read_file(config_path)));
        auto& split = cfg.pipeline.split;
        if (policy)
            split = parse_policy(*policy, split);
        if (L)
            split.max_input_length = *L;
        if (m)
            split.max_chunk_length = *m;
        if (k)
            split.context_statements = *k;
        if (beam)
            cfg.pipeline.beam_size = *beam;
        if (budget)
            cfg.pipeline.suggest_budget = *budget;
        if (threshold)
            cfg.pipeline.suggest_threshold = *threshold;
        if (backend)
            cfg.backend = *backend;
        if (logger_pattern)
            cfg.logger_pattern = *logger_pattern;
        cfg.validate();
        return cfg;
    }
};

std::unique_ptr<Backend> require_backend(const ToolConfig& cfg) {
    if (cfg.backend.empty())
        throw Error(ErrorCode::InvalidConfig, "no backend given (use --backend)");
    return open_backend(cfg.backend);
}

ordered_json candidates_json(const std::vector<Candidate>& cands) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : cands)
        arr.push_back({{"text", c.text}, {"score", c.score}});
    return arr;
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"loggen: logging statement generation and insertion toolkit", "loggen"};
    app.require_subcommand(1);

    Overrides ov;
    std::string method_path, corpus_path, out_path, src_dir, manifest_path, dataset_path,
        report_path, csv_path, policies, host = "127.0.0.1";
    std::size_t window = 4, jobs = 1;
    double alpha = 1.0;
    int port = 8080;

    auto* tok = app.add_subcommand("tokenize", "lex a Java method and list tokens and anchors");
    tok->add_option("file", method_path, "Java source file")->required();
    ov.add_common(tok);

    auto* split = app.add_subcommand("split", "print the chunk plan for a method");
    split->add_option("--method,file", method_path, "Java source file")->required();
    ov.add_split(split);
    ov.add_common(split);

    auto* run_cmd = app.add_subcommand("run", "predict a position and insert one statement");
    run_cmd->add_option("--method", method_path, "Java method file")->required();
    ov.add_split(run_cmd);
    ov.add_backend(run_cmd);
    ov.add_common(run_cmd);

    auto* sug = app.add_subcommand("suggest", "multiple position/statement suggestions");
    sug->add_option("--method", method_path, "Java method file")->required();
    sug->add_option("--budget", ov.budget, "number of suggestions (default 10)");
    sug->add_option("--threshold", ov.threshold, "minimum position probability (default 0.01)");
    ov.add_split(sug);
    ov.add_backend(sug);
    ov.add_common(sug);

    auto* train = app.add_subcommand("train-baseline", "train the statistical baseline backend");
    train->add_option("--corpus", corpus_path, "training JSONL")->required();
    train->add_option("--out", out_path, "model JSON to write")->required();
    train->add_option("--window", window, "n-gram window W (default 4)");
    train->add_option("--alpha", alpha, "Laplace smoothing (default 1.0)");
    ov.add_common(train);

    auto* extract = app.add_subcommand("extract-samples", "build a JSONL dataset from .java files");
    extract->add_option("--src", src_dir, "directory of .java files")->required();
    extract->add_option("--out", out_path, "JSONL to write")->required();
    extract->add_option("--manifest", manifest_path, "provenance manifest (JSON) to attach");
    extract->add_option("--logger-pattern", ov.logger_pattern, "receiver pattern (default 'log')");
    extract->add_option("--jobs", jobs, "parallel files");
    ov.add_common(extract);

    auto* stats = app.add_subcommand("stats", "dataset statistics");
    stats->add_option("dataset", dataset_path, "JSONL dataset")->required();
    ov.add_common(stats);

    auto* eval = app.add_subcommand("eval", "evaluate a backend on a dataset");
    eval->add_option("--dataset", dataset_path, "JSONL dataset")->required();
    eval->add_option("--report", report_path, "report JSON to write");
    eval->add_option("--csv", csv_path, "per-sample CSV to write");
    eval->add_option("--jobs", jobs, "samples evaluated in parallel (timings assume 1)");
    ov.add_split(eval);
    ov.add_backend(eval);
    ov.add_common(eval);

    auto* abl = app.add_subcommand("ablate", "position accuracy per splitting policy");
    abl->add_option("--dataset", dataset_path, "JSONL dataset")->required();
    abl->add_option("--policies", policies, "comma-separated policy names")->required();
    ov.add_split(abl);
    ov.add_backend(abl);
    ov.add_common(abl);

    auto* serve = app.add_subcommand("serve", "serve a backend over the HTTP protocol");
    serve->add_option("--host", host, "bind address");
    serve->add_option("--port", port, "port");
    ov.add_backend(serve);
    ov.add_common(serve);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        const ToolConfig cfg = ov.resolve();
        const PipelineConfig& pc = cfg.pipeline;

        if (*tok) {
            const auto stream = tokenize(read_file(method_path));
            if (ov.json) {
                ordered_json toks = ordered_json::array();
                for (const auto& t : stream.tokens())
                    toks.push_back({{"index", t.index},
                                    {"text", t.text},
                                    {"kind", to_string(t.kind)},
                                    {"span", {t.span.begin, t.span.end}}});
                ordered_json spans = ordered_json::array();
                for (const auto& s : statement_spans(stream))
                    spans.push_back({{"start", s.start},
                                     {"end", s.end},
                                     {"terminator", s.terminator},
                                     {"complete", s.complete}});
                out << ordered_json{{"tokens", toks},
                                    {"anchors", find_anchors(stream)},
                                    {"statements", spans}}
                           .dump()
                    << '\n';
            } else {
                for (const auto& t : stream.tokens())
                    out << t.index << '\t' << to_string(t.kind) << '\t' << t.text
                        << (is_anchor(t.text) ? "\tanchor" : "") << '\n';
            }
        } else if (*split) {
            const auto stream = tokenize(read_file(method_path));
            const auto texts = stream.texts();
            const ChunkPlan plan = plan_for_policy(texts, pc.split);
            ordered_json chunks = ordered_json::array();
            for (const auto& c : plan.chunks) {
                const auto rendered = render_chunk(texts, c, pc.split);
                chunks.push_back({{"ordinal", c.ordinal},
                                  {"core", range_json(c.core)},
                                  {"left_context", range_json(c.left_context)},
                                  {"right_context", range_json(c.right_context)},
                                  {"content_length", rendered.content_length},
                                  {"core_mask", rendered.core_mask}});
            }
            out << ordered_json{{"config", cfg.to_json()},
                                {"total_tokens", plan.total_tokens},
                                {"context_budget", pc.split.context_budget()},
                                {"chunks", chunks}}
                       .dump()
                << '\n';
        } else if (*run_cmd) {
            auto backend = require_backend(cfg);
            const auto stream = tokenize(read_file(method_path));
            const InsertionResult r = run(stream, *backend, *backend, pc);
            ordered_json j;
            j["position"] = r.insertion_token_index;
            j["anchor"] = stream[r.insertion_token_index].text;
            j["probability"] = r.probability;
            j["statement"] = r.inserted_statement.raw_text;
            j["level"] = to_string(r.inserted_statement.level);
            j["candidates"] = candidates_json(r.candidates);
            j["timings"] = {{"stage1_ms", r.timings.stage1_ms},
                            {"stage2_ms", r.timings.stage2_ms},
                            {"total_ms", r.timings.total_ms()}};
            j["output"] = r.output_source;
            j["config"] = cfg.to_json();
            if (ov.json)
                out << j.dump() << '\n';
            else
                out << r.output_source << (r.output_source.ends_with('\n') ? "" : "\n");
        } else if (*sug) {
            auto backend = require_backend(cfg);
            const auto stream = tokenize(read_file(method_path));
            const SuggestionSet set = suggest(stream, *backend, *backend, pc);
            ordered_json arr = ordered_json::array();
            for (const auto& s : set.suggestions)
                arr.push_back({{"rank", s.rank},
                               {"position", s.token_index},
                               {"probability", s.probability},
                               {"position_rank", s.position_rank},
                               {"beam_rank", s.beam_rank},
                               {"statement", s.statement}});
            out << ordered_json{{"suggestions", arr},
                                {"fell_back_to_argmax", set.fell_back_to_argmax},
                                {"config", cfg.to_json()}}
                       .dump()
                << '\n';
        } else if (*train) {
            const auto corpus = read_dataset(std::filesystem::path(corpus_path));
            const auto model = BaselineModel::train(corpus, {window, alpha});
            model.save(out_path);
            const ordered_json j{{"model", out_path},
                                 {"samples", corpus.size()},
                                 {"ngrams", model.ngrams().size()},
                                 {"index", model.index().size()}};
            if (ov.json)
                out << j.dump() << '\n';
            else
                out << "trained baseline on " << corpus.size() << " samples -> " << out_path << '\n';
        } else if (*extract) {
            ExtractOptions opts;
            opts.pattern = LoggerPattern(cfg.logger_pattern);
            opts.jobs = jobs;
            DatasetManifest manifest;
            if (!manifest_path.empty()) {
                const json m = json::parse(read_file(manifest_path));
                manifest = manifest_from_json(m);
                opts.meta.repo = m.value("repo", std::string());
                if (m.contains("stars"))
                    opts.meta.stars = m.at("stars").get<std::int64_t>();
                if (m.contains("created_at"))
                    opts.meta.created_at = m.at("created_at").get<std::string>();
            }
            const auto samples = extract_from_directory(src_dir, opts, &manifest);
            write_dataset(std::filesystem::path(out_path), samples);
            write_file(out_path + ".manifest.json", to_json(manifest).dump(2) + "\n");
            if (ov.json)
                out << to_json(manifest).dump() << '\n';
            else
                out << "extracted " << samples.size() << " samples from " << manifest.files
                    << " files (" << manifest.rejected << " rejected) -> " << out_path << '\n';
        } else if (*stats) {
            const auto samples = read_dataset(std::filesystem::path(dataset_path));
            const CorpusStats st = corpus_stats(samples);
            if (ov.json)
                out << ordered_json{{"count", st.count},
                                    {"mean_input_tokens", st.mean_input_tokens},
                                    {"mean_target_tokens", st.mean_target_tokens}}
                           .dump()
                    << '\n';
            else
                out << "Sample Count\tMean Token Length of Input\tMean Token Length of Target "
                       "Logging Statement\n"
                    << st.count << '\t' << st.mean_input_tokens << '\t' << st.mean_target_tokens
                    << '\n';
        } else if (*eval) {
            auto backend = require_backend(cfg);
            const auto samples = read_dataset(std::filesystem::path(dataset_path));
            EvalReport report = evaluate(samples, *backend, *backend, pc, jobs);
            report.config = cfg.to_json();
            const ordered_json j = to_json(report);
            if (!report_path.empty())
                write_file(report_path, j.dump(2) + "\n");
            if (!csv_path.empty())
                write_file(csv_path, to_csv(report));
            out << (ov.json ? to_json(report, false).dump() : to_json(report, false).dump(2))
                << '\n';
        } else if (*abl) {
            auto backend = require_backend(cfg);
            const auto samples = read_dataset(std::filesystem::path(dataset_path));
            std::vector<SplitConfig> configs;
            std::stringstream ss(policies);
            for (std::string name; std::getline(ss, name, ',');)
                if (!name.empty())
                    configs.push_back(parse_policy(name, pc.split));
            const AblationTable table =
                ablate(samples, *backend, configs, pc.split.max_input_length);
            if (ov.json) {
                ordered_json j = to_json(table);
                j["config"] = cfg.to_json();
                out << j.dump() << '\n';
            } else {
                out << render_table(table);
            }
        } else if (*serve) {
            auto backend = require_backend(cfg);
            BackendServer server(*backend);
            err << "serving " << backend->describe() << " on " << host << ':' << port << '\n';
            if (!server.listen(host, port))
                throw Error(ErrorCode::IoError, "could not listen on " + host + ":" +
                                                    std::to_string(port));
        }
        return 0;
    } catch (const Error& e) {
        ordered_json j{{"error", to_string(e.code())}, {"message", e.what()}};
        if (e.location())
            j["location"] = *e.location();
        err << j.dump() << '\n';
        return 1;
    } catch (const json::exception& e) {
        err << ordered_json{{"error", "ParseError"}, {"message", e.what()}}.dump() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << ordered_json{{"error", "InternalError"}, {"message", e.what()}}.dump() << '\n';
        return 1;
    }
}

} // namespace loggen
