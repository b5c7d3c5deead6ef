#include "loggen/corpus.hpp"

#include "loggen/error.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <sstream>

namespace loggen {

using nlohmann::json;
using nlohmann::ordered_json;

LoggerPattern::LoggerPattern(std::string pattern)
    : pattern_(std::move(pattern)), regex_(pattern_, std::regex::icase | std::regex::ECMAScript) {}

bool LoggerPattern::matches(const std::string& receiver) const {
    return std::regex_search(receiver, regex_);
}

std::vector<LogSpan> detect_logging_statements(const TokenStream& stream,
                                               const LoggerPattern& pattern) {
    std::vector<LogSpan> out;
    const auto& t = stream.tokens();
    const std::size_t n = t.size();
    for (std::size_t s = 0; s + 4 < n; ++s) {
        if (t[s].kind != TokenKind::Identifier || (s > 0 && t[s - 1].text == "."))
            continue;
        if (t[s + 1].text != "." || t[s + 2].kind != TokenKind::Identifier || t[s + 3].text != "(")
            continue;
        const auto level = level_from_name(t[s + 2].text);
        if (!level || !pattern.matches(t[s].text))
            continue;
        std::size_t depth = 0;
        std::size_t close = n;
        for (std::size_t i = s + 3; i < n; ++i) {
            if (t[i].text == "(") {
                ++depth;
            } else if (t[i].text == ")" && --depth == 0) {
                close = i;
                break;
            }
        }
        if (close + 1 >= n || t[close + 1].text != ";")
            continue;
        out.push_back({s, close + 1, *level});
        s = close + 1;
    }
    return out;
}

Sample extract_sample(const TokenStream& stream, std::size_t span_choice,
                      const LoggerPattern& pattern) {
    const auto spans = detect_logging_statements(stream, pattern);
    if (span_choice >= spans.size())
        throw Error(ErrorCode::SpanNotDetected,
                    "logging statement #" + std::to_string(span_choice) + " not detected (" +
                        std::to_string(spans.size()) + " found)");
    const LogSpan& span = spans[span_choice];
    if (span.start == 0 || !is_anchor(stream[span.start - 1].text))
        throw Error(ErrorCode::PrecedingTokenNotAnchor,
                    "logging statement at token " + std::to_string(span.start) +
                        " does not follow '{', '}', ';' or ':'");

    const std::string& src = stream.source();
    const std::size_t anchor_end = stream[span.start - 1].span.end;
    const std::size_t stmt_begin = stream[span.start].span.begin;
    const std::size_t stmt_end = stream[span.end].span.end;
    std::size_t cut = stmt_begin;
    while (cut > anchor_end && (src[cut - 1] == ' ' || src[cut - 1] == '\t' ||
                                src[cut - 1] == '\n' || src[cut - 1] == '\r'))
        --cut;

    Sample sample;
    sample.method = src.substr(0, cut) + src.substr(stmt_end);
    sample.target_index = span.start - 1;
    sample.target_statement = src.substr(stmt_begin, stmt_end - stmt_begin);
    sample.target_level = span.level;
    return sample;
}

namespace {

bool opens_type(std::span<const Token> header) {
    for (std::size_t i = 0; i < header.size(); ++i) {
        const auto& text = header[i].text;
        if (text == "new")
            return false;
        if ((text == "class" || text == "interface" || text == "enum") &&
            !(i > 0 && header[i - 1].text == "."))
            return true;
        if (text == "record" && i + 1 < header.size() &&
            header[i + 1].kind == TokenKind::Identifier)
            return true;
    }
    return false;
}

bool looks_like_method(std::span<const Token> header) {
    int depth = 0;
    bool has_params = false;
    for (const auto& tok : header) {
        if (tok.text == "(") {
            ++depth;
            has_params = true;
        } else if (tok.text == ")") {
            --depth;
        } else if (depth == 0 && (tok.text == "=" || tok.text == "->")) {
            return false;
        }
    }
    return has_params;
}

std::size_t matching_brace(const std::vector<Token>& t, std::size_t open) {
    std::size_t depth = 0;
    for (std::size_t i = open; i < t.size(); ++i) {
        if (t[i].text == "{")
            ++depth;
        else if (t[i].text == "}" && --depth == 0)
            return i;
    }
    return t.size() - 1;
}

// Scans members from `begin` until the closing brace of the enclosing body.
void scan_members(const TokenStream& file, std::size_t begin, std::vector<std::string>& out,
                  std::size_t& resume) {
    const auto& t = file.tokens();
    std::size_t member_start = begin;
    int parens = 0;
    std::size_t i = begin;
    while (i < t.size() && t[i].text != "}") {
        const auto& text = t[i].text;
        if (text == "(") {
            ++parens;
        } else if (text == ")") {
            --parens;
        } else if (parens == 0 && text == ";") {
            member_start = i + 1;
        } else if (parens == 0 && text == "{") {
            std::span<const Token> header(t.data() + member_start, i - member_start);
            if (opens_type(header)) {
                std::size_t after = i + 1;
                scan_members(file, i + 1, out, after);
                i = after - 1;
            } else {
                const std::size_t close = matching_brace(t, i);
                if (looks_like_method(header) && member_start < t.size()) {
                    const std::size_t from = t[member_start].span.begin;
                    out.push_back(file.source().substr(from, t[close].span.end - from));
                }
                i = close;
            }
            member_start = i + 1;
        }
        ++i;
    }
    resume = i + 1;
}

} // namespace

std::vector<std::string> split_methods(const TokenStream& file) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    // Stray closing braces at file level are skipped.
    while (pos < file.size()) {
        std::size_t resume = pos;
        scan_members(file, pos, out, resume);
        pos = resume;
    }
    if (out.empty() && !file.empty())
        out.push_back(file.source());
    return out;
}

namespace {

ordered_json meta_to_json(const SampleMeta& meta) {
    ordered_json j;
    j["repo"] = meta.repo;
    j["path"] = meta.path;
    if (meta.stars)
        j["stars"] = *meta.stars;
    if (meta.created_at)
        j["created_at"] = *meta.created_at;
    for (const auto& [k, v] : meta.extra.items())
        j[k] = v;
    return j;
}

SampleMeta meta_from_json(const json& j) {
    SampleMeta meta;
    if (!j.is_object())
        return meta;
    for (const auto& [k, v] : j.items()) {
        if (k == "repo")
            meta.repo = v.get<std::string>();
        else if (k == "path")
            meta.path = v.get<std::string>();
        else if (k == "stars" && !v.is_null())
            meta.stars = v.get<std::int64_t>();
        else if (k == "created_at" && !v.is_null())
            meta.created_at = v.get<std::string>();
        else
            meta.extra[k] = v;
    }
    return meta;
}

} // namespace

ordered_json to_json(const Sample& s) {
    ordered_json j;
    j["id"] = s.id;
    j["method"] = s.method;
    j["target_index"] = s.target_index;
    j["target_statement"] = s.target_statement;
    j["target_level"] = to_string(s.target_level);
    j["meta"] = meta_to_json(s.meta);
    for (const auto& [k, v] : s.extra.items())
        j[k] = v;
    return j;
}

Sample sample_from_json(const json& j) {
    if (!j.is_object())
        throw Error(ErrorCode::ParseError, "sample must be a JSON object");
    for (const char* required : {"method", "target_index", "target_statement"})
        if (!j.contains(required))
            throw Error(ErrorCode::ParseError, std::string("sample lacks field '") + required + "'");
    Sample s;
    try {
        for (const auto& [k, v] : j.items()) {
            if (k == "id")
                s.id = v.is_string() ? v.get<std::string>() : v.dump();
            else if (k == "method")
                s.method = v.get<std::string>();
            else if (k == "target_index")
                s.target_index = v.get<std::size_t>();
            else if (k == "target_statement")
                s.target_statement = v.get<std::string>();
            else if (k == "target_level")
                s.target_level = level_from_name(v.get<std::string>());
            else if (k == "meta")
                s.meta = meta_from_json(v);
            else
                s.extra[k] = v;
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("bad sample field: ") + e.what());
    }
    if (!j.contains("target_level"))
        s.target_level = parse_level(s.target_statement);
    return s;
}

std::vector<Sample> read_dataset(std::istream& in) {
    std::vector<Sample> out;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        try {
            out.push_back(sample_from_json(json::parse(line)));
        } catch (const json::exception& e) {
            throw Error(ErrorCode::ParseError,
                        "line " + std::to_string(lineno) + ": " + e.what(), lineno);
        } catch (const Error& e) {
            throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + e.what(),
                        lineno);
        }
    }
    return out;
}

std::vector<Sample> read_dataset(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::IoError, "cannot open " + path.string());
    return read_dataset(in);
}

void write_dataset(std::ostream& out, const std::vector<Sample>& samples) {
    for (const auto& s : samples)
        out << to_json(s).dump() << '\n';
}

void write_dataset(const std::filesystem::path& path, const std::vector<Sample>& samples) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::IoError, "cannot write " + path.string());
    write_dataset(out, samples);
}

CorpusStats corpus_stats(const std::vector<Sample>& samples) {
    if (samples.empty())
        throw Error(ErrorCode::EmptyDataset, "dataset is empty");
    CorpusStats st;
    st.count = samples.size();
    double input = 0.0;
    double target = 0.0;
    for (const auto& s : samples) {
        input += static_cast<double>(tokenize(s.method).size());
        target += static_cast<double>(statement_tokens(s.target_statement).size());
    }
    st.mean_input_tokens = input / static_cast<double>(st.count);
    st.mean_target_tokens = target / static_cast<double>(st.count);
    return st;
}

ordered_json to_json(const DatasetManifest& m) {
    ordered_json j;
    j["schema"] = "loggen.dataset-manifest";
    j["version"] = 1;
    j["filters"] = {
        {"language", m.filters.language},
        {"uses_log4j", m.filters.uses_log4j},
        {"created_after", m.filters.created_after},
        {"created_before", m.filters.created_before},
        {"min_stars", m.filters.min_stars},
        {"exclude_forks", m.filters.exclude_forks},
    };
    j["counts"] = {{"files", m.files},
                   {"methods", m.methods},
                   {"samples", m.samples},
                   {"rejected", m.rejected}};
    j["mean_input_tokens"] = m.stats.mean_input_tokens;
    j["mean_target_tokens"] = m.stats.mean_target_tokens;
    j["detection"] = {{"receiver_pattern", m.receiver_pattern},
                      {"approximate", true},
                      {"rule", "receiver.level(...); with level in trace|debug|info|warn|error|fatal"}};
    return j;
}

DatasetManifest manifest_from_json(const json& j) {
    DatasetManifest m;
    if (auto f = j.find("filters"); f != j.end() && f->is_object()) {
        m.filters.language = f->value("language", m.filters.language);
        m.filters.uses_log4j = f->value("uses_log4j", m.filters.uses_log4j);
        m.filters.created_after = f->value("created_after", m.filters.created_after);
        m.filters.created_before = f->value("created_before", m.filters.created_before);
        m.filters.min_stars = f->value("min_stars", m.filters.min_stars);
        m.filters.exclude_forks = f->value("exclude_forks", m.filters.exclude_forks);
    }
    if (auto c = j.find("counts"); c != j.end() && c->is_object()) {
        m.files = c->value("files", std::size_t{0});
        m.methods = c->value("methods", std::size_t{0});
        m.samples = c->value("samples", std::size_t{0});
        m.rejected = c->value("rejected", std::size_t{0});
    }
    m.stats.count = m.samples;
    m.stats.mean_input_tokens = j.value("mean_input_tokens", 0.0);
    m.stats.mean_target_tokens = j.value("mean_target_tokens", 0.0);
    if (auto d = j.find("detection"); d != j.end() && d->is_object())
        m.receiver_pattern = d->value("receiver_pattern", m.receiver_pattern);
    return m;
}

namespace {

struct FileResult {
    std::vector<Sample> samples;
    std::size_t methods = 0;
    std::size_t rejected = 0;
};

FileResult extract_file(const std::filesystem::path& file, const std::string& rel,
                        const ExtractOptions& options) {
    std::ifstream in(file, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    FileResult result;
    const auto methods = split_methods(tokenize(buf.str()));
    result.methods = methods.size();
    for (std::size_t m = 0; m < methods.size(); ++m) {
        const auto stream = tokenize(methods[m]);
        const auto spans = detect_logging_statements(stream, options.pattern);
        for (std::size_t s = 0; s < spans.size(); ++s) {
            try {
                Sample sample = extract_sample(stream, s, options.pattern);
                sample.id = rel + "#m" + std::to_string(m) + "#s" + std::to_string(s);
                sample.meta = options.meta;
                sample.meta.path = rel;
                result.samples.push_back(std::move(sample));
            } catch (const Error& e) {
                if (e.code() != ErrorCode::PrecedingTokenNotAnchor)
                    throw;
                ++result.rejected;
            }
        }
    }
    return result;
}

} // namespace

std::vector<Sample> extract_from_directory(const std::filesystem::path& src,
                                           const ExtractOptions& options,
                                           DatasetManifest* manifest) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(src))
        throw Error(ErrorCode::IoError, src.string() + " is not a directory");
    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(src))
        if (entry.is_regular_file() && entry.path().extension() == ".java")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    std::vector<FileResult> results(files.size());
    const std::size_t jobs = std::max<std::size_t>(1, options.jobs);
    for (std::size_t base = 0; base < files.size(); base += jobs) {
        std::vector<std::future<FileResult>> batch;
        for (std::size_t i = base; i < std::min(files.size(), base + jobs); ++i)
            batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                       extract_file, files[i],
                                       fs::relative(files[i], src).generic_string(),
                                       std::cref(options)));
        for (std::size_t i = 0; i < batch.size(); ++i)
            results[base + i] = batch[i].get();
    }

    std::vector<Sample> out;
    DatasetManifest local;
    for (auto& r : results) {
        local.methods += r.methods;
        local.rejected += r.rejected;
        for (auto& s : r.samples)
            out.push_back(std::move(s));
    }
    if (manifest) {
        local.filters = manifest->filters;
        local.files = files.size();
        local.samples = out.size();
        local.receiver_pattern = options.pattern.pattern();
        if (!out.empty())
            local.stats = corpus_stats(out);
        *manifest = local;
    }
    return out;
}

} // namespace loggen
