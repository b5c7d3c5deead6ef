#pragma once

#include "loggen/backend.hpp"
#include "loggen/pipeline.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace loggen {

/// Settings shared by all subcommands. Precedence: flags, then the JSON
/// config file given by --config, then these defaults.
struct ToolConfig {
    PipelineConfig pipeline;
    std::string backend;
    std::string logger_pattern = "log";

    void validate() const;
    void apply(const nlohmann::json& file);
    nlohmann::ordered_json to_json() const;
};

/// Opens "baseline:<model.json>" or "http://host:port". Throws InvalidConfig.
std::unique_ptr<Backend> open_backend(const std::string& locator);

/// Runs the `loggen` command line. Returns 0 on success, 1 on a domain error
/// (reported on `err` as one JSON line) and 2 on a usage error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace loggen
