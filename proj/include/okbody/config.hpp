#ifndef OKBODY_CONFIG_HPP
#define OKBODY_CONFIG_HPP

#include <string>
#include <string_view>

#include "okbody/okounkov.hpp"

namespace okb {

// A fully validated model/flag pair ready for the engine.
struct RunConfig {
    Model model;
    FlagSpec flag;
    FlagValidationReport report;
};

// Parses the TOML subset used by config files (sections, bare keys,
// integers, double-quoted strings, booleans, and arrays that may nest and
// span lines) into a JSON document. Malformed input raises a config error.
Json toml_to_json(std::string_view text);

// format: "toml", "json", or "auto" (sniffs: leading '{' means JSON).
Json parse_config_text(std::string_view text, std::string_view format);

// Builds and validates a run configuration from a parsed document of the
// shape {"model": {...}, "flag": {...}}. Structural problems and failed
// flag validation raise config errors; the validation report of a passing
// flag is returned alongside the pair.
RunConfig load_run_config(const Json& doc);
RunConfig load_run_config_text(std::string_view text, std::string_view format);

} // namespace okb

#endif
