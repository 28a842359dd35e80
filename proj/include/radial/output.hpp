#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace radial::cli {

using Json = nlohmann::ordered_json;

enum class OutputFormat { text, csv, json };

/// Fixed 12-significant-digit decimal form used by the text and CSV renderers.
/// JSON keeps full shortest-round-trip doubles.
std::string format_double(double value);

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// One command's result: parameters, a rectangular row set, and the embedded
/// invariant checks that drive the exit code. Rendering is deterministic:
/// fixed column order, fixed formatting, no timestamps.
struct OutputDoc {
    std::string command;
    Json parameters = Json::object();
    std::vector<std::string> columns;
    std::vector<Json> rows;  // objects keyed by column name
    std::vector<Check> checks;
};

std::string render(const OutputDoc& doc, OutputFormat format);

bool all_checks_pass(const OutputDoc& doc);

}  // namespace radial::cli
