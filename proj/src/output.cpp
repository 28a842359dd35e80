#include "radial/output.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "radial/version.hpp"

namespace radial::cli {

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

namespace {

std::string cell_text(const Json& value) {
    if (value.is_null()) return "";
    if (value.is_string()) return value.get<std::string>();
    if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
    if (value.is_number_float()) return format_double(value.get<double>());
    return value.dump();
}

std::string render_csv(const OutputDoc& doc) {
    std::ostringstream out;
    for (std::size_t c = 0; c < doc.columns.size(); ++c)
        out << (c ? "," : "") << doc.columns[c];
    out << '\n';
    for (const auto& row : doc.rows) {
        for (std::size_t c = 0; c < doc.columns.size(); ++c) {
            if (c) out << ',';
            const auto it = row.find(doc.columns[c]);
            if (it != row.end()) out << cell_text(*it);
        }
        out << '\n';
    }
    return out.str();
}

std::string render_json(const OutputDoc& doc) {
    Json root;
    root["command"] = doc.command;
    root["parameters"] = doc.parameters;
    root["rows"] = Json::array();
    for (const auto& row : doc.rows) root["rows"].push_back(row);
    root["checks"] = Json::array();
    for (const auto& check : doc.checks)
        root["checks"].push_back(
            Json{{"name", check.name}, {"pass", check.passed}, {"detail", check.detail}});
    root["versions"] =
        Json{{"tool", kToolName}, {"version", kToolVersion}, {"schema", kOutputSchemaVersion}};
    return root.dump(2) + "\n";
}

std::string render_text(const OutputDoc& doc) {
    std::ostringstream out;
    out << "# " << doc.command;
    for (auto it = doc.parameters.begin(); it != doc.parameters.end(); ++it)
        out << ' ' << it.key() << '=' << cell_text(it.value());
    out << '\n';

    std::vector<std::size_t> widths(doc.columns.size());
    std::vector<std::vector<std::string>> cells;
    cells.reserve(doc.rows.size());
    for (std::size_t c = 0; c < doc.columns.size(); ++c)
        widths[c] = doc.columns[c].size();
    for (const auto& row : doc.rows) {
        std::vector<std::string> line(doc.columns.size());
        for (std::size_t c = 0; c < doc.columns.size(); ++c) {
            const auto it = row.find(doc.columns[c]);
            if (it != row.end()) line[c] = cell_text(*it);
            widths[c] = std::max(widths[c], line[c].size());
        }
        cells.push_back(std::move(line));
    }
    for (std::size_t c = 0; c < doc.columns.size(); ++c)
        out << (c ? "  " : "") << doc.columns[c]
            << std::string(widths[c] - doc.columns[c].size(), ' ');
    out << '\n';
    for (const auto& line : cells) {
        for (std::size_t c = 0; c < doc.columns.size(); ++c)
            out << (c ? "  " : "") << line[c] << std::string(widths[c] - line[c].size(), ' ');
        out << '\n';
    }
    for (const auto& check : doc.checks) {
        out << (check.passed ? "[ok]   " : "[FAIL] ") << check.name;
        if (!check.detail.empty()) out << ": " << check.detail;
        out << '\n';
    }
    return out.str();
}

}  // namespace

std::string render(const OutputDoc& doc, OutputFormat format) {
    switch (format) {
        case OutputFormat::csv: return render_csv(doc);
        case OutputFormat::json: return render_json(doc);
        case OutputFormat::text: break;
    }
    return render_text(doc);
}

bool all_checks_pass(const OutputDoc& doc) {
    return std::all_of(doc.checks.begin(), doc.checks.end(),
                       [](const Check& c) { return c.passed; });
}

}  // namespace radial::cli
