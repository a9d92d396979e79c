#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace saxllab {

enum class Format { tsv, json, markdown };

/// "tsv", "json", "markdown"; throws std::invalid_argument otherwise.
Format parse_format(std::string_view name);

/// A table of strings plus free-form notes; every CLI command produces one.
struct Report {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> notes;

    void add_row(std::vector<std::string> row);
};

/// TSV: header line, one line per row, then "# note" lines.
/// JSON: {"columns": [...], "rows": [[...]], "notes": [...]}.
/// Markdown: a pipe table followed by the notes as a bullet list.
std::string render(const Report& report, Format format);

/// Inverse of render(report, Format::json).
Report report_from_json(std::string_view text);

} // namespace saxllab
