#include "saxllab/report.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace saxllab {

Format parse_format(std::string_view name)
{
    if (name == "tsv")
        return Format::tsv;
    if (name == "json")
        return Format::json;
    if (name == "markdown")
        return Format::markdown;
    throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected tsv, json, markdown)");
}

void Report::add_row(std::vector<std::string> row)
{
    if (!columns.empty() && row.size() != columns.size())
        throw std::logic_error("report row has " + std::to_string(row.size()) + " cells, expected "
                               + std::to_string(columns.size()));
    rows.push_back(std::move(row));
}

namespace {

std::string join(const std::vector<std::string>& cells, std::string_view sep)
{
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i)
            out += sep;
        out += cells[i];
    }
    return out;
}

std::string markdown_cell(const std::string& cell)
{
    std::string out;
    for (char c : cell) {
        if (c == '|')
            out += '\\';
        out += c;
    }
    return out;
}

} // namespace

std::string render(const Report& report, Format format)
{
    std::ostringstream out;
    switch (format) {
    case Format::tsv:
        if (!report.columns.empty())
            out << join(report.columns, "\t") << '\n';
        for (const auto& row : report.rows)
            out << join(row, "\t") << '\n';
        for (const auto& note : report.notes)
            out << "# " << note << '\n';
        break;
    case Format::json: {
        nlohmann::ordered_json j;
        j["columns"] = report.columns;
        j["rows"] = report.rows;
        j["notes"] = report.notes;
        out << j.dump(2) << '\n';
        break;
    }
    case Format::markdown: {
        auto line = [&out](const std::vector<std::string>& cells) {
            out << '|';
            for (const auto& c : cells)
                out << ' ' << markdown_cell(c) << " |";
            out << '\n';
        };
        if (!report.columns.empty()) {
            line(report.columns);
            out << '|';
            for (std::size_t i = 0; i < report.columns.size(); ++i)
                out << "---|";
            out << '\n';
        }
        for (const auto& row : report.rows)
            line(row);
        if (!report.notes.empty()) {
            out << '\n';
            for (const auto& note : report.notes)
                out << "- " << note << '\n';
        }
        break;
    }
    }
    return out.str();
}

Report report_from_json(std::string_view text)
{
    nlohmann::json j = nlohmann::json::parse(text);
    Report report;
    report.columns = j.at("columns").get<std::vector<std::string>>();
    report.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
    report.notes = j.at("notes").get<std::vector<std::string>>();
    return report;
}

} // namespace saxllab
