#include "kmarkov/report.hpp"

#include <sstream>

#include <json.hpp>

namespace kmarkov {

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string render_plain(const Report& r) {
    std::ostringstream os;
    for (const auto& [key, value] : r.meta) os << key << ": " << value << "\n";
    if (!r.columns.empty()) {
        std::vector<std::size_t> width(r.columns.size());
        for (std::size_t i = 0; i < r.columns.size(); ++i) width[i] = r.columns[i].size();
        for (const auto& row : r.rows)
            for (std::size_t i = 0; i < row.size() && i < width.size(); ++i)
                width[i] = std::max(width[i], row[i].size());
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i) os << "  ";
                os << cells[i];
                if (i + 1 < cells.size())
                    os << std::string(width[i] - std::min(width[i], cells[i].size()), ' ');
            }
            os << "\n";
        };
        line(r.columns);
        for (const auto& row : r.rows) line(row);
    }
    return os.str();
}

std::string render_csv(const Report& r) {
    std::ostringstream os;
    std::vector<std::string> columns = r.columns;
    std::vector<std::vector<std::string>> rows = r.rows;
    if (columns.empty()) {
        // single-record command: one header row from the meta entries
        std::vector<std::string> row;
        for (const auto& [key, value] : r.meta) {
            columns.push_back(key);
            row.push_back(value);
        }
        rows.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) os << ',';
        os << csv_escape(columns[i]);
    }
    os << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            os << csv_escape(row[i]);
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace

std::string to_json(const Report& r) {
    nlohmann::ordered_json j;
    j["command"] = r.command;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto& [key, value] : r.meta) meta[key] = value;
    j["meta"] = meta;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : r.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size() && i < r.columns.size(); ++i) obj[r.columns[i]] = row[i];
        rows.push_back(obj);
    }
    j["columns"] = r.columns;
    j["rows"] = rows;
    return j.dump(2) + "\n";
}

Report from_json(const std::string& text) {
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
    Report r;
    r.command = j.at("command").get<std::string>();
    for (const auto& [key, value] : j.at("meta").items()) r.meta.emplace_back(key, value.get<std::string>());
    for (const auto& c : j.at("columns")) r.columns.push_back(c.get<std::string>());
    for (const auto& row : j.at("rows")) {
        std::vector<std::string> cells;
        for (const auto& col : r.columns) cells.push_back(row.at(col).get<std::string>());
        r.rows.push_back(std::move(cells));
    }
    return r;
}

std::string render(const Report& r, OutputFormat f) {
    switch (f) {
        case OutputFormat::Plain: return render_plain(r);
        case OutputFormat::Csv: return render_csv(r);
        case OutputFormat::Json: return to_json(r);
    }
    return {};
}

}  // namespace kmarkov
