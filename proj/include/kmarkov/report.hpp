#pragma once

#include <string>
#include <utility>
#include <vector>

namespace kmarkov {

enum class OutputFormat : unsigned char { Plain, Csv, Json };

// One command's output: scalar meta entries plus an optional table. All
// values are decimal strings so arbitrarily large integers survive every
// format unchanged.
struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add(const std::string& key, const std::string& value) { meta.emplace_back(key, value); }
    bool operator==(const Report& o) const {
        return command == o.command && meta == o.meta && columns == o.columns && rows == o.rows;
    }
};

std::string render(const Report& r, OutputFormat f);
std::string to_json(const Report& r);
Report from_json(const std::string& text);

}  // namespace kmarkov
