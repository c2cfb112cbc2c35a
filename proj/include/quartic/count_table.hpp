#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace quartic {

// A named table of exact integers, kept as decimal strings.
struct count_table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    std::string to_csv() const
    {
        std::ostringstream os;
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i)
                os << (i ? "," : "") << cells[i];
            os << '\n';
        };
        line(columns);
        for (const auto& r : rows)
            line(r);
        return os.str();
    }

    std::string to_json() const
    {
        nlohmann::ordered_json j;
        j["name"] = name;
        j["columns"] = columns;
        j["rows"] = rows;
        return j.dump(2) + "\n";
    }

    static count_table from_json(const std::string& text)
    {
        const auto j = nlohmann::json::parse(text);
        return {j.at("name").get<std::string>(), j.at("columns").get<std::vector<std::string>>(),
                j.at("rows").get<std::vector<std::vector<std::string>>>()};
    }

    static count_table from_csv(const std::string& name, const std::string& text)
    {
        count_table t{name, {}, {}};
        std::istringstream is(text);
        std::string line;
        bool header = true;
        while (std::getline(is, line)) {
            std::vector<std::string> cells;
            std::istringstream ls(line);
            std::string cell;
            while (std::getline(ls, cell, ','))
                cells.push_back(cell);
            if (header)
                t.columns = std::move(cells);
            else
                t.rows.push_back(std::move(cells));
            header = false;
        }
        return t;
    }

    friend bool operator==(const count_table&, const count_table&) = default;
};

} // namespace quartic
