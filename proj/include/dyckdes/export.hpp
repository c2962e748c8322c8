#pragma once

// CSV and JSON serialization of the Eulerian rows and tri-statistic
// tables. Output is byte-deterministic: sorted keys, counts in base 10
// as strings in JSON (consumers need not parse big integers).

#include <string>
#include <vector>

#include <json.hpp>

#include "dyckdes/tables.hpp"

namespace dyckdes {

inline std::string eulerian_csv(const std::vector<EulerianRow>& rows) {
    std::string out = "n,k,count\n";
    for (const auto& row : rows)
        for (std::size_t k = 0; k < row.counts.size(); ++k)
            out += std::to_string(row.n) + "," + std::to_string(k) + "," +
                   row.counts[k].str() + "\n";
    return out;
}

inline std::string eulerian_json(const std::vector<EulerianRow>& rows, int max_n) {
    nlohmann::ordered_json j;
    j["kind"] = "eulerian";
    j["max_n"] = max_n;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : rows)
        for (std::size_t k = 0; k < row.counts.size(); ++k)
            j["rows"].push_back({{"n", row.n},
                                 {"k", static_cast<int>(k)},
                                 {"count", row.counts[k].str()}});
    return j.dump(2) + "\n";
}

inline std::string tristat_csv(const std::vector<TriStatTable>& tabs) {
    std::string out = "n,p,q,count\n";
    for (const auto& tab : tabs)
        for (const auto& [key, c] : tab.counts)
            out += std::to_string(tab.n) + "," + std::to_string(key.first) + "," +
                   std::to_string(key.second) + "," + c.str() + "\n";
    return out;
}

inline std::string tristat_json(const std::vector<TriStatTable>& tabs, int max_n,
                                TableKind kind) {
    nlohmann::ordered_json j;
    j["kind"] = (kind == TableKind::irreducible) ? "tristat_irreducible" : "tristat";
    j["max_n"] = max_n;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& tab : tabs)
        for (const auto& [key, c] : tab.counts)
            j["rows"].push_back({{"n", tab.n},
                                 {"p", key.first},
                                 {"q", key.second},
                                 {"count", c.str()}});
    return j.dump(2) + "\n";
}

}  // namespace dyckdes
