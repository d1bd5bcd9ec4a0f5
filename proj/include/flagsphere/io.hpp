#pragma once

#include <istream>
#include <iterator>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "flagsphere/complex.hpp"

namespace flagsphere {

using json = nlohmann::ordered_json;

// {"vertices": ["x1", ...], "facets": [["x1","x2","y3"], ...]}
// Facet order is preserved: it may encode a shelling order.
inline json to_json(const SimplicialComplex& c) {
    json j;
    j["vertices"] = c.universe.labels;
    json facets = json::array();
    for (const Face& f : c.facets) facets.push_back(c.universe.labels_of(f));
    j["facets"] = std::move(facets);
    return j;
}

inline SimplicialComplex complex_from_json(const json& j) {
    if (!j.contains("vertices") || !j.contains("facets"))
        throw std::invalid_argument("complex JSON needs \"vertices\" and \"facets\"");
    std::vector<std::string> labels = j["vertices"].get<std::vector<std::string>>();
    std::vector<std::vector<std::string>> facets =
        j["facets"].get<std::vector<std::vector<std::string>>>();
    return from_facets(labels, facets);
}

inline void write_complex(std::ostream& os, const SimplicialComplex& c) {
    os << to_json(c).dump(2) << '\n';
}

// Plain text: one facet per line, labels whitespace-separated, '#' comments.
inline SimplicialComplex complex_from_text(std::istream& is) {
    std::vector<std::vector<std::string>> facets;
    std::vector<std::string> labels;
    std::set<std::string> seen;
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> facet;
        std::string tok;
        while (ls >> tok) {
            facet.push_back(tok);
            if (seen.insert(tok).second) labels.push_back(tok);
        }
        if (!facet.empty()) facets.push_back(std::move(facet));
    }
    return from_facets(labels, facets);
}

// Sniff the format: JSON starts with '{', anything else is plain text.
inline SimplicialComplex read_complex(std::istream& is) {
    std::string all(std::istreambuf_iterator<char>(is), {});
    std::size_t i = all.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && all[i] == '{')
        return complex_from_json(json::parse(all));
    std::istringstream ss(all);
    return complex_from_text(ss);
}

}  // namespace flagsphere
