#pragma once

// Poset file format (JSON):
//   { "elements": ["0", "a", ...], "covers": [["0", "a"], ...], "rank": {"0": 0, ...} }
// Bottom and top are inferred. Export is canonical: elements in index order,
// covers sorted by (lower, upper) index, rank keys sorted by name.

#include "chowlab/poset.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace chowlab {

inline RankedPoset poset_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw PosetError("poset file must be a JSON object");
    for (const char* key : {"elements", "covers", "rank"})
        if (!doc.contains(key)) throw PosetError(std::string("poset file is missing key '") + key + "'");

    std::vector<std::string> elements;
    for (const auto& e : doc.at("elements")) {
        if (!e.is_string()) throw PosetError("element ids must be strings");
        elements.push_back(e.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& c : doc.at("covers")) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
            throw PosetError("each cover must be a 2-array of element ids");
        covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
    std::map<std::string, std::int64_t> rank;
    for (const auto& [name, value] : doc.at("rank").items()) {
        if (!value.is_number_integer()) throw PosetError("rank of " + name + " is not an integer");
        rank[name] = value.get<std::int64_t>();
    }
    Poset p = Poset::build(std::move(elements), covers);
    WeakRank r = WeakRank::from_map(p, rank);
    require_valid_rank(p, r);
    return {std::move(p), std::move(r)};
}

inline RankedPoset parse_poset(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw PosetError(std::string("malformed poset file: ") + e.what());
    }
    return poset_from_json(doc);
}

inline RankedPoset load_poset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PosetError("cannot open poset file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_poset(buffer.str());
}

inline nlohmann::json poset_to_json(const Poset& p, const WeakRank& r) {
    nlohmann::json doc;
    doc["elements"] = p.names();
    auto covers = nlohmann::json::array();
    for (const auto& [lo, hi] : p.covers()) covers.push_back({p.name(lo), p.name(hi)});
    doc["covers"] = std::move(covers);
    auto rank = nlohmann::json::object();
    for (ElementId x = 0; x < p.size(); ++x) rank[p.name(x)] = r[x];
    doc["rank"] = std::move(rank);
    return doc;
}

inline std::string format_poset(const Poset& p, const WeakRank& r) {
    return poset_to_json(p, r).dump(2) + "\n";
}

namespace detail {
inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}
}  // namespace detail

/// Hasse diagram in DOT, drawn bottom to top, nodes labelled name:rank.
inline std::string format_dot(const Poset& p, const WeakRank& r) {
    std::string out = "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
    for (ElementId x = 0; x < p.size(); ++x)
        out += "  " + detail::dot_quote(p.name(x)) + " [label=" +
               detail::dot_quote(p.name(x) + ":" + std::to_string(r[x])) + "];\n";
    for (const auto& [lo, hi] : p.covers())
        out += "  " + detail::dot_quote(p.name(lo)) + " -> " + detail::dot_quote(p.name(hi)) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace chowlab
