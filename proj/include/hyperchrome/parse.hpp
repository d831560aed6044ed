#pragma once

// Reading hypergraphs from the line-oriented text format and its JSON
// equivalent. Listing order of edges is the default edge order.
//
// Text format:
//   # comment until end of line
//   vertices: 5            (count form; vertices are labeled "1".."5")
//   vertices: a b c        (label form)
//   1 3                    (one edge per line, whitespace-separated labels)

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hypergraph.hpp"

namespace hyperchrome {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::string> split_tokens(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

inline bool is_number(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

inline Hypergraph finish_parse(unsigned vertex_count,
                               std::vector<std::vector<VertexId>> edges,
                               std::vector<std::string> labels) {
    Hypergraph g(vertex_count, std::move(edges), std::move(labels));
    auto violations = validate(g);
    if (!violations.empty()) {
        std::string msg = "invalid hypergraph:";
        for (const auto& v : violations) msg += " " + v + ";";
        throw ParseError(msg);
    }
    return g;
}

}  // namespace detail

inline Hypergraph parse_hypergraph(std::string_view text) {
    std::vector<std::string> labels;
    std::map<std::string, VertexId> index;
    std::vector<std::vector<VertexId>> edges;
    bool header_seen = false;

    std::istringstream in{std::string(text)};
    std::string line;
    unsigned line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        auto tokens = detail::split_tokens(line);
        if (tokens.empty()) continue;

        if (!header_seen) {
            if (tokens[0] != "vertices:")
                throw ParseError("line " + std::to_string(line_no) +
                                 ": expected 'vertices:' header");
            tokens.erase(tokens.begin());
            if (tokens.empty())
                throw ParseError("line " + std::to_string(line_no) +
                                 ": 'vertices:' needs a count or labels");
            if (tokens.size() == 1 && detail::is_number(tokens[0])) {
                unsigned n = 0;
                try {
                    n = static_cast<unsigned>(std::stoul(tokens[0]));
                } catch (const std::exception&) {
                    throw ParseError("line " + std::to_string(line_no) +
                                     ": bad vertex count '" + tokens[0] + "'");
                }
                for (unsigned v = 0; v < n; ++v) labels.push_back(std::to_string(v + 1));
            } else {
                labels = tokens;
            }
            for (VertexId v = 0; v < labels.size(); ++v) {
                if (!index.emplace(labels[v], v).second)
                    throw ParseError("line " + std::to_string(line_no) +
                                     ": duplicate vertex label '" + labels[v] + "'");
            }
            header_seen = true;
            continue;
        }

        std::vector<VertexId> edge;
        for (const auto& tok : tokens) {
            auto it = index.find(tok);
            if (it == index.end())
                throw ParseError("line " + std::to_string(line_no) +
                                 ": unknown vertex label '" + tok + "'");
            edge.push_back(it->second);
        }
        edges.push_back(std::move(edge));
    }
    if (!header_seen) throw ParseError("missing 'vertices:' header");
    const unsigned vertex_count = static_cast<unsigned>(labels.size());
    return detail::finish_parse(vertex_count, std::move(edges), std::move(labels));
}

// {"vertices": ["1","2","3"] or 3, "edges": [["1","2"], ...]}
// Numeric entries are accepted and treated as their decimal spelling.
inline Hypergraph parse_hypergraph_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
        throw ParseError("JSON hypergraph needs 'vertices' and 'edges'");

    auto entry_label = [](const nlohmann::json& j) -> std::string {
        if (j.is_string()) return j.get<std::string>();
        if (j.is_number_integer()) return std::to_string(j.get<long long>());
        throw ParseError("vertex entries must be strings or integers");
    };

    std::vector<std::string> labels;
    const auto& jv = doc["vertices"];
    if (jv.is_number_unsigned() || jv.is_number_integer()) {
        auto n = jv.get<long long>();
        if (n < 0) throw ParseError("vertex count must be nonnegative");
        for (long long v = 0; v < n; ++v) labels.push_back(std::to_string(v + 1));
    } else if (jv.is_array()) {
        for (const auto& j : jv) labels.push_back(entry_label(j));
    } else {
        throw ParseError("'vertices' must be an array or a count");
    }

    std::map<std::string, VertexId> index;
    for (VertexId v = 0; v < labels.size(); ++v)
        if (!index.emplace(labels[v], v).second)
            throw ParseError("duplicate vertex label '" + labels[v] + "'");

    if (!doc["edges"].is_array()) throw ParseError("'edges' must be an array");
    std::vector<std::vector<VertexId>> edges;
    for (const auto& je : doc["edges"]) {
        if (!je.is_array()) throw ParseError("each edge must be an array");
        std::vector<VertexId> edge;
        for (const auto& j : je) {
            auto lab = entry_label(j);
            auto it = index.find(lab);
            if (it == index.end())
                throw ParseError("edge " + std::to_string(edges.size()) +
                                 ": unknown vertex label '" + lab + "'");
            edge.push_back(it->second);
        }
        edges.push_back(std::move(edge));
    }
    const unsigned vertex_count = static_cast<unsigned>(labels.size());
    return detail::finish_parse(vertex_count, std::move(edges), std::move(labels));
}

// Dispatches on the ".json" extension, otherwise reads the text format.
inline Hypergraph load_hypergraph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
    return json ? parse_hypergraph_json(buf.str()) : parse_hypergraph(buf.str());
}

// FNV-1a over a canonical rendering of the parsed hypergraph (structure and
// labels); stable across runs and platforms.
inline std::string content_digest(const Hypergraph& g) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::string_view s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
    };
    mix("v=" + std::to_string(g.vertex_count()));
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        mix("|");
        mix(g.vertex_label(v));
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        mix(";");
        for (VertexId v : g.edge(e)) mix(std::to_string(v) + ",");
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace hyperchrome
