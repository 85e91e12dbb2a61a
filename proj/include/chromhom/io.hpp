#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "chromhom/graph.hpp"
#include "chromhom/homology.hpp"

namespace chromhom {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// `vertices N` followed by one `u w` line per edge. Blank lines and `#`
/// comments are ignored.
Graph parse_graph_text(const std::string& text);
/// {"vertices": N, "edges": [[u, w], ...]}
Graph parse_graph_json(const std::string& text);
/// Reads a graph file, choosing the format from the first non-blank character.
Graph load_graph_file(const std::string& path);
std::string graph_to_text(const Graph& g);
nlohmann::json graph_to_json(const Graph& g);

/// Generator specs: `path:n`, `cycle:n`, `complete:n`, `empty:n`,
/// `vgon:v:a-b,c-d`, `wedge:cycle:3:cycle:3`.
Graph parse_graph_generator(const std::string& spec);

nlohmann::json homology_to_json(const BigradedHomology& h);
BigradedHomology homology_from_json(const nlohmann::json& j);

}  // namespace chromhom
