#include "chromhom/io.hpp"

#include <fstream>
#include <sstream>

namespace chromhom {

namespace {

int parse_int(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::logic_error&) {
        throw ParseError("bad " + what + " '" + s + "'");
    }
    if (used != s.size()) throw ParseError("bad " + what + " '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

nlohmann::json integer_to_json(const Integer& v) {
    if (auto small = to_int64(v)) return *small;
    return v.get_str();
}

Integer integer_from_json(const nlohmann::json& j) {
    if (j.is_string()) return Integer(j.get<std::string>());
    return from_int64(j.get<std::int64_t>());
}

}  // namespace

Graph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int vertices = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a)) continue;
        if (vertices < 0) {
            if (a != "vertices" || !(fields >> b) || (fields >> extra))
                throw ParseError("expected 'vertices N'", line_no);
            try {
                vertices = parse_int(b, "vertex count");
            } catch (const ParseError& e) {
                throw ParseError(e.what(), line_no);
            }
            if (vertices < 0) throw ParseError("negative vertex count", line_no);
            continue;
        }
        if (!(fields >> b) || (fields >> extra)) throw ParseError("malformed edge line, expected 'u w'", line_no);
        Edge e;
        try {
            e = {parse_int(a, "vertex"), parse_int(b, "vertex")};
        } catch (const ParseError& err) {
            throw ParseError(err.what(), line_no);
        }
        if (e.u < 0 || e.w < 0 || e.u >= vertices || e.w >= vertices)
            throw ParseError("edge endpoint out of range", line_no);
        edges.push_back(e);
        if (edges.size() > kMaxEdges)
            throw ParseError("edge cap of " + std::to_string(kMaxEdges) + " exceeded", line_no);
    }
    if (vertices < 0) throw ParseError("missing 'vertices N' line");
    return Graph(vertices, std::move(edges));
}

Graph parse_graph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw ParseError("graph JSON needs 'vertices' and 'edges'");
    try {
        const int n = j.at("vertices").get<int>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair [u, w]");
            edges.push_back({e[0].get<int>(), e[1].get<int>()});
        }
        if (edges.size() > kMaxEdges) throw ParseError("edge cap of " + std::to_string(kMaxEdges) + " exceeded");
        return Graph(n, std::move(edges));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad graph JSON: ") + e.what());
    } catch (const std::out_of_range& e) {
        throw ParseError(e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_graph_json(text);
    return parse_graph_text(text);
}

std::string graph_to_text(const Graph& g) {
    std::ostringstream out;
    out << "vertices " << g.vertex_count() << "\n";
    for (const auto& e : g.edges()) out << e.u << " " << e.w << "\n";
    return out.str();
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.w});
    return {{"vertices", g.vertex_count()}, {"edges", edges}};
}

Graph parse_graph_generator(const std::string& spec) {
    const auto parts = split(spec, ':');
    if (parts.empty()) throw ParseError("empty graph generator");
    const auto& kind = parts[0];
    auto need = [&](std::size_t n) {
        if (parts.size() != n) throw ParseError("bad generator '" + spec + "'");
    };
    try {
        if (kind == "path") {
            need(2);
            return gen::path(parse_int(parts[1], "size"));
        }
        if (kind == "cycle") {
            need(2);
            return gen::cycle(parse_int(parts[1], "size"));
        }
        if (kind == "complete") {
            need(2);
            return gen::complete(parse_int(parts[1], "size"));
        }
        if (kind == "empty") {
            need(2);
            return gen::empty(parse_int(parts[1], "size"));
        }
        if (kind == "vgon") {
            if (parts.size() != 2 && parts.size() != 3) throw ParseError("bad generator '" + spec + "'");
            std::vector<std::pair<int, int>> diagonals;
            if (parts.size() == 3)
                for (const auto& d : split(parts[2], ',')) {
                    auto ends = split(d, '-');
                    if (ends.size() != 2) throw ParseError("bad diagonal '" + d + "'");
                    diagonals.emplace_back(parse_int(ends[0], "vertex"), parse_int(ends[1], "vertex"));
                }
            return gen::polygon_with_diagonals(parse_int(parts[1], "size"), diagonals);
        }
        if (kind == "wedge") {
            need(5);
            auto left = parse_graph_generator(parts[1] + ":" + parts[2]);
            auto right = parse_graph_generator(parts[3] + ":" + parts[4]);
            return gen::wedge(left, right);
        }
    } catch (const std::logic_error& e) {
        throw ParseError("bad generator '" + spec + "': " + e.what());
    }
    throw ParseError("unknown graph generator '" + kind + "'");
}

nlohmann::json homology_to_json(const BigradedHomology& h) {
    nlohmann::json groups = nlohmann::json::array();
    for (const auto& [ij, g] : h.groups) {
        nlohmann::json torsion = nlohmann::json::array();
        for (const auto& t : g.torsion) torsion.push_back(integer_to_json(t));
        groups.push_back({{"i", ij.first}, {"j", ij.second}, {"free", g.free_rank}, {"torsion", torsion}});
    }
    nlohmann::json out = {{"algebra", h.algebra},
                          {"graph", h.graph},
                          {"graded", h.graded},
                          {"j_min", h.j_min},
                          {"j_max", h.j_max},
                          {"groups", groups}};
    out["window"] = h.window ? nlohmann::json(*h.window) : nlohmann::json(nullptr);
    return out;
}

BigradedHomology homology_from_json(const nlohmann::json& j) {
    BigradedHomology h;
    try {
        h.algebra = j.at("algebra").get<std::string>();
        h.graph = j.at("graph").get<std::string>();
        h.graded = j.value("graded", true);
        h.j_min = j.value("j_min", 0);
        h.j_max = j.value("j_max", 0);
        if (j.contains("window") && !j["window"].is_null()) h.window = j["window"].get<int>();
        for (const auto& g : j.at("groups")) {
            std::vector<Integer> orders;
            for (const auto& t : g.at("torsion")) orders.push_back(integer_from_json(t));
            auto group = AbelianGroup::from_cyclic(g.at("free").get<std::uint64_t>(), std::move(orders));
            if (!group.is_zero()) h.groups[{g.at("i").get<int>(), g.at("j").get<int>()}] = std::move(group);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad homology JSON: ") + e.what());
    }
    return h;
}

}  // namespace chromhom
