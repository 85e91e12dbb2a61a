#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

#include "chromhom/io.hpp"

using namespace chromhom;

namespace {

int parse_error_line(const std::string& text) {
    try {
        parse_graph_text(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST_CASE("text format") {
    const auto g = parse_graph_text("# triangle\nvertices 3\n0 1\n\n1 2  # second\n2 0\n");
    CHECK(g == gen::cycle(3));
    CHECK(parse_graph_text(graph_to_text(gen::complete(4))) == gen::complete(4));
    CHECK(parse_graph_text("vertices 1\n0 0\n").has_loop());
}

TEST_CASE("text format errors carry line numbers") {
    CHECK(parse_error_line("vertices 3\n0 1\n1 x\n") == 3);
    CHECK(parse_error_line("vertices 2\n0 5\n") == 2);
    CHECK(parse_error_line("0 1\n") == 1);
    CHECK(parse_error_line("vertices 2\n0 1 1\n") == 2);
    CHECK(parse_error_line("vertices -1\n") == 1);
    CHECK(parse_error_line("# nothing\n") == 0);
    std::string many = "vertices 2\n";
    for (int k = 0; k < 64; ++k) many += "0 1\n";
    CHECK(parse_error_line(many) == 65);
    try {
        parse_graph_text("vertices 2\n0 9\n");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).rfind("line 2: ", 0) == 0);
    }
}

TEST_CASE("JSON format") {
    const auto g = parse_graph_json(R"({"vertices": 3, "edges": [[0, 1], [1, 2], [2, 0]]})");
    CHECK(g == gen::cycle(3));
    CHECK(parse_graph_json(graph_to_json(gen::complete(4)).dump()) == gen::complete(4));
    CHECK_THROWS_AS(parse_graph_json("{"), ParseError);
    CHECK_THROWS_AS(parse_graph_json(R"({"vertices": 2})"), ParseError);
    CHECK_THROWS_AS(parse_graph_json(R"({"vertices": 2, "edges": [[0, 1, 1]]})"), ParseError);
    CHECK_THROWS_AS(parse_graph_json(R"({"vertices": 2, "edges": [[0, 3]]})"), ParseError);
}

TEST_CASE("graph files") {
    const std::string text_path = "chromhom_io_test.txt", json_path = "chromhom_io_test.json";
    std::ofstream(text_path) << "vertices 2\n0 1\n";
    std::ofstream(json_path) << "  {\"vertices\": 2, \"edges\": [[0, 1]]}";
    CHECK(load_graph_file(text_path) == gen::path(2));
    CHECK(load_graph_file(json_path) == gen::path(2));
    std::remove(text_path.c_str());
    std::remove(json_path.c_str());
    CHECK_THROWS_AS(load_graph_file("/nonexistent/graph.txt"), ParseError);
}

TEST_CASE("generator specs") {
    CHECK(parse_graph_generator("cycle:5") == gen::cycle(5));
    CHECK(parse_graph_generator("path:4") == gen::path(4));
    CHECK(parse_graph_generator("complete:4") == gen::complete(4));
    CHECK(parse_graph_generator("empty:2") == gen::empty(2));
    CHECK(parse_graph_generator("vgon:5:0-2,0-3") == gen::polygon_with_diagonals(5, {{0, 2}, {0, 3}}));
    CHECK(parse_graph_generator("wedge:cycle:3:cycle:3") == gen::wedge(gen::cycle(3), gen::cycle(3)));
    CHECK_THROWS_AS(parse_graph_generator("star:4"), ParseError);
    CHECK_THROWS_AS(parse_graph_generator("cycle"), ParseError);
    CHECK_THROWS_AS(parse_graph_generator("cycle:x"), ParseError);
    CHECK_THROWS_AS(parse_graph_generator("vgon:5:0+2"), ParseError);
}
