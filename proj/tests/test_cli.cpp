#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "chromhom/cli.hpp"

using namespace chromhom;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_args(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("argument parsing") {
    const auto c = parse_args({"compute", "--graph", "gen:cycle:6", "--algebra", "trunc:3", "--j-range", "1:4",
                               "--threads", "2", "--format", "json"});
    CHECK(c.command == "compute");
    CHECK(c.graph == "gen:cycle:6");
    CHECK(c.algebra == "trunc:3");
    CHECK(c.j_range == std::make_pair(1, 4));
    CHECK(c.threads == 2);
    CHECK(c.format == "json");
    CHECK(parse_args({"compute", "--graph", "gen:cycle:3", "--memory-cap", "1MB"}).memory_cap > 0);
    CHECK_THROWS_AS(parse_args({"compute"}), UsageError);
    CHECK_THROWS_AS(parse_args({"frobnicate"}), UsageError);
    CHECK_THROWS_AS(parse_args({"compute", "--graph", "gen:cycle:3", "--j-range", "4"}), UsageError);
    CHECK(parse_args({"--help"}).help.has_value());
}

TEST_CASE("table rendering") {
    const auto p6 = compute_all(gen::cycle(6), make_truncated(2));
    const auto table = render_table(p6);
    CHECK(table.find("[1_2]") != std::string::npos);
    CHECK(table.find("j\\i") != std::string::npos);
    const auto loop = compute_all(gen::cycle(1), make_truncated(2));
    CHECK(render_table(loop).find("all groups trivial") != std::string::npos);
    const auto k4 = compute_all(gen::complete(4), make_truncated(3));
    CHECK(render_table(k4, true).find("[2_3]") != std::string::npos);
}

TEST_CASE("compute command") {
    const auto r = run_args({"compute", "--graph", "gen:cycle:3", "--algebra", "trunc:2"});
    CHECK(r.code == kOk);
    CHECK(r.out.find("[1_2]") != std::string::npos);
    const auto j = run_args({"compute", "--graph", "gen:cycle:3", "--format", "json"});
    CHECK(j.code == kOk);
    CHECK(j.out.find("\"groups\"") != std::string::npos);
}

TEST_CASE("chromatic command") {
    const auto r = run_args({"chromatic", "--graph", "gen:cycle:3"});
    CHECK(r.code == kOk);
    CHECK(r.out.find("coefficients") != std::string::npos);
}

TEST_CASE("verify command") {
    const auto r = run_args({"verify", "--graph", "gen:cycle:4", "--check", "vanishing"});
    CHECK(r.code == kOk);
    CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run_args({}).code == kUsage);
    CHECK(run_args({"compute", "--graph", "gen:star:3"}).code == kUsage);
    CHECK(run_args({"compute", "--graph", "gen:cycle:3", "--algebra", "poly:0,0,3"}).code == kUsage);
    CHECK(run_args({"compute", "--graph", "file:/nonexistent"}).code == kUsage);
    CHECK(run_args({"compute", "--graph", "gen:complete:6", "--algebra", "trunc:3", "--memory-cap", "1KB"}).code ==
          kResourceCap);
    const auto bad = run_args({"compute", "--graph", "gen:cycle:3", "--algebra", "window:2", "--j-range", "0:9"});
    CHECK(bad.code == kUsage);
    CHECK_FALSE(bad.err.empty());
}
