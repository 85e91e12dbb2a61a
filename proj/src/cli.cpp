#include "chromhom/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "chromhom/chromatic.hpp"
#include "chromhom/complex.hpp"
#include "chromhom/io.hpp"
#include "chromhom/theorems.hpp"

namespace chromhom {

namespace {

std::pair<int, int> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw UsageError("--j-range expects LO:HI, got '" + text + "'");
    try {
        std::size_t used = 0;
        const int lo = std::stoi(text.substr(0, colon), &used);
        if (used != colon) throw std::invalid_argument(text);
        const auto rest = text.substr(colon + 1);
        const int hi = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument(text);
        if (lo > hi) throw UsageError("--j-range lower bound exceeds upper bound");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw UsageError("--j-range expects LO:HI, got '" + text + "'");
    }
}

Graph load_graph(const std::string& source) {
    if (source.empty()) throw UsageError("--graph is required");
    if (source.rfind("gen:", 0) == 0) return parse_graph_generator(source.substr(4));
    if (source.rfind("file:", 0) == 0) return load_graph_file(source.substr(5));
    throw UsageError("--graph expects gen:<spec> or file:<path>, got '" + source + "'");
}

// "[k_l]" for k copies of Z_l.
std::string bracket(const Integer& order, int copies) {
    return "[" + std::to_string(copies) + "_" + order.get_str() + "]";
}

std::string render_cell(const AbelianGroup& g, bool primary) {
    std::vector<std::string> parts;
    if (g.free_rank) parts.push_back(std::to_string(g.free_rank));
    if (primary) {
        for (const auto& [q, count] : primary_decomposition(g)) parts.push_back(bracket(q, count));
    } else {
        for (std::size_t k = 0; k < g.torsion.size();) {
            std::size_t run = 1;
            while (k + run < g.torsion.size() && g.torsion[k + run] == g.torsion[k]) ++run;
            parts.push_back(bracket(g.torsion[k], static_cast<int>(run)));
            k += run;
        }
    }
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : " ") + p;
    return out;
}

int run_compute(const RunConfig& c, std::ostream& out) {
    const auto g = load_graph(c.graph);
    const auto a = parse_algebra_spec(c.algebra);
    ComputeOptions opts;
    opts.j_range = c.j_range;
    opts.threads = c.threads;
    opts.memory_cap_bytes = c.memory_cap;
    const auto h = compute_all(g, a, opts);
    if (c.format == "json")
        out << render_json(h) << "\n";
    else
        out << render_table(h, c.primary);
    const auto e = euler_check(g, a, h);
    if (!e.passed) throw std::logic_error("Euler characteristic mismatch: " + e.to_string());
    return kOk;
}

int run_chromatic(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const auto g = load_graph(c.graph);
    const auto p = chromatic_polynomial_dc(g);
    if (g.edge_count() <= 24 && !(p == chromatic_polynomial(g))) {
        err << "deletion-contraction and subset expansion disagree\n";
        return kCheckFailed;
    }
    const auto coeffs = p.dense();
    if (c.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& x : coeffs) {
            if (auto small = to_int64(x))
                arr.push_back(*small);
            else
                arr.push_back(x.get_str());
        }
        out << nlohmann::json{{"graph", g.fingerprint()}, {"coefficients", arr}}.dump() << "\n";
    } else {
        out << "coefficients:";
        for (const auto& x : coeffs) out << " " << x.get_str();
        out << "\nP(l) = " << p.to_string('l') << "\n";
    }
    return kOk;
}

int run_verify(const RunConfig& c, std::ostream& out) {
    std::vector<CheckReport> reports;
    if (!c.suite.empty()) {
        if (c.suite != "paper") throw UsageError("unknown suite '" + c.suite + "'");
        SuiteOptions opts;
        opts.threads = c.threads;
        reports = run_paper_suite(opts);
    } else {
        if (c.check.empty()) throw UsageError("verify needs --suite or --check");
        reports.push_back(run_named_check(c.check, load_graph(c.graph), parse_algebra_spec(c.algebra), c.edge));
    }
    int hard = 0, soft = 0;
    for (const auto& r : reports) {
        if (!r.passed) ++(r.soft ? soft : hard);
        if (c.format == "json")
            out << r.to_json().dump() << "\n";
        else
            out << r.to_string() << "\n";
    }
    if (c.format != "json")
        out << reports.size() << " checks, " << hard << " failed, " << soft << " soft disagreements\n";
    return hard ? kCheckFailed : kOk;
}

int run_bases(const RunConfig& c, std::ostream& out) {
    const auto g = load_graph(c.graph);
    const auto a = parse_algebra_spec(c.algebra);
    const auto src = enumerate_basis(g, a, c.height, c.degree);
    const auto tgt = c.height + 1 <= static_cast<int>(g.edge_count())
                         ? enumerate_basis(g, a, c.height + 1, c.degree)
                         : StateBasis(c.height + 1, c.degree);
    if (c.format == "triplets") {
        out << dump_triplets(differential(g, a, src, tgt));
        return kOk;
    }
    out << "C^{" << c.height << "," << c.degree << "}: " << src.size() << " states\n" << dump_basis(g, src);
    out << "C^{" << c.height + 1 << "," << c.degree << "}: " << tgt.size() << " states\n" << dump_basis(g, tgt);
    return kOk;
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
    RunConfig c;
    CLI::App app{"Chromatic graph cohomology over Z[x]/(p)", "chromhom"};
    app.require_subcommand(1);
    std::string j_range;
    std::string memory_cap;

    const std::string graph_help =
        "gen:<spec> (path:n, cycle:n, complete:n, empty:n, vgon:v:a-b,..., wedge:cycle:3:cycle:3) or file:<path>";
    auto common = [&](CLI::App* sub) {
        sub->add_option("--graph", c.graph, graph_help);
        sub->add_option("--algebra", c.algebra, "trunc:m, poly:c0,c1,...,1 or window:J")->capture_default_str();
        sub->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    };

    auto* compute = app.add_subcommand("compute", "compute H^{i,j}");
    common(compute);
    compute->add_option("--j-range", j_range, "LO:HI, inclusive");
    compute->add_option("--format", c.format)->check(CLI::IsMember({"table", "json"}))->capture_default_str();
    compute->add_option("--memory-cap", memory_cap, "estimated memory limit, e.g. 4GB");
    compute->add_flag("--primary", c.primary, "show torsion as prime powers");

    auto* chromatic = app.add_subcommand("chromatic", "chromatic polynomial, coefficients low to high");
    chromatic->add_option("--graph", c.graph, graph_help);
    chromatic->add_option("--format", c.format)->check(CLI::IsMember({"table", "json"}))->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run structural checks");
    common(verify);
    verify->add_option("--suite", c.suite, "named suite (paper)");
    verify->add_option("--check", c.check, "single check name");
    verify->add_option("--edge", c.edge, "edge index for pendant and exactness checks");
    verify->add_option("--format", c.format)->check(CLI::IsMember({"table", "json"}))->capture_default_str();

    auto* bases = app.add_subcommand("bases", "dump state bases and differential triplets");
    common(bases);
    bases->add_option("--i", c.height, "height")->required();
    bases->add_option("--j", c.degree, "degree")->required();
    bases->add_option("--format", c.format)->check(CLI::IsMember({"table", "triplets"}))->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        c.help = (app.get_subcommands().empty() ? &app : app.get_subcommands().front())->help();
        return c;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    c.command = app.get_subcommands().front()->get_name();
    if (!j_range.empty()) c.j_range = parse_range(j_range);
    if (!memory_cap.empty()) {
        std::string converted = memory_cap;
        CLI::AsSizeValue size(false);
        const std::string problem = size(converted);
        if (!problem.empty()) throw UsageError("--memory-cap: " + problem);
        try {
            c.memory_cap = std::stoull(converted);
        } catch (const std::logic_error&) {
            throw UsageError("--memory-cap: cannot read '" + memory_cap + "'");
        }
    }
    if (c.command != "verify" && c.graph.empty()) throw UsageError("--graph is required");
    if (c.command == "verify" && !c.suite.empty() && !c.check.empty())
        throw UsageError("--suite and --check are mutually exclusive");
    return c;
}

std::string render_table(const BigradedHomology& h, bool primary) {
    std::ostringstream out;
    out << "algebra " << h.algebra << "  graph " << h.graph;
    if (h.window) out << "  window j <= " << *h.window;
    out << "\n";
    if (h.groups.empty()) {
        out << "all groups trivial\n";
        return out.str();
    }
    int imax = 0, jlo = h.groups.begin()->first.second, jhi = jlo;
    for (const auto& [ij, g] : h.groups) {
        imax = std::max(imax, ij.first);
        jlo = std::min(jlo, ij.second);
        jhi = std::max(jhi, ij.second);
    }
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header = {"j\\i"};
    for (int i = 0; i <= imax; ++i) header.push_back(std::to_string(i));
    rows.push_back(header);
    for (int j = jhi; j >= jlo; --j) {
        std::vector<std::string> row = {std::to_string(j)};
        for (int i = 0; i <= imax; ++i) {
            const auto g = h.at(i, j);
            row.push_back(g.is_zero() ? "." : render_cell(g, primary));
        }
        rows.push_back(row);
    }
    std::vector<std::size_t> width(header.size(), 0);
    for (const auto& row : rows)
        for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
    for (const auto& row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k)
            out << (k ? "  " : "") << std::setw(static_cast<int>(width[k])) << row[k];
        out << "\n";
    }
    return out.str();
}

std::string render_json(const BigradedHomology& h) { return homology_to_json(h).dump(2); }

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
    if (c.help) {
        out << *c.help;
        return kOk;
    }
    try {
        if (c.command == "compute") return run_compute(c, out);
        if (c.command == "chromatic") return run_chromatic(c, out, err);
        if (c.command == "verify") return run_verify(c, out);
        if (c.command == "bases") return run_bases(c, out);
        throw UsageError("unknown command '" + c.command + "'");
    } catch (const ResourceLimitError& e) {
        err << "error: " << e.what() << "\n";
        return kResourceCap;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kCheckFailed;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    try {
        c = parse_args(args);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\nRun with --help for usage.\n";
        return kUsage;
    }
    return run(c, out, err);
}

}  // namespace chromhom
