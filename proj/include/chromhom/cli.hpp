#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chromhom/homology.hpp"

namespace chromhom {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kResourceCap = 3 };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;  // compute | chromatic | verify | bases
    std::string graph;    // gen:<spec> or file:<path>
    std::string algebra = "trunc:2";
    std::optional<std::pair<int, int>> j_range;
    std::string format = "table";  // table | json | triplets
    int threads = 1;
    std::uint64_t memory_cap = std::uint64_t{4} << 30;
    bool primary = false;
    // verify
    std::string suite;
    std::string check;
    std::optional<std::size_t> edge;
    // bases
    int height = 0;
    int degree = 0;
    /// Set when --help was requested; holds the help text.
    std::optional<std::string> help;
};

/// argv without the program name. Throws UsageError.
RunConfig parse_args(const std::vector<std::string>& args);

/// Columns are heights i, rows degrees j (highest first). Free ranks print as
/// plain numbers, k copies of Z_l as [k_l].
std::string render_table(const BigradedHomology& h, bool primary = false);
std::string render_json(const BigradedHomology& h);

/// Runs one configured command and returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chromhom
