#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qchroma/report.hpp"

namespace qchroma {

// Sweep limits for verification suites.  Negative fields mean "default".
// Placement suites sweep boards with 1 <= n <= m <= max_m (n further capped
// by max_n) and refuse m or n caps above 6 unless unsafe is set.  Coloring
// suites additionally cap m+n: 6 by default, max_m+max_n when either cap is
// given explicitly, refused above 8 unless unsafe is set.  colors fixes the
// variable count for coloring suites (default: m+n per board).
struct Bounds {
    int max_m = -1;
    int max_n = -1;
    int max_cells = -1;
    int colors = -1;
    bool unsafe = false;
    bool inject_failure = false;  // flip the first mahonian check, for plumbing tests
};

struct BoundsRefused : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnknownSuite : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Suite identifiers in canonical order.
std::vector<std::string> suite_ids();
bool suite_exists(const std::string& id);
// True for the suites that work with colorings (they obey the m+n cap);
// false for the suites that work with rook placements.
bool suite_is_coloring(const std::string& id);
// One-line description of what the suite checks.
std::string suite_summary(const std::string& id);

// Run one suite.  Tasks are created in a fixed order and their outcomes are
// merged in that order, so the report is byte-identical for any jobs value;
// only wall_ms (reported on stderr by the CLI, never serialized) varies.
SuiteReport run_suite(const std::string& id, const Bounds& bounds, int jobs);

}  // namespace qchroma
