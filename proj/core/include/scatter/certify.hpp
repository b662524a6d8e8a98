#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scatter {

// One acceptance criterion: every threshold is fixed here, in code.
struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // measured numbers, one line
};

struct CertifyOptions {
    std::string outdir;       // artifacts written here when non-empty
    bool verbose = false;     // stream per-check progress
    std::uint64_t seed = 0x5ca77e3u;
};

// Runs the full certification suite (15 criteria) at the pinned desk scale.
std::vector<CheckResult> run_all_checks(const CertifyOptions& opts, std::ostream& log);

// Formats "PASS|FAIL  <id> <name>: <detail>".
std::string format_check_line(const CheckResult& r);

}  // namespace scatter
