// Certification suite: one line per criterion, nonzero exit on any failure.
#include <iostream>

#include "scatter/certify.hpp"

int main() {
    scatter::CertifyOptions opts;
    opts.verbose = true;
    auto results = scatter::run_all_checks(opts, std::cout);
    int failed = 0;
    for (const auto& r : results)
        if (!r.pass) ++failed;
    std::cout << "\n"
              << (results.size() - failed) << "/" << results.size()
              << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
