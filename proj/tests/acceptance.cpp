// Acceptance run: one pass/fail line per criterion, exit status 1 if any fails.
//
//   acceptance [path-to-transfinite-cli]

#include <iostream>

#include "transfinite/suites.hpp"

int main(int argc, char** argv) {
    namespace ts = transfinite::suites;
    ts::SuiteOptions opt;
    if (argc > 1) opt.cli_path = argv[1];
    const auto results = ts::run_all(opt);
    int failed = 0;
    for (const auto& r : results) {
        std::cout << ts::line(r) << std::endl;
        if (!r.passed()) ++failed;
    }
    std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
