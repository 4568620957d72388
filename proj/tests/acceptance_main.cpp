// Acceptance suite: runs every criterion end to end and prints one line per
// criterion. Exits nonzero if any fails.

#include <cstdio>

#include "phycache/validation.hpp"

int main() {
    phycache::ValidationOptions opt;
    const auto results = phycache::run_all_checks(opt);
    phycache::print_results(results);
    int failures = 0;
    for (const auto& r : results)
        if (!r.pass) ++failures;
    if (failures > 0) std::printf("%d criteria FAILED\n", failures);
    else std::printf("all %zu criteria passed\n", results.size());
    return failures == 0 ? 0 : 1;
}
