// Acceptance harness: one line per criterion, nonzero exit on any failure.

#include <iostream>

#include "zktheta/acceptance.hpp"

int main() {
    auto results = zktheta::run_acceptance(&std::cout);
    bool all = true;
    for (const auto& r : results) all = all && r.pass;
    std::cout << (all ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << " ("
              << results.size() << " run)\n";
    return all ? 0 : 1;
}
