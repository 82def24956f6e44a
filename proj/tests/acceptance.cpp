// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. The same checks back the CLI's `check-all` subcommand.

#include <zetatau/selftest.hpp>

#include <iostream>

int main() {
    const int failures = zetatau::selftest::run_and_report(std::cout);
    if (failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << failures << " acceptance criteria failed\n";
    return 1;
}
