#include "fcl/acceptance.hpp"

#include <iostream>

int main() {
    const auto report = fcl::run_acceptance("all");
    std::cout << fcl::format_report(report);
    return report.pass() ? 0 : 1;
}
