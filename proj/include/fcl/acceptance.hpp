#ifndef FCL_ACCEPTANCE_HPP
#define FCL_ACCEPTANCE_HPP

#include "fcl/grid.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fcl {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct AcceptanceReport {
    std::string suite;
    std::vector<CriterionResult> results;

    bool pass() const;
};

struct AcceptanceOptions {
    Caps caps;
    std::uint64_t seed = 20240611;
    std::size_t symmetry_pairs = 1000;
    std::size_t min_geodesics = 100;
};

// Suites: table1, bounds, lists, torus-oracle, certificates, all.
// Throws ValidationError for an unknown suite.
AcceptanceReport run_acceptance(const std::string& suite, const AcceptanceOptions& options = {});

std::string format_report(const AcceptanceReport& report);

}  // namespace fcl

#endif  // FCL_ACCEPTANCE_HPP
