#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bf {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct AcceptanceOptions {
    std::vector<int> only; // empty: all ten
    std::uint64_t seed = 20240607;
};

// runs the end-to-end checks; never throws (an exception fails its criterion)
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {});
std::string format_line(const CriterionResult& r);

} // namespace bf
