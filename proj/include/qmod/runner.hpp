#pragma once

#include "qmod/serialization.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qmod {

// Batch pipeline configuration. Same config + seed => byte-identical
// structured report, modulo the timing field.
struct RunConfig {
    std::string command;              // check-poisson | cohomology | star-verify |
                                      // obstruction | report-all
    std::string fixture;              // name or file path
    std::string module = "trivial";   // cohomology: trivial | adjoint | coadjoint | <file>
    std::string pi1 = "zero";         // obstruction: zero | all-admissible | <file>
    int order = 3;                    // eps truncation
    std::uint64_t seed = 1;           // randomized probes
    int trials = 100;                 // probes per randomized check
    int wheel_sign = +1;              // '+' or '-'
    std::string output = "text";      // text | structured
    std::string data_dir;             // override for the fixture directory
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    Json extra; // optional structured payload (certificates, dims, ...)
};

struct Report {
    RunConfig config;
    std::vector<CheckResult> checks;
    double timing_ms = 0.0;

    bool pass() const;
    Json to_json() const;
    std::string to_text() const;
};

// Executes the configured pipeline. Usage errors (unknown fixture/command)
// throw FixtureError or std::invalid_argument; check failures are reported
// in the returned Report.
Report run(const RunConfig& cfg);

} // namespace qmod
