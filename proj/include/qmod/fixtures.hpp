#pragma once

#include "qmod/counterexample.hpp"
#include "qmod/lie.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qmod {

// Locates the data directory: explicit override, then $QMOD_DATA_DIR, then
// ./data, then the source-tree default baked in at configure time.
std::string resolve_data_dir(const std::string& override_dir = "");

struct FixtureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Named Lie algebra fixtures are files in the data directory (so3, k,
// k-plus-k, abelian-2, ...); "abelian-N" is synthesized for any N when no
// file is present, and a path to a .json file is accepted directly.
LieAlgebra load_lie_algebra(const std::string& name_or_path, const std::string& data_dir);

// Counterexample fixtures: so3-r2, so3-kk, or a path to a fixture file.
CounterexampleData load_counterexample(const std::string& name_or_path,
                                       const std::string& data_dir);

enum class ExpectedVerdict { Infeasible, Feasible };

// Expected obstruction verdicts for the shipped fixtures; user files carry
// no expectation (certificate verification is then the pass criterion).
std::optional<ExpectedVerdict> expected_verdict(const std::string& fixture);

std::vector<std::string> known_counterexample_fixtures();
std::vector<std::string> known_lie_fixtures();

} // namespace qmod
