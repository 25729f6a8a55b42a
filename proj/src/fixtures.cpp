#include "qmod/fixtures.hpp"

#include "qmod/serialization.hpp"

#include <cstdlib>
#include <filesystem>

#ifndef QMOD_SOURCE_DATA_DIR
#define QMOD_SOURCE_DATA_DIR "data"
#endif

namespace qmod {

namespace fs = std::filesystem;

std::string resolve_data_dir(const std::string& override_dir) {
    if (!override_dir.empty())
        return override_dir;
    if (const char* env = std::getenv("QMOD_DATA_DIR"); env && *env)
        return env;
    if (fs::exists("data") && fs::is_directory("data"))
        return "data";
    return QMOD_SOURCE_DATA_DIR;
}

namespace {

std::optional<fs::path> locate(const std::string& name_or_path, const std::string& data_dir) {
    fs::path direct(name_or_path);
    if (direct.extension() == ".json" && fs::exists(direct))
        return direct;
    fs::path named = fs::path(data_dir) / (name_or_path + ".json");
    if (fs::exists(named))
        return named;
    return std::nullopt;
}

} // namespace

LieAlgebra load_lie_algebra(const std::string& name_or_path, const std::string& data_dir) {
    if (auto p = locate(name_or_path, data_dir))
        return lie_algebra_from_json(read_json_file(p->string()));
    if (name_or_path.rfind("abelian-", 0) == 0) {
        int n = std::atoi(name_or_path.c_str() + 8);
        if (n > 0)
            return make_abelian(n);
    }
    throw FixtureError("unknown Lie algebra fixture '" + name_or_path + "' (data dir: " +
                       data_dir + ")");
}

CounterexampleData load_counterexample(const std::string& name_or_path,
                                       const std::string& data_dir) {
    if (auto p = locate(name_or_path, data_dir)) {
        Json j = read_json_file(p->string());
        return counterexample_from_json(j, p->parent_path().string());
    }
    throw FixtureError("unknown counterexample fixture '" + name_or_path + "' (data dir: " +
                       data_dir + ")");
}

std::optional<ExpectedVerdict> expected_verdict(const std::string& fixture) {
    if (fixture == "so3-r2" || fixture == "so3-kk")
        return ExpectedVerdict::Infeasible;
    return std::nullopt;
}

std::vector<std::string> known_counterexample_fixtures() { return {"so3-r2", "so3-kk"}; }

std::vector<std::string> known_lie_fixtures() { return {"so3", "k", "k-plus-k", "abelian-2"}; }

} // namespace qmod
