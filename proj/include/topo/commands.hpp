#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace topo {

// Process exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;          // usage, data or numerical failure
inline constexpr int kExitNotConverged = 2;   // optimizer hit the iteration cap

struct SolveCmd {
    std::filesystem::path config;              // required key=value file
    std::filesystem::path out;
    std::map<std::string, std::string> overrides;  // --set key=value
};

struct GenerateCmd {
    std::optional<std::filesystem::path> config;
    std::filesystem::path out;
    std::optional<int> count;
    std::optional<std::string> res;            // "NELXxNELY"
    std::optional<std::string> templates;      // comma list
    std::optional<std::uint64_t> seed;
    std::optional<int> forces;
    bool augment = false;
    std::optional<int> jobs;
    std::map<std::string, std::string> overrides;
};

struct EvaluateCmd {
    std::filesystem::path data;
    std::filesystem::path pred;
    std::filesystem::path out;
    std::optional<double> lambda;
    bool round_densities = false;
    std::optional<int> jobs;
};

struct PersistenceCmd {
    std::filesystem::path field;
    std::filesystem::path out;
    int channel = 0;
};

// Each command resolves its configuration (file, then flag overrides),
// validates it, runs, writes its outputs plus a run.json echoing the fully
// resolved configuration, and reports errors on `err` with the appropriate
// exit code. Progress goes to `err`, never into the output files.
int cmdSolve(const SolveCmd& cmd, std::ostream& err);
int cmdGenerate(const GenerateCmd& cmd, std::ostream& err);
int cmdEvaluate(const EvaluateCmd& cmd, std::ostream& err);
int cmdPersistence(const PersistenceCmd& cmd, std::ostream& err);

} // namespace topo
