#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "relcharge/config.hpp"
#include "relcharge/invariants.hpp"

namespace relcharge {

// Exit codes shared by the CLI:
//   0 success, 1 comparison failed, 2 config error, 3 domain/integration
//   error, 4 unsupported operation.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitUnsupported = 4;

struct CommandOptions {
    std::filesystem::path out_dir{"."};
    std::optional<std::size_t> workers;
    std::optional<std::uint64_t> seed;
    bool quiet{false};
};

int cmd_simulate(RunConfig cfg, const CommandOptions& opts = {});
int cmd_scan(RunConfig cfg, const CommandOptions& opts = {});
int cmd_compare(RunConfig cfg, const CommandOptions& opts = {});
int cmd_sweep(RunConfig cfg, const CommandOptions& opts = {});

// Sweep engine behind cmd_sweep, reusable in-process.
struct SweepRecord {
    std::size_t index{0};
    double amplitude{0};
    std::string status;  // "completed" or an error description
    std::vector<DriftSummary> drift;
};

struct SweepResult {
    std::vector<SweepRecord> records;
    std::size_t workers{1};
    double wall_time_s{0};
};

SweepResult run_sweep(const RunConfig& cfg, std::size_t workers);

}  // namespace relcharge
