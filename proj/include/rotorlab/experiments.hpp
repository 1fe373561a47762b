#pragma once

#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "rotorlab/walk.hpp"

namespace rotorlab {

// --- 6n+1 sweep ------------------------------------------------------------

struct ConjectureRow {
    Coord n = 0;
    std::uint64_t origin_visits = 0;
    std::uint64_t expected = 0;  // 6n+1
    bool match = false;
    std::uint64_t first_exit_step = 0;
    double elapsed_s = 0.0;
};

inline std::uint64_t conjecture_expected(Coord n) {
    return 6 * static_cast<std::uint64_t>(n) + 1;
}

struct SweepOptions {
    std::uint64_t cap = 0;
    // 0 = run to completion; otherwise stop after this many further steps
    // (checkpoint saved if a path is set) so the sweep can be resumed.
    std::uint64_t step_limit = 0;
    std::uint64_t checkpoint_every = 0;
    std::filesystem::path checkpoint_path;
    std::uint64_t progress_every = 0;
    std::function<void(const WalkState&)> on_progress;
    std::function<void(const ConjectureRow&)> on_row;
    // Wall-clock seconds in the elapsed_s column; off by default because it
    // breaks byte-reproducibility of the output files.
    bool timings = false;
    // Dense-backing radius: -1 picks one from n_max, 0 disables.
    Coord dense_radius = -1;
};

struct SweepResult {
    std::vector<ConjectureRow> rows;
    RunOutcome outcome;
    WalkState state;
    RotorOrder order;
};

SweepResult conjecture_sweep(Coord n_max, const ConfigRule& rule, const RotorOrder& order,
                             const SweepOptions& opts = {});
// Continues a sweep from a checkpoint written by a previous call.
SweepResult conjecture_sweep_resume(Coord n_max, const std::filesystem::path& checkpoint_path,
                                    const SweepOptions& opts = {});
// Continues from an already-built state (what the two wrappers above share).
SweepResult conjecture_sweep_from(WalkState state, Coord n_max, const RotorOrder& order,
                                  const SweepOptions& opts = {});

// Dense-backing policy shared by the harness entry points: requested -1
// derives a box from n_max, 0 disables, explicit radii are honored while
// they fit the memory budget.
void apply_dense_policy(WalkState& state, Coord n_max, Coord requested);

std::string conjecture_csv(std::span<const ConjectureRow> rows, const std::string& rule_name,
                           const std::string& order_name, const std::string& config_echo);

// --- snapshot stabilization --------------------------------------------------

struct StabilizationRow {
    Point site;
    std::vector<Label> labels_at_exits;  // index m = first exit of B[0,m]
    Coord stabilized_at = 0;             // smallest m0 with constant labels for m >= m0
    bool stable = true;  // false: the label changed at the last observed exit
};

struct StabilizationResult {
    Coord n_max = 0;
    Coord inner_radius = 0;
    std::vector<StabilizationRow> rows;  // dense-index order over B[0,inner_radius]
};

StabilizationResult stabilization_study(Coord n_max, Coord inner_radius, const ConfigRule& rule,
                                        const RotorOrder& order, std::uint64_t cap = 0);

std::string stabilization_csv(const StabilizationResult& result, const std::string& rule_name,
                              const std::string& order_name, const std::string& config_echo);

// --- direction balance -------------------------------------------------------

struct BalanceRow {
    Point site;
    std::uint64_t departures = 0;
    std::vector<std::uint64_t> by_direction;  // one count per label
    Label initial_label = 0;
    Label current_label = 0;
    bool violation = false;  // spread > 1 or counts off the successor cycle
};

// Requires instrumentation on the state; rows in lexicographic site order.
std::vector<BalanceRow> balance_report(const WalkState& state, const RotorOrder& order);

std::string balance_csv(std::span<const BalanceRow> rows, int d, const std::string& rule_name,
                        const std::string& order_name, const std::string& config_echo);

// --- seeded simple-random-walk baseline ---------------------------------------

struct SrwSummary {
    Coord n = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t total_visits = 0;  // integer, so the mean is exact
    std::uint64_t min_visits = 0;
    std::uint64_t max_visits = 0;
    double mean_origin_visits = 0.0;
};

SrwSummary srw_comparison(int d, Coord n, int trials, std::uint64_t seed);

std::string srw_csv(const SrwSummary& summary, int d, const std::string& config_echo);

}  // namespace rotorlab
