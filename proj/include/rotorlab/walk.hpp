#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "rotorlab/rotor_field.hpp"

namespace rotorlab {

// FNV-1a over the label byte array in dense-index order; fixed so digests
// are comparable across implementations.
std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes);

// Observation taken the instant the walk first leaves B[0,radius].
struct ExitRecord {
    Coord radius = 0;
    std::uint64_t first_exit_step = 0;
    std::uint64_t origin_visits = 0;
    std::uint64_t snapshot_digest = 0;
    double elapsed_s = 0.0;
};

struct SiteCounters {
    std::uint64_t departures = 0;
    std::array<std::uint64_t, 2 * kMaxDimension> by_direction{};
};

struct Instrumentation {
    std::unordered_map<Point, SiteCounters, PointHash> sites;
};

// Walker position plus the rotor field and step/visit counters. A state is
// mutated by at most one thread at a time; copies are independent.
struct WalkState {
    Point position;
    RotorField field;
    std::uint64_t step_count = 0;
    // Arrivals at the origin, counting the initial placement at t=0.
    std::uint64_t origin_visits = 0;
    Coord max_norm_seen = 0;
    // One record per box radius, appended in increasing radius order as the
    // walk first exits each box.
    std::vector<ExitRecord> exit_records;
    std::optional<Instrumentation> instrumentation;
    std::chrono::steady_clock::time_point started_at;

    WalkState(Point start, RotorField rotor_field, bool instrumented = false);
    int dim() const { return field.dim(); }
};

// One application of the step map: move along the current rotor, then
// advance that rotor to its successor.
void step(WalkState& state, const RotorOrder& order);

using PointSet = std::unordered_set<Point, PointHash>;

// Generous defensive bound: 2d * |region|^2 * (diameter+1).
std::uint64_t default_region_cap(const PointSet& region);

// Steps until the position leaves `region`; returns steps taken.
// cap = 0 means unlimited.
std::uint64_t run_until_exit(WalkState& state, const PointSet& region, const RotorOrder& order,
                             std::uint64_t cap);

struct RunHooks {
    std::uint64_t progress_every = 0;
    std::function<void(const WalkState&)> on_progress;
    std::uint64_t checkpoint_every = 0;
    std::function<void(WalkState&)> on_checkpoint;
    std::function<void(const ExitRecord&, const WalkState&)> on_exit_event;
};

enum class RunOutcome { TargetReached, StepLimitReached };

// Steps until the position norm first exceeds n (equivalently, until the
// first-exit record for radius n exists). step_limit = 0 means unlimited;
// a nonzero limit makes the run stop early with StepLimitReached so long
// sweeps can be interrupted and resumed from a checkpoint.
RunOutcome run_until_norm_exceeds(WalkState& state, Coord n, const RotorOrder& order,
                                  std::uint64_t cap = 0, std::uint64_t step_limit = 0,
                                  const RunHooks& hooks = {});

// Labels of every box site in dense-index order, read without mutation.
std::vector<Label> snapshot(const RotorField& field, const Box& box);
std::vector<Label> snapshot(const WalkState& state, const Box& box);
std::uint64_t snapshot_digest(std::span<const Label> labels);

// nullptr if the walk has not yet exited B[0,radius].
const ExitRecord* find_exit_record(const WalkState& state, Coord radius);

}  // namespace rotorlab
