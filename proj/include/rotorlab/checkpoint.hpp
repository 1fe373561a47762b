#pragma once

#include <filesystem>

#include "rotorlab/walk.hpp"

namespace rotorlab {

// Checkpoint file layout (version 1):
//   {"format":"rotorlab-ckpt","version":1,"d":...,"rule":...,"order":"default",
//    "step_count":...,"position":[...],"origin_visits":...,"max_norm_seen":...,
//    "exit_records":[...],"overlay":[[[coords],label,departures?],...]}
// Dense backing is flattened into overlay entries on save; the departures
// element is present iff the state carries instrumentation.

void checkpoint_save(const WalkState& state, const RotorOrder& order,
                     const std::filesystem::path& path);

struct LoadedCheckpoint {
    WalkState state;
    RotorOrder order;
};

// expected_d = 0 accepts any dimension.
LoadedCheckpoint checkpoint_load(const std::filesystem::path& path, int expected_d = 0);

// Writes `content` to a temp file next to `path` and renames it into place,
// so readers never observe a partial file.
void atomic_write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace rotorlab
