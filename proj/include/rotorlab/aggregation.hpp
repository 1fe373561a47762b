#pragma once

#include <cstdint>
#include <string>

#include "rotorlab/walk.hpp"

namespace rotorlab {

// Occupied cluster grown by releasing particles from the origin. The rotor
// field persists across particles, which is what makes the growth
// deterministic.
struct AggregationState {
    PointSet occupied;
    RotorField field;
    std::uint64_t particles_released = 0;

    explicit AggregationState(ConfigRule rule);
    int dim() const { return field.dim(); }
};

// Releases k further particles; each rotor-walks from the origin until it
// first stands on an unoccupied site and settles there. cap = 0 derives a
// per-particle cap from the current cluster.
void aggregate_into(AggregationState& a, std::uint64_t k, const RotorOrder& order,
                    std::uint64_t cap = 0);

AggregationState aggregate(std::uint64_t k, const ConfigRule& rule, const RotorOrder& order,
                           std::uint64_t cap = 0);

struct ShapeReport {
    Coord inradius = 0;   // largest r with all of B[0,r] occupied
    Coord outradius = 0;  // max infinity norm over the cluster
    double sphericity = 1.0;
};

ShapeReport shape_report(const AggregationState& a);

// Internal DLA: same growth rule but each particle walks a seeded simple
// random walk instead of following rotors.
struct IdlaSummary {
    std::uint64_t k = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    double mean_sphericity = 1.0;
    double min_sphericity = 1.0;
    double max_sphericity = 1.0;
};

IdlaSummary idla_baseline(int d, std::uint64_t k, std::uint64_t seed, int trials);

// {"d":...,"k":...,"sites":[[coords],...]} with sites in lexicographic order.
std::string cluster_json(const AggregationState& a);

// One row per radius 0..outradius: radius, occupied count, shell capacity.
std::string shells_csv(const AggregationState& a, const RotorOrder& order);

}  // namespace rotorlab
