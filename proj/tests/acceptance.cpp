// Acceptance gate: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Run via ctest or directly.
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rotorlab/aggregation.hpp"
#include "rotorlab/checkpoint.hpp"
#include "rotorlab/experiments.hpp"
#include "rotorlab/rng.hpp"

namespace fs = std::filesystem;
using namespace rotorlab;

namespace {

ConfigRule random_rule(std::mt19937_64& gen, int d) {
    switch (bounded_draw(gen, 3)) {
        case 0: return ConfigRule::toward_origin(d);
        case 1: return ConfigRule::paper_literal(d);
        default:
            return ConfigRule::uniform(
                d, static_cast<Label>(bounded_draw(gen, static_cast<std::uint32_t>(2 * d))));
    }
}

// 1. one step of the engine == one direct evaluation of g(x,l) = (x+e_{l(x)}, l_x)
std::optional<std::string> crit_step_conformance() {
    auto gen = seeded_engine(2024, 0);
    for (int trial = 0; trial < 100000; ++trial) {
        const int d = 1 + static_cast<int>(bounded_draw(gen, 3));
        const ConfigRule rule = random_rule(gen, d);
        const RotorOrder order = RotorOrder::cyclic(d);
        Point x = Point::zero(d);
        for (int i = 0; i < d; ++i) x[i] = static_cast<Coord>(bounded_draw(gen, 9)) - 4;
        const Label l = static_cast<Label>(bounded_draw(gen, static_cast<std::uint32_t>(2 * d)));

        WalkState state(x, RotorField(rule));
        state.field.set_label(x, l);  // the random (x, l) argument pair of g
        step(state, order);
        if (state.position != translate(x, l))
            return "position diverged from g on trial " + std::to_string(trial);
        if (state.field.label_at(x) != order.next(l))
            return "rotated label diverged from g on trial " + std::to_string(trial);
    }
    return std::nullopt;
}

// 2. origin_visits == 6n+1 for every n in 0..20, and an interrupted sweep
// resumed from its checkpoint emits byte-identical csv
std::optional<std::string> crit_six_n_plus_one() {
    const ConfigRule rule = ConfigRule::toward_origin(3);
    const RotorOrder order = RotorOrder::cyclic(3);
    const SweepResult full = conjecture_sweep(20, rule, order);
    if (full.rows.size() != 21) return "expected 21 rows";
    for (const ConjectureRow& row : full.rows)
        if (!row.match || row.origin_visits != conjecture_expected(row.n))
            return "origin_visits != 6n+1 at n=" + std::to_string(row.n);

    const fs::path ck = fs::temp_directory_path() / "rotorlab_acceptance_ck.json";
    SweepOptions opts;
    opts.step_limit = 1000000;
    opts.checkpoint_path = ck;
    const SweepResult paused = conjecture_sweep(20, rule, order, opts);
    if (paused.outcome != RunOutcome::StepLimitReached) return "interruption did not trigger";
    const SweepResult resumed = conjecture_sweep_resume(20, ck);
    fs::remove(ck);
    if (resumed.outcome != RunOutcome::TargetReached) return "resume did not finish the sweep";

    const std::string echo = R"({"d":3,"n_max":20})";
    if (conjecture_csv(resumed.rows, rule.name(), order.name(), echo) !=
        conjecture_csv(full.rows, rule.name(), order.name(), echo))
        return "resumed csv differs from the uninterrupted run";
    return std::nullopt;
}

// 3. every randomized bounded-region walk leaves the region below the default cap
std::optional<std::string> crit_termination() {
    auto gen = seeded_engine(7, 1);
    for (int trial = 0; trial < 1000; ++trial) {
        const int d = 1 + static_cast<int>(bounded_draw(gen, 3));
        const ConfigRule rule = random_rule(gen, d);
        const Box box(4, d);

        Point start = Point::zero(d);
        for (int i = 0; i < d; ++i)
            start[i] = static_cast<Coord>(bounded_draw(gen, 9)) - 4;
        PointSet region{start};
        const std::uint64_t sites = box.site_count();
        for (std::uint64_t idx = 0; idx < sites; ++idx)
            if (bounded_draw(gen, 2) == 0) region.insert(point_at_dense_index(idx, box));

        WalkState state(start, RotorField(rule));
        try {
            run_until_exit(state, region, RotorOrder::cyclic(d), default_region_cap(region));
        } catch (const CapExhaustedError&) {
            return "cap exhausted on trial " + std::to_string(trial);
        }
        if (region.contains(state.position)) return "walk ended inside the region";
    }
    return std::nullopt;
}

// 4. per-direction departure counts at every visited site have spread <= 1 and
// follow the successor cycle from the initial label
std::optional<std::string> crit_balance() {
    WalkState state(Point::zero(3), RotorField(ConfigRule::toward_origin(3)),
                    /*instrumented=*/true);
    const RotorOrder order = RotorOrder::cyclic(3);
    apply_dense_policy(state, 10, -1);
    run_until_norm_exceeds(state, 10, order);

    std::uint64_t departures = 0;
    for (const BalanceRow& row : balance_report(state, order)) {
        if (row.violation) return "violation at " + row.site.to_string();
        std::uint64_t lo = row.by_direction[0], hi = row.by_direction[0];
        for (std::uint64_t c : row.by_direction) {
            lo = std::min(lo, c);
            hi = std::max(hi, c);
        }
        if (hi - lo > 1) return "spread > 1 at " + row.site.to_string();
        departures += row.departures;
    }
    if (departures != state.step_count) return "departures do not sum to step_count";
    return std::nullopt;
}

// 5. dense backing vs pure overlay: same walk, same counters, same labels
std::optional<std::string> crit_engines_agree() {
    const ConfigRule rule = ConfigRule::toward_origin(3);
    const RotorOrder order = RotorOrder::cyclic(3);
    WalkState dense(Point::zero(3), RotorField(rule));
    dense.field.enable_dense(Box(32, 3));
    WalkState overlay(Point::zero(3), RotorField(rule));
    for (int i = 0; i < 1000000; ++i) {
        step(dense, order);
        step(overlay, order);
    }
    if (dense.position != overlay.position) return "positions differ";
    if (dense.step_count != overlay.step_count) return "step counts differ";
    if (dense.origin_visits != overlay.origin_visits) return "origin visit counts differ";
    if (dense.max_norm_seen != overlay.max_norm_seen) return "max norms differ";
    if (dense.exit_records.size() != overlay.exit_records.size()) return "record counts differ";
    for (std::size_t i = 0; i < dense.exit_records.size(); ++i) {
        const ExitRecord &a = dense.exit_records[i], &b = overlay.exit_records[i];
        if (a.radius != b.radius || a.first_exit_step != b.first_exit_step ||
            a.origin_visits != b.origin_visits || a.snapshot_digest != b.snapshot_digest)
            return "exit records differ at radius " + std::to_string(a.radius);
    }
    if (snapshot(dense.field, Box(3, 3)) != snapshot(overlay.field, Box(3, 3)))
        return "B[0,3] snapshots differ";
    if (dense.position != Point{-2, 17, 7} || dense.origin_visits != 103 ||
        dense.max_norm_seen != 18)
        return "state at step 1e6 differs from the frozen fixture";
    return std::nullopt;
}

// 6. every inner-box rotor stabilizes within the frozen fixture bound and the
// study is deterministic
std::optional<std::string> crit_stabilization() {
    const ConfigRule rule = ConfigRule::toward_origin(3);
    const RotorOrder order = RotorOrder::cyclic(3);
    const StabilizationResult a = stabilization_study(15, 3, rule, order);
    if (a.rows.size() != 343) return "expected 343 sites";

    std::map<Coord, int> histogram;
    std::vector<std::uint8_t> m0_bytes;
    for (const StabilizationRow& row : a.rows) {
        if (!row.stable || row.stabilized_at > 15)
            return "site " + row.site.to_string() + " did not stabilize";
        ++histogram[row.stabilized_at];
        m0_bytes.push_back(static_cast<std::uint8_t>(row.stabilized_at));
    }
    if (histogram != std::map<Coord, int>{{0, 81}, {1, 7}, {2, 46}, {3, 136}, {4, 73}})
        return "stabilized_at histogram differs from the frozen fixture";
    if (fnv1a64(m0_bytes) != 0xdbf3fe4c71a6e7f6ull)
        return "stabilized_at digest differs from the frozen fixture";

    const StabilizationResult b = stabilization_study(15, 3, rule, order);
    const std::string echo = R"({"d":3,"n_max":15,"inner_radius":3})";
    if (stabilization_csv(a, rule.name(), order.name(), echo) !=
        stabilization_csv(b, rule.name(), order.name(), echo))
        return "two identical runs produced different csv";
    return std::nullopt;
}

// 7. the seeded random-walk baseline is bit-reproducible and far below 6*20+1
std::optional<std::string> crit_srw() {
    const SrwSummary a = srw_comparison(3, 20, 10000, 42);
    const SrwSummary b = srw_comparison(3, 20, 10000, 42);
    if (a.total_visits != b.total_visits || a.min_visits != b.min_visits ||
        a.max_visits != b.max_visits)
        return "seeded runs are not bit-identical";
    if (!(a.mean_origin_visits < 121.0)) return "mean origin visits not below 121";
    if (a.mean_origin_visits < 1.0) return "mean below the placement visit";
    return std::nullopt;
}

// 8. cluster sizes are exact, the k=500 cluster meets the calibrated
// sphericity threshold, and a checkpoint round-trip continues identically
std::optional<std::string> crit_aggregation() {
    const RotorOrder order2 = RotorOrder::cyclic(2);
    for (std::uint64_t k : {0ull, 1ull, 10ull, 500ull}) {
        const AggregationState a = aggregate(k, ConfigRule::toward_origin(2), order2);
        if (a.occupied.size() != k + 1)
            return "|A| != k+1 at k=" + std::to_string(k);
    }
    const AggregationState big = aggregate(500, ConfigRule::toward_origin(2), order2);
    if (shape_report(big).sphericity < 0.70)
        return "k=500 sphericity below the calibrated threshold 0.70";

    const ConfigRule rule = ConfigRule::toward_origin(3);
    const RotorOrder order = RotorOrder::cyclic(3);
    WalkState original(Point::zero(3), RotorField(rule));
    for (int i = 0; i < 12345; ++i) step(original, order);

    const fs::path ck = fs::temp_directory_path() / "rotorlab_acceptance_rt.json";
    checkpoint_save(original, order, ck);
    LoadedCheckpoint loaded = checkpoint_load(ck);
    fs::remove(ck);
    for (int i = 0; i < 10000; ++i) {
        step(original, order);
        step(loaded.state, loaded.order);
    }
    if (original.position != loaded.state.position) return "positions diverge after resume";
    if (original.origin_visits != loaded.state.origin_visits)
        return "visit counts diverge after resume";
    if (snapshot(original.field, Box(5, 3)) != snapshot(loaded.state.field, Box(5, 3)))
        return "fields diverge after resume";
    return std::nullopt;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::optional<std::string> (*fn)();
    };
    const Criterion criteria[] = {
        {"step function matches 1e5 randomized direct evaluations of g", crit_step_conformance},
        {"origin visits equal 6n+1 for n=0..20 with checkpoint/resume byte-identity",
         crit_six_n_plus_one},
        {"1000 randomized bounded-region walks exit below the default cap", crit_termination},
        {"instrumented n=10 sweep shows exact direction balance everywhere", crit_balance},
        {"dense and pure-overlay engines agree after 1e6 steps", crit_engines_agree},
        {"stabilization study matches the frozen fixture and is deterministic",
         crit_stabilization},
        {"seeded srw baseline is reproducible with mean below 121", crit_srw},
        {"aggregation sizes, sphericity threshold, and checkpoint round-trip hold",
         crit_aggregation},
    };

    int failures = 0;
    for (std::size_t i = 0; i < std::size(criteria); ++i) {
        std::optional<std::string> detail;
        try {
            detail = criteria[i].fn();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (detail) {
            ++failures;
            std::cout << "FAIL " << (i + 1) << ": " << criteria[i].name << " (" << *detail
                      << ")\n";
        } else {
            std::cout << "PASS " << (i + 1) << ": " << criteria[i].name << '\n';
        }
    }
    return failures == 0 ? 0 : 1;
}
