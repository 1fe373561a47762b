#include "rotorlab/walk.hpp"

#include <limits>

namespace rotorlab {

std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::uint8_t b : bytes) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    return h;
}

WalkState::WalkState(Point start, RotorField rotor_field, bool instrumented)
    : position(start),
      field(std::move(rotor_field)),
      started_at(std::chrono::steady_clock::now()) {
    if (position.dim() != field.dim())
        throw ContractViolation("start point dimension does not match the rotor field");
    origin_visits = position.is_origin() ? 1 : 0;
    max_norm_seen = infinity_norm(position);
    if (instrumented) instrumentation.emplace();
}

namespace {

void record_exit_event(WalkState& s, Coord radius) {
    ExitRecord rec;
    rec.radius = radius;
    rec.first_exit_step = s.step_count;
    rec.origin_visits = s.origin_visits;
    rec.snapshot_digest = snapshot_digest(snapshot(s.field, Box(radius, s.dim())));
    rec.elapsed_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - s.started_at).count();
    s.exit_records.push_back(rec);
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out;
    if (__builtin_mul_overflow(a, b, &out)) return std::numeric_limits<std::uint64_t>::max();
    return out;
}

}  // namespace

void step(WalkState& s, const RotorOrder& order) {
    if (order.dim() != s.dim())
        throw ContractViolation("rotor order dimension does not match the walk state");
    const Label current = s.field.label_at(s.position);
    const Point departed = s.position;
    s.position = translate(s.position, current);  // move with the label as found
    s.field.set_label(departed, order.next(current));
    ++s.step_count;
    if (s.position.is_origin()) ++s.origin_visits;
    if (s.instrumentation) {
        auto& site = s.instrumentation->sites[departed];
        ++site.departures;
        ++site.by_direction[current];
    }
    const Coord norm = infinity_norm(s.position);
    if (norm > s.max_norm_seen) {
        // norm grows by at most 1 per step, so exactly one box is exited here
        record_exit_event(s, s.max_norm_seen);
        s.max_norm_seen = norm;
    }
}

std::uint64_t default_region_cap(const PointSet& region) {
    if (region.empty()) return 1;
    const int d = region.begin()->dim();
    Coord diameter = 0;
    for (int axis = 0; axis < d; ++axis) {
        Coord lo = std::numeric_limits<Coord>::max();
        Coord hi = std::numeric_limits<Coord>::min();
        for (const Point& p : region) {
            lo = std::min(lo, p[axis]);
            hi = std::max(hi, p[axis]);
        }
        diameter = std::max(diameter, hi - lo);
    }
    std::uint64_t cap = static_cast<std::uint64_t>(direction_count(d));
    cap = saturating_mul(cap, region.size());
    cap = saturating_mul(cap, region.size());
    cap = saturating_mul(cap, static_cast<std::uint64_t>(diameter) + 1);
    return cap;
}

std::uint64_t run_until_exit(WalkState& s, const PointSet& region, const RotorOrder& order,
                             std::uint64_t cap) {
    if (!region.contains(s.position))
        throw ContractViolation("run_until_exit requires the start position inside the region");
    std::uint64_t taken = 0;
    while (region.contains(s.position)) {
        if (cap != 0 && taken >= cap)
            throw CapExhaustedError("step cap " + std::to_string(cap) +
                                    " exhausted before leaving the region");
        step(s, order);
        ++taken;
    }
    return taken;
}

RunOutcome run_until_norm_exceeds(WalkState& s, Coord n, const RotorOrder& order,
                                  std::uint64_t cap, std::uint64_t step_limit,
                                  const RunHooks& hooks) {
    if (n < 0) throw ContractViolation("target radius must be non-negative");
    if (infinity_norm(s.position) > n && s.max_norm_seen <= n)
        throw ContractViolation("run_until_norm_exceeds requires the start inside B[0,n]");
    auto next_multiple = [&](std::uint64_t every) {
        return every == 0 ? std::numeric_limits<std::uint64_t>::max()
                          : (s.step_count / every + 1) * every;
    };
    std::uint64_t next_progress = next_multiple(hooks.progress_every);
    std::uint64_t next_checkpoint = next_multiple(hooks.checkpoint_every);
    std::uint64_t taken = 0;
    while (s.max_norm_seen <= n) {
        if (step_limit != 0 && taken >= step_limit) return RunOutcome::StepLimitReached;
        if (cap != 0 && taken >= cap)
            throw CapExhaustedError("step cap " + std::to_string(cap) +
                                    " exhausted before exiting B[0," + std::to_string(n) + "]");
        const std::size_t records_before = s.exit_records.size();
        step(s, order);
        ++taken;
        if (s.exit_records.size() != records_before && hooks.on_exit_event)
            hooks.on_exit_event(s.exit_records.back(), s);
        if (s.step_count >= next_checkpoint) {
            if (hooks.on_checkpoint) hooks.on_checkpoint(s);
            next_checkpoint = next_multiple(hooks.checkpoint_every);
        }
        if (s.step_count >= next_progress) {
            if (hooks.on_progress) hooks.on_progress(s);
            next_progress = next_multiple(hooks.progress_every);
        }
    }
    return RunOutcome::TargetReached;
}

std::vector<Label> snapshot(const RotorField& field, const Box& box) {
    if (box.d != field.dim()) throw ContractViolation("snapshot box dimension mismatch");
    const std::uint64_t count = box.site_count();
    std::vector<Label> labels(count);
    for (std::uint64_t i = 0; i < count; ++i)
        labels[i] = field.label_at(point_at_dense_index(i, box));
    return labels;
}

std::vector<Label> snapshot(const WalkState& state, const Box& box) {
    return snapshot(state.field, box);
}

std::uint64_t snapshot_digest(std::span<const Label> labels) {
    return fnv1a64(std::span<const std::uint8_t>(labels.data(), labels.size()));
}

const ExitRecord* find_exit_record(const WalkState& state, Coord radius) {
    for (const ExitRecord& rec : state.exit_records)
        if (rec.radius == radius) return &rec;
    return nullptr;
}

}  // namespace rotorlab
