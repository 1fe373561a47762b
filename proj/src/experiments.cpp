#include "rotorlab/experiments.hpp"

#include <algorithm>
#include <limits>

#include "rotorlab/checkpoint.hpp"
#include "rotorlab/csv.hpp"
#include "rotorlab/rng.hpp"

namespace rotorlab {

namespace {

ConjectureRow row_from_record(const ExitRecord& rec, bool timings) {
    ConjectureRow row;
    row.n = rec.radius;
    row.origin_visits = rec.origin_visits;
    row.expected = conjecture_expected(rec.radius);
    row.match = row.origin_visits == row.expected;
    row.first_exit_step = rec.first_exit_step;
    row.elapsed_s = timings ? rec.elapsed_s : 0.0;
    return row;
}

}  // namespace

// Dense backing pays for itself on sweep-sized boxes; past ~256 MiB of
// labels fall back to the overlay map.
constexpr std::uint64_t kDenseSiteLimit = 1ull << 28;

void apply_dense_policy(WalkState& state, Coord n_max, Coord requested) {
    if (requested == 0) return;
    const Coord radius = requested > 0 ? requested : n_max + 1;
    const Box box(radius, state.dim());
    try {
        if (box.site_count() > kDenseSiteLimit) {
            if (requested > 0)
                throw ConfigError("dense radius " + std::to_string(radius) +
                                  " needs more than the supported amount of memory");
            return;
        }
    } catch (const OverflowError&) {
        if (requested > 0) throw ConfigError("dense radius is too large");
        return;
    }
    state.field.enable_dense(box);
}

SweepResult conjecture_sweep_from(WalkState state, Coord n_max, const RotorOrder& order,
                                  const SweepOptions& opts) {
    if (n_max < 0) throw ContractViolation("n_max must be non-negative");
    apply_dense_policy(state, n_max, opts.dense_radius);

    RunHooks hooks;
    hooks.progress_every = opts.progress_every;
    hooks.on_progress = opts.on_progress;
    if (!opts.checkpoint_path.empty() && opts.checkpoint_every != 0) {
        hooks.checkpoint_every = opts.checkpoint_every;
        hooks.on_checkpoint = [&](WalkState& s) { checkpoint_save(s, order, opts.checkpoint_path); };
    }
    if (opts.on_row) {
        hooks.on_exit_event = [&](const ExitRecord& rec, const WalkState&) {
            if (rec.radius <= n_max) opts.on_row(row_from_record(rec, opts.timings));
        };
    }

    const RunOutcome outcome =
        run_until_norm_exceeds(state, n_max, order, opts.cap, opts.step_limit, hooks);
    if (!opts.checkpoint_path.empty()) checkpoint_save(state, order, opts.checkpoint_path);

    std::vector<ConjectureRow> rows;
    for (const ExitRecord& rec : state.exit_records)
        if (rec.radius <= n_max) rows.push_back(row_from_record(rec, opts.timings));
    return SweepResult{std::move(rows), outcome, std::move(state), order};
}

namespace {

std::vector<std::string> coord_column_names(int d) {
    if (d <= 3) {
        const std::vector<std::string> xyz = {"x", "y", "z"};
        return {xyz.begin(), xyz.begin() + d};
    }
    std::vector<std::string> names;
    for (int i = 0; i < d; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

void append_coords(std::string& out, const Point& p) {
    for (int i = 0; i < p.dim(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(p[i]);
    }
}

}  // namespace

SweepResult conjecture_sweep(Coord n_max, const ConfigRule& rule, const RotorOrder& order,
                             const SweepOptions& opts) {
    if (order.dim() != rule.dim())
        throw ContractViolation("rotor order dimension does not match the rule");
    WalkState state(Point::zero(rule.dim()), RotorField(rule));
    return conjecture_sweep_from(std::move(state), n_max, order, opts);
}

SweepResult conjecture_sweep_resume(Coord n_max, const std::filesystem::path& checkpoint_path,
                                    const SweepOptions& opts) {
    LoadedCheckpoint loaded = checkpoint_load(checkpoint_path);
    return conjecture_sweep_from(std::move(loaded.state), n_max, loaded.order, opts);
}

std::string conjecture_csv(std::span<const ConjectureRow> rows, const std::string& rule_name,
                           const std::string& order_name, const std::string& config_echo) {
    std::string out = csv_comment_header(rule_name, order_name, config_echo);
    out += "n,origin_visits,expected,match,first_exit_step,elapsed_s\n";
    for (const ConjectureRow& row : rows) {
        out += std::to_string(row.n);
        out += ',';
        out += std::to_string(row.origin_visits);
        out += ',';
        out += std::to_string(row.expected);
        out += ',';
        out += row.match ? "true" : "false";
        out += ',';
        out += std::to_string(row.first_exit_step);
        out += ',';
        out += format_fixed(row.elapsed_s, 3);
        out += '\n';
    }
    return out;
}

StabilizationResult stabilization_study(Coord n_max, Coord inner_radius, const ConfigRule& rule,
                                        const RotorOrder& order, std::uint64_t cap) {
    if (inner_radius < 0 || inner_radius > n_max)
        throw ContractViolation("stabilization_study requires 0 <= inner_radius <= n_max");
    const Box inner(inner_radius, rule.dim());
    std::vector<std::vector<Label>> snaps;

    WalkState state(Point::zero(rule.dim()), RotorField(rule));
    apply_dense_policy(state, n_max, -1);
    RunHooks hooks;
    hooks.on_exit_event = [&](const ExitRecord& rec, const WalkState& s) {
        if (rec.radius <= n_max) snaps.push_back(snapshot(s.field, inner));
    };
    run_until_norm_exceeds(state, n_max, order, cap, 0, hooks);

    StabilizationResult result;
    result.n_max = n_max;
    result.inner_radius = inner_radius;
    const std::uint64_t sites = inner.site_count();
    for (std::uint64_t i = 0; i < sites; ++i) {
        StabilizationRow row;
        row.site = point_at_dense_index(i, inner);
        row.labels_at_exits.reserve(snaps.size());
        for (const auto& snap : snaps) row.labels_at_exits.push_back(snap[i]);
        const Label final_label = row.labels_at_exits.back();
        std::size_t m0 = row.labels_at_exits.size() - 1;
        while (m0 > 0 && row.labels_at_exits[m0 - 1] == final_label) --m0;
        row.stabilized_at = static_cast<Coord>(m0);
        row.stable = m0 + 1 < row.labels_at_exits.size() || row.labels_at_exits.size() == 1;
        result.rows.push_back(std::move(row));
    }
    return result;
}

std::string stabilization_csv(const StabilizationResult& result, const std::string& rule_name,
                              const std::string& order_name, const std::string& config_echo) {
    std::string out = csv_comment_header(rule_name, order_name, config_echo);
    const int d = result.rows.empty() ? 0 : result.rows.front().site.dim();
    for (const std::string& name : coord_column_names(d)) {
        out += name;
        out += ',';
    }
    out += "stabilized_at";
    for (Coord m = 0; m <= result.n_max; ++m) out += ",l" + std::to_string(m);
    out += '\n';
    for (const StabilizationRow& row : result.rows) {
        append_coords(out, row.site);
        out += ',';
        out += row.stable ? std::to_string(row.stabilized_at) : std::string("unstable");
        for (Label l : row.labels_at_exits) out += ',' + std::to_string(l);
        out += '\n';
    }
    return out;
}

std::vector<BalanceRow> balance_report(const WalkState& state, const RotorOrder& order) {
    if (!state.instrumentation)
        throw ContractViolation("balance_report requires a walk run with instrumentation");
    const int dirs = direction_count(state.dim());

    std::vector<BalanceRow> rows;
    for (const auto& [site, counters] : state.instrumentation->sites) {
        BalanceRow row;
        row.site = site;
        row.departures = counters.departures;
        row.by_direction.assign(counters.by_direction.begin(),
                                counters.by_direction.begin() + dirs);
        row.initial_label = state.field.rule().initial_label(site);
        row.current_label = state.field.label_at(site);

        // expected: q+1 departures for the first (departures mod 2d) labels
        // along the successor cycle from the initial label, q for the rest
        const std::uint64_t q = row.departures / dirs;
        const std::uint64_t r = row.departures % dirs;
        Label cursor = row.initial_label;
        std::vector<std::uint64_t> expected(static_cast<std::size_t>(dirs), q);
        for (std::uint64_t i = 0; i < r; ++i) {
            ++expected[cursor];
            cursor = order.next(cursor);
        }
        row.violation = expected != row.by_direction || cursor != row.current_label;
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(),
              [](const BalanceRow& a, const BalanceRow& b) { return lex_less(a.site, b.site); });
    return rows;
}

std::string balance_csv(std::span<const BalanceRow> rows, int d, const std::string& rule_name,
                        const std::string& order_name, const std::string& config_echo) {
    std::string out = csv_comment_header(rule_name, order_name, config_echo);
    for (const std::string& name : coord_column_names(d)) {
        out += name;
        out += ',';
    }
    out += "departures";
    for (int l = 0; l < direction_count(d); ++l) out += ",c" + std::to_string(l);
    out += ",initial_label,current_label,violation\n";
    for (const BalanceRow& row : rows) {
        append_coords(out, row.site);
        out += ',';
        out += std::to_string(row.departures);
        for (std::uint64_t c : row.by_direction) out += ',' + std::to_string(c);
        out += ',';
        out += std::to_string(row.initial_label);
        out += ',';
        out += std::to_string(row.current_label);
        out += ',';
        out += row.violation ? "true" : "false";
        out += '\n';
    }
    return out;
}

SrwSummary srw_comparison(int d, Coord n, int trials, std::uint64_t seed) {
    checked_dimension(d);
    if (n < 0) throw ContractViolation("srw_comparison requires n >= 0");
    if (trials < 1) throw ContractViolation("srw_comparison requires trials >= 1");
    const auto dirs = static_cast<std::uint32_t>(direction_count(d));

    SrwSummary summary;
    summary.n = n;
    summary.trials = trials;
    summary.seed = seed;
    summary.min_visits = std::numeric_limits<std::uint64_t>::max();
    for (int t = 0; t < trials; ++t) {
        auto gen = seeded_engine(seed, static_cast<std::uint64_t>(t));
        Point p = Point::zero(d);
        std::uint64_t visits = 1;  // placement at t=0
        while (true) {
            p = translate(p, static_cast<Label>(bounded_draw(gen, dirs)));
            if (infinity_norm(p) > n) break;
            if (p.is_origin()) ++visits;
        }
        summary.total_visits += visits;
        summary.min_visits = std::min(summary.min_visits, visits);
        summary.max_visits = std::max(summary.max_visits, visits);
    }
    summary.mean_origin_visits =
        static_cast<double>(summary.total_visits) / static_cast<double>(trials);
    return summary;
}

std::string srw_csv(const SrwSummary& summary, int d, const std::string& config_echo) {
    std::string out = csv_comment_header("srw(d=" + std::to_string(d) + ")", "-", config_echo);
    out += "n,trials,seed,mean,min,max\n";
    out += std::to_string(summary.n);
    out += ',';
    out += std::to_string(summary.trials);
    out += ',';
    out += std::to_string(summary.seed);
    out += ',';
    out += format_fixed(summary.mean_origin_visits, 6);
    out += ',';
    out += std::to_string(summary.min_visits);
    out += ',';
    out += std::to_string(summary.max_visits);
    out += '\n';
    return out;
}

}  // namespace rotorlab
