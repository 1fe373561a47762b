#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rotorlab/aggregation.hpp"
#include "rotorlab/checkpoint.hpp"
#include "rotorlab/csv.hpp"
#include "rotorlab/experiments.hpp"
#include "rotorlab/version.hpp"

namespace fs = std::filesystem;
using namespace rotorlab;

namespace {

constexpr const char* kCounting = "Counting convention: origin visit at t=0 included.";

struct RunConfig {
    int d = 3;
    std::string rule = "toward-origin";
    std::string order = "default";
    std::string out = ".";
    std::uint64_t cap = 0;
    bool quiet = false;

    Coord n = 1;
    Coord n_max = 20;
    Coord inner_radius = 3;
    std::uint64_t k = 500;
    int trials = 10000;
    std::uint64_t seed = 42;
    std::string checkpoint;
    std::uint64_t checkpoint_every = 0;
    std::string resume;
    std::uint64_t step_limit = 0;
    bool timings = false;
    bool trajectory = false;
    Coord dense_radius = -1;
    int idla_trials = 0;
    std::uint64_t progress_every = 100000000;  // 10^8

    std::set<std::string> explicit_keys;  // set by flag or config file
    bool is_explicit(const std::string& key) const { return explicit_keys.contains(key); }
};

// Maps config-file keys to every CLI option registered for them, so the
// file can fill in exactly the values no flag provided.
struct OptionRegistry {
    std::map<std::string, std::vector<CLI::Option*>> by_key;

    void add(const std::string& key, CLI::Option* opt) { by_key[key].push_back(opt); }
    bool known(const std::string& key) const { return by_key.contains(key); }
    bool set_on_cli(const std::string& key) const {
        auto it = by_key.find(key);
        if (it == by_key.end()) return false;
        for (const CLI::Option* opt : it->second)
            if (opt->count() > 0) return true;
        return false;
    }
};

template <typename T>
T config_value(const nlohmann::json& value, const std::string& key) {
    try {
        return value.get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ConfigError("config file: bad value for '" + key + "'");
    }
}

void assign_config_key(RunConfig& cfg, const std::string& key, const nlohmann::json& value) {
    if (key == "d") cfg.d = config_value<int>(value, key);
    else if (key == "rule") cfg.rule = config_value<std::string>(value, key);
    else if (key == "order") cfg.order = config_value<std::string>(value, key);
    else if (key == "out") cfg.out = config_value<std::string>(value, key);
    else if (key == "cap") cfg.cap = config_value<std::uint64_t>(value, key);
    else if (key == "quiet") cfg.quiet = config_value<bool>(value, key);
    else if (key == "n") cfg.n = config_value<Coord>(value, key);
    else if (key == "n_max") cfg.n_max = config_value<Coord>(value, key);
    else if (key == "inner_radius") cfg.inner_radius = config_value<Coord>(value, key);
    else if (key == "k") cfg.k = config_value<std::uint64_t>(value, key);
    else if (key == "trials") cfg.trials = config_value<int>(value, key);
    else if (key == "seed") cfg.seed = config_value<std::uint64_t>(value, key);
    else if (key == "checkpoint") cfg.checkpoint = config_value<std::string>(value, key);
    else if (key == "checkpoint_every") cfg.checkpoint_every = config_value<std::uint64_t>(value, key);
    else if (key == "resume") cfg.resume = config_value<std::string>(value, key);
    else if (key == "step_limit") cfg.step_limit = config_value<std::uint64_t>(value, key);
    else if (key == "timings") cfg.timings = config_value<bool>(value, key);
    else if (key == "trajectory") cfg.trajectory = config_value<bool>(value, key);
    else if (key == "dense_radius") cfg.dense_radius = config_value<Coord>(value, key);
    else if (key == "idla_trials") cfg.idla_trials = config_value<int>(value, key);
    else if (key == "progress_every") cfg.progress_every = config_value<std::uint64_t>(value, key);
    else throw ConfigError("config file: unknown key '" + key + "'");
}

void merge_config_file(RunConfig& cfg, const std::string& path, const OptionRegistry& reg) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config file " + path + " is not valid JSON: " + e.what());
    }
    if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (!reg.known(key)) throw ConfigError("config file: unknown key '" + key + "'");
        if (reg.set_on_cli(key)) continue;  // flags win
        assign_config_key(cfg, key, value);
        cfg.explicit_keys.insert(key);
    }
}

void validate_common(const RunConfig& cfg) {
    if (cfg.d < 1 || cfg.d > kMaxDimension)
        throw ConfigError("--d must be between 1 and " + std::to_string(kMaxDimension));
    if (cfg.dense_radius < -1) throw ConfigError("--dense-radius must be >= -1");
}

fs::path ensure_out_dir(const RunConfig& cfg) {
    const fs::path dir = cfg.out.empty() ? fs::path(".") : fs::path(cfg.out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
    return dir;
}

void note(const RunConfig& cfg, const std::string& msg) {
    if (!cfg.quiet) std::cerr << msg << '\n';
}

std::function<void(const WalkState&)> progress_printer(const RunConfig& cfg) {
    if (cfg.quiet || cfg.progress_every == 0) return {};
    return [](const WalkState& s) {
        std::cerr << "progress: step=" << s.step_count << " position=" << s.position.to_string()
                  << " origin_visits=" << s.origin_visits << " max_norm=" << s.max_norm_seen
                  << '\n';
    };
}

nlohmann::json record_json(const ExitRecord& rec, bool timings) {
    return {{"n", rec.radius},
            {"first_exit_step", rec.first_exit_step},
            {"origin_visits", rec.origin_visits},
            {"digest", rec.snapshot_digest},
            {"elapsed_s", timings ? rec.elapsed_s : 0.0}};
}

int cmd_walk(const RunConfig& cfg) {
    if (cfg.n < 0) throw ConfigError("--n must be >= 0");
    const ConfigRule rule = ConfigRule::parse(cfg.rule, cfg.d);
    const RotorOrder order = RotorOrder::parse(cfg.order, cfg.d);
    const fs::path out = ensure_out_dir(cfg);

    WalkState state(Point::zero(cfg.d), RotorField(rule));
    apply_dense_policy(state, cfg.n, cfg.dense_radius);

    if (cfg.trajectory) {
        const fs::path final_path = out / "trajectory.csv";
        const fs::path tmp = final_path.string() + ".tmp";
        std::ofstream traj(tmp, std::ios::binary | std::ios::trunc);
        if (!traj) throw IoError("cannot open " + tmp.string() + " for writing");
        traj << csv_comment_header(rule.name(), order.name(),
                                   "{\"d\":" + std::to_string(cfg.d) +
                                       ",\"n\":" + std::to_string(cfg.n) + "}");
        traj << "step";
        for (int i = 0; i < cfg.d; ++i) traj << ",p" << i;
        traj << '\n';
        const auto emit = [&](const WalkState& s) {
            traj << s.step_count;
            for (int i = 0; i < cfg.d; ++i) traj << ',' << s.position[i];
            traj << '\n';
        };
        emit(state);
        std::uint64_t next_progress = cfg.progress_every;
        const auto printer = progress_printer(cfg);
        while (state.max_norm_seen <= cfg.n) {
            if (cfg.cap != 0 && state.step_count >= cfg.cap)
                throw CapExhaustedError("step cap " + std::to_string(cfg.cap) +
                                        " exhausted before exiting B[0," + std::to_string(cfg.n) +
                                        "]");
            step(state, order);
            emit(state);
            if (printer && state.step_count >= next_progress) {
                printer(state);
                next_progress += cfg.progress_every;
            }
        }
        if (!traj.flush()) throw IoError("write failed for " + tmp.string());
        traj.close();
        std::error_code ec;
        fs::rename(tmp, final_path, ec);
        if (ec) throw IoError("rename failed: " + ec.message());
    } else {
        RunHooks hooks;
        hooks.progress_every = cfg.progress_every;
        hooks.on_progress = progress_printer(cfg);
        run_until_norm_exceeds(state, cfg.n, order, cfg.cap, 0, hooks);
    }

    const Box box(cfg.n, cfg.d);
    const std::vector<Label> labels = snapshot(state, box);
    nlohmann::json snap;
    snap["d"] = cfg.d;
    snap["radius"] = cfg.n;
    snap["rule"] = rule.name();
    snap["order"] = order.name();
    snap["labels"] = labels;
    snap["digest"] = snapshot_digest(labels);
    atomic_write_file(out / "snapshot.json", snap.dump() + "\n");

    nlohmann::json rec;
    rec["d"] = cfg.d;
    rec["rule"] = rule.name();
    rec["order"] = order.name();
    rec["n"] = cfg.n;
    rec["counting"] = "origin visit at t=0 included";
    auto records = nlohmann::json::array();
    for (const ExitRecord& r : state.exit_records) records.push_back(record_json(r, cfg.timings));
    rec["records"] = std::move(records);
    rec["final"] = {{"position", std::vector<Coord>(state.position.coords().begin(),
                                                    state.position.coords().end())},
                    {"step_count", state.step_count},
                    {"origin_visits", state.origin_visits},
                    {"max_norm_seen", state.max_norm_seen}};
    atomic_write_file(out / "exit_records.json", rec.dump() + "\n");

    note(cfg, "walk: exited B[0," + std::to_string(cfg.n) + "] at step " +
                  std::to_string(state.step_count) + " with origin_visits=" +
                  std::to_string(state.origin_visits));
    return 0;
}

int cmd_conjecture(const RunConfig& cfg) {
    if (cfg.n_max < 0) throw ConfigError("--n-max must be >= 0");
    const fs::path out = ensure_out_dir(cfg);

    SweepOptions opts;
    opts.cap = cfg.cap;
    opts.step_limit = cfg.step_limit;
    opts.checkpoint_every = cfg.checkpoint_every;
    if (!cfg.checkpoint.empty()) opts.checkpoint_path = cfg.checkpoint;
    opts.timings = cfg.timings;
    opts.dense_radius = cfg.dense_radius;
    opts.progress_every = cfg.progress_every;
    opts.on_progress = progress_printer(cfg);
    if (!cfg.quiet) {
        opts.on_row = [&](const ConjectureRow& row) {
            std::cerr << "row: n=" << row.n << " origin_visits=" << row.origin_visits
                      << " expected=" << row.expected << " match="
                      << (row.match ? "true" : "false") << '\n';
        };
    }
    if (cfg.step_limit != 0 && cfg.checkpoint.empty())
        note(cfg, "note: --step-limit without --checkpoint discards progress at the stop point");

    SweepResult result = [&] {
        if (cfg.resume.empty())
            return conjecture_sweep(cfg.n_max, ConfigRule::parse(cfg.rule, cfg.d),
                                    RotorOrder::parse(cfg.order, cfg.d), opts);
        LoadedCheckpoint loaded =
            checkpoint_load(cfg.resume, cfg.is_explicit("d") ? cfg.d : 0);
        const int d = loaded.state.dim();
        if (cfg.is_explicit("rule") &&
            ConfigRule::parse(cfg.rule, d).to_json() != loaded.state.field.rule().to_json())
            throw ConfigError("--rule disagrees with the rule stored in the checkpoint");
        if (cfg.is_explicit("order") && !(RotorOrder::parse(cfg.order, d) == loaded.order))
            throw ConfigError("--order disagrees with the order stored in the checkpoint");
        return conjecture_sweep_from(std::move(loaded.state), cfg.n_max, loaded.order, opts);
    }();

    const std::string echo = "{\"d\":" + std::to_string(result.state.dim()) +
                             ",\"n_max\":" + std::to_string(cfg.n_max) + "}";
    atomic_write_file(out / "conjecture.csv",
                      conjecture_csv(result.rows, result.state.field.rule().name(),
                                     result.order.name(), echo));

    if (result.outcome == RunOutcome::StepLimitReached) {
        note(cfg, "conjecture: stopped by --step-limit at step " +
                      std::to_string(result.state.step_count) +
                      (cfg.checkpoint.empty() ? "" : "; checkpoint saved to " + cfg.checkpoint));
    } else {
        note(cfg, "conjecture: " + std::to_string(result.rows.size()) + " rows written");
    }
    return 0;
}

int cmd_stabilize(const RunConfig& cfg) {
    if (cfg.n_max < 0) throw ConfigError("--n-max must be >= 0");
    if (cfg.inner_radius < 0 || cfg.inner_radius > cfg.n_max)
        throw ConfigError("--inner-radius must be between 0 and --n-max");
    const ConfigRule rule = ConfigRule::parse(cfg.rule, cfg.d);
    const RotorOrder order = RotorOrder::parse(cfg.order, cfg.d);
    const fs::path out = ensure_out_dir(cfg);

    const StabilizationResult result =
        stabilization_study(cfg.n_max, cfg.inner_radius, rule, order, cfg.cap);
    const std::string echo = "{\"d\":" + std::to_string(cfg.d) +
                             ",\"n_max\":" + std::to_string(cfg.n_max) +
                             ",\"inner_radius\":" + std::to_string(cfg.inner_radius) + "}";
    atomic_write_file(out / "stabilization.csv",
                      stabilization_csv(result, rule.name(), order.name(), echo));
    note(cfg, "stabilize: " + std::to_string(result.rows.size()) + " sites written");
    return 0;
}

int cmd_balance(const RunConfig& cfg) {
    if (cfg.n < 0) throw ConfigError("--n must be >= 0");
    const ConfigRule rule = ConfigRule::parse(cfg.rule, cfg.d);
    const RotorOrder order = RotorOrder::parse(cfg.order, cfg.d);
    const fs::path out = ensure_out_dir(cfg);

    WalkState state(Point::zero(cfg.d), RotorField(rule), /*instrumented=*/true);
    apply_dense_policy(state, cfg.n, cfg.dense_radius);
    RunHooks hooks;
    hooks.progress_every = cfg.progress_every;
    hooks.on_progress = progress_printer(cfg);
    run_until_norm_exceeds(state, cfg.n, order, cfg.cap, 0, hooks);

    const std::vector<BalanceRow> rows = balance_report(state, order);
    std::size_t violations = 0;
    for (const BalanceRow& row : rows) violations += row.violation ? 1 : 0;
    const std::string echo =
        "{\"d\":" + std::to_string(cfg.d) + ",\"n\":" + std::to_string(cfg.n) + "}";
    atomic_write_file(out / "balance.csv",
                      balance_csv(rows, cfg.d, rule.name(), order.name(), echo));
    note(cfg, "balance: " + std::to_string(rows.size()) + " sites, " +
                  std::to_string(violations) + " violations");
    return 0;
}

int cmd_srw(const RunConfig& cfg) {
    if (cfg.n < 0) throw ConfigError("--n must be >= 0");
    if (cfg.trials < 1) throw ConfigError("--trials must be >= 1");
    const fs::path out = ensure_out_dir(cfg);

    const SrwSummary summary = srw_comparison(cfg.d, cfg.n, cfg.trials, cfg.seed);
    const std::string echo = "{\"d\":" + std::to_string(cfg.d) +
                             ",\"n\":" + std::to_string(cfg.n) +
                             ",\"trials\":" + std::to_string(cfg.trials) +
                             ",\"seed\":" + std::to_string(cfg.seed) + "}";
    atomic_write_file(out / "srw.csv", srw_csv(summary, cfg.d, echo));
    note(cfg, "srw: mean origin visits " + format_fixed(summary.mean_origin_visits, 6) +
                  " over " + std::to_string(cfg.trials) + " trials");
    return 0;
}

int cmd_aggregate(const RunConfig& cfg) {
    if (cfg.idla_trials < 0) throw ConfigError("--idla-trials must be >= 0");
    const ConfigRule rule = ConfigRule::parse(cfg.rule, cfg.d);
    const RotorOrder order = RotorOrder::parse(cfg.order, cfg.d);
    const fs::path out = ensure_out_dir(cfg);

    const AggregationState cluster = aggregate(cfg.k, rule, order, cfg.cap);
    const ShapeReport shape = shape_report(cluster);

    nlohmann::json j = nlohmann::json::parse(cluster_json(cluster));
    j["inradius"] = shape.inradius;
    j["outradius"] = shape.outradius;
    j["sphericity"] = shape.sphericity;
    atomic_write_file(out / "cluster.json", j.dump() + "\n");
    atomic_write_file(out / "shells.csv", shells_csv(cluster, order));

    if (cfg.idla_trials > 0) {
        const IdlaSummary idla = idla_baseline(cfg.d, cfg.k, cfg.seed, cfg.idla_trials);
        nlohmann::json ij;
        ij["d"] = cfg.d;
        ij["k"] = idla.k;
        ij["trials"] = idla.trials;
        ij["seed"] = idla.seed;
        ij["mean_sphericity"] = idla.mean_sphericity;
        ij["min_sphericity"] = idla.min_sphericity;
        ij["max_sphericity"] = idla.max_sphericity;
        atomic_write_file(out / "idla.json", ij.dump() + "\n");
    }
    note(cfg, "aggregate: |A|=" + std::to_string(cluster.occupied.size()) + " inradius=" +
                  std::to_string(shape.inradius) + " outradius=" +
                  std::to_string(shape.outradius));
    return 0;
}

int run_cli(int argc, char** argv) {
    RunConfig cfg;
    if (const char* env_out = std::getenv("ROTORLAB_OUT")) cfg.out = env_out;

    CLI::App app{std::string(kEngineName) + " " + kEngineVersion +
                 " - deterministic rotor walks on Z^d. " + kCounting};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kEngineName) + " " + kEngineVersion);

    OptionRegistry reg;
    std::string config_path;
    reg.add("d", app.add_option("--d", cfg.d, "lattice dimension (1.." +
                                                  std::to_string(kMaxDimension) + ")"));
    reg.add("rule", app.add_option(
                        "--rule", cfg.rule,
                        "initial rotor rule: toward-origin | paper-literal | uniform:<label> | "
                        "table:<path>")
                        ->capture_default_str());
    reg.add("order", app.add_option("--order", cfg.order,
                                    "rotor order: default | comma-separated successor list")
                         ->capture_default_str());
    reg.add("out", app.add_option("--out", cfg.out,
                                  "output directory (default: $ROTORLAB_OUT or .)"));
    reg.add("cap", app.add_option("--cap", cfg.cap, "step cap, 0 = module default/unlimited"));
    reg.add("quiet", app.add_flag("--quiet", cfg.quiet, "suppress progress and notes on stderr"));
    reg.add("progress_every",
            app.add_option("--progress-every", cfg.progress_every,
                           "stderr progress interval in steps (0 disables)"));
    app.add_option("--config", config_path, "JSON config file (flags take precedence)");

    const auto add_sub = [&](const char* name, const std::string& desc) {
        CLI::App* sub = app.add_subcommand(name, desc + " " + kCounting);
        sub->fallthrough();
        return sub;
    };

    CLI::App* walk = add_sub(
        "walk", "Run one rotor walk from the origin until it first exits B[0,n]; write "
                "snapshot.json and exit_records.json.");
    reg.add("n", walk->add_option("--n", cfg.n, "target box radius"));
    reg.add("trajectory",
            walk->add_flag("--trajectory", cfg.trajectory,
                           "also write trajectory.csv (one row per step; huge for large n)"));
    reg.add("timings", walk->add_flag("--timings", cfg.timings,
                                      "real wall-clock elapsed_s (breaks byte-reproducibility)"));
    reg.add("dense_radius",
            walk->add_option("--dense-radius", cfg.dense_radius,
                             "dense label backing radius (-1 auto, 0 off)"));

    CLI::App* conjecture = add_sub(
        "conjecture", "Sweep one walk across nested boxes n=0..n_max and write conjecture.csv "
                      "with the 6n+1 comparison.");
    reg.add("n_max", conjecture->add_option("--n-max", cfg.n_max, "largest box radius")
                         ->capture_default_str());
    reg.add("checkpoint", conjecture->add_option("--checkpoint", cfg.checkpoint,
                                                 "checkpoint file to write"));
    reg.add("checkpoint_every",
            conjecture->add_option("--checkpoint-every", cfg.checkpoint_every,
                                   "steps between checkpoint writes (0 = only at the end)"));
    reg.add("resume",
            conjecture->add_option("--resume", cfg.resume, "checkpoint file to continue from"));
    reg.add("step_limit",
            conjecture->add_option("--step-limit", cfg.step_limit,
                                   "stop after this many further steps (0 = run to completion)"));
    reg.add("timings", conjecture->add_flag("--timings", cfg.timings,
                                            "real wall-clock elapsed_s (breaks "
                                            "byte-reproducibility)"));
    reg.add("dense_radius",
            conjecture->add_option("--dense-radius", cfg.dense_radius,
                                   "dense label backing radius (-1 auto, 0 off)"));

    CLI::App* stabilize = add_sub(
        "stabilize", "Record B[0,inner_radius] rotor labels at each first box exit up to n_max; "
                     "write stabilization.csv.");
    reg.add("n_max", stabilize->add_option("--n-max", cfg.n_max, "largest box radius")
                         ->capture_default_str());
    reg.add("inner_radius", stabilize->add_option("--inner-radius", cfg.inner_radius,
                                                  "radius of the observed inner box")
                                ->capture_default_str());

    CLI::App* balance = add_sub(
        "balance", "Run an instrumented walk to B[0,n] exit and write per-site direction "
                   "balance counts to balance.csv.");
    reg.add("n", balance->add_option("--n", cfg.n, "target box radius"));
    reg.add("dense_radius",
            balance->add_option("--dense-radius", cfg.dense_radius,
                                "dense label backing radius (-1 auto, 0 off)"));

    CLI::App* srw = add_sub(
        "srw", "Seeded simple-random-walk baseline: origin visits before first exit of B[0,n]; "
               "write srw.csv.");
    reg.add("n", srw->add_option("--n", cfg.n, "target box radius"));
    reg.add("trials", srw->add_option("--trials", cfg.trials, "number of walks")
                          ->capture_default_str());
    reg.add("seed", srw->add_option("--seed", cfg.seed, "random seed")->capture_default_str());

    CLI::App* aggregate_cmd = add_sub(
        "aggregate", "Grow a rotor-router cluster of k particles from the origin; write "
                     "cluster.json and shells.csv.");
    reg.add("k", aggregate_cmd->add_option("--k", cfg.k, "particles to release")
                     ->capture_default_str());
    reg.add("idla_trials",
            aggregate_cmd->add_option("--idla-trials", cfg.idla_trials,
                                      "also run this many seeded IDLA trials into idla.json"));
    reg.add("seed", aggregate_cmd->add_option("--seed", cfg.seed, "random seed for --idla-trials")
                        ->capture_default_str());

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return e.get_exit_code() == 0 ? code : 2;
    }

    for (const auto& [key, opts] : reg.by_key)
        for (const CLI::Option* opt : opts)
            if (opt->count() > 0) cfg.explicit_keys.insert(key);
    if (!config_path.empty()) merge_config_file(cfg, config_path, reg);
    validate_common(cfg);

    if (app.got_subcommand("walk")) return cmd_walk(cfg);
    if (app.got_subcommand("conjecture")) return cmd_conjecture(cfg);
    if (app.got_subcommand("stabilize")) return cmd_stabilize(cfg);
    if (app.got_subcommand("balance")) return cmd_balance(cfg);
    if (app.got_subcommand("srw")) return cmd_srw(cfg);
    if (app.got_subcommand("aggregate")) return cmd_aggregate(cfg);
    return 2;  // unreachable: require_subcommand(1)
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const CheckpointError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.kind == CheckpointError::Kind::Corrupt ? 4 : 2;
    } catch (const ContractViolation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const CapExhaustedError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
}
