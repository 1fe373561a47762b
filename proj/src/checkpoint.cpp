#include "rotorlab/checkpoint.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace rotorlab {

namespace {

constexpr int kVersion = 1;
constexpr const char* kFormat = "rotorlab-ckpt";

nlohmann::json coords_json(const Point& p) {
    auto a = nlohmann::json::array();
    for (Coord c : p.coords()) a.push_back(c);
    return a;
}

Point point_from(const nlohmann::json& j, int d) {
    if (!j.is_array() || j.size() != static_cast<std::size_t>(d))
        throw CheckpointError(CheckpointError::Kind::Corrupt, "checkpoint: bad point encoding");
    std::vector<Coord> coords;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw CheckpointError(CheckpointError::Kind::Corrupt, "checkpoint: bad coordinate");
        coords.push_back(v.get<Coord>());
    }
    return Point(std::span<const Coord>(coords));
}

}  // namespace

void atomic_write_file(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
        out << content;
        if (!out.flush()) throw IoError("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoError("rename " + tmp.string() + " -> " + path.string() + ": " + ec.message());
}

void checkpoint_save(const WalkState& state, const RotorOrder& order,
                     const std::filesystem::path& path) {
    nlohmann::json j;
    j["format"] = kFormat;
    j["version"] = kVersion;
    j["d"] = state.dim();
    j["rule"] = state.field.rule().to_json();
    j["order"] = order.name();
    j["step_count"] = state.step_count;
    j["position"] = coords_json(state.position);
    j["origin_visits"] = state.origin_visits;
    j["max_norm_seen"] = state.max_norm_seen;

    auto records = nlohmann::json::array();
    for (const ExitRecord& rec : state.exit_records) {
        records.push_back({{"n", rec.radius},
                           {"first_exit_step", rec.first_exit_step},
                           {"origin_visits", rec.origin_visits},
                           {"digest", rec.snapshot_digest},
                           {"elapsed_s", rec.elapsed_s}});
    }
    j["exit_records"] = std::move(records);

    auto overlay = nlohmann::json::array();
    for (const auto& [p, label] : state.field.modified_entries_sorted()) {
        auto entry = nlohmann::json::array({coords_json(p), int(label)});
        if (state.instrumentation) {
            auto it = state.instrumentation->sites.find(p);
            entry.push_back(it != state.instrumentation->sites.end() ? it->second.departures : 0);
        }
        overlay.push_back(std::move(entry));
    }
    j["overlay"] = std::move(overlay);

    atomic_write_file(path, j.dump());
}

LoadedCheckpoint checkpoint_load(const std::filesystem::path& path, int expected_d) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open checkpoint " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw CheckpointError(CheckpointError::Kind::Corrupt,
                              "checkpoint " + path.string() + " is not valid JSON: " + e.what());
    }

    try {
        if (!j.is_object() || j.value("format", std::string()) != kFormat)
            throw CheckpointError(CheckpointError::Kind::Corrupt,
                                  "checkpoint " + path.string() + " has no rotorlab-ckpt header");
        const int version = j.at("version").get<int>();
        if (version != kVersion)
            throw CheckpointError(CheckpointError::Kind::VersionMismatch,
                                  "checkpoint version " + std::to_string(version) +
                                      " not supported (expected " + std::to_string(kVersion) + ")");
        const int d = j.at("d").get<int>();
        if (expected_d != 0 && d != expected_d)
            throw CheckpointError(CheckpointError::Kind::DimensionMismatch,
                                  "checkpoint has d=" + std::to_string(d) + ", expected d=" +
                                      std::to_string(expected_d));
        checked_dimension(d);

        const ConfigRule rule = ConfigRule::from_json(j.at("rule"));
        if (rule.dim() != d)
            throw CheckpointError(CheckpointError::Kind::Corrupt,
                                  "checkpoint rule dimension disagrees with d");
        RotorOrder order = RotorOrder::parse(j.at("order").get<std::string>(), d);

        RotorField field(rule);
        bool instrumented = false;
        std::vector<std::pair<Point, std::uint64_t>> departures;
        for (const auto& entry : j.at("overlay")) {
            if (!entry.is_array() || entry.size() < 2 || entry.size() > 3)
                throw CheckpointError(CheckpointError::Kind::Corrupt,
                                      "checkpoint: bad overlay entry");
            const Point p = point_from(entry[0], d);
            const long long label = entry[1].get<long long>();
            if (label < 0 || label >= direction_count(d))
                throw CheckpointError(CheckpointError::Kind::Corrupt,
                                      "checkpoint: overlay label out of range");
            field.set_label(p, static_cast<Label>(label));
            if (entry.size() == 3) {
                instrumented = true;
                departures.emplace_back(p, entry[2].get<std::uint64_t>());
            }
        }

        WalkState state(point_from(j.at("position"), d), std::move(field), instrumented);
        state.step_count = j.at("step_count").get<std::uint64_t>();
        state.origin_visits = j.at("origin_visits").get<std::uint64_t>();
        state.max_norm_seen = j.at("max_norm_seen").get<Coord>();
        for (const auto& r : j.at("exit_records")) {
            ExitRecord rec;
            rec.radius = r.at("n").get<Coord>();
            rec.first_exit_step = r.at("first_exit_step").get<std::uint64_t>();
            rec.origin_visits = r.at("origin_visits").get<std::uint64_t>();
            rec.snapshot_digest = r.at("digest").get<std::uint64_t>();
            rec.elapsed_s = r.at("elapsed_s").get<double>();
            state.exit_records.push_back(rec);
        }
        if (instrumented) {
            // per-direction tallies are not persisted; rebuild them from the
            // successor cycle starting at each site's initial label
            const int dirs = direction_count(d);
            for (const auto& [p, count] : departures) {
                SiteCounters counters;
                counters.departures = count;
                const std::uint64_t base = count / dirs;
                for (int i = 0; i < dirs; ++i) counters.by_direction[i] = base;
                Label cur = state.field.rule().initial_label(p);
                for (std::uint64_t i = 0; i < count % dirs; ++i) {
                    ++counters.by_direction[cur];
                    cur = order.next(cur);
                }
                state.instrumentation->sites[p] = counters;
            }
        }
        return LoadedCheckpoint{std::move(state), std::move(order)};
    } catch (const nlohmann::json::exception& e) {
        throw CheckpointError(CheckpointError::Kind::Corrupt,
                              "checkpoint " + path.string() + " is malformed: " + e.what());
    } catch (const ConfigError& e) {
        throw CheckpointError(CheckpointError::Kind::Corrupt,
                              "checkpoint " + path.string() + " is malformed: " + e.what());
    }
}

}  // namespace rotorlab
