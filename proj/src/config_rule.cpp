#include "rotorlab/config_rule.hpp"

#include <algorithm>
#include <fstream>
#include <utility>

#include <nlohmann/json.hpp>

namespace rotorlab {

namespace {

std::uint64_t magnitude(Coord v) {
    return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
}

Label checked_label(long long value, int d, const std::string& what) {
    if (value < 0 || value >= direction_count(d))
        throw ConfigError(what + ": label " + std::to_string(value) +
                          " out of range for d=" + std::to_string(d));
    return static_cast<Label>(value);
}

Point point_from_json(const nlohmann::json& j, int d) {
    if (!j.is_array() || j.size() != static_cast<std::size_t>(d))
        throw ConfigError("point must be an array of " + std::to_string(d) + " integers");
    std::vector<Coord> coords;
    coords.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw ConfigError("point coordinates must be integers");
        coords.push_back(v.get<Coord>());
    }
    return Point(std::span<const Coord>(coords));
}

}  // namespace

int strict_max_axis(const Point& p) {
    int axis = -1;
    std::uint64_t best = 0;
    bool unique = false;
    for (int i = 0; i < p.dim(); ++i) {
        const std::uint64_t a = magnitude(p[i]);
        if (a > best) {
            best = a;
            axis = i;
            unique = true;
        } else if (a == best) {
            unique = false;
        }
    }
    return (unique && best > 0) ? axis : -1;
}

ConfigRule ConfigRule::toward_origin(int d) {
    return ConfigRule(Kind::TowardOrigin, checked_dimension(d));
}

ConfigRule ConfigRule::paper_literal(int d) {
    return ConfigRule(Kind::PaperLiteral, checked_dimension(d));
}

ConfigRule ConfigRule::uniform(int d, Label label) {
    ConfigRule r(Kind::Uniform, checked_dimension(d));
    if (label >= direction_count(d))
        throw ConfigError("uniform label " + std::to_string(int(label)) +
                          " out of range for d=" + std::to_string(d));
    r.uniform_label_ = label;
    return r;
}

ConfigRule ConfigRule::table(int d, std::unordered_map<Point, Label, PointHash> entries,
                             Label default_label) {
    ConfigRule r(Kind::Table, checked_dimension(d));
    if (default_label >= direction_count(d))
        throw ConfigError("table default label out of range for d=" + std::to_string(d));
    for (const auto& [p, label] : entries) {
        if (p.dim() != d)
            throw ConfigError("table entry " + p.to_string() + " has wrong dimension");
        if (label >= direction_count(d))
            throw ConfigError("table entry " + p.to_string() + " has out-of-range label " +
                              std::to_string(int(label)));
    }
    r.entries_ = std::move(entries);
    r.default_label_ = default_label;
    return r;
}

Label ConfigRule::initial_label(const Point& p) const {
    if (p.dim() != d_)
        throw ContractViolation("point " + p.to_string() + " has dimension " +
                                std::to_string(p.dim()) + ", rule expects " + std::to_string(d_));
    switch (kind_) {
        case Kind::Uniform:
            return uniform_label_;
        case Kind::Table: {
            auto it = entries_.find(p);
            return it != entries_.end() ? it->second : default_label_;
        }
        case Kind::TowardOrigin: {
            const int axis = strict_max_axis(p);
            if (axis < 0) return 1;
            return p[axis] < 0 ? static_cast<Label>(axis) : static_cast<Label>(d_ + axis);
        }
        case Kind::PaperLiteral: {
            const int axis = strict_max_axis(p);
            if (axis < 0) return 1;
            if (p[axis] < 0)
                return axis == 0 ? static_cast<Label>(2 * d_ - 1) : static_cast<Label>(axis);
            return axis == d_ - 1 ? static_cast<Label>(2 * d_ - 2) : static_cast<Label>(d_ + axis);
        }
    }
    throw ContractViolation("unreachable rule kind");
}

std::string ConfigRule::name() const {
    switch (kind_) {
        case Kind::TowardOrigin: return "toward-origin";
        case Kind::PaperLiteral: return "paper-literal";
        case Kind::Uniform: return "uniform:" + std::to_string(int(uniform_label_));
        case Kind::Table:
            return "table(entries=" + std::to_string(entries_.size()) +
                   ",default=" + std::to_string(int(default_label_)) + ")";
    }
    return "?";
}

ConfigRule ConfigRule::parse(const std::string& spec, int d) {
    checked_dimension(d);
    if (spec == "toward-origin") return toward_origin(d);
    if (spec == "paper-literal") return paper_literal(d);
    if (spec.rfind("uniform:", 0) == 0) {
        const std::string arg = spec.substr(8);
        long long value;
        try {
            std::size_t pos = 0;
            value = std::stoll(arg, &pos);
            if (pos != arg.size()) throw std::invalid_argument(arg);
        } catch (const std::exception&) {
            throw ConfigError("rule: bad uniform label '" + arg + "'");
        }
        return uniform(d, checked_label(value, d, "rule"));
    }
    if (spec.rfind("table:", 0) == 0) {
        const std::string path = spec.substr(6);
        std::ifstream in(path);
        if (!in) throw IoError("rule: cannot open table file " + path);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError("rule: table file " + path + " is not valid JSON: " + e.what());
        }
        if (!j.is_object() || !j.contains("default") || !j.contains("entries"))
            throw ConfigError("rule: table file needs {\"default\":label,\"entries\":[...]}");
        const Label def = checked_label(j["default"].get<long long>(), d, "rule");
        std::unordered_map<Point, Label, PointHash> entries;
        for (const auto& e : j["entries"]) {
            if (!e.is_array() || e.size() != 2)
                throw ConfigError("rule: table entries must be [[coords],label] pairs");
            entries[point_from_json(e[0], d)] = checked_label(e[1].get<long long>(), d, "rule");
        }
        return table(d, std::move(entries), def);
    }
    throw ConfigError("rule: unknown spec '" + spec +
                      "' (expected toward-origin | paper-literal | uniform:<label> | table:<path>)");
}

nlohmann::json ConfigRule::to_json() const {
    nlohmann::json j;
    j["d"] = d_;
    switch (kind_) {
        case Kind::TowardOrigin:
            j["kind"] = "toward-origin";
            break;
        case Kind::PaperLiteral:
            j["kind"] = "paper-literal";
            break;
        case Kind::Uniform:
            j["kind"] = "uniform";
            j["label"] = int(uniform_label_);
            break;
        case Kind::Table: {
            j["kind"] = "table";
            j["default"] = int(default_label_);
            std::vector<std::pair<Point, Label>> sorted(entries_.begin(), entries_.end());
            std::sort(sorted.begin(), sorted.end(),
                      [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
            auto entries = nlohmann::json::array();
            for (const auto& [p, label] : sorted) {
                auto coords = nlohmann::json::array();
                for (Coord c : p.coords()) coords.push_back(c);
                entries.push_back(nlohmann::json::array({coords, int(label)}));
            }
            j["entries"] = std::move(entries);
            break;
        }
    }
    return j;
}

ConfigRule ConfigRule::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("d"))
        throw ConfigError("rule json needs {\"kind\":...,\"d\":...}");
    const int d = j["d"].get<int>();
    checked_dimension(d);
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "toward-origin") return toward_origin(d);
    if (kind == "paper-literal") return paper_literal(d);
    if (kind == "uniform")
        return uniform(d, checked_label(j.at("label").get<long long>(), d, "rule"));
    if (kind == "table") {
        std::unordered_map<Point, Label, PointHash> entries;
        for (const auto& e : j.at("entries"))
            entries[point_from_json(e.at(0), d)] =
                checked_label(e.at(1).get<long long>(), d, "rule");
        return table(d, std::move(entries), checked_label(j.at("default").get<long long>(), d, "rule"));
    }
    throw ConfigError("rule json: unknown kind '" + kind + "'");
}

}  // namespace rotorlab
