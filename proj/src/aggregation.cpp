#include "rotorlab/aggregation.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include <nlohmann/json.hpp>

#include "rotorlab/csv.hpp"
#include "rotorlab/rng.hpp"

namespace rotorlab {

AggregationState::AggregationState(ConfigRule rule) : field(std::move(rule)) {
    occupied.insert(Point::zero(field.dim()));
}

void aggregate_into(AggregationState& a, std::uint64_t k, const RotorOrder& order,
                    std::uint64_t cap) {
    if (order.dim() != a.dim())
        throw ContractViolation("rotor order dimension does not match the aggregation state");
    const int d = a.dim();
    for (std::uint64_t i = 0; i < k; ++i) {
        const std::uint64_t particle_cap = cap != 0 ? cap : default_region_cap(a.occupied);
        Point p = Point::zero(d);
        std::uint64_t taken = 0;
        while (a.occupied.contains(p)) {
            if (taken >= particle_cap)
                throw CapExhaustedError("step cap " + std::to_string(particle_cap) +
                                        " exhausted before particle " + std::to_string(i + 1) +
                                        " left the cluster");
            const Label current = a.field.label_at(p);
            const Point departed = p;
            p = translate(p, current);
            a.field.set_label(departed, order.next(current));
            ++taken;
        }
        a.occupied.insert(p);
        ++a.particles_released;
    }
}

AggregationState aggregate(std::uint64_t k, const ConfigRule& rule, const RotorOrder& order,
                           std::uint64_t cap) {
    AggregationState a(rule);
    aggregate_into(a, k, order, cap);
    return a;
}

namespace {

ShapeReport shape_of(const PointSet& occupied, int d) {
    ShapeReport report;
    for (const Point& p : occupied)
        report.outradius = std::max(report.outradius, infinity_norm(p));

    // grow r until some site of the shell at radius r is missing
    Coord r = 0;
    for (; r <= report.outradius; ++r) {
        const Box box(r, d);
        bool full = true;
        const std::uint64_t count = box.site_count();
        for (std::uint64_t i = 0; i < count && full; ++i) {
            const Point p = point_at_dense_index(i, box);
            if (infinity_norm(p) == r && !occupied.contains(p)) full = false;
        }
        if (!full) break;
    }
    report.inradius = r - 1;
    if (report.inradius < 0) report.inradius = 0;  // unreachable while origin is occupied
    report.sphericity = report.outradius == 0
                            ? 1.0
                            : static_cast<double>(report.inradius) /
                                  static_cast<double>(report.outradius);
    return report;
}

// shell capacity |{p : ||p||_inf = r}| = (2r+1)^d - (2r-1)^d
std::uint64_t shell_capacity(Coord r, int d) {
    if (r == 0) return 1;
    return Box(r, d).site_count() - Box(r - 1, d).site_count();
}

}  // namespace

ShapeReport shape_report(const AggregationState& a) {
    if (a.occupied.empty()) throw ContractViolation("shape_report requires a non-empty cluster");
    return shape_of(a.occupied, a.dim());
}

IdlaSummary idla_baseline(int d, std::uint64_t k, std::uint64_t seed, int trials) {
    checked_dimension(d);
    if (trials < 1) throw ContractViolation("idla_baseline requires trials >= 1");
    IdlaSummary summary;
    summary.k = k;
    summary.trials = trials;
    summary.seed = seed;
    summary.min_sphericity = std::numeric_limits<double>::infinity();
    summary.max_sphericity = -std::numeric_limits<double>::infinity();
    const auto dirs = static_cast<std::uint32_t>(direction_count(d));
    double total = 0.0;
    for (int t = 0; t < trials; ++t) {
        auto gen = seeded_engine(seed, static_cast<std::uint64_t>(t));
        PointSet occupied;
        occupied.insert(Point::zero(d));
        for (std::uint64_t i = 0; i < k; ++i) {
            const std::uint64_t particle_cap = default_region_cap(occupied);
            Point p = Point::zero(d);
            std::uint64_t taken = 0;
            while (occupied.contains(p)) {
                if (taken >= particle_cap)
                    throw CapExhaustedError("IDLA particle exceeded its defensive step cap");
                p = translate(p, static_cast<Label>(bounded_draw(gen, dirs)));
                ++taken;
            }
            occupied.insert(p);
        }
        const double s = shape_of(occupied, d).sphericity;
        total += s;
        summary.min_sphericity = std::min(summary.min_sphericity, s);
        summary.max_sphericity = std::max(summary.max_sphericity, s);
    }
    summary.mean_sphericity = total / trials;
    return summary;
}

std::string cluster_json(const AggregationState& a) {
    std::vector<Point> sites(a.occupied.begin(), a.occupied.end());
    std::sort(sites.begin(), sites.end(),
              [](const Point& x, const Point& y) { return lex_less(x, y); });
    nlohmann::json j;
    j["d"] = a.dim();
    j["k"] = a.particles_released;
    auto arr = nlohmann::json::array();
    for (const Point& p : sites) {
        auto coords = nlohmann::json::array();
        for (Coord c : p.coords()) coords.push_back(c);
        arr.push_back(std::move(coords));
    }
    j["sites"] = std::move(arr);
    return j.dump() + "\n";
}

std::string shells_csv(const AggregationState& a, const RotorOrder& order) {
    const ShapeReport report = shape_report(a);
    std::vector<std::uint64_t> occupied_at(static_cast<std::size_t>(report.outradius) + 1, 0);
    for (const Point& p : a.occupied) ++occupied_at[static_cast<std::size_t>(infinity_norm(p))];

    std::string out = csv_comment_header(a.field.rule().name(), order.name(),
                                         "{\"d\":" + std::to_string(a.dim()) +
                                             ",\"k\":" + std::to_string(a.particles_released) + "}");
    out += "radius,occupied,capacity\n";
    for (Coord r = 0; r <= report.outradius; ++r) {
        out += std::to_string(r);
        out += ',';
        out += std::to_string(occupied_at[static_cast<std::size_t>(r)]);
        out += ',';
        out += std::to_string(shell_capacity(r, a.dim()));
        out += '\n';
    }
    return out;
}

}  // namespace rotorlab
