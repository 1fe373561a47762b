#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "naive_engine.hpp"
#include "rotorlab/config_rule.hpp"

using namespace rotorlab;

namespace {

naive::P to_naive(const Point& p) {
    return naive::P(p.coords().begin(), p.coords().end());
}

}  // namespace

TEST_CASE("strict max axis") {
    CHECK(strict_max_axis(Point{3, 1, 0}) == 0);
    CHECK(strict_max_axis(Point{1, -4, 2}) == 1);
    CHECK(strict_max_axis(Point{0, 0, -7}) == 2);
    CHECK(strict_max_axis(Point{2, 2, 1}) == -1);   // tie
    CHECK(strict_max_axis(Point{-2, 2}) == -1);     // tie by magnitude
    CHECK(strict_max_axis(Point::zero(3)) == -1);   // all zero
    CHECK(strict_max_axis(Point{5}) == 0);
    CHECK(strict_max_axis(Point{0}) == -1);
}

TEST_CASE("toward-origin labels point the farthest axis back at the origin") {
    const ConfigRule rule = ConfigRule::toward_origin(3);
    CHECK(rule.initial_label(Point{3, 1, 0}) == 3);    // x largest, positive -> -x
    CHECK(rule.initial_label(Point{-3, 1, 0}) == 0);   // x largest, negative -> +x
    CHECK(rule.initial_label(Point{1, 2, -1}) == 4);   // y largest, positive -> -y
    CHECK(rule.initial_label(Point{1, -2, 1}) == 1);   // y largest, negative -> +y
    CHECK(rule.initial_label(Point{0, 0, 7}) == 5);    // z largest, positive -> -z
    CHECK(rule.initial_label(Point{0, 0, -7}) == 2);   // z largest, negative -> +z
    CHECK(rule.initial_label(Point{2, 2, 1}) == 1);    // tie -> fixed label 1
    CHECK(rule.initial_label(Point::zero(3)) == 1);

    const ConfigRule line = ConfigRule::toward_origin(1);
    CHECK(line.initial_label(Point{4}) == 1);
    CHECK(line.initial_label(Point{-4}) == 0);
    CHECK(line.initial_label(Point{0}) == 1);
}

TEST_CASE("paper-literal differs from toward-origin on exactly two loci") {
    const ConfigRule corrected = ConfigRule::toward_origin(3);
    const ConfigRule literal = ConfigRule::paper_literal(3);
    CHECK(literal.initial_label(Point{-3, 0, 0}) == 5);  // corrected would say 0
    CHECK(literal.initial_label(Point{0, 0, 4}) == 4);   // corrected would say 5
    // they disagree exactly where the strict max is axis 0 negative or the
    // last axis positive: two cones of 1+9+25 = 35 sites each inside B[0,3]
    const Box box(3, 3);
    int disagreements = 0;
    for (std::uint64_t i = 0; i < box.site_count(); ++i) {
        const Point p = point_at_dense_index(i, box);
        const int axis = strict_max_axis(p);
        const bool expected_diff =
            axis >= 0 && ((axis == 0 && p[0] < 0) || (axis == 2 && p[2] > 0));
        const bool diff = corrected.initial_label(p) != literal.initial_label(p);
        CHECK(diff == expected_diff);
        if (diff) ++disagreements;
    }
    CHECK(disagreements == 70);
}

TEST_CASE("both variants agree with the reference rule over B[0,4]") {
    for (int d = 1; d <= 3; ++d) {
        const ConfigRule corrected = ConfigRule::toward_origin(d);
        const ConfigRule literal = ConfigRule::paper_literal(d);
        const Box box(4, d);
        for (std::uint64_t i = 0; i < box.site_count(); ++i) {
            const Point p = point_at_dense_index(i, box);
            CHECK(int(corrected.initial_label(p)) == naive::initial_label(to_naive(p), 0));
            CHECK(int(literal.initial_label(p)) == naive::initial_label(to_naive(p), 1));
        }
    }
}

TEST_CASE("uniform rule") {
    const ConfigRule rule = ConfigRule::uniform(2, 3);
    CHECK(rule.initial_label(Point{9, -4}) == 3);
    CHECK(rule.initial_label(Point::zero(2)) == 3);
    CHECK(rule.name() == "uniform:3");
    CHECK_THROWS_AS(ConfigRule::uniform(2, 4), ConfigError);
}

TEST_CASE("table rule falls back to its default label") {
    std::unordered_map<Point, Label, PointHash> entries;
    entries[Point{1, 0}] = 2;
    entries[Point{0, -1}] = 3;
    const ConfigRule rule = ConfigRule::table(2, entries, 1);
    CHECK(rule.initial_label(Point{1, 0}) == 2);
    CHECK(rule.initial_label(Point{0, -1}) == 3);
    CHECK(rule.initial_label(Point{5, 5}) == 1);
    CHECK_THROWS_AS(ConfigRule::table(2, entries, 7), ConfigError);
    entries[Point{0, 0}] = 9;
    CHECK_THROWS_AS(ConfigRule::table(2, entries, 1), ConfigError);
}

TEST_CASE("rule dimension is enforced") {
    const ConfigRule rule = ConfigRule::toward_origin(3);
    CHECK_THROWS_AS(rule.initial_label(Point{1, 2}), ContractViolation);
}

TEST_CASE("parse accepts the documented specs") {
    CHECK(ConfigRule::parse("toward-origin", 3).name() == "toward-origin");
    CHECK(ConfigRule::parse("paper-literal", 2).name() == "paper-literal");
    CHECK(ConfigRule::parse("uniform:5", 3).initial_label(Point{1, 1, 1}) == 5);
    CHECK_THROWS_AS(ConfigRule::parse("uniform:9", 3), ConfigError);
    CHECK_THROWS_AS(ConfigRule::parse("uniform:x", 3), ConfigError);
    CHECK_THROWS_AS(ConfigRule::parse("sideways", 3), ConfigError);
    CHECK_THROWS_AS(ConfigRule::parse("table:/no/such/file.json", 2), IoError);
}

TEST_CASE("parse reads a table file") {
    const auto path = std::filesystem::temp_directory_path() / "rotorlab_table_test.json";
    {
        std::ofstream out(path);
        out << R"({"default":1,"entries":[[[2,-1],3],[[0,0],0]]})";
    }
    const ConfigRule rule = ConfigRule::parse("table:" + path.string(), 2);
    CHECK(rule.initial_label(Point{2, -1}) == 3);
    CHECK(rule.initial_label(Point{0, 0}) == 0);
    CHECK(rule.initial_label(Point{1, 1}) == 1);
    std::filesystem::remove(path);
}

TEST_CASE("rules round-trip through json") {
    std::unordered_map<Point, Label, PointHash> entries;
    entries[Point{1, 0, 0}] = 2;
    entries[Point{0, 2, 0}] = 5;
    for (const ConfigRule& rule :
         {ConfigRule::toward_origin(3), ConfigRule::paper_literal(3), ConfigRule::uniform(3, 4),
          ConfigRule::table(3, entries, 0)}) {
        const ConfigRule back = ConfigRule::from_json(rule.to_json());
        CHECK(back.to_json() == rule.to_json());
        CHECK(back.name() == rule.name());
        const Box box(2, 3);
        for (std::uint64_t i = 0; i < box.site_count(); ++i) {
            const Point p = point_at_dense_index(i, box);
            CHECK(back.initial_label(p) == rule.initial_label(p));
        }
    }
    CHECK_THROWS_AS(ConfigRule::from_json(nlohmann::json{{"kind", "nope"}, {"d", 2}}),
                    ConfigError);
}
