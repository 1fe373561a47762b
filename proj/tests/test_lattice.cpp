#include <doctest.h>

#include <limits>
#include <set>

#include "rotorlab/lattice.hpp"

using namespace rotorlab;

TEST_CASE("checked_dimension accepts 1..8 and rejects the rest") {
    for (int d = 1; d <= kMaxDimension; ++d) CHECK(checked_dimension(d) == d);
    CHECK_THROWS_AS(checked_dimension(0), ContractViolation);
    CHECK_THROWS_AS(checked_dimension(-2), ContractViolation);
    CHECK_THROWS_AS(checked_dimension(kMaxDimension + 1), ContractViolation);
}

TEST_CASE("Point basics") {
    const Point p{3, -1, 2};
    CHECK(p.dim() == 3);
    CHECK(p[0] == 3);
    CHECK(p[1] == -1);
    CHECK(p[2] == 2);
    CHECK(p.to_string() == "(3,-1,2)");
    CHECK_FALSE(p.is_origin());
    CHECK(Point::zero(3).is_origin());
    CHECK(Point::zero(2) == Point{0, 0});
    CHECK(p != Point{3, -1, 3});
    CHECK(p != Point{3, -1});
    CHECK_THROWS_AS(Point::zero(0), ContractViolation);
    CHECK_THROWS_AS((Point{1, 2, 3, 4, 5, 6, 7, 8, 9}), ContractViolation);
}

TEST_CASE("lex_less orders coordinates left to right") {
    CHECK(lex_less(Point{-1, 5}, Point{0, -9}));
    CHECK(lex_less(Point{2, -3}, Point{2, -2}));
    CHECK_FALSE(lex_less(Point{2, -2}, Point{2, -2}));
    CHECK_FALSE(lex_less(Point{3, 0}, Point{2, 9}));
}

TEST_CASE("direction labels split into +axis then -axis blocks") {
    CHECK(unit_vector(0, 3) == Point{1, 0, 0});
    CHECK(unit_vector(1, 3) == Point{0, 1, 0});
    CHECK(unit_vector(2, 3) == Point{0, 0, 1});
    CHECK(unit_vector(3, 3) == Point{-1, 0, 0});
    CHECK(unit_vector(4, 3) == Point{0, -1, 0});
    CHECK(unit_vector(5, 3) == Point{0, 0, -1});
    CHECK_THROWS_AS(unit_vector(6, 3), ContractViolation);
    CHECK(unit_vector(1, 1) == Point{-1});
}

TEST_CASE("translate moves one unit and checks for overflow") {
    CHECK(translate(Point{4, 4, 4}, 4) == Point{4, 3, 4});
    CHECK(translate(Point{0, 0}, 1) == Point{0, 1});
    CHECK_THROWS_AS(translate(Point{1, 2}, 4), ContractViolation);
    const Coord top = std::numeric_limits<Coord>::max();
    CHECK_THROWS_AS(translate(Point{top}, 0), OverflowError);
    const Coord bottom = std::numeric_limits<Coord>::min();
    CHECK_THROWS_AS(translate(Point{bottom}, 1), OverflowError);
}

TEST_CASE("infinity norm") {
    CHECK(infinity_norm(Point::zero(3)) == 0);
    CHECK(infinity_norm(Point{-5, 3, 2}) == 5);
    CHECK(infinity_norm(Point{1, -1}) == 1);
    CHECK(infinity_norm(Point{std::numeric_limits<Coord>::max()}) ==
          std::numeric_limits<Coord>::max());
    CHECK_THROWS_AS(infinity_norm(Point{std::numeric_limits<Coord>::min()}), OverflowError);
}

TEST_CASE("box membership and size") {
    const Box box(2, 3);
    CHECK(box.site_count() == 125);
    CHECK(box.contains(Point{2, -2, 0}));
    CHECK_FALSE(box.contains(Point{3, 0, 0}));
    CHECK_FALSE(box.contains(Point{0, 0}));  // wrong dimension
    CHECK(Box(0, 1).site_count() == 1);
    CHECK_THROWS_AS(Box(-1, 2), ContractViolation);
    CHECK_THROWS_AS(Box(std::numeric_limits<Coord>::max() / 2, 8).site_count(), OverflowError);
}

TEST_CASE("dense index is row-major with the first coordinate slowest") {
    const Box box(2, 3);
    CHECK(dense_index(Point{-2, -2, -2}, box) == 0);
    CHECK(dense_index(Point{-2, -2, -1}, box) == 1);
    CHECK(dense_index(Point{-2, -1, -2}, box) == 5);
    CHECK(dense_index(Point{-1, -2, -2}, box) == 25);
    CHECK(dense_index(Point{2, 2, 2}, box) == 124);
    CHECK_THROWS_AS(dense_index(Point{3, 0, 0}, box), ContractViolation);
}

TEST_CASE("dense index round-trips over the whole box") {
    const Box box(2, 3);
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < box.site_count(); ++i) {
        const Point p = point_at_dense_index(i, box);
        CHECK(box.contains(p));
        CHECK(dense_index(p, box) == i);
        seen.insert(i);
    }
    CHECK(seen.size() == 125);
    CHECK_THROWS_AS(point_at_dense_index(125, box), ContractViolation);
}

TEST_CASE("dense index round-trips in d=1 and d=4") {
    for (const Box box : {Box(7, 1), Box(2, 4)}) {
        for (std::uint64_t i = 0; i < box.site_count(); ++i)
            CHECK(dense_index(point_at_dense_index(i, box), box) == i);
    }
}
