#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "rotorlab/errors.hpp"

namespace rotorlab {

using Coord = std::int64_t;

// Direction label in {0,...,2d-1}: label i < d is +1 along axis i,
// label i >= d is -1 along axis i-d.
using Label = std::uint8_t;

// Compile-time bound on the lattice dimension so points stay flat
// value types. Anything the harness runs is d <= 4.
inline constexpr int kMaxDimension = 8;

int checked_dimension(int d);
inline int direction_count(int d) { return 2 * d; }

// A point of Z^d. Unused trailing coordinates are zero.
class Point {
public:
    Point() = default;
    Point(std::initializer_list<Coord> coords);
    explicit Point(std::span<const Coord> coords);

    static Point zero(int d);

    int dim() const { return dim_; }
    Coord operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    Coord& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
    std::span<const Coord> coords() const { return {c_.data(), static_cast<std::size_t>(dim_)}; }

    bool is_origin() const;
    std::string to_string() const;

    friend bool operator==(const Point& a, const Point& b) {
        if (a.dim_ != b.dim_) return false;
        for (int i = 0; i < a.dim_; ++i)
            if (a.c_[static_cast<std::size_t>(i)] != b.c_[static_cast<std::size_t>(i)]) return false;
        return true;
    }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    friend bool lex_less(const Point& a, const Point& b);

private:
    std::array<Coord, kMaxDimension> c_{};
    std::int32_t dim_ = 0;
};

struct PointHash {
    std::size_t operator()(const Point& p) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (int i = 0; i < p.dim(); ++i) {
            h ^= static_cast<std::uint64_t>(p[i]);
            h *= 0x100000001b3ull;
            h ^= h >> 29;
        }
        return static_cast<std::size_t>(h);
    }
};

// The box B[0,n] = [-n,n]^d under the infinity norm.
struct Box {
    Coord radius = 0;
    int d = 1;

    Box() = default;
    Box(Coord n, int dim);

    bool contains(const Point& p) const;
    // (2n+1)^d; throws OverflowError if it does not fit in 64 bits.
    std::uint64_t site_count() const;
};

Point unit_vector(Label label, int d);

// p + unit_vector(label). Coordinate overflow is a checked error.
Point translate(const Point& p, Label label);

Coord infinity_norm(const Point& p);

// Bijection from box sites to {0,...,(2n+1)^d - 1}, row-major over the
// shifted coordinates p_i + n (coordinate 0 varies slowest).
std::uint64_t dense_index(const Point& p, const Box& box);
Point point_at_dense_index(std::uint64_t index, const Box& box);

}  // namespace rotorlab
