#include "rotorlab/lattice.hpp"

#include <limits>
#include <sstream>

namespace rotorlab {

int checked_dimension(int d) {
    if (d < 1 || d > kMaxDimension)
        throw ContractViolation("dimension must be in [1," + std::to_string(kMaxDimension) +
                                "], got " + std::to_string(d));
    return d;
}

Point::Point(std::initializer_list<Coord> coords) {
    if (coords.size() < 1 || coords.size() > static_cast<std::size_t>(kMaxDimension))
        throw ContractViolation("point dimension out of range: " + std::to_string(coords.size()));
    dim_ = static_cast<std::int32_t>(coords.size());
    std::size_t i = 0;
    for (Coord v : coords) c_[i++] = v;
}

Point::Point(std::span<const Coord> coords) {
    if (coords.size() < 1 || coords.size() > static_cast<std::size_t>(kMaxDimension))
        throw ContractViolation("point dimension out of range: " + std::to_string(coords.size()));
    dim_ = static_cast<std::int32_t>(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) c_[i] = coords[i];
}

Point Point::zero(int d) {
    checked_dimension(d);
    Point p;
    p.dim_ = d;
    return p;
}

bool Point::is_origin() const {
    for (int i = 0; i < dim_; ++i)
        if (c_[static_cast<std::size_t>(i)] != 0) return false;
    return true;
}

std::string Point::to_string() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < dim_; ++i) {
        if (i) os << ',';
        os << c_[static_cast<std::size_t>(i)];
    }
    os << ')';
    return os.str();
}

bool lex_less(const Point& a, const Point& b) {
    if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
    for (int i = 0; i < a.dim_; ++i) {
        const auto x = a.c_[static_cast<std::size_t>(i)];
        const auto y = b.c_[static_cast<std::size_t>(i)];
        if (x != y) return x < y;
    }
    return false;
}

Box::Box(Coord n, int dim) : radius(n), d(checked_dimension(dim)) {
    if (n < 0) throw ContractViolation("box radius must be non-negative, got " + std::to_string(n));
}

bool Box::contains(const Point& p) const {
    if (p.dim() != d) return false;
    return infinity_norm(p) <= radius;
}

std::uint64_t Box::site_count() const {
    const std::uint64_t side = 2 * static_cast<std::uint64_t>(radius) + 1;
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) {
        if (side != 0 && count > std::numeric_limits<std::uint64_t>::max() / side)
            throw OverflowError("box site count exceeds 64 bits");
        count *= side;
    }
    return count;
}

Point unit_vector(Label label, int d) {
    checked_dimension(d);
    if (label >= direction_count(d))
        throw ContractViolation("direction label " + std::to_string(int(label)) +
                                " out of range for d=" + std::to_string(d));
    Point p = Point::zero(d);
    if (label < d)
        p[label] = 1;
    else
        p[label - d] = -1;
    return p;
}

Point translate(const Point& p, Label label) {
    const int d = p.dim();
    if (label >= direction_count(d))
        throw ContractViolation("direction label " + std::to_string(int(label)) +
                                " out of range for d=" + std::to_string(d));
    Point q = p;
    const int axis = label < d ? label : label - d;
    const Coord delta = label < d ? 1 : -1;
    Coord out;
    if (__builtin_add_overflow(q[axis], delta, &out))
        throw OverflowError("coordinate overflow translating " + p.to_string());
    q[axis] = out;
    return q;
}

Coord infinity_norm(const Point& p) {
    std::uint64_t best = 0;
    for (int i = 0; i < p.dim(); ++i) {
        const Coord v = p[i];
        const std::uint64_t a =
            v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
        if (a > best) best = a;
    }
    if (best > static_cast<std::uint64_t>(std::numeric_limits<Coord>::max()))
        throw OverflowError("infinity norm exceeds signed 64-bit range");
    return static_cast<Coord>(best);
}

std::uint64_t dense_index(const Point& p, const Box& box) {
    if (!box.contains(p))
        throw ContractViolation("point " + p.to_string() + " outside box of radius " +
                                std::to_string(box.radius));
    const std::uint64_t side = 2 * static_cast<std::uint64_t>(box.radius) + 1;
    std::uint64_t index = 0;
    for (int i = 0; i < box.d; ++i)
        index = index * side + static_cast<std::uint64_t>(p[i] + box.radius);
    return index;
}

Point point_at_dense_index(std::uint64_t index, const Box& box) {
    if (index >= box.site_count())
        throw ContractViolation("dense index " + std::to_string(index) + " out of range");
    const std::uint64_t side = 2 * static_cast<std::uint64_t>(box.radius) + 1;
    Point p = Point::zero(box.d);
    for (int i = box.d - 1; i >= 0; --i) {
        p[i] = static_cast<Coord>(index % side) - box.radius;
        index /= side;
    }
    return p;
}

}  // namespace rotorlab
