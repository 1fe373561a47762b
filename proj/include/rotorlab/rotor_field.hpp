#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rotorlab/config_rule.hpp"
#include "rotorlab/lattice.hpp"

namespace rotorlab {

// Cyclic successor permutation applied to a site's label after each
// departure. Must be a single 2d-cycle so every direction gets used.
class RotorOrder {
public:
    static RotorOrder cyclic(int d);  // i -> (i+1) mod 2d
    static RotorOrder from_successors(int d, std::vector<Label> successor);
    // "default" or a comma-separated successor list like "1,2,3,4,5,0".
    static RotorOrder parse(const std::string& spec, int d);

    Label next(Label label) const { return successor_[label]; }
    int dim() const { return d_; }
    bool is_cyclic_default() const;
    std::string name() const;
    const std::vector<Label>& successors() const { return successor_; }

    friend bool operator==(const RotorOrder& a, const RotorOrder& b) {
        return a.successor_ == b.successor_;
    }

private:
    RotorOrder(int d, std::vector<Label> successor)
        : d_(d), successor_(std::move(successor)) {}

    int d_;
    std::vector<Label> successor_;
};

// Total labeling of Z^d: a ConfigRule for never-modified sites plus a finite
// overlay of modified ones. An optional dense backing keeps labels of one
// declared box in contiguous storage; lookups agree with the pure overlay
// semantics either way.
class RotorField {
public:
    explicit RotorField(ConfigRule rule);

    int dim() const { return rule_.dim(); }
    const ConfigRule& rule() const { return rule_; }

    Label label_at(const Point& p) const;
    void set_label(const Point& p, Label label);

    // Materializes the box in contiguous storage and migrates overlay
    // entries inside it. No-op on repeat calls with the same box.
    void enable_dense(const Box& box);
    bool dense_enabled() const { return dense_.has_value(); }

    std::size_t modified_count() const;
    // Modified sites in lexicographic coordinate order.
    std::vector<std::pair<Point, Label>> modified_entries_sorted() const;

private:
    struct Dense {
        Box box;
        std::vector<Label> labels;
        std::vector<std::uint8_t> modified;
    };

    ConfigRule rule_;
    std::unordered_map<Point, Label, PointHash> overlay_;
    std::optional<Dense> dense_;
};

}  // namespace rotorlab
