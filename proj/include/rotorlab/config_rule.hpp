#pragma once

#include <string>
#include <unordered_map>

#include <nlohmann/json_fwd.hpp>

#include "rotorlab/lattice.hpp"

namespace rotorlab {

// Initial rotor configuration: a total map from lattice points to labels.
//
// TowardOrigin    sites with a unique strict-max coordinate point one step
//                 toward the origin along that axis; everything else (ties,
//                 origin) gets label 1.
// PaperLiteral    like TowardOrigin except two loci: a strict-max negative
//                 first coordinate yields label 2d-1 and a strict-max
//                 positive last coordinate yields label 2d-2.
// Uniform         one fixed label everywhere.
// Table           finite point->label map with a default label.
class ConfigRule {
public:
    enum class Kind { TowardOrigin, PaperLiteral, Uniform, Table };

    static ConfigRule toward_origin(int d);
    static ConfigRule paper_literal(int d);
    static ConfigRule uniform(int d, Label label);
    static ConfigRule table(int d, std::unordered_map<Point, Label, PointHash> entries,
                            Label default_label);

    // CLI spec strings: toward-origin | paper-literal | uniform:<label> | table:<path>.
    static ConfigRule parse(const std::string& spec, int d);

    Label initial_label(const Point& p) const;

    Kind kind() const { return kind_; }
    int dim() const { return d_; }
    // Short identifier for output headers, e.g. "uniform:3".
    std::string name() const;

    nlohmann::json to_json() const;
    static ConfigRule from_json(const nlohmann::json& j);

private:
    ConfigRule(Kind kind, int d) : kind_(kind), d_(d) {}

    Kind kind_;
    int d_;
    Label uniform_label_ = 0;
    Label default_label_ = 0;
    std::unordered_map<Point, Label, PointHash> entries_;
};

inline Label initial_label(const Point& p, const ConfigRule& rule) {
    return rule.initial_label(p);
}

// Axis i with |p_i| > |p_j| for all j != i, or -1 if none. For d=1 the max
// over the empty set of other coordinates is -infinity, so every nonzero
// coordinate is a strict max.
int strict_max_axis(const Point& p);

}  // namespace rotorlab
