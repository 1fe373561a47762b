#include "rotorlab/rotor_field.hpp"

#include <algorithm>
#include <sstream>

namespace rotorlab {

RotorOrder RotorOrder::cyclic(int d) {
    checked_dimension(d);
    std::vector<Label> successor(static_cast<std::size_t>(direction_count(d)));
    for (std::size_t i = 0; i < successor.size(); ++i)
        successor[i] = static_cast<Label>((i + 1) % successor.size());
    return RotorOrder(d, std::move(successor));
}

RotorOrder RotorOrder::from_successors(int d, std::vector<Label> successor) {
    checked_dimension(d);
    const std::size_t count = static_cast<std::size_t>(direction_count(d));
    if (successor.size() != count)
        throw ConfigError("order: expected " + std::to_string(count) + " successor entries, got " +
                          std::to_string(successor.size()));
    for (Label s : successor)
        if (s >= count)
            throw ConfigError("order: successor value " + std::to_string(int(s)) + " out of range");
    // single 2d-cycle check: from 0, all labels must be reached in 2d hops
    std::vector<bool> seen(count, false);
    Label cur = 0;
    for (std::size_t i = 0; i < count; ++i) {
        if (seen[cur]) throw ConfigError("order: successor map is not a single cycle");
        seen[cur] = true;
        cur = successor[cur];
    }
    if (cur != 0) throw ConfigError("order: successor map is not a single cycle");
    return RotorOrder(d, std::move(successor));
}

RotorOrder RotorOrder::parse(const std::string& spec, int d) {
    if (spec == "default") return cyclic(d);
    std::vector<Label> successor;
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t pos = 0;
            const long long v = std::stoll(item, &pos);
            if (pos != item.size() || v < 0 || v > 255) throw std::invalid_argument(item);
            successor.push_back(static_cast<Label>(v));
        } catch (const std::exception&) {
            throw ConfigError("order: bad successor entry '" + item + "'");
        }
    }
    return from_successors(d, std::move(successor));
}

bool RotorOrder::is_cyclic_default() const {
    for (std::size_t i = 0; i < successor_.size(); ++i)
        if (successor_[i] != (i + 1) % successor_.size()) return false;
    return true;
}

std::string RotorOrder::name() const {
    if (is_cyclic_default()) return "default";
    std::string s;
    for (std::size_t i = 0; i < successor_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(int(successor_[i]));
    }
    return s;
}

RotorField::RotorField(ConfigRule rule) : rule_(std::move(rule)) {}

Label RotorField::label_at(const Point& p) const {
    if (dense_ && dense_->box.contains(p))
        return dense_->labels[dense_index(p, dense_->box)];
    auto it = overlay_.find(p);
    if (it != overlay_.end()) return it->second;
    return rule_.initial_label(p);
}

void RotorField::set_label(const Point& p, Label label) {
    if (label >= direction_count(dim()))
        throw ContractViolation("label " + std::to_string(int(label)) + " out of range");
    if (dense_ && dense_->box.contains(p)) {
        const auto idx = dense_index(p, dense_->box);
        dense_->labels[idx] = label;
        dense_->modified[idx] = 1;
        return;
    }
    overlay_[p] = label;
}

void RotorField::enable_dense(const Box& box) {
    if (box.d != dim())
        throw ContractViolation("dense box dimension mismatch");
    if (dense_) {
        if (dense_->box.radius == box.radius) return;
        throw ContractViolation("dense backing already enabled with a different box");
    }
    const std::uint64_t count = box.site_count();
    Dense dense{box, std::vector<Label>(count), std::vector<std::uint8_t>(count, 0)};
    for (std::uint64_t i = 0; i < count; ++i)
        dense.labels[i] = rule_.initial_label(point_at_dense_index(i, box));
    for (auto it = overlay_.begin(); it != overlay_.end();) {
        if (dense.box.contains(it->first)) {
            const auto idx = dense_index(it->first, dense.box);
            dense.labels[idx] = it->second;
            dense.modified[idx] = 1;
            it = overlay_.erase(it);
        } else {
            ++it;
        }
    }
    dense_ = std::move(dense);
}

std::size_t RotorField::modified_count() const {
    std::size_t n = overlay_.size();
    if (dense_)
        n += static_cast<std::size_t>(
            std::count(dense_->modified.begin(), dense_->modified.end(), std::uint8_t(1)));
    return n;
}

std::vector<std::pair<Point, Label>> RotorField::modified_entries_sorted() const {
    std::vector<std::pair<Point, Label>> out(overlay_.begin(), overlay_.end());
    if (dense_) {
        for (std::uint64_t i = 0; i < dense_->modified.size(); ++i)
            if (dense_->modified[i])
                out.emplace_back(point_at_dense_index(i, dense_->box), dense_->labels[i]);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
    return out;
}

}  // namespace rotorlab
