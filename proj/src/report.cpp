#include "ybt/report.hpp"

#include <algorithm>

namespace ybt {

void CheckReport::add(std::string name, Magnitude value, bool gating, std::string note) {
    entries_.push_back({std::move(name), std::move(value), gating, std::move(note)});
}

bool CheckReport::verdict() const {
    return std::all_of(entries_.begin(), entries_.end(), [&](const Entry& e) {
        return !e.gating || e.value.passes(tolerance_);
    });
}

bool CheckReport::passes(const std::string& name) const { return at(name).passes(tolerance_); }

const Magnitude& CheckReport::at(const std::string& name) const {
    for (const auto& e : entries_)
        if (e.name == name) return e.value;
    throw Error("check report has no residual named \"" + name + "\"");
}

}  // namespace ybt
