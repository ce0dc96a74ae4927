#pragma once

#include "ybt/scalar.hpp"

#include <string>
#include <vector>

namespace ybt {

/// Named residuals from a batch of identity checks.
///
/// Only gating entries decide the verdict; the rest are reported alongside
/// (e.g. the base YBE residual in a twist-pair check).
class CheckReport {
public:
    struct Entry {
        std::string name;
        Magnitude value;
        bool gating = true;
        std::string note;
    };

    explicit CheckReport(double tolerance = kDefaultTolerance) : tolerance_(tolerance) {}

    void add(std::string name, Magnitude value, bool gating = true, std::string note = {});
    void warn(std::string message) { warnings_.push_back(std::move(message)); }

    /// True iff every gating residual is 0 (rational) or below tolerance (complex).
    bool verdict() const;
    bool passes(const std::string& name) const;
    const Magnitude& at(const std::string& name) const;

    double tolerance() const noexcept { return tolerance_; }
    const std::vector<Entry>& entries() const noexcept { return entries_; }
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }

private:
    double tolerance_;
    std::vector<Entry> entries_;
    std::vector<std::string> warnings_;
};

}  // namespace ybt
