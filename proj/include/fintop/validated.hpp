#pragma once

#include "fintop/setcore.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fintop {

/// One failed axiom and its lexicographically least witness.
struct Violation {
    std::string axiom;
    std::vector<PointSet> witness;

    /// "union closure: {0},{1}"
    std::string describe() const;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ViolationReport {
    std::vector<Violation> violations;

    bool empty() const noexcept { return violations.empty(); }
    bool names(std::string_view axiom) const;
    std::vector<std::string> lines() const;
};

/// Either a value that passed validation or the report explaining why not.
template <class T>
class Validated {
public:
    Validated(T value) : state_(std::move(value)) {}
    Validated(ViolationReport report) : state_(std::move(report)) {}

    bool ok() const noexcept { return std::holds_alternative<T>(state_); }
    explicit operator bool() const noexcept { return ok(); }

    const T& value() const
    {
        if (!ok())
            throw std::logic_error("value() on a failed validation");
        return std::get<T>(state_);
    }

    const ViolationReport& report() const
    {
        if (ok())
            throw std::logic_error("report() on a successful validation");
        return std::get<ViolationReport>(state_);
    }

private:
    std::variant<T, ViolationReport> state_;
};

inline std::string Violation::describe() const
{
    std::string out = axiom + ":";
    for (std::size_t i = 0; i < witness.size(); ++i) {
        out += i == 0 ? " " : ",";
        out += to_string(witness[i]);
    }
    return out;
}

inline bool ViolationReport::names(std::string_view axiom) const
{
    for (const auto& v : violations)
        if (v.axiom == axiom)
            return true;
    return false;
}

inline std::vector<std::string> ViolationReport::lines() const
{
    std::vector<std::string> out;
    out.reserve(violations.size());
    for (const auto& v : violations)
        out.push_back(v.describe());
    return out;
}

} // namespace fintop
