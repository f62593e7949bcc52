#pragma once

#include "fintop/setcore.hpp"

#include <vector>

namespace fintop {

/// A total map between two finite carriers, stored as a lookup table.
class FiniteFunction {
public:
    /// Throws PreconditionError unless table has dom.size() entries, each below cod.size().
    FiniteFunction(Carrier dom, Carrier cod, std::vector<Point> table);

    static FiniteFunction identity(Carrier c);
    static FiniteFunction constant(Carrier dom, Carrier cod, Point value);

    Carrier dom() const noexcept { return dom_; }
    Carrier cod() const noexcept { return cod_; }
    const std::vector<Point>& table() const noexcept { return table_; }
    Point operator()(Point p) const { return table_.at(p); }

    bool is_injective() const noexcept { return injective_; }
    bool is_surjective() const noexcept { return surjective_; }

    friend bool operator==(const FiniteFunction& a, const FiniteFunction& b)
    {
        return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.table_ == b.table_;
    }

private:
    Carrier dom_;
    Carrier cod_;
    std::vector<Point> table_;
    bool injective_ = true;
    bool surjective_ = true;
};

PointSet preimage(const FiniteFunction& f, const PointSet& u);
PointSet image(const FiniteFunction& f, const PointSet& a);
/// f(dom).
PointSet image_set(const FiniteFunction& f);

} // namespace fintop
