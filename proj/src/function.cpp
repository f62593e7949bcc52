#include "fintop/function.hpp"

#include "fintop/error.hpp"

namespace fintop {

FiniteFunction::FiniteFunction(Carrier dom, Carrier cod, std::vector<Point> table)
    : dom_(dom), cod_(cod), table_(std::move(table))
{
    if (table_.size() != dom.size())
        throw PreconditionError("function table has " + std::to_string(table_.size())
                                + " entries for a domain of size " + std::to_string(dom.size()));
    Mask hit = 0;
    for (std::size_t i = 0; i < table_.size(); ++i) {
        Point v = table_[i];
        if (v >= cod.size())
            throw PreconditionError("function value " + std::to_string(v) + " at point " + std::to_string(i)
                                    + " outside a codomain of size " + std::to_string(cod.size()));
        if (hit & (Mask{1} << v))
            injective_ = false;
        hit |= Mask{1} << v;
    }
    surjective_ = hit == cod.full_mask();
}

FiniteFunction FiniteFunction::identity(Carrier c)
{
    std::vector<Point> t(c.size());
    for (Point p = 0; p < c.size(); ++p)
        t[p] = p;
    return FiniteFunction(c, c, std::move(t));
}

FiniteFunction FiniteFunction::constant(Carrier dom, Carrier cod, Point value)
{
    return FiniteFunction(dom, cod, std::vector<Point>(dom.size(), value));
}

PointSet preimage(const FiniteFunction& f, const PointSet& u)
{
    require_same_carrier(f.cod(), u.carrier(), "preimage");
    Mask out = 0;
    for (Point p = 0; p < f.dom().size(); ++p)
        if (u.contains(f.table()[p]))
            out |= Mask{1} << p;
    return PointSet(f.dom(), out);
}

PointSet image(const FiniteFunction& f, const PointSet& a)
{
    require_same_carrier(f.dom(), a.carrier(), "image");
    Mask out = 0;
    for (Point p : a.elements())
        out |= Mask{1} << f.table()[p];
    return PointSet(f.cod(), out);
}

PointSet image_set(const FiniteFunction& f)
{
    return image(f, PointSet::full(f.dom()));
}

} // namespace fintop
