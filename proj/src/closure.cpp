#include "fintop/closure.hpp"

#include "fintop/error.hpp"

#include <stdexcept>

namespace fintop {

PointSet ClosureOperator::operator()(const PointSet& a) const
{
    require_same_carrier(carrier_, a.carrier(), "closure operator");
    return PointSet(carrier_, table_[a.mask()]);
}

namespace {

// K4 over all pairs costs 4^n. A table preserves binary unions iff every
// nonempty A maps to the union of its singleton images and the image of ∅
// lies inside every image, which is an O(n 2^n) test. The pair scan only
// runs to locate the least witness once this test has failed.
bool preserves_unions_fast(Carrier c, std::span<const Mask> table)
{
    const std::size_t count = c.subset_count();
    for (std::size_t a = 0; a < count; ++a)
        if ((table[0] & ~table[a]) != 0)
            return false;
    for (std::size_t a = 1; a < count; ++a) {
        Mask low = static_cast<Mask>(a) & (~static_cast<Mask>(a) + 1);
        Mask rest = static_cast<Mask>(a) & ~low;
        Mask expected = rest == 0 ? table[a] : (table[low] | table[rest]);
        if (table[a] != expected)
            return false;
    }
    return true;
}

} // namespace

Validated<ClosureOperator> validate_kuratowski_masks(Carrier carrier, std::span<const Mask> table)
{
    const std::size_t count = carrier.subset_count();
    if (table.size() != count)
        throw PartialTable("closure table has " + std::to_string(table.size()) + " entries, expected "
                           + std::to_string(count));
    for (std::size_t a = 0; a < count; ++a)
        if (!carrier.holds(table[a]))
            throw CarrierMismatch("closure table entry " + std::to_string(a)
                                  + " does not lie over a carrier of size " + std::to_string(carrier.size()));

    auto set = [&](std::size_t m) { return PointSet(carrier, static_cast<Mask>(m)); };
    ViolationReport report;

    if (table[0] != 0)
        report.violations.push_back({axiom::kK1, {set(0)}});

    for (std::size_t a = 0; a < count; ++a)
        if ((a & ~static_cast<std::size_t>(table[a])) != 0) {
            report.violations.push_back({axiom::kK2, {set(a)}});
            break;
        }

    for (std::size_t a = 0; a < count; ++a)
        if (table[table[a]] != table[a]) {
            report.violations.push_back({axiom::kK3, {set(a)}});
            break;
        }

    if (!preserves_unions_fast(carrier, table)) {
        bool found = false;
        for (std::size_t a = 0; a < count && !found; ++a)
            for (std::size_t b = a + 1; b < count; ++b)
                if (table[a | b] != (table[a] | table[b])) {
                    report.violations.push_back({axiom::kK4, {set(a), set(b)}});
                    found = true;
                    break;
                }
        if (!found)
            throw std::logic_error("validate_kuratowski: union test failed without a witness pair");
    }

    if (!report.empty())
        return report;
    return ClosureOperator(carrier, std::vector<Mask>(table.begin(), table.end()));
}

Validated<ClosureOperator> validate_kuratowski(Carrier carrier, std::span<const PointSet> table)
{
    std::vector<Mask> masks;
    masks.reserve(table.size());
    for (const auto& s : table) {
        require_same_carrier(carrier, s.carrier(), "validate_kuratowski");
        masks.push_back(s.mask());
    }
    return validate_kuratowski_masks(carrier, masks);
}

Topology topology_from_closure(const ClosureOperator& op)
{
    const Carrier c = op.carrier();
    std::vector<Mask> opens;
    for (std::size_t a = 0; a < c.subset_count(); ++a)
        if (op.at(static_cast<Mask>(a)) == a)
            opens.push_back(c.full_mask() & ~static_cast<Mask>(a));

    auto checked = validate_masks(c, opens);
    if (!checked)
        throw std::logic_error("topology_from_closure: fixed points do not form the closed sets of a topology: "
                               + checked.report().lines().front());
    const Topology& t = checked.value();
    for (const auto& a : all_subsets(c))
        if (closure_of(t, a) != op(a))
            throw std::logic_error("topology_from_closure: closure of " + to_string(a)
                                   + " in the induced topology differs from the operator");
    return t;
}

ClosureOperator closure_from_topology(const Topology& t)
{
    const Carrier c = t.carrier();
    std::vector<Mask> table(c.subset_count());
    for (std::size_t a = 0; a < table.size(); ++a)
        table[a] = closure_of(t, PointSet(c, static_cast<Mask>(a))).mask();
    return ClosureOperator(c, std::move(table));
}

} // namespace fintop
