#include "fintop/topology.hpp"

#include "fintop/error.hpp"

#include <algorithm>
#include <optional>

namespace fintop {

namespace {

std::vector<bool> membership(Carrier c, const std::vector<Mask>& opens)
{
    std::vector<bool> member(c.subset_count(), false);
    for (Mask m : opens)
        member[m] = true;
    return member;
}

// Appends to `list` every value not yet marked in `seen`.
struct GrowingFamily {
    std::vector<Mask> list;
    std::vector<bool> seen;

    explicit GrowingFamily(Carrier c) : seen(c.subset_count(), false) {}

    void add(Mask m)
    {
        if (!seen[m]) {
            seen[m] = true;
            list.push_back(m);
        }
    }
};

} // namespace

Topology::Topology(Carrier c, std::vector<Mask> sorted_opens)
    : carrier_(c), opens_(std::move(sorted_opens)), member_(membership(c, opens_))
{
}

Topology Topology::discrete(Carrier c)
{
    std::vector<Mask> opens(c.subset_count());
    for (std::size_t m = 0; m < opens.size(); ++m)
        opens[m] = static_cast<Mask>(m);
    return Topology(c, std::move(opens));
}

Topology Topology::indiscrete(Carrier c)
{
    if (c.size() == 0)
        return Topology(c, {0});
    return Topology(c, {0, c.full_mask()});
}

std::vector<PointSet> Topology::opens() const
{
    std::vector<PointSet> out;
    out.reserve(opens_.size());
    for (Mask m : opens_)
        out.emplace_back(carrier_, m);
    return out;
}

bool Topology::is_open(const PointSet& s) const
{
    require_same_carrier(carrier_, s.carrier(), "is_open");
    return member_[s.mask()];
}

bool Topology::is_closed(const PointSet& s) const
{
    require_same_carrier(carrier_, s.carrier(), "is_closed");
    return member_[carrier_.full_mask() & ~s.mask()];
}

Validated<Topology> validate_masks(Carrier carrier, std::span<const Mask> family)
{
    for (Mask m : family)
        if (!carrier.holds(m))
            throw CarrierMismatch("validate: family member " + std::to_string(m)
                                  + " does not lie over a carrier of size " + std::to_string(carrier.size()));

    std::vector<Mask> opens(family.begin(), family.end());
    std::sort(opens.begin(), opens.end());
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
    std::vector<bool> member = membership(carrier, opens);

    ViolationReport report;
    if (!member[0])
        report.violations.push_back({axiom::kContainsEmpty, {PointSet::empty(carrier)}});
    if (!member[carrier.full_mask()])
        report.violations.push_back({axiom::kContainsCarrier, {PointSet::full(carrier)}});

    // Least witness pair in lexicographic order of (first, second) masks.
    auto first_failing_pair = [&](auto op) -> std::optional<std::pair<Mask, Mask>> {
        for (std::size_t i = 0; i < opens.size(); ++i)
            for (std::size_t j = i + 1; j < opens.size(); ++j)
                if (!member[op(opens[i], opens[j])])
                    return std::pair{opens[i], opens[j]};
        return std::nullopt;
    };
    if (auto w = first_failing_pair([](Mask a, Mask b) { return a & b; }))
        report.violations.push_back(
            {axiom::kIntersection, {PointSet(carrier, w->first), PointSet(carrier, w->second)}});
    if (auto w = first_failing_pair([](Mask a, Mask b) { return a | b; }))
        report.violations.push_back({axiom::kUnion, {PointSet(carrier, w->first), PointSet(carrier, w->second)}});

    if (!report.empty())
        return report;
    return Topology(carrier, std::move(opens));
}

Validated<Topology> validate(Carrier carrier, std::span<const PointSet> family)
{
    std::vector<Mask> masks;
    masks.reserve(family.size());
    for (const auto& s : family) {
        require_same_carrier(carrier, s.carrier(), "validate");
        masks.push_back(s.mask());
    }
    return validate_masks(carrier, masks);
}

std::vector<PointSet> closed_sets(const Topology& t)
{
    std::vector<PointSet> out;
    out.reserve(t.size());
    for (Mask m : t.open_masks())
        out.emplace_back(t.carrier(), t.carrier().full_mask() & ~m);
    std::sort(out.begin(), out.end());
    return out;
}

PointSet closure_of(const Topology& t, const PointSet& a)
{
    require_same_carrier(t.carrier(), a.carrier(), "closure_of");
    const Mask full = t.carrier().full_mask();
    Mask result = full;
    for (Mask u : t.open_masks()) {
        Mask closed = full & ~u;
        if ((a.mask() & ~closed) == 0)
            result &= closed;
    }
    return PointSet(t.carrier(), result);
}

PointSet interior_of(const Topology& t, const PointSet& a)
{
    require_same_carrier(t.carrier(), a.carrier(), "interior_of");
    Mask result = 0;
    for (Mask u : t.open_masks())
        if ((u & ~a.mask()) == 0)
            result |= u;
    return PointSet(t.carrier(), result);
}

bool is_finer(const Topology& t1, const Topology& t2)
{
    require_same_carrier(t1.carrier(), t2.carrier(), "is_finer");
    return std::all_of(t2.open_masks().begin(), t2.open_masks().end(),
                       [&](Mask m) { return t1.is_open_mask(m); });
}

bool is_continuous(const FiniteFunction& f, const Topology& tY, const Topology& tX)
{
    require_same_carrier(f.dom(), tY.carrier(), "is_continuous (domain)");
    require_same_carrier(f.cod(), tX.carrier(), "is_continuous (codomain)");
    for (Mask u : tX.open_masks())
        if (!tY.is_open(preimage(f, PointSet(tX.carrier(), u))))
            return false;
    return true;
}

Topology generate_from_subbasis(Carrier carrier, std::span<const PointSet> family)
{
    GrowingFamily base(carrier);
    base.add(carrier.full_mask());
    for (const auto& s : family) {
        require_same_carrier(carrier, s.carrier(), "generate_from_subbasis");
        const std::size_t existing = base.list.size();
        for (std::size_t i = 0; i < existing; ++i)
            base.add(base.list[i] & s.mask());
    }

    GrowingFamily opens(carrier);
    opens.add(0);
    for (Mask b : base.list) {
        const std::size_t existing = opens.list.size();
        for (std::size_t i = 0; i < existing; ++i)
            opens.add(opens.list[i] | b);
    }
    std::sort(opens.list.begin(), opens.list.end());
    return Topology(carrier, std::move(opens.list));
}

} // namespace fintop
