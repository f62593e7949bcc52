#include "fintop/subspace.hpp"

#include "fintop/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace fintop {

namespace {

Topology checked_topology(Carrier c, std::span<const Mask> family, const char* where)
{
    auto result = validate_masks(c, family);
    if (!result)
        throw std::logic_error(std::string(where) + ": " + result.report().lines().front());
    return result.value();
}

Carrier sub_carrier(const PointSet& y)
{
    return Carrier(y.count());
}

} // namespace

SubspaceView::SubspaceView(Topology parent, PointSet y, Topology sub)
    : parent_(std::move(parent)), y_(y), sub_(std::move(sub)), embed_(y.elements())
{
    require_same_carrier(parent_.carrier(), y_.carrier(), "SubspaceView");
    if (sub_.carrier().size() != y_.count())
        throw PreconditionError("SubspaceView: sub carrier size does not match |Y|");
}

FiniteFunction SubspaceView::inclusion() const
{
    return FiniteFunction(sub_.carrier(), parent_.carrier(), embed_);
}

PointSet SubspaceView::to_sub(const PointSet& parent_subset) const
{
    require_same_carrier(parent_.carrier(), parent_subset.carrier(), "to_sub");
    if (!parent_subset.is_subset_of(y_))
        throw PreconditionError("to_sub: " + to_string(parent_subset) + " is not a subset of Y = " + to_string(y_));
    return PointSet(sub_.carrier(), compress_mask(parent_subset.mask(), y_.mask()));
}

PointSet SubspaceView::to_parent(const PointSet& sub_subset) const
{
    require_same_carrier(sub_.carrier(), sub_subset.carrier(), "to_parent");
    return PointSet(parent_.carrier(), expand_mask(sub_subset.mask(), y_.mask()));
}

SubspaceView subspace_topology(const Topology& t, const PointSet& y)
{
    require_same_carrier(t.carrier(), y.carrier(), "subspace_topology");
    std::vector<Mask> traces;
    traces.reserve(t.size());
    for (Mask u : t.open_masks())
        traces.push_back(compress_mask(u & y.mask(), y.mask()));
    Carrier c = sub_carrier(y);
    return SubspaceView(t, y, checked_topology(c, traces, "subspace_topology"));
}

PointSet maximal_open_representative(const Topology& t, const PointSet& y, const PointSet& v)
{
    require_same_carrier(t.carrier(), y.carrier(), "maximal_open_representative");
    require_same_carrier(t.carrier(), v.carrier(), "maximal_open_representative");
    if (!v.is_subset_of(y))
        throw PreconditionError("maximal_open_representative: V = " + to_string(v) + " is not a subset of Y = "
                                + to_string(y));
    bool found = false;
    Mask rep = 0;
    for (Mask w : t.open_masks())
        if ((w & y.mask()) == v.mask()) {
            rep |= w;
            found = true;
        }
    if (!found)
        throw NotRelativelyOpen("maximal_open_representative: " + to_string(v) + " is not relatively open in Y = "
                                + to_string(y));
    return PointSet(t.carrier(), rep);
}

std::string CertificateEntry::line() const
{
    std::string out;
    switch (kind) {
    case Kind::Representative:
        out = "rep V=" + to_string(first) + " U*=" + to_string(rep);
        break;
    case Kind::Intersection:
        out = "meet V1=" + to_string(first) + " V2=" + to_string(second) + " U*1&U*2=" + to_string(rep);
        break;
    case Kind::Union:
        out = "join V1=" + to_string(first) + " V2=" + to_string(second) + " U*1|U*2=" + to_string(rep);
        break;
    }
    out += rep_open ? " open" : " NOT-OPEN";
    out += " trace=" + to_string(trace) + " expected=" + to_string(expected);
    out += holds ? " ok" : " FAIL";
    return out;
}

bool Certificate::holds() const
{
    return std::all_of(entries.begin(), entries.end(), [](const CertificateEntry& e) { return e.holds; });
}

std::vector<std::string> Certificate::lines() const
{
    std::vector<std::string> out;
    out.reserve(entries.size());
    for (const auto& e : entries)
        out.push_back(e.line());
    return out;
}

CanonicalSubspace subspace_topology_canonical(const Topology& t, const PointSet& y)
{
    require_same_carrier(t.carrier(), y.carrier(), "subspace_topology_canonical");
    const Carrier parent = t.carrier();
    const Mask ymask = y.mask();

    // Relatively open sets, in parent labels, ascending.
    std::vector<Mask> relative;
    for (Mask u : t.open_masks())
        relative.push_back(u & ymask);
    std::sort(relative.begin(), relative.end());
    relative.erase(std::unique(relative.begin(), relative.end()), relative.end());

    std::vector<Mask> reps;
    reps.reserve(relative.size());
    for (Mask v : relative)
        reps.push_back(maximal_open_representative(t, y, PointSet(parent, v)).mask());

    Certificate cert;
    auto record = [&](CertificateEntry::Kind kind, Mask first, Mask second, Mask rep, Mask expected) {
        CertificateEntry e;
        e.kind = kind;
        e.first = PointSet(parent, first);
        e.second = PointSet(parent, second);
        e.rep = PointSet(parent, rep);
        e.trace = PointSet(parent, rep & ymask);
        e.expected = PointSet(parent, expected);
        e.rep_open = t.is_open_mask(rep);
        e.holds = e.rep_open && e.trace == e.expected;
        cert.entries.push_back(e);
    };

    for (std::size_t i = 0; i < relative.size(); ++i)
        record(CertificateEntry::Kind::Representative, relative[i], 0, reps[i], relative[i]);
    for (std::size_t i = 0; i < relative.size(); ++i)
        for (std::size_t j = i + 1; j < relative.size(); ++j) {
            record(CertificateEntry::Kind::Intersection, relative[i], relative[j], reps[i] & reps[j],
                   relative[i] & relative[j]);
            record(CertificateEntry::Kind::Union, relative[i], relative[j], reps[i] | reps[j],
                   relative[i] | relative[j]);
        }

    // ∅ = ∅ ∩ Y and Y = X ∩ Y: both traces are relatively open.
    if (!std::binary_search(relative.begin(), relative.end(), Mask{0})
        || !std::binary_search(relative.begin(), relative.end(), ymask))
        throw std::logic_error("subspace_topology_canonical: empty set or Y is not relatively open");
    if (!cert.holds())
        throw std::logic_error("subspace_topology_canonical: representative certificate failed");

    std::vector<Mask> sub_opens;
    sub_opens.reserve(relative.size());
    for (Mask v : relative)
        sub_opens.push_back(compress_mask(v, ymask));
    Carrier c = sub_carrier(y);
    return {SubspaceView(t, y, checked_topology(c, sub_opens, "subspace_topology_canonical")), std::move(cert)};
}

ClosureOperator subspace_closure_operator(const Topology& t, const PointSet& y)
{
    require_same_carrier(t.carrier(), y.carrier(), "subspace_closure_operator");
    const Carrier c = sub_carrier(y);
    std::vector<Mask> table(c.subset_count());
    for (std::size_t b = 0; b < table.size(); ++b) {
        PointSet a(t.carrier(), expand_mask(static_cast<Mask>(b), y.mask()));
        table[b] = compress_mask(closure_of(t, a).mask() & y.mask(), y.mask());
    }
    auto op = validate_kuratowski_masks(c, table);
    if (!op)
        throw std::logic_error("subspace_closure_operator: relative closure is not Kuratowski: "
                               + op.report().lines().front());
    return op.value();
}

SubspaceView subspace_via_closure(const Topology& t, const PointSet& y)
{
    return SubspaceView(t, y, topology_from_closure(subspace_closure_operator(t, y)));
}

} // namespace fintop
