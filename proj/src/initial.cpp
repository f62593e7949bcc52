#include "fintop/initial.hpp"

#include "fintop/subspace.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace fintop {

namespace {

void require_into(const Topology& tX, const FiniteFunction& f, const char* where)
{
    require_same_carrier(f.cod(), tX.carrier(), where);
}

std::vector<Mask> preimage_masks(const Topology& tX, const FiniteFunction& f)
{
    std::vector<Mask> out;
    out.reserve(tX.size());
    for (Mask u : tX.open_masks())
        out.push_back(preimage(f, PointSet(tX.carrier(), u)).mask());
    return out;
}

} // namespace

Topology initial_topology_direct(const Topology& tX, const FiniteFunction& f)
{
    require_into(tX, f, "initial_topology_direct");
    auto result = validate_masks(f.dom(), preimage_masks(tX, f));
    if (!result)
        throw std::logic_error("initial_topology_direct: preimage family is not a topology: "
                               + result.report().lines().front());
    return result.value();
}

FiniteFunction corestriction(const FiniteFunction& f)
{
    const Mask z = image_set(f).mask();
    // Position of each image point among the points of Z.
    std::vector<Point> table;
    table.reserve(f.dom().size());
    for (Point v : f.table())
        table.push_back(static_cast<Point>(std::popcount(z & ((Mask{1} << v) - 1u))));
    return FiniteFunction(f.dom(), Carrier(static_cast<unsigned>(std::popcount(z))), std::move(table));
}

Topology initial_topology_via_image(const Topology& tX, const FiniteFunction& f)
{
    require_into(tX, f, "initial_topology_via_image");
    const SubspaceView onto = subspace_topology(tX, image_set(f));
    const FiniteFunction g = corestriction(f);
    if (!g.is_surjective())
        throw std::logic_error("initial_topology_via_image: corestriction is not surjective");
    // embed(g(y)) must recover f(y).
    for (Point p = 0; p < f.dom().size(); ++p)
        if (onto.embed()[g(p)] != f(p))
            throw std::logic_error("initial_topology_via_image: corestriction disagrees with f");
    return initial_topology_direct(onto.sub(), g);
}

ClosureOperator initial_closure_operator(const Topology& tX, const FiniteFunction& f)
{
    require_into(tX, f, "initial_closure_operator");
    const Carrier dom = f.dom();
    std::vector<Mask> table(dom.subset_count());
    for (std::size_t a = 0; a < table.size(); ++a) {
        PointSet fa = image(f, PointSet(dom, static_cast<Mask>(a)));
        table[a] = preimage(f, closure_of(tX, fa)).mask();
    }
    auto op = validate_kuratowski_masks(dom, table);
    if (!op)
        throw std::logic_error("initial_closure_operator: pulled-back closure is not Kuratowski: "
                               + op.report().lines().front());
    return op.value();
}

Topology initial_topology_via_closure(const Topology& tX, const FiniteFunction& f)
{
    return topology_from_closure(initial_closure_operator(tX, f));
}

std::string WeakestVerdict::describe() const
{
    switch (failure) {
    case Failure::None:
        return "weakest: holds";
    case Failure::NotContinuous:
        return "weakest: not continuous, preimage of " + to_string(*open_witness) + " is not open";
    case Failure::NotLeast: {
        std::string out = "weakest: not least, coarser continuous topology";
        for (Mask m : coarser_witness->open_masks())
            out += " " + to_string(PointSet(coarser_witness->carrier(), m));
        return out;
    }
    }
    return {};
}

WeakestVerdict verify_weakest(const Topology& tX, const FiniteFunction& f, const Topology& tY)
{
    require_into(tX, f, "verify_weakest");
    require_same_carrier(f.dom(), tY.carrier(), "verify_weakest");

    WeakestVerdict verdict;
    for (Mask u : tX.open_masks()) {
        PointSet open(tX.carrier(), u);
        if (!tY.is_open(preimage(f, open))) {
            verdict.failure = WeakestVerdict::Failure::NotContinuous;
            verdict.open_witness = open;
            return verdict;
        }
    }

    std::vector<Mask> preimages = preimage_masks(tX, f);
    std::sort(preimages.begin(), preimages.end());
    for (Mask v : tY.open_masks())
        if (!std::binary_search(preimages.begin(), preimages.end(), v)) {
            verdict.failure = WeakestVerdict::Failure::NotLeast;
            verdict.coarser_witness = initial_topology_direct(tX, f);
            return verdict;
        }

    verdict.holds = true;
    return verdict;
}

} // namespace fintop
