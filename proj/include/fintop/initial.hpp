#pragma once

#include "fintop/closure.hpp"
#include "fintop/function.hpp"
#include "fintop/topology.hpp"

#include <optional>
#include <string>

namespace fintop {

/// { f⁻¹(U) : U open in tX }.
Topology initial_topology_direct(const Topology& tX, const FiniteFunction& f);

/// Restricts tX to Z = f(dom), corestricts f onto the relabeled Z (which makes
/// it surjective) and pulls the subspace topology back through it.
Topology initial_topology_via_image(const Topology& tX, const FiniteFunction& f);

/// f viewed as a map onto its relabeled image.
FiniteFunction corestriction(const FiniteFunction& f);

/// A ↦ f⁻¹(cl(f(A))), validated as a Kuratowski operator on dom.
ClosureOperator initial_closure_operator(const Topology& tX, const FiniteFunction& f);
Topology initial_topology_via_closure(const Topology& tX, const FiniteFunction& f);

struct WeakestVerdict {
    enum class Failure { None, NotContinuous, NotLeast };

    bool holds = false;
    Failure failure = Failure::None;
    /// NotContinuous: an open set of the codomain whose preimage is not open in tY.
    std::optional<PointSet> open_witness;
    /// NotLeast: a strictly coarser topology that still makes f continuous.
    std::optional<Topology> coarser_witness;

    std::string describe() const;
};

/// Whether tY is the coarsest topology on dom making f continuous. The check
/// is that f is continuous from tY and that every open of tY is a preimage of
/// an open of tX, hence open in any topology making f continuous.
WeakestVerdict verify_weakest(const Topology& tX, const FiniteFunction& f, const Topology& tY);

} // namespace fintop
