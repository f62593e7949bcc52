#pragma once

#include "fintop/closure.hpp"
#include "fintop/function.hpp"
#include "fintop/setcore.hpp"
#include "fintop/topology.hpp"

#include <string>
#include <vector>

namespace fintop {

/// The relative topology on a subset Y of a space, relabeled onto 0..|Y|-1.
///
/// embed() maps sub-carrier point i to the i-th smallest point of Y, so the
/// relabeling is order preserving and its image is exactly Y.
class SubspaceView {
public:
    SubspaceView(Topology parent, PointSet y, Topology sub);

    const Topology& parent() const noexcept { return parent_; }
    const PointSet& y() const noexcept { return y_; }
    const Topology& sub() const noexcept { return sub_; }
    const std::vector<Point>& embed() const noexcept { return embed_; }
    /// The inclusion of Y into the parent carrier as a function.
    FiniteFunction inclusion() const;

    /// Parent-labeled subset of Y to sub-carrier labels.
    PointSet to_sub(const PointSet& parent_subset) const;
    PointSet to_parent(const PointSet& sub_subset) const;

private:
    Topology parent_;
    PointSet y_;
    Topology sub_;
    std::vector<Point> embed_;
};

/// { U ∩ Y : U open }, relabeled.
SubspaceView subspace_topology(const Topology& t, const PointSet& y);

/// The union of every open W with W ∩ Y = V; the largest open set whose
/// trace on Y is V. Throws PreconditionError if V ⊄ Y, NotRelativelyOpen if
/// no open set has trace V.
PointSet maximal_open_representative(const Topology& t, const PointSet& y, const PointSet& v);

/// One line of the representative certificate. Sets are in parent labels.
struct CertificateEntry {
    enum class Kind { Representative, Intersection, Union };
    Kind kind = Kind::Representative;
    PointSet first;    ///< V, or V1
    PointSet second;   ///< V2 (pair entries only)
    PointSet rep;      ///< U*(V), or U*(V1) combined with U*(V2)
    PointSet trace;    ///< rep ∩ Y
    PointSet expected; ///< V, or V1 combined with V2
    bool rep_open = false;
    bool holds = false;

    std::string line() const;
};

struct Certificate {
    std::vector<CertificateEntry> entries;

    bool holds() const;
    std::vector<std::string> lines() const;
};

struct CanonicalSubspace {
    SubspaceView view;
    Certificate certificate;
};

/// Builds the relative topology by choosing every representative with
/// maximal_open_representative and re-checking the topology axioms through
/// those representatives. The certificate records, for each relatively open V,
/// its representative, and for each pair V1 < V2, that the intersection and
/// the union of the representatives are open with traces V1 ∩ V2 and V1 ∪ V2.
/// Pairwise checks suffice because the family is finite.
CanonicalSubspace subspace_topology_canonical(const Topology& t, const PointSet& y);

/// Builds the operator A ↦ cl(A) ∩ Y on subsets of Y, validates it and
/// converts it to a topology.
SubspaceView subspace_via_closure(const Topology& t, const PointSet& y);

/// The operator that subspace_via_closure builds, on the relabeled carrier.
ClosureOperator subspace_closure_operator(const Topology& t, const PointSet& y);

} // namespace fintop
