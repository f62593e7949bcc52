#pragma once

#include "fintop/function.hpp"
#include "fintop/setcore.hpp"
#include "fintop/validated.hpp"

#include <compare>
#include <span>
#include <vector>

namespace fintop {

/// A topology on a finite carrier.
///
/// Opens are held twice: as a membership bitset indexed by mask, for O(1)
/// openness tests, and as an ascending list of masks. Instances are only
/// produced by validate(), generate_from_subbasis() and the named factories,
/// so every Topology satisfies the axioms.
///
/// Closure under unions is checked pairwise. On a finite carrier every
/// family of opens is finite, and a finite union is a chain of pairwise
/// unions, so pairwise closure plus membership of the empty set (the empty
/// union) is the same as closure under arbitrary unions.
class Topology {
public:
    static Topology discrete(Carrier c);
    static Topology indiscrete(Carrier c);

    Carrier carrier() const noexcept { return carrier_; }
    /// Ascending.
    const std::vector<Mask>& open_masks() const noexcept { return opens_; }
    std::vector<PointSet> opens() const;
    std::size_t size() const noexcept { return opens_.size(); }

    bool is_open_mask(Mask m) const noexcept { return m < member_.size() && member_[m]; }
    bool is_open(const PointSet& s) const;
    bool is_closed(const PointSet& s) const;

    friend bool operator==(const Topology& a, const Topology& b)
    {
        return a.carrier_ == b.carrier_ && a.opens_ == b.opens_;
    }
    /// Carrier size first, then the open-mask sequences lexicographically.
    friend std::strong_ordering operator<=>(const Topology& a, const Topology& b)
    {
        if (auto c = a.carrier_ <=> b.carrier_; c != 0)
            return c;
        return a.opens_ <=> b.opens_;
    }

private:
    Topology(Carrier c, std::vector<Mask> sorted_opens);

    friend Validated<Topology> validate_masks(Carrier, std::span<const Mask>);
    friend Topology generate_from_subbasis(Carrier, std::span<const PointSet>);

    Carrier carrier_;
    std::vector<Mask> opens_;
    std::vector<bool> member_;
};

namespace axiom {
inline constexpr const char* kContainsEmpty = "contains empty set";
inline constexpr const char* kContainsCarrier = "contains carrier";
inline constexpr const char* kIntersection = "intersection closure";
inline constexpr const char* kUnion = "union closure";
} // namespace axiom

/// Checks the topology axioms on a family (duplicates allowed). Throws
/// CarrierMismatch if a member lies over another carrier; axiom failures are
/// returned as a report with the least witness per axiom.
Validated<Topology> validate(Carrier carrier, std::span<const PointSet> family);
/// Mask form of validate(); a mask outside the carrier throws CarrierMismatch.
Validated<Topology> validate_masks(Carrier carrier, std::span<const Mask> family);

std::vector<PointSet> closed_sets(const Topology& t);
/// Smallest closed superset of a.
PointSet closure_of(const Topology& t, const PointSet& a);
/// Largest open subset of a.
PointSet interior_of(const Topology& t, const PointSet& a);

/// True iff every open of t2 is open in t1.
bool is_finer(const Topology& t1, const Topology& t2);
bool is_continuous(const FiniteFunction& f, const Topology& tY, const Topology& tX);

/// Smallest topology containing family: finite intersections first (the
/// empty intersection is the carrier), then unions (the empty union is ∅).
Topology generate_from_subbasis(Carrier carrier, std::span<const PointSet> family);

} // namespace fintop
