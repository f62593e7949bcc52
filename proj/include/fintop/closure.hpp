#pragma once

#include "fintop/setcore.hpp"
#include "fintop/topology.hpp"
#include "fintop/validated.hpp"

#include <span>
#include <vector>

namespace fintop {

/// A Kuratowski closure operation: a dense table indexed by input mask.
/// Only validate_kuratowski() and closure_from_topology() construct one.
class ClosureOperator {
public:
    Carrier carrier() const noexcept { return carrier_; }
    PointSet operator()(const PointSet& a) const;
    Mask at(Mask a) const { return table_.at(a); }
    const std::vector<Mask>& table() const noexcept { return table_; }

    friend bool operator==(const ClosureOperator&, const ClosureOperator&) = default;

private:
    ClosureOperator(Carrier c, std::vector<Mask> table) : carrier_(c), table_(std::move(table)) {}

    friend Validated<ClosureOperator> validate_kuratowski_masks(Carrier, std::span<const Mask>);
    friend ClosureOperator closure_from_topology(const Topology&);

    Carrier carrier_;
    std::vector<Mask> table_;
};

namespace axiom {
inline constexpr const char* kK1 = "K1 closure of empty set";
inline constexpr const char* kK2 = "K2 extensive";
inline constexpr const char* kK3 = "K3 idempotent";
inline constexpr const char* kK4 = "K4 preserves unions";
} // namespace axiom

/// Checks K1-K4 on a raw table (entry i is the image of the subset with mask i).
/// A table without exactly 2^n entries throws PartialTable; an entry over the
/// wrong carrier throws CarrierMismatch.
Validated<ClosureOperator> validate_kuratowski(Carrier carrier, std::span<const PointSet> table);
Validated<ClosureOperator> validate_kuratowski_masks(Carrier carrier, std::span<const Mask> table);

/// The topology whose closed sets are the fixed points of op. Asserts that
/// closure_of on the result reproduces op.
Topology topology_from_closure(const ClosureOperator& op);

ClosureOperator closure_from_topology(const Topology& t);

} // namespace fintop
