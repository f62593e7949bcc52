#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace fintop {

using Mask = std::uint32_t;
using Point = unsigned;

/// A finite set of points labeled 0..size-1. At most 16 points, so that
/// every family of subsets and every closure table fits in memory.
class Carrier {
public:
    static constexpr unsigned kMaxSize = 16;

    constexpr Carrier() = default;
    explicit Carrier(unsigned size);

    constexpr unsigned size() const noexcept { return size_; }
    constexpr Mask full_mask() const noexcept { return size_ == 0 ? 0u : ((Mask{1} << size_) - 1u); }
    /// 2^size.
    constexpr std::size_t subset_count() const noexcept { return std::size_t{1} << size_; }
    constexpr bool holds(Mask m) const noexcept { return (m & ~full_mask()) == 0; }

    friend constexpr bool operator==(Carrier, Carrier) = default;
    friend constexpr auto operator<=>(Carrier, Carrier) = default;

private:
    unsigned size_ = 0;
};

/// A subset of a carrier, stored as a bitmask (bit i set iff point i is a member).
class PointSet {
public:
    constexpr PointSet() = default;
    /// Throws PreconditionError if mask has bits at or above carrier.size().
    PointSet(Carrier carrier, Mask mask);

    static PointSet empty(Carrier c) { return PointSet(c, 0); }
    static PointSet full(Carrier c) { return PointSet(c, c.full_mask()); }
    static PointSet of(Carrier c, std::initializer_list<Point> points);

    constexpr Carrier carrier() const noexcept { return carrier_; }
    constexpr Mask mask() const noexcept { return mask_; }

    bool contains(Point p) const noexcept { return p < carrier_.size() && ((mask_ >> p) & 1u); }
    bool is_empty() const noexcept { return mask_ == 0; }
    bool is_full() const noexcept { return mask_ == carrier_.full_mask(); }
    unsigned count() const noexcept;
    std::vector<Point> elements() const;

    /// Throws CarrierMismatch.
    bool is_subset_of(const PointSet& other) const;

    friend constexpr bool operator==(const PointSet&, const PointSet&) = default;
    friend constexpr auto operator<=>(const PointSet&, const PointSet&) = default;

private:
    Carrier carrier_;
    Mask mask_ = 0;
};

PointSet unite(const PointSet& a, const PointSet& b);
PointSet intersect(const PointSet& a, const PointSet& b);
PointSet complement(const PointSet& a);

/// Every subset of c, in ascending mask order.
std::vector<PointSet> all_subsets(Carrier c);

/// Element-list form, e.g. "{0,2,3}".
std::string to_string(const PointSet& s);

/// Accepts "{0,2,3}" or a bitstring whose rightmost character is point 0
/// ("1101" on four points is {0,2,3}). A bitstring must have exactly
/// c.size() characters. Throws ParseError.
PointSet parse_point_set(Carrier c, std::string_view text);

// Bit shuffles between a parent carrier and the subset `within` relabeled
// order-preservingly onto 0..|within|-1.
Mask compress_mask(Mask m, Mask within) noexcept;
Mask expand_mask(Mask m, Mask within) noexcept;

void require_same_carrier(const PointSet& a, const PointSet& b, const char* where);
void require_same_carrier(Carrier a, Carrier b, const char* where);

} // namespace fintop
