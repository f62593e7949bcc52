#include "fintop/setcore.hpp"

#include "fintop/error.hpp"

#include <bit>
#include <cctype>
#include <charconv>

namespace fintop {

Carrier::Carrier(unsigned size) : size_(size)
{
    if (size > kMaxSize)
        throw LimitExceeded("carrier size " + std::to_string(size) + " exceeds the limit of "
                            + std::to_string(kMaxSize));
}

PointSet::PointSet(Carrier carrier, Mask mask) : carrier_(carrier), mask_(mask)
{
    if (!carrier.holds(mask))
        throw PreconditionError("mask " + std::to_string(mask) + " has points outside a carrier of size "
                                + std::to_string(carrier.size()));
}

PointSet PointSet::of(Carrier c, std::initializer_list<Point> points)
{
    Mask m = 0;
    for (Point p : points) {
        if (p >= c.size())
            throw PreconditionError("point " + std::to_string(p) + " outside a carrier of size "
                                    + std::to_string(c.size()));
        m |= Mask{1} << p;
    }
    return PointSet(c, m);
}

unsigned PointSet::count() const noexcept
{
    return static_cast<unsigned>(std::popcount(mask_));
}

std::vector<Point> PointSet::elements() const
{
    std::vector<Point> out;
    for (Mask m = mask_; m != 0; m &= m - 1)
        out.push_back(static_cast<Point>(std::countr_zero(m)));
    return out;
}

bool PointSet::is_subset_of(const PointSet& other) const
{
    require_same_carrier(*this, other, "is_subset_of");
    return (mask_ & ~other.mask_) == 0;
}

void require_same_carrier(Carrier a, Carrier b, const char* where)
{
    if (a != b)
        throw CarrierMismatch(std::string(where) + ": carrier of size " + std::to_string(a.size())
                              + " does not match carrier of size " + std::to_string(b.size()));
}

void require_same_carrier(const PointSet& a, const PointSet& b, const char* where)
{
    require_same_carrier(a.carrier(), b.carrier(), where);
}

PointSet unite(const PointSet& a, const PointSet& b)
{
    require_same_carrier(a, b, "union");
    return PointSet(a.carrier(), a.mask() | b.mask());
}

PointSet intersect(const PointSet& a, const PointSet& b)
{
    require_same_carrier(a, b, "intersect");
    return PointSet(a.carrier(), a.mask() & b.mask());
}

PointSet complement(const PointSet& a)
{
    return PointSet(a.carrier(), a.carrier().full_mask() & ~a.mask());
}

std::vector<PointSet> all_subsets(Carrier c)
{
    std::vector<PointSet> out;
    out.reserve(c.subset_count());
    for (std::size_t m = 0; m < c.subset_count(); ++m)
        out.emplace_back(c, static_cast<Mask>(m));
    return out;
}

std::string to_string(const PointSet& s)
{
    std::string out = "{";
    bool first = true;
    for (Point p : s.elements()) {
        if (!first)
            out += ',';
        out += std::to_string(p);
        first = false;
    }
    out += '}';
    return out;
}

namespace {

PointSet parse_element_list(Carrier c, std::string_view text)
{
    // text starts with '{'
    Mask m = 0;
    std::size_t i = 1;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    skip_ws();
    if (i < text.size() && text[i] == '}') {
        ++i;
    } else {
        for (;;) {
            skip_ws();
            unsigned value = 0;
            auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
            if (ec != std::errc())
                throw ParseError("expected a point index", i);
            if (value >= c.size())
                throw ParseError("point " + std::to_string(value) + " outside a carrier of size "
                                     + std::to_string(c.size()),
                                 i);
            if (m & (Mask{1} << value))
                throw ParseError("duplicate point " + std::to_string(value), i);
            m |= Mask{1} << value;
            i = static_cast<std::size_t>(ptr - text.data());
            skip_ws();
            if (i >= text.size())
                throw ParseError("unterminated element list", i);
            if (text[i] == '}') {
                ++i;
                break;
            }
            if (text[i] != ',')
                throw ParseError("expected ',' or '}'", i);
            ++i;
        }
    }
    skip_ws();
    if (i != text.size())
        throw ParseError("trailing characters after element list", i);
    return PointSet(c, m);
}

} // namespace

PointSet parse_point_set(Carrier c, std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);

    if (!text.empty() && text.front() == '{')
        return parse_element_list(c, text);

    if (text.size() != c.size())
        throw ParseError("bitstring of length " + std::to_string(text.size()) + " for a carrier of size "
                             + std::to_string(c.size()),
                         0);
    Mask m = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[text.size() - 1 - i];
        if (ch == '1')
            m |= Mask{1} << i;
        else if (ch != '0')
            throw ParseError("expected '0' or '1' in bitstring", text.size() - 1 - i);
    }
    return PointSet(c, m);
}

Mask compress_mask(Mask m, Mask within) noexcept
{
    Mask out = 0;
    unsigned pos = 0;
    for (Mask w = within; w != 0; w &= w - 1, ++pos) {
        Mask bit = w & (~w + 1);
        if (m & bit)
            out |= Mask{1} << pos;
    }
    return out;
}

Mask expand_mask(Mask m, Mask within) noexcept
{
    Mask out = 0;
    unsigned pos = 0;
    for (Mask w = within; w != 0; w &= w - 1, ++pos) {
        Mask bit = w & (~w + 1);
        if ((m >> pos) & 1u)
            out |= bit;
    }
    return out;
}

} // namespace fintop
