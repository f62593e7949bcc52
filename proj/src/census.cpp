#include "fintop/census.hpp"

#include "fintop/error.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace fintop {

std::string_view to_string(CensusMethod m)
{
    return m == CensusMethod::Brute ? "brute" : "preorder";
}

CensusMethod parse_census_method(std::string_view text)
{
    if (text == "brute")
        return CensusMethod::Brute;
    if (text == "preorder")
        return CensusMethod::Preorder;
    throw PreconditionError("unknown census method '" + std::string(text) + "' (expected brute or preorder)");
}

unsigned census_limit(CensusMethod m)
{
    return m == CensusMethod::Brute ? kBruteLimit : kPreorderLimit;
}

namespace {

void require_limit(unsigned n, CensusMethod m)
{
    if (n > census_limit(m))
        throw LimitExceeded("census method " + std::string(to_string(m)) + " supports n <= "
                            + std::to_string(census_limit(m)) + ", got n = " + std::to_string(n));
}

} // namespace

TopologyCensus enumerate_brute(unsigned n)
{
    require_limit(n, CensusMethod::Brute);
    const Carrier c(n);
    const std::size_t subsets = c.subset_count();
    const std::uint64_t families = std::uint64_t{1} << subsets;

    TopologyCensus census{n, CensusMethod::Brute, {}};
    std::vector<Mask> members;
    members.reserve(subsets);
    for (std::uint64_t family = 0; family < families; ++family) {
        members.clear();
        for (std::size_t s = 0; s < subsets; ++s)
            if ((family >> s) & 1u)
                members.push_back(static_cast<Mask>(s));
        auto t = validate_masks(c, members);
        if (t)
            census.topologies.push_back(t.value());
    }
    std::sort(census.topologies.begin(), census.topologies.end());
    return census;
}

TopologyCensus enumerate_preorder(unsigned n)
{
    require_limit(n, CensusMethod::Preorder);
    const Carrier c(n);

    // Off-diagonal pairs (x, y), x != y; bit k of a candidate relates pairs[k].
    std::vector<std::pair<Point, Point>> pairs;
    for (Point x = 0; x < n; ++x)
        for (Point y = 0; y < n; ++y)
            if (x != y)
                pairs.emplace_back(x, y);
    const std::uint64_t candidates = std::uint64_t{1} << pairs.size();

    TopologyCensus census{n, CensusMethod::Preorder, {}};
    std::array<Mask, Carrier::kMaxSize> above{};
    std::vector<Mask> opens;
    for (std::uint64_t rel = 0; rel < candidates; ++rel) {
        for (Point x = 0; x < n; ++x)
            above[x] = Mask{1} << x;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if ((rel >> k) & 1u)
                above[pairs[k].first] |= Mask{1} << pairs[k].second;

        bool transitive = true;
        for (Point x = 0; x < n && transitive; ++x)
            for (Point y = 0; y < n; ++y)
                if (((above[x] >> y) & 1u) && (above[y] & ~above[x]) != 0) {
                    transitive = false;
                    break;
                }
        if (!transitive)
            continue;

        // Opens are the up-closed sets.
        opens.clear();
        for (std::size_t u = 0; u < c.subset_count(); ++u) {
            bool up_closed = true;
            for (Point x = 0; x < n; ++x)
                if (((u >> x) & 1u) && (above[x] & ~static_cast<Mask>(u)) != 0) {
                    up_closed = false;
                    break;
                }
            if (up_closed)
                opens.push_back(static_cast<Mask>(u));
        }
        auto t = validate_masks(c, opens);
        if (!t)
            throw std::logic_error("enumerate_preorder: up-sets of a preorder failed validation");
        census.topologies.push_back(t.value());
    }
    std::sort(census.topologies.begin(), census.topologies.end());
    census.topologies.erase(std::unique(census.topologies.begin(), census.topologies.end()),
                            census.topologies.end());
    return census;
}

TopologyCensus enumerate(unsigned n, CensusMethod method)
{
    return method == CensusMethod::Brute ? enumerate_brute(n) : enumerate_preorder(n);
}

std::vector<PointSet> random_subbasis(Carrier c, std::mt19937_64& rng)
{
    std::uniform_int_distribution<unsigned> count(0, c.size() + 1);
    const unsigned k = count(rng);
    std::uniform_int_distribution<Mask> member(0, c.full_mask());
    std::vector<PointSet> out;
    out.reserve(k);
    for (unsigned i = 0; i < k; ++i)
        out.emplace_back(c, member(rng));
    return out;
}

Topology random_topology(unsigned n, std::uint64_t seed)
{
    const Carrier c(n);
    std::mt19937_64 rng(seed);
    const auto family = random_subbasis(c, rng);
    return generate_from_subbasis(c, family);
}

Topology random_topology(unsigned n, std::uint64_t seed, unsigned k)
{
    const Carrier c(n);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Mask> member(0, c.full_mask());
    std::vector<PointSet> family;
    for (unsigned i = 0; i < k; ++i)
        family.emplace_back(c, member(rng));
    return generate_from_subbasis(c, family);
}

} // namespace fintop
