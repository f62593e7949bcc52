#pragma once

#include "fintop/topology.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace fintop {

enum class CensusMethod { Brute, Preorder };

std::string_view to_string(CensusMethod m);
/// "brute" or "preorder"; throws PreconditionError otherwise.
CensusMethod parse_census_method(std::string_view text);

/// All labeled topologies on n points, ascending by open-mask sequence.
struct TopologyCensus {
    unsigned n = 0;
    CensusMethod method = CensusMethod::Brute;
    std::vector<Topology> topologies;
};

inline constexpr unsigned kBruteLimit = 4;
inline constexpr unsigned kPreorderLimit = 5;

unsigned census_limit(CensusMethod m);

/// Runs validate on each of the 2^(2^n) families of subsets. n ≤ 4.
TopologyCensus enumerate_brute(unsigned n);

/// Enumerates reflexive relations, keeps the transitive ones and maps each
/// preorder to its up-closed sets. n ≤ 5.
TopologyCensus enumerate_preorder(unsigned n);

TopologyCensus enumerate(unsigned n, CensusMethod method);

/// A subbasis of k uniform random subsets, with k uniform in [0, n + 1].
std::vector<PointSet> random_subbasis(Carrier c, std::mt19937_64& rng);

/// generate_from_subbasis of a seeded random subbasis.
Topology random_topology(unsigned n, std::uint64_t seed);
/// Same, with the subbasis size fixed at k.
Topology random_topology(unsigned n, std::uint64_t seed, unsigned k);

} // namespace fintop
