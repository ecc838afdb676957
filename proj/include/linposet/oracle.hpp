#pragma once

// Brute-force reference implementations. Deliberately naive and size-capped;
// they exist to cross-check the fast paths in poset/levels, not to be used on
// real inputs.

#include <cstdint>
#include <vector>

#include "linposet/levels.hpp"
#include "linposet/poset.hpp"

namespace linposet::oracle {

inline constexpr std::size_t kMaxBruteLevels = 64;
inline constexpr std::size_t kMaxChainEnumeration = 14;
inline constexpr std::size_t kMaxLinearExtensions = 8;
inline constexpr std::size_t kMaxRandomPoset = 12;

/// Levels by scanning every candidate against the remainder each round.
/// Throws EmptyPoset or TooLarge.
Linearisation brute_levels(const Poset& p, Direction d);

/// Each chain ascends; chains sorted lexicographically by declaration index.
using ChainList = std::vector<std::vector<Index>>;

/// Every maximal chain exactly once. Throws TooLarge.
ChainList enumerate_maximal_chains(const Poset& p);

/// Total orders on the carrier that contain the partial order. Throws TooLarge.
std::uint64_t count_linear_extensions(const Poset& p);

/// Edge probability as an exact fraction numerator/denominator.
struct Probability {
    std::uint64_t numerator = 0;
    std::uint64_t denominator = 1;
};

/// Reproducible random poset on elements v0..v{size-1}.
///
/// Generator: std::mt19937_64 seeded with `seed` (its output sequence is fixed
/// by the C++ standard). A permutation is drawn by Fisher-Yates, for i from
/// size-1 down to 1 swapping slot i with slot `draw % (i + 1)`. Then for every
/// pair of permutation positions i < j, in row-major order, the edge
/// perm[i] < perm[j] is kept iff `draw % denominator < numerator`. The result
/// is the transitive closure of the kept edges.
Poset random_poset(std::uint64_t seed, std::size_t size, Probability edge_probability);

}  // namespace linposet::oracle
