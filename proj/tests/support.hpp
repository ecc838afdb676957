#pragma once

// Fixtures and independent brute-force checks shared by the unit and
// acceptance suites.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "linposet/map_extend.hpp"
#include "linposet/poset.hpp"

namespace linposet::testing {

std::string testdata(const std::string& file);
std::string slurp(const std::string& path);

/// bot < a < b < top, bot < c < top.
Poset p_abc();
/// bot < a, b < top.
Poset diamond();
Poset chain(std::size_t n);
Poset antichain(std::size_t n);
/// Subsets of {0..n-1} under inclusion.
Poset boolean_lattice(std::size_t n);
/// Product of chains of the given lengths, pointwise order.
Poset chain_product(std::size_t rows, std::size_t cols);
/// Two 3-chains a1<a2<a3, b1<b2<b3 plus a1<b3: every element lies on a
/// longest chain, yet {a1, b3} is a maximal chain of length 2.
Poset short_chain_poset();

/// Mapping from element names, unary.
MappingTable unary_table(const Poset& dom, const Poset& cod,
                         const std::vector<std::pair<std::string, std::string>>& rows);

/// Random table of the given kind, built greedily over the product order so it
/// holds by construction.
enum class TableKind { arbitrary, monotone, antitone };
MappingTable random_table(const Poset& dom, const Poset& cod, std::size_t arity, TableKind kind,
                          std::mt19937_64& rng);

/// Exhaustive over every comparable pair of argument tuples.
bool brute_monotone(const MappingTable& f);
bool brute_antitone(const MappingTable& f);

/// Exhaustive bound search: every pair has a least upper and greatest lower bound.
bool brute_is_lattice(const Poset& p);

/// Lengths of oracle-enumerated maximal chains.
std::vector<std::size_t> chain_lengths(const Poset& p);

}  // namespace linposet::testing
