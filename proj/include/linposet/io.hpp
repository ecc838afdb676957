#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "linposet/levels.hpp"
#include "linposet/map_extend.hpp"
#include "linposet/poset.hpp"

namespace linposet {

/// Exact value of a decimal literal such as "0.25" or "-3".
using Decimal = boost::multiprecision::cpp_rational;

/// Parses `[+-]?(digits[.digits]|.digits)`. Throws ParseError.
Decimal parse_decimal(std::string_view text, std::size_t line = 0);

// Poset files: one statement per line, '#' starts a comment.
//   elem NAME          declare an element
//   NAME1 < NAME2      NAME1 is strictly below NAME2 (declares either name if new)
// Declaration order is order of first appearance.
Poset parse_poset(std::string_view text);

/// Inverse of parse_poset: `elem` lines in order, then the cover pairs.
std::string render_poset(const Poset& p);

// Mapping files:
//   arity N
//   x1 ... xN -> y     one row per input tuple; all |L|^N rows required
MappingTable parse_mapping(std::string_view text, const Poset& domain, const Poset& codomain);

// Rank files: `NAME INTEGER` per element, used to describe a projection onto a chain.
std::vector<std::int64_t> parse_ranks(std::string_view text, const Poset& p);

struct ScoredItem {
    std::string item;
    Decimal lo;
    Decimal hi;
};

// Score files: `ITEM LO HI` per line, LO <= HI, item names unique.
std::vector<ScoredItem> parse_scores(std::string_view text);

/// Interval dominance: [a,b] <= [c,d] iff a <= c and b <= d. Elements are the
/// distinct intervals in order of first appearance; `interval_of[i]` is the
/// element for item i.
Poset dominance_poset(std::span<const ScoredItem> items, std::vector<Index>& interval_of);

struct RankGroup {
    std::size_t class_rank;  // position in the ascending class order
    std::vector<std::string> items;
};

struct RankedGroups {
    Direction direction;
    std::size_t k;
    std::vector<RankGroup> groups;  // best class first
};

/// Top-k selection over interval scores. Whole classes are emitted, best
/// first, until at least k items are out, so the result may exceed k.
/// Throws EmptyInput, or ParseError when k == 0.
RankedGroups rank_top_k(std::span<const ScoredItem> items, std::size_t k, Direction d);

std::string to_json(const Linearisation& lin);
std::string to_json(const ClassMapping& cm);
std::string to_json(const RankedGroups& ranked);
std::string to_json(const ImpossibilityWitness& w, std::span<const std::int64_t> ranks);

}  // namespace linposet
