#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "linposet/bit_matrix.hpp"
#include "linposet/error.hpp"

namespace linposet {

/// Position of an element in its poset's declaration order.
using Index = std::size_t;

using NamePair = std::pair<std::string, std::string>;
using IndexPair = std::pair<Index, Index>;

/// True if `name` is a legal element token: non-empty, no whitespace, no '<', no '#'.
bool is_valid_element_name(std::string_view name);

/// A finite partially ordered set.
///
/// Only the strict relation `<` is stored; `x <= y` means `x == y` or `x < y`.
/// The relation is the transitive closure of whatever generating pairs were
/// supplied, and the cover relation (Hasse diagram) is its transitive
/// reduction. Elements keep their declaration order, which every query that
/// returns a set of elements respects. Immutable once built.
class Poset {
public:
    /// Builds from element names and generating pairs `(x, y)` meaning `x < y`.
    /// Throws DuplicateElement, UnknownElement, or CycleDetected.
    static Poset build(std::vector<std::string> elements, std::span<const NamePair> pairs);

    /// Same, with pairs given as indices into `elements`.
    static Poset from_indices(std::vector<std::string> elements, std::span<const IndexPair> pairs);

    std::size_t size() const noexcept { return names_.size(); }
    bool empty() const noexcept { return names_.empty(); }

    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(Index x) const;

    /// Throws UnknownElement if absent.
    Index index_of(std::string_view name) const;
    std::optional<Index> find(std::string_view name) const;

    bool lt(Index x, Index y) const;
    bool leq(Index x, Index y) const;
    bool incomparable(Index x, Index y) const;

    bool lt(std::string_view x, std::string_view y) const { return lt(index_of(x), index_of(y)); }
    bool leq(std::string_view x, std::string_view y) const { return leq(index_of(x), index_of(y)); }
    bool incomparable(std::string_view x, std::string_view y) const {
        return incomparable(index_of(x), index_of(y));
    }

    /// `x` is covered by `y`: x < y with nothing strictly between.
    bool covered_by(Index x, Index y) const;

    const std::vector<Index>& upper_covers(Index x) const;
    const std::vector<Index>& lower_covers(Index x) const;

    /// All strict pairs (x, y) with x < y, in row-major declaration order.
    std::vector<IndexPair> strict_pairs() const;
    std::vector<IndexPair> cover_pairs() const;

    /// A linear extension: every element precedes all elements above it.
    const std::vector<Index>& topological_order() const noexcept { return topo_; }

    const BitMatrix& strict_relation() const noexcept { return lt_; }
    const BitMatrix& cover_relation() const noexcept { return covers_; }

    /// Same names in the same order and the same strict relation.
    bool operator==(const Poset& other) const { return names_ == other.names_ && lt_ == other.lt_; }

private:
    Poset() = default;
    void check(Index x) const;

    std::vector<std::string> names_;
    std::unordered_map<std::string, Index> index_;
    BitMatrix lt_;
    BitMatrix covers_;
    std::vector<std::vector<Index>> up_;
    std::vector<std::vector<Index>> down_;
    std::vector<Index> topo_;
};

bool is_linear(const Poset& p);

/// Elements of `subset` with no strictly greater element inside `subset`,
/// ascending declaration order. Duplicates in `subset` are ignored.
std::vector<Index> maximal_elements(const Poset& p, std::span<const Index> subset);
std::vector<Index> minimal_elements(const Poset& p, std::span<const Index> subset);
std::vector<Index> maximal_elements(const Poset& p);
std::vector<Index> minimal_elements(const Poset& p);

/// Number of elements in a longest chain; 0 for the empty poset.
std::size_t longest_chain_length(const Poset& p);

bool is_lattice(const Poset& p);

/// Least upper bound / greatest lower bound, or nullopt if it does not exist.
std::optional<Index> try_sup(const Poset& p, Index x, Index y);
std::optional<Index> try_inf(const Poset& p, Index x, Index y);

/// Throw NotALattice when the bound does not exist.
Index sup(const Poset& p, Index x, Index y);
Index inf(const Poset& p, Index x, Index y);

/// Pointwise order on tuples. Throws ArityMismatch or UnknownElement.
bool tuple_leq(const Poset& p, std::span<const Index> xs, std::span<const Index> ys);

}  // namespace linposet
