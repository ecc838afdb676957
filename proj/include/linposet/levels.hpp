#pragma once

#include <compare>
#include <cstddef>
#include <string_view>
#include <vector>

#include "linposet/poset.hpp"

namespace linposet {

/// Which extremal elements are stripped first: `primal` peels maximal
/// elements off the top, `dual` peels minimal elements off the bottom.
enum class Direction { primal, dual };

std::string_view to_string(Direction d);

/// Level subscript: the number of stripping rounds before the element was removed.
using Level = std::size_t;

/// A level decomposition of a finite poset and the linear order it induces on
/// the levels.
///
/// Level `i` is the i-th antichain stripped from the poset. In the primal
/// direction level 0 holds the maximal elements and larger subscripts sit
/// lower in the induced linear order; in the dual direction level 0 holds the
/// minimal elements and larger subscripts sit higher. `rank()` hides that
/// asymmetry: rank 0 is always the least class.
class Linearisation {
public:
    Linearisation(Poset source, Direction direction, std::vector<std::vector<Index>> levels);

    const Poset& source() const noexcept { return source_; }
    Direction direction() const noexcept { return direction_; }

    /// Number of classes.
    std::size_t size() const noexcept { return levels_.size(); }

    /// Members of level `i` in declaration order.
    const std::vector<Index>& level(Level i) const;
    const std::vector<std::vector<Index>>& levels() const noexcept { return levels_; }

    /// The projection onto levels. Throws UnknownElement.
    Level class_of(Index x) const;

    /// Position of a level in the induced linear order, 0 = least.
    std::size_t rank_of_level(Level i) const;
    Level level_of_rank(std::size_t r) const;
    std::size_t rank(Index x) const { return rank_of_level(class_of(x)); }

    /// Classes listed least first; members in declaration order.
    std::vector<std::vector<Index>> classes_ascending() const;

    bool operator==(const Linearisation&) const = default;

private:
    Poset source_;
    Direction direction_;
    std::vector<std::vector<Index>> levels_;
    std::vector<Level> class_of_;
};

/// Strips maximal (primal) or minimal (dual) elements of the remainder until
/// nothing is left. Throws EmptyPoset.
Linearisation compute_levels(const Poset& p, Direction d);

Level project(const Linearisation& lin, Index x);
Level project(const Linearisation& lin, std::string_view x);

/// Compares the classes of `x` and `y` in the induced linear order.
/// Elements sharing a level compare `equivalent`.
std::weak_ordering class_compare(const Linearisation& lin, Index x, Index y);
std::weak_ordering class_compare(const Linearisation& lin, std::string_view x, std::string_view y);

/// All maximal chains have the same number of elements. Throws EmptyPoset.
bool satisfies_elcc(const Poset& p);

/// Primal and dual decompositions induce the same partition and the same
/// linear order on it. Throws EmptyPoset.
bool linearisations_equivalent(const Poset& p);

}  // namespace linposet
