#include "linposet/poset.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <limits>

namespace linposet {

bool is_valid_element_name(std::string_view name) {
    if (name.empty()) return false;
    return std::none_of(name.begin(), name.end(), [](char c) {
        return std::isspace(static_cast<unsigned char>(c)) != 0 || c == '<' || c == '#';
    });
}

Poset Poset::build(std::vector<std::string> elements, std::span<const NamePair> pairs) {
    std::unordered_map<std::string, Index> lookup;
    for (Index i = 0; i < elements.size(); ++i) lookup.emplace(elements[i], i);

    std::vector<IndexPair> indexed;
    indexed.reserve(pairs.size());
    for (const auto& [x, y] : pairs) {
        auto ix = lookup.find(x);
        auto iy = lookup.find(y);
        if (ix == lookup.end()) throw Error(ErrorKind::UnknownElement, "'" + x + "' is not declared");
        if (iy == lookup.end()) throw Error(ErrorKind::UnknownElement, "'" + y + "' is not declared");
        indexed.emplace_back(ix->second, iy->second);
    }
    return from_indices(std::move(elements), indexed);
}

Poset Poset::from_indices(std::vector<std::string> elements, std::span<const IndexPair> pairs) {
    Poset p;
    const std::size_t n = elements.size();
    p.names_ = std::move(elements);
    p.index_.reserve(n);
    for (Index i = 0; i < n; ++i) {
        if (!is_valid_element_name(p.names_[i]))
            throw Error(ErrorKind::ParseError, "invalid element name '" + p.names_[i] + "'");
        if (!p.index_.emplace(p.names_[i], i).second)
            throw Error(ErrorKind::DuplicateElement, "'" + p.names_[i] + "' declared twice");
    }

    BitMatrix direct(n);
    for (const auto& [x, y] : pairs) {
        if (x >= n || y >= n) throw Error(ErrorKind::UnknownElement, "pair index out of range");
        if (x == y) throw Error(ErrorKind::CycleDetected, "'" + p.names_[x] + "' < itself");
        direct.set(x, y);
    }

    // Kahn's algorithm on the generating graph; leftovers sit on a cycle.
    std::vector<std::size_t> indegree(n, 0);
    std::vector<std::vector<Index>> succ(n);
    for (Index x = 0; x < n; ++x) {
        succ[x] = direct.row_indices(x);
        for (Index y : succ[x]) ++indegree[y];
    }
    std::deque<Index> ready;
    for (Index x = 0; x < n; ++x)
        if (indegree[x] == 0) ready.push_back(x);
    std::vector<Index> order;
    order.reserve(n);
    while (!ready.empty()) {
        Index x = ready.front();
        ready.pop_front();
        order.push_back(x);
        for (Index y : succ[x])
            if (--indegree[y] == 0) ready.push_back(y);
    }
    if (order.size() != n) {
        Index culprit = 0;
        while (indegree[culprit] == 0) ++culprit;
        throw Error(ErrorKind::CycleDetected,
                    "relation is not antisymmetric; '" + p.names_[culprit] + "' lies on a cycle");
    }

    p.lt_ = BitMatrix(n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        for (Index y : succ[*it]) {
            p.lt_.set(*it, y);
            p.lt_.or_row(*it, y);
        }
    }

    // x is covered by y iff x < y and no z with x < z < y.
    p.covers_ = BitMatrix(n);
    for (Index x = 0; x < n; ++x) {
        p.covers_.copy_row(x, p.lt_, x);
        for (Index z : p.lt_.row_indices(x)) p.covers_.and_not_row(x, p.lt_, z);
    }
    p.up_.assign(n, {});
    p.down_.assign(n, {});
    for (Index x = 0; x < n; ++x) {
        p.up_[x] = p.covers_.row_indices(x);
        for (Index y : p.up_[x]) p.down_[y].push_back(x);
    }

    // Fewer strict predecessors sorts first; ties broken by declaration order.
    std::vector<std::size_t> below(n, 0);
    for (Index x = 0; x < n; ++x)
        for (Index y : p.lt_.row_indices(x)) ++below[y];
    p.topo_.resize(n);
    for (Index i = 0; i < n; ++i) p.topo_[i] = i;
    std::stable_sort(p.topo_.begin(), p.topo_.end(),
                     [&](Index a, Index b) { return below[a] < below[b]; });
    return p;
}

const std::string& Poset::name(Index x) const {
    check(x);
    return names_[x];
}

Index Poset::index_of(std::string_view name) const {
    if (auto found = find(name)) return *found;
    throw Error(ErrorKind::UnknownElement, "'" + std::string(name) + "' is not an element");
}

std::optional<Index> Poset::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

void Poset::check(Index x) const {
    if (x >= names_.size())
        throw Error(ErrorKind::UnknownElement, "element index " + std::to_string(x) + " out of range");
}

bool Poset::lt(Index x, Index y) const {
    check(x);
    check(y);
    return lt_.test(x, y);
}

bool Poset::leq(Index x, Index y) const { return x == y ? (check(x), true) : lt(x, y); }

bool Poset::incomparable(Index x, Index y) const { return !leq(x, y) && !leq(y, x); }

bool Poset::covered_by(Index x, Index y) const {
    check(x);
    check(y);
    return covers_.test(x, y);
}

const std::vector<Index>& Poset::upper_covers(Index x) const {
    check(x);
    return up_[x];
}

const std::vector<Index>& Poset::lower_covers(Index x) const {
    check(x);
    return down_[x];
}

std::vector<IndexPair> Poset::strict_pairs() const {
    std::vector<IndexPair> out;
    for (Index x = 0; x < size(); ++x)
        for (Index y : lt_.row_indices(x)) out.emplace_back(x, y);
    return out;
}

std::vector<IndexPair> Poset::cover_pairs() const {
    std::vector<IndexPair> out;
    for (Index x = 0; x < size(); ++x)
        for (Index y : up_[x]) out.emplace_back(x, y);
    return out;
}

bool is_linear(const Poset& p) {
    for (Index x = 0; x < p.size(); ++x)
        for (Index y = x + 1; y < p.size(); ++y)
            if (p.incomparable(x, y)) return false;
    return true;
}

namespace {

template <class Dominated>
std::vector<Index> extremal(const Poset& p, std::span<const Index> subset, Dominated dominated) {
    std::vector<Index> members(subset.begin(), subset.end());
    for (Index x : members)
        if (x >= p.size())
            throw Error(ErrorKind::UnknownElement, "element index " + std::to_string(x) + " out of range");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    std::vector<Index> out;
    for (Index x : members) {
        bool keep = std::none_of(members.begin(), members.end(),
                                 [&](Index y) { return dominated(x, y); });
        if (keep) out.push_back(x);
    }
    return out;
}

}  // namespace

std::vector<Index> maximal_elements(const Poset& p, std::span<const Index> subset) {
    return extremal(p, subset, [&](Index x, Index y) { return p.strict_relation().test(x, y); });
}

std::vector<Index> minimal_elements(const Poset& p, std::span<const Index> subset) {
    return extremal(p, subset, [&](Index x, Index y) { return p.strict_relation().test(y, x); });
}

std::vector<Index> maximal_elements(const Poset& p) {
    std::vector<Index> out;
    for (Index x = 0; x < p.size(); ++x)
        if (p.upper_covers(x).empty()) out.push_back(x);
    return out;
}

std::vector<Index> minimal_elements(const Poset& p) {
    std::vector<Index> out;
    for (Index x = 0; x < p.size(); ++x)
        if (p.lower_covers(x).empty()) out.push_back(x);
    return out;
}

std::size_t longest_chain_length(const Poset& p) {
    // depth[x] = elements in a longest chain ending at x, along covers.
    std::vector<std::size_t> depth(p.size(), 1);
    std::size_t best = 0;
    for (Index x : p.topological_order()) {
        for (Index below : p.lower_covers(x)) depth[x] = std::max(depth[x], depth[below] + 1);
        best = std::max(best, depth[x]);
    }
    return best;
}

namespace {

// The least element of `bounds`, if any. The least element has strictly fewer
// predecessors than every other bound, so it is the first one in topological
// order; it only remains to confirm it lies below the rest.
std::optional<Index> least_of(const Poset& p, const std::vector<Index>& bounds, bool upward) {
    if (bounds.empty()) return std::nullopt;
    const auto& topo = p.topological_order();
    std::vector<std::size_t> position(p.size());
    for (Index i = 0; i < topo.size(); ++i) position[topo[i]] = i;
    auto pick = upward ? std::min_element(bounds.begin(), bounds.end(),
                                          [&](Index a, Index b) { return position[a] < position[b]; })
                       : std::max_element(bounds.begin(), bounds.end(),
                                          [&](Index a, Index b) { return position[a] < position[b]; });
    Index candidate = *pick;
    for (Index b : bounds) {
        bool ok = upward ? p.leq(candidate, b) : p.leq(b, candidate);
        if (!ok) return std::nullopt;
    }
    return candidate;
}

}  // namespace

std::optional<Index> try_sup(const Poset& p, Index x, Index y) {
    std::vector<Index> upper;
    for (Index z = 0; z < p.size(); ++z)
        if (p.leq(x, z) && p.leq(y, z)) upper.push_back(z);
    return least_of(p, upper, true);
}

std::optional<Index> try_inf(const Poset& p, Index x, Index y) {
    std::vector<Index> lower;
    for (Index z = 0; z < p.size(); ++z)
        if (p.leq(z, x) && p.leq(z, y)) lower.push_back(z);
    return least_of(p, lower, false);
}

Index sup(const Poset& p, Index x, Index y) {
    if (auto s = try_sup(p, x, y)) return *s;
    throw Error(ErrorKind::NotALattice, "no least upper bound of '" + p.name(x) + "' and '" + p.name(y) + "'");
}

Index inf(const Poset& p, Index x, Index y) {
    if (auto s = try_inf(p, x, y)) return *s;
    throw Error(ErrorKind::NotALattice,
                "no greatest lower bound of '" + p.name(x) + "' and '" + p.name(y) + "'");
}

bool is_lattice(const Poset& p) {
    for (Index x = 0; x < p.size(); ++x) {
        for (Index y = x + 1; y < p.size(); ++y) {
            if (!p.incomparable(x, y)) continue;
            if (!try_sup(p, x, y) || !try_inf(p, x, y)) return false;
        }
    }
    return true;
}

bool tuple_leq(const Poset& p, std::span<const Index> xs, std::span<const Index> ys) {
    if (xs.size() != ys.size())
        throw Error(ErrorKind::ArityMismatch,
                    "tuples of length " + std::to_string(xs.size()) + " and " + std::to_string(ys.size()));
    bool all = true;
    for (std::size_t i = 0; i < xs.size(); ++i) all = p.leq(xs[i], ys[i]) && all;
    return all;
}

}  // namespace linposet
