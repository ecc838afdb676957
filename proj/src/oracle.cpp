#include "linposet/oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace linposet::oracle {

namespace {

void cap(const Poset& p, std::size_t limit, const char* what) {
    if (p.size() > limit)
        throw Error(ErrorKind::TooLarge, std::string(what) + " is capped at " + std::to_string(limit) +
                                             " elements, got " + std::to_string(p.size()));
}

}  // namespace

Linearisation brute_levels(const Poset& p, Direction d) {
    if (p.empty()) throw Error(ErrorKind::EmptyPoset, "cannot linearise an empty poset");
    cap(p, kMaxBruteLevels, "brute_levels");
    const auto& lt = p.strict_relation();
    const std::size_t n = p.size();
    std::vector<bool> assigned(n, false);
    std::vector<std::vector<Index>> levels;
    std::size_t done = 0;
    while (done < n) {
        std::vector<Index> level;
        for (Index x = 0; x < n; ++x) {
            if (assigned[x]) continue;
            bool blocked = false;
            for (Index y = 0; y < n && !blocked; ++y) {
                if (assigned[y]) continue;
                blocked = d == Direction::primal ? lt.test(x, y) : lt.test(y, x);
            }
            if (!blocked) level.push_back(x);
        }
        for (Index x : level) assigned[x] = true;
        done += level.size();
        levels.push_back(std::move(level));
    }
    return Linearisation(p, d, std::move(levels));
}

ChainList enumerate_maximal_chains(const Poset& p) {
    cap(p, kMaxChainEnumeration, "enumerate_maximal_chains");
    const auto& lt = p.strict_relation();
    const std::size_t n = p.size();
    auto covered = [&](Index x, Index y) {
        if (!lt.test(x, y)) return false;
        for (Index z = 0; z < n; ++z)
            if (lt.test(x, z) && lt.test(z, y)) return false;
        return true;
    };
    auto is_minimal = [&](Index x) {
        for (Index y = 0; y < n; ++y)
            if (lt.test(y, x)) return false;
        return true;
    };

    ChainList chains;
    std::vector<Index> path;
    auto walk = [&](auto&& self, Index x) -> void {
        path.push_back(x);
        bool extended = false;
        for (Index y = 0; y < n; ++y) {
            if (covered(x, y)) {
                extended = true;
                self(self, y);
            }
        }
        if (!extended) chains.push_back(path);
        path.pop_back();
    };
    for (Index x = 0; x < n; ++x)
        if (is_minimal(x)) walk(walk, x);
    std::sort(chains.begin(), chains.end());
    return chains;
}

std::uint64_t count_linear_extensions(const Poset& p) {
    cap(p, kMaxLinearExtensions, "count_linear_extensions");
    const auto& lt = p.strict_relation();
    const std::size_t n = p.size();
    std::vector<bool> placed(n, false);
    auto place = [&](auto&& self, std::size_t count) -> std::uint64_t {
        if (count == n) return 1;
        std::uint64_t total = 0;
        for (Index x = 0; x < n; ++x) {
            if (placed[x]) continue;
            bool ready = true;
            for (Index y = 0; y < n && ready; ++y)
                if (!placed[y] && lt.test(y, x)) ready = false;
            if (!ready) continue;
            placed[x] = true;
            total += self(self, count + 1);
            placed[x] = false;
        }
        return total;
    };
    return place(place, 0);
}

Poset random_poset(std::uint64_t seed, std::size_t size, Probability edge_probability) {
    if (size == 0 || size > kMaxRandomPoset)
        throw Error(ErrorKind::TooLarge, "random_poset size must be in 1.." + std::to_string(kMaxRandomPoset));
    if (edge_probability.denominator == 0) throw std::invalid_argument("zero denominator");

    std::mt19937_64 rng(seed);
    std::vector<Index> perm(size);
    for (Index i = 0; i < size; ++i) perm[i] = i;
    for (std::size_t i = size - 1; i > 0; --i) std::swap(perm[i], perm[rng() % (i + 1)]);

    std::vector<IndexPair> edges;
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = i + 1; j < size; ++j)
            if (rng() % edge_probability.denominator < edge_probability.numerator)
                edges.emplace_back(perm[i], perm[j]);

    std::vector<std::string> names(size);
    for (Index i = 0; i < size; ++i) names[i] = "v" + std::to_string(i);
    return Poset::from_indices(std::move(names), edges);
}

}  // namespace linposet::oracle
