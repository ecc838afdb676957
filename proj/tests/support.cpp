#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <stdexcept>

#include "linposet/oracle.hpp"

namespace linposet::testing {

std::string testdata(const std::string& file) { return std::string(LINPOSET_TESTDATA) + "/" + file; }

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Poset p_abc() {
    std::vector<NamePair> pairs{{"bot", "a"}, {"a", "b"}, {"b", "top"}, {"bot", "c"}, {"c", "top"}};
    return Poset::build({"bot", "a", "b", "c", "top"}, pairs);
}

Poset diamond() {
    std::vector<NamePair> pairs{{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}};
    return Poset::build({"bot", "a", "b", "top"}, pairs);
}

Poset chain(std::size_t n) {
    std::vector<std::string> names;
    std::vector<IndexPair> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back("x" + std::to_string(i + 1));
        if (i > 0) pairs.emplace_back(i - 1, i);
    }
    return Poset::from_indices(names, pairs);
}

Poset antichain(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("y" + std::to_string(i + 1));
    return Poset::from_indices(names, {});
}

Poset boolean_lattice(std::size_t n) {
    std::vector<std::string> names;
    std::vector<IndexPair> pairs;
    const std::size_t count = std::size_t{1} << n;
    for (std::size_t s = 0; s < count; ++s) {
        std::string name = "s";
        for (std::size_t bit = 0; bit < n; ++bit)
            if (s >> bit & 1u) name += std::to_string(bit);
        names.push_back(s == 0 ? "empty" : name);
        for (std::size_t bit = 0; bit < n; ++bit)
            if (!(s >> bit & 1u)) pairs.emplace_back(s, s | (std::size_t{1} << bit));
    }
    return Poset::from_indices(names, pairs);
}

Poset chain_product(std::size_t rows, std::size_t cols) {
    std::vector<std::string> names;
    std::vector<IndexPair> pairs;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            names.push_back("p" + std::to_string(r) + std::to_string(c));
            const std::size_t id = r * cols + c;
            if (r + 1 < rows) pairs.emplace_back(id, id + cols);
            if (c + 1 < cols) pairs.emplace_back(id, id + 1);
        }
    }
    return Poset::from_indices(names, pairs);
}

Poset short_chain_poset() {
    std::vector<NamePair> pairs{{"a1", "a2"}, {"a2", "a3"}, {"b1", "b2"}, {"b2", "b3"}, {"a1", "b3"}};
    return Poset::build({"a1", "a2", "a3", "b1", "b2", "b3"}, pairs);
}

MappingTable unary_table(const Poset& dom, const Poset& cod,
                         const std::vector<std::pair<std::string, std::string>>& rows) {
    std::vector<Index> outputs(dom.size(), 0);
    for (const auto& [x, y] : rows) outputs[dom.index_of(x)] = cod.index_of(y);
    return MappingTable(dom, cod, 1, outputs);
}

namespace {

bool tuple_below(const Poset& p, const std::vector<std::size_t>& s, const std::vector<std::size_t>& t) {
    for (std::size_t i = 0; i < s.size(); ++i)
        if (!p.leq(s[i], t[i])) return false;
    return true;
}

}  // namespace

MappingTable random_table(const Poset& dom, const Poset& cod, std::size_t arity, TableKind kind,
                          std::mt19937_64& rng) {
    const std::size_t n = dom.size();
    const std::size_t count = tuple_count(n, arity);
    std::vector<Index> outputs(count);
    if (kind == TableKind::arbitrary) {
        for (auto& y : outputs) y = rng() % cod.size();
        return MappingTable(dom, cod, arity, outputs);
    }

    // Visit tuples so that every pointwise-smaller tuple comes first.
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i) position[dom.topological_order()[i]] = i;
    std::vector<std::vector<std::size_t>> tuples;
    for (std::size_t code = 0; code < count; ++code) tuples.push_back(decode_tuple(code, n, arity));
    std::vector<std::size_t> order(count);
    for (std::size_t i = 0; i < count; ++i) order[i] = i;
    auto weight = [&](std::size_t code) {
        std::size_t w = 0;
        for (auto x : tuples[code]) w += position[x];
        return w;
    };
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return weight(a) < weight(b); });

    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<bool> done(count, false);
        bool stuck = false;
        for (std::size_t code : order) {
            std::vector<Index> candidates;
            for (Index m = 0; m < cod.size(); ++m) {
                bool ok = true;
                for (std::size_t prev = 0; prev < count && ok; ++prev) {
                    if (!done[prev] || !tuple_below(dom, tuples[prev], tuples[code])) continue;
                    ok = kind == TableKind::monotone ? cod.leq(outputs[prev], m) : cod.leq(m, outputs[prev]);
                }
                if (ok) candidates.push_back(m);
            }
            if (candidates.empty()) {
                stuck = true;
                break;
            }
            outputs[code] = candidates[rng() % candidates.size()];
            done[code] = true;
        }
        if (!stuck) return MappingTable(dom, cod, arity, outputs);
    }
    // Constant maps are both monotone and antitone.
    std::fill(outputs.begin(), outputs.end(), rng() % cod.size());
    return MappingTable(dom, cod, arity, outputs);
}

namespace {

template <class Ok>
bool all_comparable_pairs(const MappingTable& f, Ok ok) {
    const std::size_t n = f.domain().size();
    const std::size_t count = f.outputs().size();
    for (std::size_t s = 0; s < count; ++s) {
        const auto xs = decode_tuple(s, n, f.arity());
        for (std::size_t t = 0; t < count; ++t) {
            const auto ys = decode_tuple(t, n, f.arity());
            if (tuple_below(f.domain(), xs, ys) && !ok(f.outputs()[s], f.outputs()[t])) return false;
        }
    }
    return true;
}

}  // namespace

bool brute_monotone(const MappingTable& f) {
    return all_comparable_pairs(f, [&](Index a, Index b) { return f.codomain().leq(a, b); });
}

bool brute_antitone(const MappingTable& f) {
    return all_comparable_pairs(f, [&](Index a, Index b) { return f.codomain().leq(b, a); });
}

bool brute_is_lattice(const Poset& p) {
    const std::size_t n = p.size();
    for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
            bool has_sup = false, has_inf = false;
            for (Index z = 0; z < n; ++z) {
                const bool upper = p.leq(x, z) && p.leq(y, z);
                const bool lower = p.leq(z, x) && p.leq(z, y);
                bool least = upper, greatest = lower;
                for (Index w = 0; w < n; ++w) {
                    if (upper && p.leq(x, w) && p.leq(y, w) && !p.leq(z, w)) least = false;
                    if (lower && p.leq(w, x) && p.leq(w, y) && !p.leq(w, z)) greatest = false;
                }
                has_sup = has_sup || least;
                has_inf = has_inf || greatest;
            }
            if (!has_sup || !has_inf) return false;
        }
    }
    return true;
}

std::vector<std::size_t> chain_lengths(const Poset& p) {
    std::vector<std::size_t> out;
    for (const auto& c : oracle::enumerate_maximal_chains(p)) out.push_back(c.size());
    return out;
}

}  // namespace linposet::testing
