#include "linposet/map_extend.hpp"

#include <algorithm>
#include <limits>

namespace linposet {

std::size_t tuple_count(std::size_t base, std::size_t arity, std::size_t limit) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < arity; ++i) {
        if (base != 0 && total > limit / base)
            throw Error(ErrorKind::TooLarge, std::to_string(base) + "^" + std::to_string(arity) +
                                                 " tuples exceed the limit of " + std::to_string(limit));
        total *= base;
    }
    return total;
}

std::size_t encode_tuple(std::span<const std::size_t> tuple, std::size_t base) {
    std::size_t code = 0;
    for (std::size_t v : tuple) code = code * base + v;
    return code;
}

std::vector<std::size_t> decode_tuple(std::size_t code, std::size_t base, std::size_t arity) {
    std::vector<std::size_t> out(arity);
    for (std::size_t i = arity; i-- > 0;) {
        out[i] = code % base;
        code /= base;
    }
    return out;
}

MappingTable::MappingTable(Poset domain, Poset codomain, std::size_t arity, std::vector<Index> outputs)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), arity_(arity), outputs_(std::move(outputs)) {
    if (arity_ == 0) throw Error(ErrorKind::ArityMismatch, "arity must be positive");
    const std::size_t expected = tuple_count(domain_.size(), arity_);
    if (outputs_.size() != expected)
        throw Error(ErrorKind::ArityMismatch, "table has " + std::to_string(outputs_.size()) +
                                                  " entries, expected " + std::to_string(expected));
    for (Index y : outputs_)
        if (y >= codomain_.size()) throw Error(ErrorKind::UnknownElement, "output outside the codomain");
}

MappingTable MappingTable::from_function(Poset domain, Poset codomain, std::size_t arity,
                                         const std::function<Index(std::span<const Index>)>& f) {
    const std::size_t n = domain.size();
    const std::size_t count = tuple_count(n, arity);
    std::vector<Index> outputs(count);
    for (std::size_t code = 0; code < count; ++code) outputs[code] = f(decode_tuple(code, n, arity));
    return MappingTable(std::move(domain), std::move(codomain), arity, std::move(outputs));
}

Index MappingTable::operator()(std::span<const Index> xs) const {
    if (xs.size() != arity_)
        throw Error(ErrorKind::ArityMismatch, "expected " + std::to_string(arity_) + " arguments");
    for (Index x : xs)
        if (x >= domain_.size()) throw Error(ErrorKind::UnknownElement, "argument outside the domain");
    return outputs_[encode_tuple(xs, domain_.size())];
}

namespace {

// The pointwise order on L^n is generated by raising one coordinate along a
// cover, so checking those steps is enough.
template <class Ok>
bool holds_on_cover_steps(const MappingTable& f, Ok ok) {
    const Poset& dom = f.domain();
    const std::size_t n = dom.size();
    std::vector<std::size_t> weight(f.arity(), 1);
    for (std::size_t i = f.arity() - 1; i-- > 0;) weight[i] = weight[i + 1] * n;
    for (std::size_t code = 0; code < f.outputs().size(); ++code) {
        const auto xs = decode_tuple(code, n, f.arity());
        for (std::size_t i = 0; i < f.arity(); ++i) {
            for (Index up : dom.upper_covers(xs[i])) {
                const std::size_t raised = code + (up - xs[i]) * weight[i];
                if (!ok(f.outputs()[code], f.outputs()[raised])) return false;
            }
        }
    }
    return true;
}

}  // namespace

bool is_monotone(const MappingTable& f) {
    const Poset& m = f.codomain();
    return holds_on_cover_steps(f, [&](Index lo, Index hi) { return m.leq(lo, hi); });
}

bool is_antitone(const MappingTable& f) {
    const Poset& m = f.codomain();
    return holds_on_cover_steps(f, [&](Index lo, Index hi) { return m.leq(hi, lo); });
}

std::string_view to_string(ExtensionMode m) { return m == ExtensionMode::over ? "over" : "under"; }

Level ClassMapping::operator()(std::span<const Level> levels) const {
    if (levels.size() != arity)
        throw Error(ErrorKind::ArityMismatch, "expected " + std::to_string(arity) + " class arguments");
    for (Level l : levels)
        if (l >= domain.size()) throw Error(ErrorKind::UnknownElement, "level outside the domain");
    return table[encode_tuple(levels, domain.size())];
}

ClassMapping extend(const MappingTable& f, const Linearisation& dlin, const Linearisation& clin,
                    ExtensionMode mode) {
    if (!(dlin.source() == f.domain()))
        throw Error(ErrorKind::MismatchedPoset, "domain linearisation is not of the mapping's domain");
    if (!(clin.source() == f.codomain()))
        throw Error(ErrorKind::MismatchedPoset, "codomain linearisation is not of the mapping's codomain");

    const std::size_t n = f.domain().size();
    const std::size_t k = dlin.size();
    const std::size_t unset = std::numeric_limits<std::size_t>::max();
    // Best codomain rank seen per class tuple.
    std::vector<std::size_t> best(tuple_count(k, f.arity()), unset);
    std::vector<std::size_t> classes(f.arity());
    for (std::size_t code = 0; code < f.outputs().size(); ++code) {
        const auto xs = decode_tuple(code, n, f.arity());
        for (std::size_t i = 0; i < xs.size(); ++i) classes[i] = dlin.class_of(xs[i]);
        const std::size_t slot = encode_tuple(classes, k);
        const std::size_t r = clin.rank(f.outputs()[code]);
        if (best[slot] == unset || (mode == ExtensionMode::over ? r > best[slot] : r < best[slot]))
            best[slot] = r;
    }

    ClassMapping cm{dlin, clin, f.arity(), mode, {}};
    cm.table.reserve(best.size());
    for (std::size_t r : best) cm.table.push_back(clin.level_of_rank(r));
    return cm;
}

std::vector<ClassMapping> extend_multi(std::span<const MappingTable> fs, const Linearisation& dlin,
                                       const Linearisation& clin, ExtensionMode mode) {
    for (const auto& f : fs) {
        if (f.arity() != fs.front().arity())
            throw Error(ErrorKind::MixedArity, "component mappings have different arities");
        if (!(f.domain() == fs.front().domain()) || !(f.codomain() == fs.front().codomain()))
            throw Error(ErrorKind::MismatchedPoset, "component mappings have different domains or codomains");
    }
    std::vector<ClassMapping> out;
    out.reserve(fs.size());
    for (const auto& f : fs) out.push_back(extend(f, dlin, clin, mode));
    return out;
}

namespace {

// Each domain class is one step below the next rank; stepping a single
// coordinate generates the pointwise order on class tuples.
template <class Ok>
bool class_steps_hold(const ClassMapping& cm, Ok ok) {
    const std::size_t k = cm.domain.size();
    for (std::size_t code = 0; code < cm.table.size(); ++code) {
        auto levels = decode_tuple(code, k, cm.arity);
        const std::size_t here = cm.codomain.rank_of_level(cm.table[code]);
        for (std::size_t i = 0; i < cm.arity; ++i) {
            const std::size_t r = cm.domain.rank_of_level(levels[i]);
            if (r + 1 == k) continue;
            auto stepped = levels;
            stepped[i] = cm.domain.level_of_rank(r + 1);
            const std::size_t there = cm.codomain.rank_of_level(cm.table[encode_tuple(stepped, k)]);
            if (!ok(here, there)) return false;
        }
    }
    return true;
}

}  // namespace

bool is_class_monotone(const ClassMapping& cm) {
    return class_steps_hold(cm, [](std::size_t lo, std::size_t hi) { return lo <= hi; });
}

bool is_class_antitone(const ClassMapping& cm) {
    return class_steps_hold(cm, [](std::size_t lo, std::size_t hi) { return lo >= hi; });
}

std::string_view to_string(WitnessCase c) { return c == WitnessCase::collapsed ? "collapsed" : "ordered"; }

bool ImpossibilityWitness::verify(std::span<const std::int64_t> ranks) const {
    const Poset& l = witness_map.domain();
    if (ranks.size() != l.size() || !l.incomparable(a, b) || !is_monotone(witness_map)) return false;
    const Index fa = witness_map(a);
    const Index fb = witness_map(b);
    if (kind == WitnessCase::collapsed) return ranks[a] == ranks[b] && ranks[fa] != ranks[fb];
    return fa == b && fb == a && ranks[a] < ranks[b] && ranks[fa] > ranks[fb];
}

ImpossibilityWitness impossibility_witness(const Poset& lattice, std::span<const std::int64_t> ranks) {
    const Poset& l = lattice;
    if (ranks.size() != l.size())
        throw Error(ErrorKind::ArityMismatch, "expected a rank for each of the " + std::to_string(l.size()) +
                                                  " elements, got " + std::to_string(ranks.size()));
    if (l.empty() || !is_lattice(l)) throw Error(ErrorKind::NotALattice, "input poset is not a lattice");
    for (const auto& [x, y] : l.strict_pairs())
        if (!(ranks[x] < ranks[y]))
            throw Error(ErrorKind::ProjectionNotOrderPreserving,
                        l.name(x) + " < " + l.name(y) + " but rank " + std::to_string(ranks[x]) +
                            " is not below " + std::to_string(ranks[y]));

    Index a = 0, b = 0;
    bool found = false;
    for (Index i = 0; i < l.size() && !found; ++i) {
        for (Index j = i + 1; j < l.size() && !found; ++j) {
            if (!l.incomparable(i, j)) continue;
            found = true;
            std::tie(a, b) = ranks[i] <= ranks[j] ? std::pair{i, j} : std::pair{j, i};
        }
    }
    if (!found) throw Error(ErrorKind::LinearLattice, "every pair of elements is comparable");

    const auto p = [&](Index x) { return std::to_string(ranks[x]); };
    if (ranks[a] == ranks[b]) {
        auto f = MappingTable::from_function(l, l, 1, [&](std::span<const Index> xs) { return sup(l, xs[0], a); });
        const Index fb = f(b);
        std::string violation = "p(" + l.name(a) + ") = p(" + l.name(b) + ") = " + p(a) +
                                " but f = sup{-, " + l.name(a) + "} gives p(f(" + l.name(a) + ")) = p(" +
                                l.name(a) + ") = " + p(a) + " != p(f(" + l.name(b) + ")) = p(" +
                                l.name(fb) + ") = " + p(fb) + "; the extension is ill-defined";
        return {a, b, WitnessCase::collapsed, std::move(f), std::move(violation)};
    }

    const std::vector<Index> bottoms = minimal_elements(l);
    const Index bottom = bottoms.front();
    auto f = MappingTable::from_function(l, l, 1, [&](std::span<const Index> xs) {
        Index v = bottom;
        if (l.leq(a, xs[0])) v = sup(l, v, b);
        if (l.leq(b, xs[0])) v = sup(l, v, a);
        return v;
    });
    std::string violation = "p(" + l.name(a) + ") = " + p(a) + " < p(" + l.name(b) + ") = " + p(b) +
                            " but the monotone f with f(" + l.name(a) + ") = " + l.name(b) + ", f(" +
                            l.name(b) + ") = " + l.name(a) + " gives p(f(" + l.name(a) + ")) = " + p(b) +
                            " > p(f(" + l.name(b) + ")) = " + p(a) + "; the extension is not monotone";
    return {a, b, WitnessCase::ordered, std::move(f), std::move(violation)};
}

}  // namespace linposet
