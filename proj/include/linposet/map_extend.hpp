#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linposet/levels.hpp"
#include "linposet/poset.hpp"

namespace linposet {

/// Number of n-tuples over `base` values; throws TooLarge on overflow past `limit`.
std::size_t tuple_count(std::size_t base, std::size_t arity,
                        std::size_t limit = static_cast<std::size_t>(-1));

/// Mixed-radix encoding of tuples over `base` values, first component most significant.
std::size_t encode_tuple(std::span<const std::size_t> tuple, std::size_t base);
std::vector<std::size_t> decode_tuple(std::size_t code, std::size_t base, std::size_t arity);

/// A total mapping f: L^n -> M stored extensionally, one output per input tuple.
class MappingTable {
public:
    /// `outputs[encode_tuple(xs, |L|)]` is f(xs). Throws ArityMismatch when the
    /// table size is not |L|^n and UnknownElement for outputs outside M.
    MappingTable(Poset domain, Poset codomain, std::size_t arity, std::vector<Index> outputs);

    static MappingTable from_function(Poset domain, Poset codomain, std::size_t arity,
                                      const std::function<Index(std::span<const Index>)>& f);

    const Poset& domain() const noexcept { return domain_; }
    const Poset& codomain() const noexcept { return codomain_; }
    std::size_t arity() const noexcept { return arity_; }
    const std::vector<Index>& outputs() const noexcept { return outputs_; }

    Index operator()(std::span<const Index> xs) const;
    Index operator()(Index x) const { return (*this)(std::span<const Index>(&x, 1)); }

    bool operator==(const MappingTable&) const = default;

private:
    Poset domain_;
    Poset codomain_;
    std::size_t arity_;
    std::vector<Index> outputs_;
};

/// f(xs) <= f(ys) (resp. >=) whenever xs <= ys pointwise.
bool is_monotone(const MappingTable& f);
bool is_antitone(const MappingTable& f);

/// `over` takes the greatest projected value over a product of classes, `under` the least.
enum class ExtensionMode { over, under };

std::string_view to_string(ExtensionMode m);

/// A mapping between level-index tuples of two linearisations.
struct ClassMapping {
    Linearisation domain;
    Linearisation codomain;
    std::size_t arity;
    ExtensionMode mode;
    /// Indexed by `encode_tuple(levels, domain.size())`; values are codomain levels.
    std::vector<Level> table;

    Level operator()(std::span<const Level> levels) const;
    Level operator()(Level l) const { return (*this)(std::span<const Level>(&l, 1)); }
};

/// Lifts `f` to the classes of `dlin` and `clin`. Throws MismatchedPoset when
/// the linearisations are not of f's domain and codomain.
ClassMapping extend(const MappingTable& f, const Linearisation& dlin, const Linearisation& clin,
                    ExtensionMode mode);

/// Component-wise extension of a vector-valued mapping. Throws MixedArity or MismatchedPoset.
std::vector<ClassMapping> extend_multi(std::span<const MappingTable> fs, const Linearisation& dlin,
                                       const Linearisation& clin, ExtensionMode mode);

/// Monotonicity with respect to the linear class orders of both sides.
bool is_class_monotone(const ClassMapping& cm);
bool is_class_antitone(const ClassMapping& cm);

enum class WitnessCase { collapsed, ordered };

std::string_view to_string(WitnessCase c);

/// Concrete evidence that a projection of a non-linear lattice onto a chain
/// cannot carry every monotone mapping along with it.
struct ImpossibilityWitness {
    Index a;
    Index b;
    WitnessCase kind;
    MappingTable witness_map;
    std::string violation;

    /// Re-checks the recorded violation against `ranks`.
    bool verify(std::span<const std::int64_t> ranks) const;
};

/// `ranks[x]` places element x on a chain and must satisfy x < y => ranks[x] < ranks[y].
/// Throws NotALattice, LinearLattice, ProjectionNotOrderPreserving, or ArityMismatch
/// when `ranks` does not cover the lattice.
ImpossibilityWitness impossibility_witness(const Poset& lattice, std::span<const std::int64_t> ranks);

}  // namespace linposet
