#include <doctest.h>

#include "linposet/oracle.hpp"
#include "linposet/poset.hpp"
#include "support.hpp"

using namespace linposet;
using namespace linposet::testing;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::ParseError;
}

std::vector<Index> ids(const Poset& p, std::initializer_list<const char*> names) {
    std::vector<Index> out;
    for (auto n : names) out.push_back(p.index_of(n));
    return out;
}

}  // namespace

TEST_CASE("build_poset closes and reduces the generating pairs") {
    SUBCASE("singleton") {
        auto p = Poset::build({"x"}, {});
        CHECK(p.size() == 1);
        CHECK(p.strict_pairs().empty());
    }
    SUBCASE("pentagon closure") {
        auto p = p_abc();
        CHECK(p.lt("bot", "b"));
        CHECK(p.lt("bot", "top"));
        CHECK(p.lt("a", "top"));
        CHECK(p.lt("c", "top"));
        CHECK(p.strict_pairs().size() == 8);
        CHECK(p.cover_pairs().size() == 5);
        CHECK_FALSE(p.covered_by(p.index_of("bot"), p.index_of("top")));
    }
    SUBCASE("cycle") {
        std::vector<NamePair> pairs{{"x", "y"}, {"y", "x"}};
        CHECK(kind_of([&] { Poset::build({"x", "y"}, pairs); }) == ErrorKind::CycleDetected);
    }
    SUBCASE("self loop") {
        std::vector<NamePair> pairs{{"x", "x"}};
        CHECK(kind_of([&] { Poset::build({"x"}, pairs); }) == ErrorKind::CycleDetected);
    }
    SUBCASE("duplicate and unknown") {
        CHECK(kind_of([] { Poset::build({"x", "x"}, {}); }) == ErrorKind::DuplicateElement);
        std::vector<NamePair> pairs{{"x", "z"}};
        CHECK(kind_of([&] { Poset::build({"x"}, pairs); }) == ErrorKind::UnknownElement);
    }
}

TEST_CASE("order queries") {
    auto p = p_abc();
    CHECK(p.leq("bot", "top"));
    CHECK(p.incomparable("a", "c"));
    CHECK_FALSE(p.incomparable("a", "b"));
    for (Index x = 0; x < p.size(); ++x) CHECK(p.leq(x, x));
    CHECK(kind_of([&] { p.leq("a", "nope"); }) == ErrorKind::UnknownElement);
    CHECK(kind_of([&] { p.lt(Index{0}, Index{17}); }) == ErrorKind::UnknownElement);
}

TEST_CASE("is_linear") {
    CHECK(is_linear(chain(3)));
    CHECK_FALSE(is_linear(p_abc()));
    CHECK(is_linear(Poset::build({"x"}, {})));
}

TEST_CASE("maximal and minimal elements of subsets") {
    auto p = p_abc();
    std::vector<Index> all(p.size());
    for (Index i = 0; i < all.size(); ++i) all[i] = i;
    CHECK(maximal_elements(p, all) == ids(p, {"top"}));
    CHECK(maximal_elements(p, ids(p, {"bot", "a", "c"})) == ids(p, {"a", "c"}));
    CHECK(maximal_elements(p, std::vector<Index>{}).empty());
    CHECK(minimal_elements(p, ids(p, {"b", "c", "top"})) == ids(p, {"b", "c"}));
    CHECK(maximal_elements(p) == ids(p, {"top"}));
    CHECK(minimal_elements(p) == ids(p, {"bot"}));
    CHECK(kind_of([&] { maximal_elements(p, std::vector<Index>{42}); }) == ErrorKind::UnknownElement);
}

TEST_CASE("longest_chain_length") {
    CHECK(longest_chain_length(p_abc()) == 4);
    CHECK(longest_chain_length(antichain(5)) == 1);
    for (std::size_t n = 1; n <= 6; ++n) CHECK(longest_chain_length(chain(n)) == n);
}

TEST_CASE("lattices, sup and inf") {
    auto d = diamond();
    CHECK(is_lattice(d));
    CHECK(sup(d, d.index_of("a"), d.index_of("b")) == d.index_of("top"));
    CHECK(inf(d, d.index_of("a"), d.index_of("b")) == d.index_of("bot"));

    auto p = p_abc();
    CHECK(is_lattice(p));
    CHECK(sup(p, p.index_of("a"), p.index_of("c")) == p.index_of("top"));
    CHECK(sup(p, p.index_of("a"), p.index_of("b")) == p.index_of("b"));
    CHECK(inf(p, p.index_of("b"), p.index_of("c")) == p.index_of("bot"));
    for (Index x = 0; x < p.size(); ++x) CHECK(sup(p, x, x) == x);

    auto two = antichain(2);
    CHECK_FALSE(is_lattice(two));
    CHECK(kind_of([&] { sup(two, 0, 1); }) == ErrorKind::NotALattice);
    CHECK(kind_of([&] { inf(two, 0, 1); }) == ErrorKind::NotALattice);

    // Two maximal elements above two minimal ones: bounds exist but none is least.
    std::vector<NamePair> pairs{{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}};
    auto bowtie = Poset::build({"a", "b", "c", "d"}, pairs);
    CHECK_FALSE(is_lattice(bowtie));
    CHECK_FALSE(try_sup(bowtie, 0, 1).has_value());
}

TEST_CASE("tuple_leq") {
    auto p = p_abc();
    CHECK(tuple_leq(p, ids(p, {"bot", "a"}), ids(p, {"a", "b"})));
    CHECK_FALSE(tuple_leq(p, ids(p, {"a", "c"}), ids(p, {"c", "a"})));
    CHECK(tuple_leq(p, ids(p, {"c", "b"}), ids(p, {"c", "b"})));
    CHECK(kind_of([&] { tuple_leq(p, ids(p, {"a"}), ids(p, {"a", "b"})); }) == ErrorKind::ArityMismatch);
    CHECK(kind_of([&] { tuple_leq(p, std::vector<Index>{9}, std::vector<Index>{0}); }) ==
          ErrorKind::UnknownElement);
}

TEST_CASE("poset invariants over a random corpus") {
    const oracle::Probability probs[] = {{0, 1}, {1, 10}, {3, 10}, {7, 10}, {1, 1}};
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto p = oracle::random_poset(seed, 1 + seed % 12, probs[seed % 5]);
        CAPTURE(seed);

        const auto strict = p.strict_pairs();
        auto rebuilt = Poset::from_indices(p.names(), strict);
        CHECK(rebuilt == p);

        auto from_covers = Poset::from_indices(p.names(), p.cover_pairs());
        CHECK(from_covers.strict_relation() == p.strict_relation());
        CHECK(from_covers.cover_relation() == p.cover_relation());

        for (Index x = 0; x < p.size(); ++x) {
            CHECK_FALSE(p.lt(x, x));
            for (Index y = 0; y < p.size(); ++y) {
                const int holds = int(p.lt(x, y)) + int(p.lt(y, x)) + int(x == y) + int(p.incomparable(x, y));
                CHECK(holds == 1);
                for (Index z = 0; z < p.size(); ++z)
                    if (p.lt(x, y) && p.lt(y, z)) CHECK(p.lt(x, z));
            }
        }

        const auto lengths = chain_lengths(p);
        CHECK(longest_chain_length(p) == *std::max_element(lengths.begin(), lengths.end()));
        if (p.size() <= 8) CHECK(is_lattice(p) == brute_is_lattice(p));
    }
}
