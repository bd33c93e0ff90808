#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "setgraph/subsets.hpp"

using namespace setgraph;

namespace {

// Test-only reimplementation of the topology axioms on a family encoded as
// a bitset over subset masks (bit s set iff the subset with mask s is a
// member). Kept deliberately naive and separate from the library path.
bool naive_topology(unsigned family, int m) {
    const unsigned full = (1u << m) - 1;
    if (!(family & 1u)) return false;
    if (!(family >> full & 1u)) return false;
    for (unsigned s = 0; s <= full; ++s) {
        if (!(family >> s & 1u)) continue;
        for (unsigned t = 0; t <= full; ++t) {
            if (!(family >> t & 1u)) continue;
            if (!(family >> (s | t) & 1u)) return false;
            if (!(family >> (s & t) & 1u)) return false;
        }
    }
    return true;
}

SetFamily family_of_mask(const GroundSet& ground, unsigned family) {
    SetFamily fam(ground);
    for (unsigned s = 0; s < (1u << ground.size()); ++s)
        if (family >> s & 1u) fam.insert(Subset::from_low_bits(s, ground.size()));
    return fam;
}

}  // namespace

TEST_CASE("ground set construction and naming") {
    GroundSet g(3);
    CHECK(g.size() == 3);
    CHECK(g.name(0) == "a1");
    CHECK(g.name(2) == "a3");
    CHECK(g.index_of("a2") == 1);
    CHECK_FALSE(g.index_of("b7").has_value());
    CHECK_THROWS_AS(GroundSet(0), std::invalid_argument);
    CHECK_THROWS_AS(GroundSet(129), std::invalid_argument);
    CHECK_THROWS_AS(GroundSet(std::vector<std::string>{"x", "x"}), std::invalid_argument);
}

TEST_CASE("subset algebra basics") {
    GroundSet g(3);
    const Subset a1 = g.make({0});
    const Subset a2 = g.make({1});

    CHECK((a1 | a2) == g.make({0, 1}));
    CHECK((a1 & a2) == g.empty_set());
    CHECK(a1.complement() == g.make({1, 2}));
    CHECK(format_subset(a1.complement(), g) == "{a2,a3}");
    CHECK(format_subset(g.empty_set(), g) == "{}");

    CHECK_THROWS_AS(a1 | GroundSet(2).empty_set(), std::invalid_argument);
    CHECK_THROWS_AS(Subset::from_low_bits(0b1000, 3), std::invalid_argument);
}

TEST_CASE("subset algebra over wide ground sets") {
    GroundSet g(100);
    const Subset hi = Subset::single(99, 100);
    const Subset lo = Subset::single(0, 100);
    CHECK((hi | lo).count() == 2);
    CHECK((hi & lo).empty());
    CHECK(hi.complement().count() == 99);
    CHECK((hi | hi.complement()) == g.full_set());
    CHECK(hi.complement().contains(63));
    CHECK_FALSE(hi.complement().contains(99));
}

TEST_CASE("exhaustive algebra laws up to width 4") {
    for (int m = 1; m <= 4; ++m) {
        GroundSet g(m);
        const auto all = power_set_vector(g);
        for (const auto& a : all) {
            CHECK((a | a) == a);
            CHECK((a & a) == a);
            CHECK((a & a.complement()) == g.empty_set());
            CHECK((a | a.complement()) == g.full_set());
            CHECK(a.complement().complement() == a);
            for (const auto& b : all) {
                CHECK((a | b) == (b | a));
                CHECK((a & b) == (b & a));
                for (const auto& c : all) {
                    CHECK(((a | b) | c) == (a | (b | c)));
                    CHECK(((a & b) & c) == (a & (b & c)));
                    CHECK((a & (b | c)) == ((a & b) | (a & c)));
                }
            }
        }
    }
}

TEST_CASE("power set sizes and distinctness") {
    for (int m = 1; m <= 3; ++m) {
        const auto all = power_set_vector(GroundSet(m));
        CHECK(all.size() == (1u << m));
        std::set<Subset> distinct(all.begin(), all.end());
        CHECK(distinct.size() == all.size());
    }
    GroundSet g2(2);
    const auto all2 = power_set_vector(g2);
    CHECK(all2[0] == g2.empty_set());
    CHECK(all2[3] == g2.full_set());
}

TEST_CASE("power set materialization guard") {
    CHECK_THROWS_AS(power_set_vector(GroundSet(21)), std::length_error);
    CHECK_THROWS_AS(power_set(GroundSet(64)), std::length_error);
    // The lazy range still works above the materialization guard.
    std::uint64_t count = 0;
    for (const Subset& s : power_set(GroundSet(21))) {
        (void)s;
        if (++count > 4) break;
    }
    CHECK(count == 5);
}

TEST_CASE("topology: chain family accepted") {
    GroundSet g(2);
    SetFamily fam(g, {g.empty_set(), g.make({0}), g.full_set()});
    CHECK(is_topology(fam).ok);
}

TEST_CASE("topology: missing ground set wins the witness") {
    GroundSet g(2);
    SetFamily fam(g, {g.empty_set(), g.make({0}), g.make({1})});
    const auto res = is_topology(fam);
    CHECK_FALSE(res.ok);
    CHECK(res.failed == TopologyResult::Axiom::missing_ground_set);
    CHECK(res.describe(g) == "the ground set {a1,a2} is not a member");
}

TEST_CASE("topology: indiscrete and discrete families accepted") {
    for (int m = 1; m <= 4; ++m) {
        GroundSet g(m);
        CHECK(is_topology(SetFamily(g, {g.empty_set(), g.full_set()})).ok);
        CHECK(is_topology(SetFamily(g, power_set_vector(g))).ok);
    }
}

TEST_CASE("topology: union closure failure carries the offending pair") {
    GroundSet g(3);
    SetFamily fam(g, {g.empty_set(), g.make({0}), g.make({1}), g.full_set()});
    const auto res = is_topology(fam);
    CHECK_FALSE(res.ok);
    CHECK(res.failed == TopologyResult::Axiom::union_not_closed);
    CHECK(*res.lhs == g.make({0}));
    CHECK(*res.rhs == g.make({1}));
}

TEST_CASE("topology: intersection closure failure carries the offending pair") {
    GroundSet g(3);
    SetFamily fam(g, {g.empty_set(), g.make({0, 1}), g.make({1, 2}), g.full_set()});
    const auto res = is_topology(fam);
    CHECK_FALSE(res.ok);
    CHECK(res.failed == TopologyResult::Axiom::intersection_not_closed);
    CHECK(*res.lhs == g.make({0, 1}));
    CHECK(*res.rhs == g.make({1, 2}));
}

TEST_CASE("topology: missing empty set rejected") {
    GroundSet g(2);
    SetFamily fam(g, {g.make({0}), g.full_set()});
    const auto res = is_topology(fam);
    CHECK_FALSE(res.ok);
    CHECK(res.failed == TopologyResult::Axiom::missing_empty_set);
}

TEST_CASE("every prefix chain under any element order is a topology") {
    for (int m = 1; m <= 4; ++m) {
        GroundSet g(m);
        std::vector<int> perm(m);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            SetFamily fam(g);
            Subset acc = g.empty_set();
            fam.insert(acc);
            for (int e : perm) {
                acc = acc | Subset::single(e, m);
                fam.insert(acc);
            }
            CHECK(is_topology(fam).ok);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("topology test agrees with the naive axiom check on every family") {
    // Labeled topologies on m points: 1, 4, 29, 355.
    const std::uint64_t expected[] = {0, 1, 4, 29, 355};
    for (int m = 1; m <= 4; ++m) {
        GroundSet g(m);
        const std::uint64_t families = std::uint64_t{1} << (1u << m);
        std::uint64_t count = 0;
        for (std::uint64_t family = 0; family < families; ++family) {
            const bool expected_verdict = naive_topology(static_cast<unsigned>(family), m);
            CHECK(is_topology(family_of_mask(g, static_cast<unsigned>(family))).ok == expected_verdict);
            if (expected_verdict) ++count;
        }
        CHECK(count == expected[m]);
    }
}

TEST_CASE("set family ordering is deterministic and width-checked") {
    GroundSet g(2);
    SetFamily fam(g);
    fam.insert(g.full_set());
    fam.insert(g.empty_set());
    CHECK(fam.members().begin()->empty());
    CHECK_THROWS_AS(fam.insert(GroundSet(3).empty_set()), std::invalid_argument);
}
