#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "setgraph/census.hpp"
#include "setgraph/constructions.hpp"
#include "setgraph/labeling.hpp"

using namespace setgraph;

namespace {

Labeling make_labeling(const Graph& g, int m, OperatorKind op, std::vector<Subset> labels) {
    return Labeling(g, GroundSet(m), op, std::move(labels));
}

// The star on four vertices labeled so that the three edge labels are
// exactly the non-empty subsets of a two-element ground set.
Labeling graceful_star() {
    GroundSet ground(2);
    return make_labeling(generate(GraphFamily::star, 4), 2, OperatorKind::Union,
                         {ground.empty_set(), ground.make({0}), ground.make({1}), ground.full_set()});
}

// Enumerates every injective labeling of g over GroundSet(m) by walking
// ordered tuples of distinct subsets. Test-local and independent of the
// library's search or harness enumerators.
template <typename F>
void for_each_injective_labeling(const Graph& g, int m, OperatorKind op, F&& fn) {
    GroundSet ground(m);
    const auto subsets = power_set_vector(ground);
    const int n = g.vertex_count();
    if (static_cast<std::size_t>(n) > subsets.size()) return;
    std::vector<int> pick(n, -1);
    std::vector<char> used(subsets.size(), 0);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            std::vector<Subset> labels;
            labels.reserve(n);
            for (int i = 0; i < n; ++i) labels.push_back(subsets[pick[i]]);
            fn(Labeling(g, ground, op, std::move(labels)));
            return;
        }
        for (std::size_t s = 0; s < subsets.size(); ++s) {
            if (used[s]) continue;
            used[s] = 1;
            pick[v] = static_cast<int>(s);
            self(self, v + 1);
            used[s] = 0;
        }
    };
    rec(rec, 0);
}

}  // namespace

TEST_CASE("labeling construction validates totality and injectivity") {
    const Graph p2 = generate(GraphFamily::path, 2);
    GroundSet ground(1);
    CHECK_THROWS_AS(make_labeling(p2, 1, OperatorKind::Union, {ground.empty_set()}), std::invalid_argument);
    CHECK_THROWS_AS(make_labeling(p2, 1, OperatorKind::Union, {ground.empty_set(), ground.empty_set()}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        make_labeling(p2, 2, OperatorKind::Union, {GroundSet(1).empty_set(), GroundSet(1).full_set()}),
        std::invalid_argument);
}

TEST_CASE("induced edge labels") {
    const Graph p3 = generate(GraphFamily::path, 3);
    GroundSet g3(3);

    SUBCASE("union of endpoint labels") {
        const Labeling lab = make_labeling(p3, 3, OperatorKind::Union,
                                           {g3.make({0}), g3.make({1}), g3.make({2})});
        CHECK(lab.induced_edge_label(0, 1) == g3.make({0, 1}));
        CHECK_THROWS_AS(lab.induced_edge_label(0, 2), std::invalid_argument);
    }
    SUBCASE("intersection of complement labels") {
        const Labeling lab =
            make_labeling(p3, 3, OperatorKind::Intersection,
                          {g3.make({0}).complement(), g3.make({1}).complement(), g3.make({2}).complement()});
        CHECK(lab.induced_edge_label(0, 1) == g3.make({0, 1}).complement());
        CHECK(lab.induced_edge_label(1, 2) == g3.make({1, 2}).complement());
    }
    SUBCASE("the empty set is a union identity") {
        const Labeling lab = make_labeling(p3, 3, OperatorKind::Union,
                                           {g3.empty_set(), g3.make({0, 2}), g3.make({1})});
        CHECK(lab.induced_edge_label(0, 1) == g3.make({0, 2}));
    }
}

TEST_CASE("set-indexer verification") {
    SUBCASE("singleton labels index any graph") {
        CHECK(verify_set_indexer(singleton_dsi(generate(GraphFamily::cycle, 5))).ok);
    }
    SUBCASE("complete graph on the full power set of two elements collides") {
        GroundSet g2(2);
        const Labeling lab =
            make_labeling(generate(GraphFamily::complete, 4), 2, OperatorKind::Union,
                          {g2.empty_set(), g2.make({0}), g2.make({1}), g2.full_set()});
        const auto res = verify_set_indexer(lab);
        CHECK_FALSE(res.ok);
        // First colliding pair in edge order: (0,3) and (1,2), both {a1,a2}.
        CHECK(res.collision->first == Edge{0, 3});
        CHECK(res.collision->second == Edge{1, 2});
        CHECK(*res.repeated_label == g2.full_set());
    }
    SUBCASE("a single edge cannot collide") {
        GroundSet g2(2);
        const Labeling lab = make_labeling(generate(GraphFamily::path, 2), 2, OperatorKind::Union,
                                           {g2.make({0}), g2.make({0, 1})});
        CHECK(verify_set_indexer(lab).ok);
    }
}

TEST_CASE("edge label exclusions hold for valid labelings") {
    CHECK(verify_edge_label_exclusions(singleton_dsi(generate(GraphFamily::cycle, 4))).ok);
    CHECK(verify_edge_label_exclusions(complement_csi(generate(GraphFamily::cycle, 4))).ok);
    CHECK(verify_edge_label_exclusions(chain_dsi_tree(generate(GraphFamily::path, 5))).ok);
    CHECK(verify_edge_label_exclusions(chain_csi_tree(generate(GraphFamily::path, 5))).ok);
}

TEST_CASE("graceful verification") {
    SUBCASE("star covering all non-empty subsets") {
        const auto res = verify_graceful(graceful_star());
        CHECK(res.ok);
        CHECK(res.missing_count == 0);
    }
    SUBCASE("single edge over one element") {
        GroundSet g1(1);
        const Labeling lab = make_labeling(generate(GraphFamily::path, 2), 1, OperatorKind::Union,
                                           {g1.empty_set(), g1.full_set()});
        CHECK(verify_graceful(lab).ok);
    }
    SUBCASE("path missing a subset") {
        GroundSet g2(2);
        const Labeling lab = make_labeling(generate(GraphFamily::path, 3), 2, OperatorKind::Union,
                                           {g2.empty_set(), g2.make({0}), g2.full_set()});
        const auto res = verify_graceful(lab);
        CHECK_FALSE(res.ok);
        CHECK(res.missing_count == 1);
        CHECK(res.missing == std::vector<Subset>{g2.make({1})});
    }
    SUBCASE("non-indexer reported with a reason") {
        GroundSet g2(2);
        const Labeling lab =
            make_labeling(generate(GraphFamily::complete, 4), 2, OperatorKind::Union,
                          {g2.empty_set(), g2.make({0}), g2.make({1}), g2.full_set()});
        const auto res = verify_graceful(lab);
        CHECK_FALSE(res.ok);
        CHECK(res.reason == "not a set-indexer");
    }
    SUBCASE("conjunctive dual excludes the ground set") {
        // Dual of the graceful star: complement every label, intersect.
        GroundSet g2(2);
        const Labeling lab = make_labeling(generate(GraphFamily::star, 4), 2, OperatorKind::Intersection,
                                           {g2.full_set(), g2.make({1}), g2.make({0}), g2.empty_set()});
        CHECK(verify_graceful(lab).ok);
    }
}

TEST_CASE("sequential verification") {
    SUBCASE("single edge covers the whole power set") {
        GroundSet g1(1);
        const Labeling lab = make_labeling(generate(GraphFamily::path, 2), 1, OperatorKind::Union,
                                           {g1.empty_set(), g1.full_set()});
        CHECK(verify_sequential(lab).ok);
    }
    SUBCASE("chain labeling of a path over three elements misses four subsets") {
        const Labeling lab = chain_dsi_tree(generate(GraphFamily::path, 4));
        const auto res = verify_sequential(lab);
        CHECK_FALSE(res.ok);
        CHECK(res.missing_count == 4);
        GroundSet g3(3);
        CHECK(res.missing == std::vector<Subset>{g3.make({1}), g3.make({2}), g3.make({0, 2}), g3.make({1, 2})});
    }
    SUBCASE("graceful star is sequential") { CHECK(verify_sequential(graceful_star()).ok); }
}

TEST_CASE("topogenic verification") {
    SUBCASE("chain labelings are topogenic") {
        CHECK(verify_topogenic(chain_dsi_tree(generate(GraphFamily::path, 4))).ok);
    }
    SUBCASE("two singletons are not") {
        GroundSet g2(2);
        const Labeling lab = make_labeling(generate(GraphFamily::path, 2), 2, OperatorKind::Union,
                                           {g2.make({0}), g2.make({1})});
        const auto res = verify_topogenic(lab);
        CHECK_FALSE(res.ok);
        CHECK(res.topology.failed == TopologyResult::Axiom::missing_empty_set);
    }
    SUBCASE("graceful star combines to the discrete topology") {
        CHECK(verify_topogenic(graceful_star()).ok);
    }
}

TEST_CASE("vertex family topology verification") {
    CHECK(verify_vertex_topology(chain_dsi_tree(generate(GraphFamily::star, 5))).ok);
    CHECK(verify_vertex_topology(chain_csi_tree(generate(GraphFamily::star, 5))).ok);
    CHECK_FALSE(verify_vertex_topology(singleton_dsi(generate(GraphFamily::path, 3))).ok);
    CHECK(verify_vertex_topology(graceful_star()).ok);
}

TEST_CASE("full report composes the individual verifiers") {
    SUBCASE("singleton labeling of a cycle") {
        const auto rep = full_report(singleton_dsi(generate(GraphFamily::cycle, 4)));
        CHECK(rep.is_set_labeling);
        CHECK(rep.is_set_indexer);
        CHECK(rep.edge_exclusions_hold);
        CHECK_FALSE(rep.vertex_family_is_topology);
        CHECK_FALSE(rep.is_graceful);
        CHECK_FALSE(rep.literal_csi_graceful.has_value());
    }
    SUBCASE("chain labeling of a path") {
        const auto rep = full_report(chain_dsi_tree(generate(GraphFamily::path, 4)));
        CHECK(rep.is_set_indexer);
        CHECK(rep.vertex_family_is_topology);
        CHECK(rep.is_topogenic);
        CHECK_FALSE(rep.is_graceful);
    }
    SUBCASE("graceful star has every optional property") {
        const auto rep = full_report(graceful_star());
        CHECK(rep.is_set_indexer);
        CHECK(rep.is_graceful);
        CHECK(rep.is_sequential);
        CHECK(rep.is_topogenic);
        CHECK(rep.vertex_family_is_topology);
        CHECK(rep.witnesses.empty());
    }
    SUBCASE("every false flag carries a witness") {
        const auto rep = full_report(singleton_dsi(generate(GraphFamily::path, 3)));
        int false_flags = !rep.is_set_labeling + !rep.is_set_indexer + !rep.edge_exclusions_hold +
                          !rep.vertex_family_is_topology + !rep.is_graceful + !rep.is_sequential +
                          !rep.is_topogenic;
        CHECK(static_cast<int>(rep.witnesses.size()) >= false_flags);
        for (const auto& w : rep.witnesses) CHECK_FALSE(w.details.empty());
    }
    SUBCASE("intersection labelings record the literal graceful reading") {
        const auto rep = full_report(complement_csi(generate(GraphFamily::path, 3)));
        REQUIRE(rep.literal_csi_graceful.has_value());
        CHECK_FALSE(*rep.literal_csi_graceful);
    }
}

TEST_CASE("checked report flags non-labelings instead of throwing") {
    const Graph p2 = generate(GraphFamily::path, 2);
    GroundSet g1(1);
    const auto rep = full_report_checked(p2, g1, OperatorKind::Union, {g1.empty_set(), g1.empty_set()});
    CHECK_FALSE(rep.is_set_labeling);
    CHECK_FALSE(rep.is_set_indexer);
    REQUIRE_FALSE(rep.witnesses.empty());
    CHECK(rep.witnesses[0].property == "set-labeling");

    const auto ok = full_report_checked(p2, g1, OperatorKind::Union, {g1.empty_set(), g1.full_set()});
    CHECK(ok.is_set_labeling);
    CHECK(ok.is_set_indexer);
}

// Every union set-indexer whose edge labels cover all non-empty subsets is
// "graceful"; the claim that its vertex family must then be the discrete
// topology fails on the triangle: the labels {}, {a1}, {a2} induce edge
// labels {a1}, {a2}, {a1,a2} and leave {a1,a2} out of the vertex family.
// The enumeration below documents that refutation and pins its shape.
TEST_CASE("graceful labelings with non-discrete vertex families exist") {
    std::uint64_t graceful_total = 0;
    std::uint64_t non_discrete = 0;
    bool triangle_witness_seen = false;
    for (int n = 1; n <= 4; ++n) {
        for_each_connected_graph(n, [&](const Graph& g) {
            for (int m = 1; m <= 2; ++m) {
                for_each_injective_labeling(g, m, OperatorKind::Union, [&](const Labeling& lab) {
                    if (!verify_graceful(lab).ok) return;
                    ++graceful_total;
                    CHECK(verify_sequential(lab).ok);  // graceful always covers the power set
                    const bool discrete = lab.vertex_family().size() == (std::uint64_t{1} << m);
                    if (discrete) return;
                    ++non_discrete;
                    CHECK(verify_set_indexer(lab).ok);
                    CHECK_FALSE(verify_vertex_topology(lab).ok);
                    GroundSet g2(2);
                    if (g.vertex_count() == 3 && g.edge_count() == 3 &&
                        lab.vertex_labels() ==
                            std::vector<Subset>{g2.empty_set(), g2.make({0}), g2.make({1})})
                        triangle_witness_seen = true;
                });
            }
        });
    }
    CHECK(graceful_total > 0);
    CHECK(non_discrete > 0);
    CHECK(triangle_witness_seen);
}

// In-domain restatement: a set-indexer on a connected graph whose vertex
// family is a topology has vertex family equal to the edge family plus the
// closing set (the empty set under union, the ground set under
// intersection). Exhaustive at this scale, both operators.
TEST_CASE("topology vertex families equal edge families plus the closing set") {
    std::uint64_t in_domain = 0;
    for (int n = 2; n <= 4; ++n) {
        for_each_connected_graph(n, [&](const Graph& g) {
            for (int m = 1; m <= 2; ++m) {
                for (OperatorKind op : {OperatorKind::Union, OperatorKind::Intersection}) {
                    for_each_injective_labeling(g, m, op, [&](const Labeling& lab) {
                        if (!verify_set_indexer(lab).ok) return;
                        if (!verify_vertex_topology(lab).ok) return;
                        ++in_domain;
                        SetFamily expected = lab.edge_family();
                        expected.insert(op == OperatorKind::Union ? lab.ground().empty_set()
                                                                  : lab.ground().full_set());
                        CHECK(lab.vertex_family().members() == expected.members());
                    });
                }
            }
        });
    }
    CHECK(in_domain > 0);
}
