#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "test_support.hpp"

using namespace acyclo;
using namespace test_support;

namespace {

// Subdivision of K4 with the given path lengths, built on fresh vertices.
// Branch vertices are 0..3; internals follow.
Subdivision make_subdivision(const std::array<int, 6>& lengths, UndirectedGraph& host_out) {
    const std::array<std::pair<int, int>, 6> ends{{{0, 1}, {1, 2}, {2, 0}, {3, 0}, {3, 1}, {3, 2}}};
    int next = 4;
    Subdivision sub;
    sub.branch = {0, 1, 2, 3};
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 6; ++i) {
        std::vector<int> path{ends[static_cast<size_t>(i)].first};
        for (int k = 1; k < lengths[static_cast<size_t>(i)]; ++k) path.push_back(next++);
        path.push_back(ends[static_cast<size_t>(i)].second);
        for (size_t k = 0; k + 1 < path.size(); ++k)
            edges.emplace_back(std::min(path[k], path[k + 1]), std::max(path[k], path[k + 1]));
        sub.paths[static_cast<size_t>(i)] = path;
    }
    host_out = UndirectedGraph(next, edges);
    return sub;
}

std::array<int, 7> cycle_lengths(const Subdivision& sub) {
    auto cycles = fundamental_cycles(sub);
    std::array<int, 7> lengths{};
    for (int i = 0; i < 7; ++i) lengths[static_cast<size_t>(i)] = static_cast<int>(cycles[static_cast<size_t>(i)].size());
    return lengths;
}

}  // namespace

TEST_CASE("fundamental cycles of K4 itself", "[oddk4]") {
    UndirectedGraph host;
    Subdivision sub = make_subdivision({1, 1, 1, 1, 1, 1}, host);
    REQUIRE(subdivision_valid(host, sub, true));
    auto lengths = cycle_lengths(sub);
    std::multiset<int> got(lengths.begin(), lengths.end());
    CHECK(got == std::multiset<int>{3, 3, 3, 3, 4, 4, 4});
}

TEST_CASE("fundamental cycle lengths follow the six path lengths", "[oddk4]") {
    UndirectedGraph host;
    Subdivision sub = make_subdivision({1, 1, 1, 2, 1, 1}, host);
    auto lengths = cycle_lengths(sub);
    CHECK(lengths == std::array<int, 7>{3, 4, 3, 4, 5, 4, 5});

    SplitMix64 rng(601);
    for (int trial = 0; trial < 200; ++trial) {
        std::array<int, 6> ls;
        for (int& l : ls) l = 1 + static_cast<int>(rng.below(5));
        auto [a, b, c, d, e, f] = ls;
        Subdivision s = make_subdivision(ls, host);
        auto got = cycle_lengths(s);
        CHECK(got == std::array<int, 7>{a + b + c, d + e + a, e + f + b, f + d + c,
                                        f + d + a + b, c + a + e + f, b + c + d + e});
        // every cycle is a genuine closed walk of the host
        for (const auto& cyc : fundamental_cycles(s))
            for (size_t i = 0; i < cyc.size(); ++i) CHECK(host.edge(cyc[i], cyc[(i + 1) % cyc.size()]));
        // parity identity between the four triangles
        CHECK((a + b + c) % 2 == ((d + e + a) + (e + f + b) + (f + d + c)) % 2);
    }
}

TEST_CASE("inconsistent odd cycles in oriented subdivisions", "[oddk4]") {
    UndirectedGraph host;
    Subdivision k4 = make_subdivision({1, 1, 1, 1, 1, 1}, host);

    // transitive orientation: every triangle is odd and inconsistent
    OrientedGraph trans(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) trans.add_edge(i, j);
    CycleWitness wit = find_inconsistent_odd_cycle(trans, k4);
    CHECK(wit.is_odd);
    CHECK_FALSE(wit.is_directed);
    CHECK(wit.length == 3);

    // directed triangle 0->1->2->0 plus any x-edges: still a witness
    OrientedGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(3, 0);
    g.add_edge(3, 1);
    g.add_edge(3, 2);
    CycleWitness wit2 = find_inconsistent_odd_cycle(g, k4);
    CHECK(wit2.is_odd);
    CHECK_FALSE(wit2.is_directed);

    // all paths even: bipartite, no odd cycle at all
    UndirectedGraph even_host;
    Subdivision even_sub = make_subdivision({2, 2, 2, 2, 2, 2}, even_host);
    OrientedGraph oriented_even = random_orientation(even_host, 1);
    CHECK_THROWS_AS(find_inconsistent_odd_cycle(oriented_even, even_sub), NoOddCycle);
}

TEST_CASE("every orientation of a non-bipartite subdivision has a witness", "[oddk4]") {
    SplitMix64 rng(602);
    int tested = 0;
    while (tested < 10000) {
        std::array<int, 6> ls;
        for (int& l : ls) l = 1 + static_cast<int>(rng.below(5));
        UndirectedGraph host;
        Subdivision sub = make_subdivision(ls, host);
        auto lengths = cycle_lengths(sub);
        bool odd = false;
        for (int l : lengths) odd = odd || (l % 2 == 1);
        if (!odd) continue;
        OrientedGraph oriented = random_orientation(host, rng.next());
        CycleWitness wit = find_inconsistent_odd_cycle(oriented, sub);
        CHECK(wit.is_odd);
        CHECK_FALSE(wit.is_directed);
        ++tested;
    }
}

TEST_CASE("odd K4-subdivision search", "[oddk4]") {
    auto in_k4 = find_odd_k4_subdivision(complete_graph(4));
    REQUIRE(in_k4.has_value());
    for (int i = 0; i < 6; ++i) CHECK(in_k4->length(i) == 1);

    CHECK_FALSE(find_odd_k4_subdivision(cycle_graph(5)).has_value());
    CHECK_FALSE(find_odd_k4_subdivision(complete_graph(3)).has_value());

    UndirectedGraph groetzsch = groetzsch_graph();
    auto sub = find_odd_k4_subdivision(groetzsch);
    REQUIRE(sub.has_value());
    CHECK(subdivision_valid(groetzsch, *sub, true));

    auto in_wheel = find_odd_k4_subdivision(wheel_graph(5));
    REQUIRE(in_wheel.has_value());
    CHECK(subdivision_valid(wheel_graph(5), *in_wheel, true));

    CHECK_THROWS_AS(find_odd_k4_subdivision(complete_graph(15)), SizeLimitExceeded);
}

TEST_CASE("odd cycle certificates for 4-chromatic orientations", "[oddk4]") {
    // all 64 orientations of K4
    UndirectedGraph k4 = complete_graph(4);
    auto edges = k4.edges();
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
        OrientedGraph g(4);
        for (int e = 0; e < 6; ++e) {
            auto [u, v] = edges[static_cast<size_t>(e)];
            if ((mask >> e) & 1)
                g.add_edge(u, v);
            else
                g.add_edge(v, u);
        }
        CycleWitness wit = acyclic_3chromatic_subgraph(g);
        CHECK(wit.is_odd);
        CHECK_FALSE(wit.is_directed);
    }

    // seeded orientations of the 5-wheel
    SplitMix64 rng(603);
    for (int trial = 0; trial < 10; ++trial) {
        OrientedGraph g = random_orientation(wheel_graph(5), rng.next());
        CycleWitness wit = acyclic_3chromatic_subgraph(g);
        CHECK(wit.is_odd);
        CHECK_FALSE(wit.is_directed);
    }

    // a directed odd cycle alone is only 3-chromatic
    CHECK_THROWS_AS(acyclic_3chromatic_subgraph(directed_cycle(5)), ChromaticTooLow);
    CHECK_THROWS_AS(acyclic_3chromatic_subgraph(directed_cycle(3)), ChromaticTooLow);

    // within the chromatic cap but beyond the subdivision search cap
    OrientedGraph big = random_orientation(wheel_graph(17), 7);
    CHECK_THROWS_AS(acyclic_3chromatic_subgraph(big), SizeLimitExceeded);
}
