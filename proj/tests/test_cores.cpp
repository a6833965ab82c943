#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "sna/cores.hpp"

using namespace sna;

namespace {

Graph triangle() { return oracle::make_graph({{0, 1}, {1, 2}, {2, 0}}); }

}  // namespace

TEST_CASE("triangle is a 2-core in all mode") {
    CorePartition p = core_decomposition(triangle(), Direction::All);
    CHECK(p.max_k == 2);
    for (auto c : p.coreness) CHECK(c == 2);
    CHECK(p.max_core_members.size() == 3);
}

TEST_CASE("path of three has coreness 1 in all mode") {
    Graph g = oracle::make_graph({{0, 1}, {1, 2}});
    CorePartition p = core_decomposition(g, Direction::All);
    for (auto c : p.coreness) CHECK(c == 1);
}

TEST_CASE("coreness equals the naive fixpoint oracle on random graphs") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        Graph g = oracle::random_graph(seed, 50, 180);
        for (auto mode : {Direction::All, Direction::In, Direction::Out}) {
            CorePartition p = core_decomposition(g, mode);
            CHECK(p.coreness == oracle::naive_coreness(g, mode));
        }
    }
}

TEST_CASE("cores are nested") {
    Graph g = oracle::random_graph(5, 40, 200);
    CorePartition p = core_decomposition(g, Direction::All);
    for (std::int32_t k = 1; k <= p.max_k; ++k) {
        // every node of the k-core is in the (k-1)-core by definition of coreness
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (p.coreness[static_cast<std::size_t>(v)] >= k) {
                CHECK(p.coreness[static_cast<std::size_t>(v)] >= k - 1);
            }
        }
        // and the extracted k-core is a subgraph of the (k-1)-core
        Graph upper = extract_core(g, p, k);
        Graph lower = extract_core(g, p, k - 1);
        for (NodeId v = 0; v < upper.node_count(); ++v) {
            CHECK(lower.ids().to_internal(upper.external_id(v)).has_value());
        }
    }
}

TEST_CASE("max core recount: every member keeps >= max_k neighbors inside") {
    Graph g = oracle::random_graph(23, 45, 260);
    CorePartition p = core_decomposition(g, Direction::All);
    Graph core = extract_core(g, p, p.max_k);
    REQUIRE(core.node_count() == static_cast<NodeId>(p.max_core_members.size()));
    for (NodeId v = 0; v < core.node_count(); ++v) {
        CHECK(core.all_degree(v) >= p.max_k);
    }
}

TEST_CASE("extract_core of the triangle at k=2 is the triangle") {
    Graph g = triangle();
    CorePartition p = core_decomposition(g, Direction::All);
    Graph core = extract_core(g, p, 2);
    CHECK(core.node_count() == 3);
    CHECK(core.arc_count() == 3);
}

TEST_CASE("extract_core beyond max_k is an empty-core error") {
    Graph g = triangle();
    CorePartition p = core_decomposition(g, Direction::All);
    CHECK_THROWS_AS(extract_core(g, p, p.max_k + 1), ComputationError);
    CHECK_THROWS_AS(extract_core(g, p, -1), std::invalid_argument);
}

TEST_CASE("coreness is invariant under external relabeling") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        Graph g = oracle::random_graph(seed, 30, 120);
        // relabel v -> 1000 - 7*v, which reverses the internal order
        auto relabel = [](ExternalId id) { return 1000 - 7 * id; };
        std::vector<std::pair<ExternalId, ExternalId>> arcs;
        for (NodeId v = 0; v < g.node_count(); ++v) {
            for (NodeId w : g.out_neighbors(v)) {
                arcs.emplace_back(relabel(g.external_id(v)), relabel(g.external_id(w)));
            }
        }
        Graph h = oracle::make_graph(arcs);
        CorePartition pg = core_decomposition(g, Direction::All);
        CorePartition ph = core_decomposition(h, Direction::All);
        for (NodeId v = 0; v < g.node_count(); ++v) {
            NodeId hv = *h.ids().to_internal(relabel(g.external_id(v)));
            CHECK(pg.coreness[static_cast<std::size_t>(v)] ==
                  ph.coreness[static_cast<std::size_t>(hv)]);
        }
    }
}
