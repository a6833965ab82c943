#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sna/graph.hpp"

namespace sna {

struct DegreeDistribution {
    Direction mode = Direction::Out;
    std::vector<std::pair<std::int64_t, std::int64_t>> rows;  // (degree, count), ascending degree
};

// Histogram over all occurring degrees; counts sum to n.
DegreeDistribution degree_distribution(const Graph& graph, Direction mode);

// Measures assembled by the composite contacts report, in column order.
// The first three form the personal block, the rest the know-how block.
enum class ContactMeasure {
    InDegree,
    OutDegree,
    Neighborhood,  // distinct 1-hop neighbors, both directions
    Closeness,     // out direction, reachable-corrected
    Betweenness,
    Coreness,      // all mode
    PageRank,
    InfluenceDomain,
    BrokerageTotal,  // Louvain partition at the report seed, open triads only
};
inline constexpr int kContactMeasureCount = 9;

const char* to_string(ContactMeasure measure);

struct ContactsRow {
    ExternalId id = 0;
    std::int64_t in_degree = 0;
    std::int64_t out_degree = 0;
    std::int64_t neighborhood = 0;
    double closeness = 0.0;
    double betweenness = 0.0;
    std::int32_t coreness = 0;
    double pagerank = 0.0;
    std::int64_t influence_domain = 0;
    std::int64_t brokerage_total = 0;
    // 1-based rank of this node under each measure (score descending,
    // external id ascending on ties).
    std::array<std::int32_t, kContactMeasureCount> ranks{};
};

struct ContactsReport {
    int top_k = 10;
    std::uint64_t seed = 1;
    std::vector<ContactsRow> rows;  // union of per-measure top_k, ascending id
};

// Runs every measure with the given seed and assembles the per-node blocks.
ContactsReport contacts_report(const Graph& graph, int top_k, std::uint64_t seed,
                               int threads = 1);

}  // namespace sna
