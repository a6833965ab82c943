#include "sna/report.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "sna/brokerage.hpp"
#include "sna/centrality.hpp"
#include "sna/communities.hpp"
#include "sna/cores.hpp"
#include "sna/neighborhoods.hpp"
#include "sna/pagerank.hpp"

namespace sna {

DegreeDistribution degree_distribution(const Graph& graph, Direction mode) {
    DegreeDistribution result;
    result.mode = mode;
    std::map<std::int64_t, std::int64_t> histogram;
    for (NodeId v = 0; v < graph.node_count(); ++v) {
        ++histogram[graph.degree(v, mode)];
    }
    result.rows.assign(histogram.begin(), histogram.end());
    return result;
}

const char* to_string(ContactMeasure measure) {
    switch (measure) {
        case ContactMeasure::InDegree: return "in_degree";
        case ContactMeasure::OutDegree: return "out_degree";
        case ContactMeasure::Neighborhood: return "neighborhood";
        case ContactMeasure::Closeness: return "closeness";
        case ContactMeasure::Betweenness: return "betweenness";
        case ContactMeasure::Coreness: return "coreness";
        case ContactMeasure::PageRank: return "pagerank";
        case ContactMeasure::InfluenceDomain: return "influence_domain";
        case ContactMeasure::BrokerageTotal: return "brokerage_total";
    }
    return "?";
}

ContactsReport contacts_report(const Graph& graph, int top_k, std::uint64_t seed, int threads) {
    const auto n = graph.node_count();
    const auto size = static_cast<std::size_t>(n);

    CentralityVector closeness =
        closeness_centrality(graph, Direction::Out, ClosenessVariant::ReachableCorrected, threads);
    CentralityVector betweenness = betweenness_centrality(graph, threads);
    CorePartition cores = core_decomposition(graph, Direction::All);
    ScoreVector ranks = pagerank(graph);
    std::vector<std::int64_t> domains = influence_domain_sizes(graph, threads);
    CommunityPartition communities = louvain(graph, seed);
    BrokerageCounts census = brokerage_census(graph, communities.labels, true, threads);

    // One score array per measure, in ContactMeasure order.
    std::array<std::vector<double>, kContactMeasureCount> scores;
    for (auto& s : scores) s.resize(size);
    for (NodeId v = 0; v < n; ++v) {
        const auto i = static_cast<std::size_t>(v);
        scores[0][i] = static_cast<double>(graph.in_degree(v));
        scores[1][i] = static_cast<double>(graph.out_degree(v));
        scores[2][i] = static_cast<double>(graph.all_degree(v));
        scores[3][i] = closeness.raw[i];
        scores[4][i] = betweenness.raw[i];
        scores[5][i] = static_cast<double>(cores.coreness[i]);
        scores[6][i] = ranks.scores[i];
        scores[7][i] = static_cast<double>(domains[i]);
        scores[8][i] = static_cast<double>(census.per_node[i].total());
    }

    ContactsReport report;
    report.top_k = top_k;
    report.seed = seed;

    // rank[m][v] = 1-based position under measure m (score desc, id asc).
    std::array<std::vector<std::int32_t>, kContactMeasureCount> rank;
    std::vector<char> selected(size, 0);
    std::vector<NodeId> order(size);
    for (int m = 0; m < kContactMeasureCount; ++m) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
            return scores[m][static_cast<std::size_t>(a)] > scores[m][static_cast<std::size_t>(b)];
        });
        rank[m].resize(size);
        for (std::size_t i = 0; i < size; ++i) {
            rank[m][static_cast<std::size_t>(order[i])] = static_cast<std::int32_t>(i + 1);
        }
        for (std::size_t i = 0; i < std::min<std::size_t>(size, static_cast<std::size_t>(top_k)); ++i) {
            selected[static_cast<std::size_t>(order[i])] = 1;
        }
    }

    for (NodeId v = 0; v < n; ++v) {
        const auto i = static_cast<std::size_t>(v);
        if (!selected[i]) continue;
        ContactsRow row;
        row.id = graph.external_id(v);
        row.in_degree = graph.in_degree(v);
        row.out_degree = graph.out_degree(v);
        row.neighborhood = graph.all_degree(v);
        row.closeness = closeness.raw[i];
        row.betweenness = betweenness.raw[i];
        row.coreness = cores.coreness[i];
        row.pagerank = ranks.scores[i];
        row.influence_domain = domains[i];
        row.brokerage_total = census.per_node[i].total();
        for (int m = 0; m < kContactMeasureCount; ++m) row.ranks[static_cast<std::size_t>(m)] = rank[m][i];
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace sna
