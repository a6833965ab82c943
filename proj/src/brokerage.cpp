#include "sna/brokerage.hpp"

#include <stdexcept>

#include "sna/parallel.hpp"

namespace sna {

BrokerageCounts brokerage_census(const Graph& graph, std::span<const std::int32_t> partition,
                                 bool exclude_closed, int threads) {
    const auto n = graph.node_count();
    if (partition.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("partition length does not match the graph");
    }
    for (auto c : partition) {
        if (c < 0) throw std::invalid_argument("partition labels must be non-negative");
    }

    BrokerageCounts result;
    result.exclude_closed = exclude_closed;
    result.per_node.assign(static_cast<std::size_t>(n), RoleCounts{});

    // Middle nodes own disjoint counters, so parallel blocks need no merge.
    for_blocks(n, kDefaultBlockSize, threads, [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t mid = begin; mid < end; ++mid) {
            const auto v = static_cast<NodeId>(mid);
            const std::int32_t gv = partition[static_cast<std::size_t>(v)];
            RoleCounts& counts = result.per_node[static_cast<std::size_t>(v)];
            for (NodeId a : graph.in_neighbors(v)) {
                const std::int32_t ga = partition[static_cast<std::size_t>(a)];
                for (NodeId b : graph.out_neighbors(v)) {
                    if (a == b) continue;  // reciprocated dyad, not a triad
                    if (exclude_closed && graph.has_arc(a, b)) continue;
                    const std::int32_t gb = partition[static_cast<std::size_t>(b)];
                    if (ga == gv) {
                        if (gv == gb) {
                            ++counts.coordinator;
                        } else {
                            ++counts.representative;
                        }
                    } else if (gv == gb) {
                        ++counts.gatekeeper;
                    } else if (ga == gb) {
                        ++counts.itinerant;
                    } else {
                        ++counts.liaison;
                    }
                }
            }
        }
    });

    for (const RoleCounts& c : result.per_node) {
        result.totals.coordinator += c.coordinator;
        result.totals.gatekeeper += c.gatekeeper;
        result.totals.representative += c.representative;
        result.totals.itinerant += c.itinerant;
        result.totals.liaison += c.liaison;
    }
    return result;
}

BrokerageSummary brokerage_summary(const BrokerageCounts& counts) {
    BrokerageSummary summary;
    std::int64_t best = 0;
    NodeId best_node = -1;
    for (NodeId v = 0; v < static_cast<NodeId>(counts.per_node.size()); ++v) {
        const std::int64_t total = counts.per_node[static_cast<std::size_t>(v)].total();
        if (total > 0) {
            ++summary.persons_with_roles;
            if (total > best) {  // first maximum == smallest external id
                best = total;
                best_node = v;
            }
        } else {
            ++summary.persons_without_roles;
        }
    }
    if (best_node >= 0) {
        summary.argmax_node = best_node;
        summary.argmax_total = best;
    }
    return summary;
}

}  // namespace sna
