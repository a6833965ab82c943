#include "sna/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "sna/parallel.hpp"

namespace sna {

const char* to_string(Measure measure) {
    switch (measure) {
        case Measure::Degree: return "degree";
        case Measure::Closeness: return "closeness";
        case Measure::Betweenness: return "betweenness";
    }
    return "?";
}

const char* to_string(ClosenessVariant variant) {
    switch (variant) {
        case ClosenessVariant::ReachableCorrected: return "reachable-corrected";
        case ClosenessVariant::Harmonic: return "harmonic";
    }
    return "?";
}

ClosenessVariant closeness_variant_from_string(const std::string& text) {
    if (text == "reachable-corrected") return ClosenessVariant::ReachableCorrected;
    if (text == "harmonic") return ClosenessVariant::Harmonic;
    throw std::invalid_argument("unknown closeness variant: " + text);
}

CentralityVector degree_centrality(const Graph& graph, Direction direction) {
    const auto n = graph.node_count();
    CentralityVector result;
    result.measure = Measure::Degree;
    result.direction = direction;
    result.raw.resize(static_cast<std::size_t>(n));
    result.normalized.resize(static_cast<std::size_t>(n));
    const double denom = n > 1 ? static_cast<double>(n - 1) : 1.0;
    for (NodeId v = 0; v < n; ++v) {
        double d = static_cast<double>(graph.degree(v, direction));
        result.raw[static_cast<std::size_t>(v)] = d;
        result.normalized[static_cast<std::size_t>(v)] = d / denom;
    }
    return result;
}

CentralityVector closeness_centrality(const Graph& graph, Direction direction,
                                      ClosenessVariant variant, int threads) {
    const auto n = graph.node_count();
    CentralityVector result;
    result.measure = Measure::Closeness;
    result.direction = direction;
    result.variant = variant;
    result.raw.assign(static_cast<std::size_t>(n), 0.0);

    // score[v] depends only on v's own BFS, so per-source parallelism needs
    // no merge step.
    for_blocks(n, kDefaultBlockSize, threads, [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t s = begin; s < end; ++s) {
            const auto source = static_cast<NodeId>(s);
            DistanceArray d = bfs(graph, source, direction);
            std::int64_t reachable = 0;
            std::int64_t dist_sum = 0;
            double harmonic_sum = 0.0;
            for (NodeId u = 0; u < n; ++u) {
                auto dist = d.dist[static_cast<std::size_t>(u)];
                if (u == source || dist == DistanceArray::kUnreachable) continue;
                ++reachable;
                dist_sum += dist;
                harmonic_sum += 1.0 / static_cast<double>(dist);
            }
            double score = 0.0;
            if (variant == ClosenessVariant::ReachableCorrected) {
                if (reachable > 0) {
                    const double r = static_cast<double>(reachable);
                    score = (r / static_cast<double>(n - 1)) * (r / static_cast<double>(dist_sum));
                }
            } else {
                score = harmonic_sum / static_cast<double>(n - 1);
            }
            result.raw[static_cast<std::size_t>(s)] = score;
        }
    });
    result.normalized = result.raw;
    return result;
}

CentralityVector betweenness_centrality(const Graph& graph, int threads) {
    const auto n = graph.node_count();
    const auto size = static_cast<std::size_t>(n);
    CentralityVector result;
    result.measure = Measure::Betweenness;
    result.direction = Direction::Out;

    // Brandes accumulation per source; per-block partial sums are merged in
    // block order so the float addition order is independent of the worker
    // count.
    const std::int64_t blocks = (n + kDefaultBlockSize - 1) / kDefaultBlockSize;
    std::vector<std::vector<double>> partials(static_cast<std::size_t>(blocks));

    for_blocks(n, kDefaultBlockSize, threads, [&](std::int64_t begin, std::int64_t end) {
        auto& acc = partials[static_cast<std::size_t>(begin / kDefaultBlockSize)];
        acc.assign(size, 0.0);
        std::vector<std::int32_t> dist(size);
        std::vector<double> sigma(size);
        std::vector<double> delta(size);
        std::vector<NodeId> order;  // BFS visit order == reverse dependency order
        order.reserve(size);
        std::vector<std::vector<NodeId>> preds(size);

        for (std::int64_t s = begin; s < end; ++s) {
            const auto source = static_cast<NodeId>(s);
            std::fill(dist.begin(), dist.end(), -1);
            std::fill(sigma.begin(), sigma.end(), 0.0);
            std::fill(delta.begin(), delta.end(), 0.0);
            order.clear();
            for (auto& p : preds) p.clear();

            dist[static_cast<std::size_t>(source)] = 0;
            sigma[static_cast<std::size_t>(source)] = 1.0;
            std::size_t head = 0;
            order.push_back(source);
            while (head < order.size()) {
                NodeId v = order[head++];
                for (NodeId w : graph.out_neighbors(v)) {
                    const auto wi = static_cast<std::size_t>(w);
                    if (dist[wi] < 0) {
                        dist[wi] = dist[static_cast<std::size_t>(v)] + 1;
                        order.push_back(w);
                    }
                    if (dist[wi] == dist[static_cast<std::size_t>(v)] + 1) {
                        sigma[wi] += sigma[static_cast<std::size_t>(v)];
                        preds[wi].push_back(v);
                    }
                }
            }
            for (std::size_t i = order.size(); i-- > 1;) {
                NodeId w = order[i];
                const auto wi = static_cast<std::size_t>(w);
                for (NodeId v : preds[wi]) {
                    delta[static_cast<std::size_t>(v)] +=
                        sigma[static_cast<std::size_t>(v)] / sigma[wi] * (1.0 + delta[wi]);
                }
                acc[wi] += delta[wi];
            }
        }
    });

    result.raw.assign(size, 0.0);
    for (const auto& acc : partials) {
        if (acc.empty()) continue;
        for (std::size_t v = 0; v < size; ++v) result.raw[v] += acc[v];
    }
    result.normalized.assign(size, 0.0);
    if (n > 2) {
        const double denom = static_cast<double>(n - 1) * static_cast<double>(n - 2);
        for (std::size_t v = 0; v < size; ++v) result.normalized[v] = result.raw[v] / denom;
    }
    return result;
}

double centralization(const CentralityVector& scores, const Graph& graph) {
    const auto n = graph.node_count();
    if (static_cast<std::size_t>(n) != scores.raw.size()) {
        throw std::invalid_argument("centrality vector was not computed on this graph");
    }
    if (n < 3) {
        throw ComputationError("centralization undefined for n < 3");
    }
    const double nd = static_cast<double>(n);

    const std::vector<double>* values = &scores.raw;
    double denominator = 0.0;
    switch (scores.measure) {
        case Measure::Degree:
            // Star maxima: (n-1)(n-2) for the all-neighbor star, (n-1)^2 for
            // the in- or out-star (leaves score 0 there).
            denominator = scores.direction == Direction::All
                              ? (nd - 1.0) * (nd - 2.0)
                              : (nd - 1.0) * (nd - 1.0);
            break;
        case Measure::Closeness:
            if (scores.variant != ClosenessVariant::ReachableCorrected) {
                throw ComputationError(
                    "centralization is not defined for the harmonic closeness variant");
            }
            values = &scores.normalized;
            denominator = (nd - 1.0) * (nd - 2.0) / (2.0 * nd - 3.0);
            break;
        case Measure::Betweenness:
            denominator = (nd - 1.0) * (nd - 1.0) * (nd - 2.0);
            break;
    }
    const double max = *std::max_element(values->begin(), values->end());
    double sum = 0.0;
    for (double c : *values) sum += max - c;
    return sum / denominator;
}

NodeId argmax_node(const std::vector<double>& scores) {
    // Internal order is ascending external order, so the first strict
    // maximum is the smallest-external-id tie-break.
    NodeId best = 0;
    for (NodeId v = 1; v < static_cast<NodeId>(scores.size()); ++v) {
        if (scores[static_cast<std::size_t>(v)] > scores[static_cast<std::size_t>(best)]) {
            best = v;
        }
    }
    return best;
}

std::int64_t count_equal(const std::vector<double>& scores, double value) {
    return std::count(scores.begin(), scores.end(), value);
}

}  // namespace sna
