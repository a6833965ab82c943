#include "sna/communities.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace sna {
namespace {

// Undirected weighted multigraph used by the aggregation levels. Edge weight
// between two nodes is the number of arc directions present (1 or 2) at the
// bottom level and the summed weight after aggregation.
struct LevelGraph {
    std::int32_t n = 0;
    std::vector<std::int64_t> offsets;
    std::vector<std::int32_t> targets;
    std::vector<double> weights;
    std::vector<double> self_loop;  // intra weight folded onto a super-node
    std::vector<double> volume;     // weighted degree, self-loop counted twice
    double total_weight = 0.0;      // m': every edge once, self-loops once
};

LevelGraph symmetrize(const Graph& graph) {
    LevelGraph lg;
    lg.n = graph.node_count();
    lg.offsets.assign(static_cast<std::size_t>(lg.n) + 1, 0);
    lg.self_loop.assign(static_cast<std::size_t>(lg.n), 0.0);
    lg.volume.assign(static_cast<std::size_t>(lg.n), 0.0);
    for (NodeId v = 0; v < lg.n; ++v) {
        auto out = graph.out_neighbors(v);
        auto in = graph.in_neighbors(v);
        // Union walk over the two sorted rows; weight = directions present.
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < out.size() || j < in.size()) {
            NodeId x;
            double w = 0.0;
            if (j == in.size() || (i < out.size() && out[i] <= in[j])) {
                x = out[i];
                w = 1.0;
                if (j < in.size() && in[j] == x) {
                    w = 2.0;
                    ++j;
                }
                ++i;
            } else {
                x = in[j];
                w = 1.0;
                ++j;
            }
            lg.targets.push_back(x);
            lg.weights.push_back(w);
            lg.volume[static_cast<std::size_t>(v)] += w;
        }
        lg.offsets[static_cast<std::size_t>(v) + 1] = static_cast<std::int64_t>(lg.targets.size());
    }
    lg.total_weight = static_cast<double>(graph.arc_count());
    return lg;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Hand-rolled Fisher-Yates so the permutation depends only on the seed, not
// on the standard library's shuffle implementation.
void seeded_permutation(std::vector<std::int32_t>& order, std::uint64_t& state) {
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = order.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(splitmix64(state) % i);
        std::swap(order[i - 1], order[j]);
    }
}

// One local-moving phase. Returns true when at least one node changed
// community; labels come out as arbitrary ids in [0, n). With resume, the
// phase starts from the labels passed in instead of singletons (used for the
// final flat refinement, which restores single-move local optimality on the
// original graph after aggregation).
bool local_moving(const LevelGraph& lg, double resolution, std::uint64_t& rng_state,
                  std::vector<std::int32_t>& labels, bool resume) {
    const auto n = static_cast<std::size_t>(lg.n);
    if (!resume) {
        labels.resize(n);
        std::iota(labels.begin(), labels.end(), 0);
    }
    std::vector<double> community_volume(n, 0.0);
    std::vector<std::int32_t> members(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        community_volume[static_cast<std::size_t>(labels[v])] += lg.volume[v];
        ++members[static_cast<std::size_t>(labels[v])];
    }
    std::vector<std::int32_t> vacant;  // community ids with no members left
    for (std::int32_t c = static_cast<std::int32_t>(n); c-- > 0;) {
        if (members[static_cast<std::size_t>(c)] == 0) vacant.push_back(c);
    }
    std::vector<double> affinity(n, 0.0);
    std::vector<std::int32_t> touched;
    std::vector<std::int32_t> order(n);
    seeded_permutation(order, rng_state);

    const double inv_2m = 1.0 / (2.0 * lg.total_weight);
    bool any_move = false;
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::int32_t u : order) {
            const auto ui = static_cast<std::size_t>(u);
            const std::int32_t home = labels[ui];
            touched.clear();
            for (std::int64_t e = lg.offsets[ui]; e < lg.offsets[ui + 1]; ++e) {
                const std::int32_t x = lg.targets[static_cast<std::size_t>(e)];
                if (x == u) continue;
                const std::int32_t c = labels[static_cast<std::size_t>(x)];
                if (affinity[static_cast<std::size_t>(c)] == 0.0) touched.push_back(c);
                affinity[static_cast<std::size_t>(c)] += lg.weights[static_cast<std::size_t>(e)];
            }
            community_volume[static_cast<std::size_t>(home)] -= lg.volume[ui];
            --members[static_cast<std::size_t>(home)];

            // Gain of joining c, up to terms independent of c.
            auto gain = [&](std::int32_t c) {
                return affinity[static_cast<std::size_t>(c)] -
                       resolution * lg.volume[ui] *
                           community_volume[static_cast<std::size_t>(c)] * inv_2m;
            };
            std::int32_t best = home;
            double best_gain = gain(home);
            for (std::int32_t c : touched) {
                if (c == home) continue;
                const double g = gain(c);
                if (g > best_gain) {
                    best = c;
                    best_gain = g;
                }
            }
            if (best_gain < 0.0) {
                // Isolation (gain 0, by convention) beats every candidate.
                // Some id must be vacant: u's home still holds another member,
                // so fewer than n communities are occupied.
                best = vacant.back();
                vacant.pop_back();
            }
            if (best != home && members[static_cast<std::size_t>(home)] == 0) {
                vacant.push_back(home);
            }
            community_volume[static_cast<std::size_t>(best)] += lg.volume[ui];
            ++members[static_cast<std::size_t>(best)];
            labels[ui] = best;
            if (best != home) {
                moved = true;
                any_move = true;
            }
            for (std::int32_t c : touched) affinity[static_cast<std::size_t>(c)] = 0.0;
            affinity[static_cast<std::size_t>(home)] = 0.0;
        }
    }
    return any_move;
}

// Collapses communities into super-nodes; `labels` is rewritten to the dense
// super-node index of each node.
LevelGraph aggregate(const LevelGraph& lg, std::vector<std::int32_t>& labels) {
    const auto n = static_cast<std::size_t>(lg.n);
    std::vector<std::int32_t> dense(n, -1);
    std::int32_t next = 0;
    for (std::size_t v = 0; v < n; ++v) {
        auto& d = dense[static_cast<std::size_t>(labels[v])];
        if (d < 0) d = next++;
        labels[v] = dense[static_cast<std::size_t>(labels[v])];
    }

    LevelGraph out;
    out.n = next;
    out.self_loop.assign(static_cast<std::size_t>(next), 0.0);
    out.volume.assign(static_cast<std::size_t>(next), 0.0);
    out.total_weight = lg.total_weight;

    // Intra-community weight is seen from both endpoints, hence the /2.
    std::vector<double> intra_twice(static_cast<std::size_t>(next), 0.0);
    std::vector<std::pair<std::int64_t, double>> cross;  // (c * next + d, w)
    for (std::size_t v = 0; v < n; ++v) {
        const std::int32_t c = labels[v];
        intra_twice[static_cast<std::size_t>(c)] += 2.0 * lg.self_loop[v];
        for (std::int64_t e = lg.offsets[v]; e < lg.offsets[v + 1]; ++e) {
            const std::int32_t d = labels[static_cast<std::size_t>(lg.targets[static_cast<std::size_t>(e)])];
            const double w = lg.weights[static_cast<std::size_t>(e)];
            if (c == d) {
                intra_twice[static_cast<std::size_t>(c)] += w;
            } else {
                cross.emplace_back(static_cast<std::int64_t>(c) * next + d, w);
            }
        }
    }
    std::sort(cross.begin(), cross.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    out.offsets.assign(static_cast<std::size_t>(next) + 1, 0);
    std::size_t i = 0;
    for (std::int32_t c = 0; c < next; ++c) {
        const auto ci = static_cast<std::size_t>(c);
        out.self_loop[ci] = intra_twice[ci] / 2.0;
        out.volume[ci] = 2.0 * out.self_loop[ci];
        while (i < cross.size() && cross[i].first / next == c) {
            const auto d = static_cast<std::int32_t>(cross[i].first % next);
            double w = 0.0;
            while (i < cross.size() && cross[i].first == static_cast<std::int64_t>(c) * next + d) {
                w += cross[i].second;
                ++i;
            }
            out.targets.push_back(d);
            out.weights.push_back(w);
            out.volume[ci] += w;
        }
        out.offsets[ci + 1] = static_cast<std::int64_t>(out.targets.size());
    }
    return out;
}

}  // namespace

double modularity(const Graph& graph, std::span<const std::int32_t> labels, double resolution) {
    const auto n = graph.node_count();
    if (labels.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("label array length does not match the graph");
    }
    std::int32_t max_label = 0;
    for (auto c : labels) {
        if (c < 0) throw std::invalid_argument("community labels must be non-negative");
        max_label = std::max(max_label, c);
    }

    // On the symmetrized graph: e_c = arcs inside c, vol_c = sum of
    // (in-degree + out-degree) over members, m' = arc count.
    std::vector<double> intra(static_cast<std::size_t>(max_label) + 1, 0.0);
    std::vector<double> volume(static_cast<std::size_t>(max_label) + 1, 0.0);
    for (NodeId v = 0; v < n; ++v) {
        const auto c = static_cast<std::size_t>(labels[static_cast<std::size_t>(v)]);
        volume[c] += static_cast<double>(graph.out_degree(v) + graph.in_degree(v));
        for (NodeId w : graph.out_neighbors(v)) {
            if (labels[static_cast<std::size_t>(v)] == labels[static_cast<std::size_t>(w)]) {
                intra[c] += 1.0;
            }
        }
    }
    const double m = static_cast<double>(graph.arc_count());
    double q = 0.0;
    for (std::size_t c = 0; c < intra.size(); ++c) {
        const double frac = volume[c] / (2.0 * m);
        q += intra[c] / m - resolution * frac * frac;
    }
    return q;
}

CommunityPartition louvain(const Graph& graph, std::uint64_t seed, double resolution) {
    const auto n = graph.node_count();
    CommunityPartition result;
    result.seed = seed;
    result.resolution = resolution;
    result.labels.assign(static_cast<std::size_t>(n), 0);

    // flat[v] = super-node of v in the current level graph
    std::vector<std::int32_t> flat(static_cast<std::size_t>(n));
    std::iota(flat.begin(), flat.end(), 0);
    const LevelGraph base = symmetrize(graph);
    LevelGraph level = base;
    std::uint64_t rng_state = seed;

    std::vector<std::int32_t> level_labels;
    while (true) {
        const bool improved = local_moving(level, resolution, rng_state, level_labels, false);
        if (!improved) break;
        level = aggregate(level, level_labels);
        for (auto& f : flat) f = level_labels[static_cast<std::size_t>(f)];
        if (level.n <= 1) break;
    }
    // Flat refinement: aggregation can leave individual nodes with a better
    // home; one more moving phase on the original graph removes them.
    local_moving(base, resolution, rng_state, flat, true);

    // Canonical output labels: dense, first-appearance order over nodes.
    std::unordered_map<std::int32_t, std::int32_t> dense;
    for (NodeId v = 0; v < n; ++v) {
        auto [it, inserted] =
            dense.emplace(flat[static_cast<std::size_t>(v)], static_cast<std::int32_t>(dense.size()));
        result.labels[static_cast<std::size_t>(v)] = it->second;
    }
    result.community_count = static_cast<std::int32_t>(dense.size());
    result.sizes.assign(static_cast<std::size_t>(result.community_count), 0);
    for (auto c : result.labels) ++result.sizes[static_cast<std::size_t>(c)];
    result.modularity = modularity(graph, result.labels, resolution);
    return result;
}

}  // namespace sna
