#pragma once

#include <string>
#include <vector>

#include "sna/graph.hpp"

namespace sna {

enum class Measure { Degree, Closeness, Betweenness };
enum class ClosenessVariant { ReachableCorrected, Harmonic };

const char* to_string(Measure measure);
const char* to_string(ClosenessVariant variant);
ClosenessVariant closeness_variant_from_string(const std::string& text);

// Per-node scores for one measure. `raw` and `normalized` are always both
// populated; for measures whose definition is already normalized (closeness)
// the two coincide.
struct CentralityVector {
    Measure measure = Measure::Degree;
    Direction direction = Direction::Out;
    ClosenessVariant variant = ClosenessVariant::ReachableCorrected;  // closeness only
    std::vector<double> raw;
    std::vector<double> normalized;
};

// Raw score = in-, out-, or distinct-total degree; normalized = raw/(n-1).
CentralityVector degree_centrality(const Graph& graph, Direction direction);

// ReachableCorrected (default): with R(v) the reachable set excluding v,
// score = [|R|/(n-1)] * [|R| / sum of distances], 0 when R is empty.
// Harmonic: sum over u != v of 1/d(v,u), divided by (n-1).
CentralityVector closeness_centrality(const Graph& graph, Direction direction,
                                      ClosenessVariant variant = ClosenessVariant::ReachableCorrected,
                                      int threads = 1);

// Directed Brandes accumulation; raw score(v) = sum over s!=v!=t of
// sigma_st(v)/sigma_st, normalized divides by (n-1)(n-2).
CentralityVector betweenness_centrality(const Graph& graph, int threads = 1);

// Freeman index: sum of (c_max - c_v) over the star-graph maximum for the
// measure. Supported: degree (all modes), reachable-corrected closeness,
// betweenness. Throws ComputationError on other combinations or n < 3.
double centralization(const CentralityVector& scores, const Graph& graph);

// Index of the maximum raw score; ties go to the smallest external id
// (== smallest internal id, since internals are assigned in external order).
NodeId argmax_node(const std::vector<double>& scores);

// How many entries equal `value` exactly (used for degree-zero counts).
std::int64_t count_equal(const std::vector<double>& scores, double value);

}  // namespace sna
