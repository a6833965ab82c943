#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sna/graph.hpp"

namespace sna {

// Gould-Fernandez five-role counters for one node.
struct RoleCounts {
    std::int64_t coordinator = 0;
    std::int64_t gatekeeper = 0;
    std::int64_t representative = 0;
    std::int64_t itinerant = 0;
    std::int64_t liaison = 0;

    std::int64_t total() const {
        return coordinator + gatekeeper + representative + itinerant + liaison;
    }
    friend bool operator==(const RoleCounts&, const RoleCounts&) = default;
};

struct BrokerageCounts {
    std::vector<RoleCounts> per_node;
    RoleCounts totals;
    bool exclude_closed = true;
};

// Role census over every directed two-path a -> v -> b with a != b. When
// exclude_closed, two-paths closed by an arc a -> b are skipped (only open
// triads / structural holes count). Classification by group labels:
//   coordinator     g(a) == g(v) == g(b)
//   gatekeeper      g(a) != g(v),  g(v) == g(b)
//   representative  g(a) == g(v),  g(v) != g(b)
//   itinerant       g(a) == g(b),  g(a) != g(v)
//   liaison         all three distinct
// Throws std::invalid_argument when the partition has the wrong length.
BrokerageCounts brokerage_census(const Graph& graph, std::span<const std::int32_t> partition,
                                 bool exclude_closed = true, int threads = 1);

struct BrokerageSummary {
    std::int64_t persons_with_roles = 0;
    std::int64_t persons_without_roles = 0;
    std::optional<NodeId> argmax_node;  // empty when every total is zero
    std::int64_t argmax_total = 0;
};

// Argmax ties broken by smallest external id.
BrokerageSummary brokerage_summary(const BrokerageCounts& counts);

}  // namespace sna
