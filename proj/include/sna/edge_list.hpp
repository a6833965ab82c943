#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sna/types.hpp"

namespace sna {

enum class WarningKind { SelfLoopDropped, DuplicateDropped, Malformed };

const char* to_string(WarningKind kind);

struct ParseWarning {
    std::int64_t line = 0;  // 1-based line number in the input
    WarningKind kind = WarningKind::Malformed;

    friend bool operator==(const ParseWarning&, const ParseWarning&) = default;
};

struct Arc {
    ExternalId source = 0;
    ExternalId target = 0;

    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Validated arc list: no self-loops, no duplicate (source, target) pairs,
// arcs kept in input order minus drops.
struct EdgeList {
    std::vector<Arc> arcs;
    std::vector<ParseWarning> warnings;
    std::int64_t distinct_nodes = 0;
};

struct ParseOptions {
    // Malformed lines warn-and-skip instead of aborting the parse.
    bool lenient = false;
};

// Parses SNAP-style edge-list text: '#' lines are comments, data lines hold
// two whitespace-separated non-negative integers, LF or CRLF. Blank lines
// are skipped. Throws InputError on malformed lines (unless lenient) and on
// inputs that end up with zero arcs.
EdgeList parse_edge_list(std::istream& in, const ParseOptions& options = {});
EdgeList parse_edge_list(std::string_view text, const ParseOptions& options = {});

// Opens and parses a file; throws InputError if it cannot be read.
EdgeList load_edge_list(const std::string& path, const ParseOptions& options = {});

// Bijection between external ids and dense internal indices [0, n).
// Internal index order == ascending external id order.
class NodeIdMap {
public:
    NodeIdMap() = default;
    explicit NodeIdMap(std::vector<ExternalId> sorted_externals);

    NodeId size() const { return static_cast<NodeId>(externals_.size()); }
    ExternalId to_external(NodeId v) const { return externals_[static_cast<std::size_t>(v)]; }
    std::optional<NodeId> to_internal(ExternalId id) const;
    std::span<const ExternalId> externals() const { return externals_; }

private:
    std::vector<ExternalId> externals_;  // sorted ascending, unique
};

// Assigns internal indices in ascending external-id order.
// Throws InputError on an empty EdgeList.
NodeIdMap build_id_map(const EdgeList& edges);

}  // namespace sna
