#include "sna/edge_list.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_set>

namespace sna {
namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\v' || c == '\f' || c == '\r';
}

// Two whitespace-separated non-negative integers and nothing else.
bool parse_data_line(std::string_view line, ExternalId& source, ExternalId& target) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < line.size() && is_space(line[pos])) ++pos;
    };
    auto read_int = [&](ExternalId& out) {
        skip_ws();
        std::size_t start = pos;
        while (pos < line.size() && !is_space(line[pos])) ++pos;
        if (pos == start) return false;
        auto [ptr, ec] = std::from_chars(line.data() + start, line.data() + pos, out);
        return ec == std::errc() && ptr == line.data() + pos && out >= 0;
    };
    if (!read_int(source) || !read_int(target)) return false;
    skip_ws();
    return pos == line.size();  // trailing tokens are malformed
}

struct ArcHash {
    std::size_t operator()(const Arc& a) const {
        std::size_t h = std::hash<ExternalId>()(a.source);
        h ^= std::hash<ExternalId>()(a.target) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

}  // namespace

const char* to_string(WarningKind kind) {
    switch (kind) {
        case WarningKind::SelfLoopDropped: return "self-loop-dropped";
        case WarningKind::DuplicateDropped: return "duplicate-dropped";
        case WarningKind::Malformed: return "malformed";
    }
    return "?";
}

EdgeList parse_edge_list(std::istream& in, const ParseOptions& options) {
    EdgeList result;
    std::unordered_set<Arc, ArcHash> seen;
    std::unordered_set<ExternalId> endpoints;
    std::string line;
    std::int64_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t\v\f");
        if (first == std::string::npos) continue;  // blank line
        if (line[first] == '#') continue;          // comment
        ExternalId source = 0;
        ExternalId target = 0;
        if (!parse_data_line(line, source, target)) {
            if (!options.lenient) {
                throw InputError("malformed edge-list line " + std::to_string(line_number) +
                                 ": expected two non-negative integers, got \"" + line + "\"");
            }
            result.warnings.push_back({line_number, WarningKind::Malformed});
            continue;
        }
        if (source == target) {
            result.warnings.push_back({line_number, WarningKind::SelfLoopDropped});
            continue;
        }
        if (!seen.insert(Arc{source, target}).second) {
            result.warnings.push_back({line_number, WarningKind::DuplicateDropped});
            continue;
        }
        result.arcs.push_back(Arc{source, target});
        endpoints.insert(source);
        endpoints.insert(target);
    }
    if (result.arcs.empty()) {
        throw InputError("edge list contains zero arcs after parsing");
    }
    result.distinct_nodes = static_cast<std::int64_t>(endpoints.size());
    return result;
}

EdgeList parse_edge_list(std::string_view text, const ParseOptions& options) {
    std::istringstream stream{std::string(text)};
    return parse_edge_list(stream, options);
}

EdgeList load_edge_list(const std::string& path, const ParseOptions& options) {
    std::ifstream file(path);
    if (!file) {
        throw InputError("cannot open edge list: " + path);
    }
    return parse_edge_list(file, options);
}

NodeIdMap::NodeIdMap(std::vector<ExternalId> sorted_externals)
    : externals_(std::move(sorted_externals)) {}

std::optional<NodeId> NodeIdMap::to_internal(ExternalId id) const {
    auto it = std::lower_bound(externals_.begin(), externals_.end(), id);
    if (it == externals_.end() || *it != id) return std::nullopt;
    return static_cast<NodeId>(it - externals_.begin());
}

NodeIdMap build_id_map(const EdgeList& edges) {
    if (edges.arcs.empty()) {
        throw InputError("cannot build id map: edge list has zero arcs");
    }
    std::vector<ExternalId> ids;
    ids.reserve(edges.arcs.size() * 2);
    for (const Arc& arc : edges.arcs) {
        ids.push_back(arc.source);
        ids.push_back(arc.target);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return NodeIdMap(std::move(ids));
}

}  // namespace sna
