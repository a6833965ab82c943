// sna — command-line front end for the social-network-analysis toolkit.
// One subcommand per measure; outputs are byte-deterministic for a fixed
// flag set (fixed seeds, fixed tie-breaking, fixed float formatting).

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sna/brokerage.hpp"
#include "sna/centrality.hpp"
#include "sna/communities.hpp"
#include "sna/cores.hpp"
#include "sna/edge_list.hpp"
#include "sna/graph.hpp"
#include "sna/neighborhoods.hpp"
#include "sna/pagerank.hpp"
#include "sna/report.hpp"
#include "sna/text_io.hpp"

namespace {

using namespace sna;

constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitComputation = 3;

struct Options {
    std::string input;
    std::string mode = "all";
    std::string variant = "reachable-corrected";
    std::string interpretation = "directed";
    std::string measure = "degree";
    std::string format;  // "csv" or "json"; per-command default when empty
    std::string out;     // empty = stdout
    std::string partition_file;
    std::string svg;
    ExternalId source = 0;
    ExternalId node = 0;
    std::uint64_t seed = kDefaultLouvainSeed;
    double resolution = 1.0;
    double damping = 0.85;
    double tolerance = 1e-10;
    std::int32_t extract_k = -1;
    int top = 0;  // 0 = all rows
    int threads = 0;
    int precision = 6;
    bool exclude_closed = true;
    bool lenient = false;
    bool list_nodes = false;
};

std::string fmt(const Options& opts, double v) { return format_real(v, opts.precision); }

void emit(const Options& opts, const std::string& content) {
    if (opts.out.empty()) {
        std::fwrite(content.data(), 1, content.size(), stdout);
    } else {
        write_file_atomic(opts.out, content);
    }
}

Graph load_input(const Options& opts) {
    ParseOptions parse_opts;
    parse_opts.lenient = opts.lenient;
    return load_graph(opts.input, parse_opts);
}

NodeId resolve_node(const Graph& g, ExternalId id) {
    auto v = g.ids().to_internal(id);
    if (!v) {
        throw InputError("node " + std::to_string(id) + " is not present in the graph");
    }
    return *v;
}

std::string format_choice(const Options& opts, const std::string& fallback) {
    return opts.format.empty() ? fallback : opts.format;
}

// ---- per-measure score table (degree / closeness / betweenness / pagerank)

struct ScoreRow {
    ExternalId id;
    double raw;
    double normalized;
};

std::vector<ScoreRow> ranked_rows(const Graph& g, const std::vector<double>& raw,
                                  const std::vector<double>& normalized, int top) {
    std::vector<NodeId> order(static_cast<std::size_t>(g.node_count()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        return raw[static_cast<std::size_t>(a)] > raw[static_cast<std::size_t>(b)];
    });
    if (top > 0 && static_cast<std::size_t>(top) < order.size()) {
        order.resize(static_cast<std::size_t>(top));
    }
    std::vector<ScoreRow> rows;
    rows.reserve(order.size());
    for (NodeId v : order) {
        rows.push_back({g.external_id(v), raw[static_cast<std::size_t>(v)],
                        normalized[static_cast<std::size_t>(v)]});
    }
    return rows;
}

std::string score_table(const Options& opts, const Graph& g, const CentralityVector& scores,
                        const std::string& measure_name) {
    auto rows = ranked_rows(g, scores.raw, scores.normalized, opts.top);
    if (format_choice(opts, "csv") == "json") {
        JsonWriter w(opts.precision);
        w.begin_object()
            .field("measure", measure_name)
            .field("direction", to_string(scores.direction));
        if (scores.measure == Measure::Closeness) w.field("variant", to_string(scores.variant));
        w.begin_array("rows");
        for (const auto& row : rows) {
            w.begin_object()
                .field("id", row.id)
                .field("raw", row.raw)
                .field("normalized", row.normalized)
                .end_object();
        }
        w.end_array().end_object();
        return w.str() + "\n";
    }
    CsvBuilder csv;
    csv.row({"external_id", "score_raw", "score_normalized"});
    for (const auto& row : rows) {
        csv.row({std::to_string(row.id), fmt(opts, row.raw), fmt(opts, row.normalized)});
    }
    return csv.str();
}

// ---- subcommand bodies

int cmd_stats(const Options& opts) {
    ParseOptions parse_opts;
    parse_opts.lenient = opts.lenient;
    EdgeList edges = load_edge_list(opts.input, parse_opts);
    Graph g = build_graph(edges, build_id_map(edges));
    NetworkStats stats = network_stats(g);

    std::int64_t loops = 0;
    std::int64_t duplicates = 0;
    std::int64_t malformed = 0;
    for (const auto& w : edges.warnings) {
        if (w.kind == WarningKind::SelfLoopDropped) ++loops;
        if (w.kind == WarningKind::DuplicateDropped) ++duplicates;
        if (w.kind == WarningKind::Malformed) ++malformed;
    }

    if (format_choice(opts, "json") == "json") {
        JsonWriter w(opts.precision);
        w.begin_object()
            .field("n", static_cast<std::int64_t>(stats.n))
            .field("m", stats.m)
            .field("average_degree", stats.average_degree)
            .field("density", stats.density)
            .field("loop_count", stats.loop_count)
            .field("is_simple", stats.is_simple)
            .field("self_loops_dropped", loops)
            .field("duplicates_dropped", duplicates)
            .field("malformed_skipped", malformed)
            .end_object();
        emit(opts, w.str() + "\n");
    } else {
        CsvBuilder csv;
        csv.row({"key", "value"});
        csv.row({"n", std::to_string(stats.n)});
        csv.row({"m", std::to_string(stats.m)});
        csv.row({"average_degree", fmt(opts, stats.average_degree)});
        csv.row({"density", fmt(opts, stats.density)});
        csv.row({"loop_count", std::to_string(stats.loop_count)});
        csv.row({"is_simple", stats.is_simple ? "true" : "false"});
        emit(opts, csv.str());
    }
    return 0;
}

int cmd_degree(const Options& opts) {
    Graph g = load_input(opts);
    auto scores = degree_centrality(g, direction_from_string(opts.mode));
    emit(opts, score_table(opts, g, scores, "degree"));
    return 0;
}

int cmd_closeness(const Options& opts) {
    Graph g = load_input(opts);
    auto scores = closeness_centrality(g, direction_from_string(opts.mode),
                                       closeness_variant_from_string(opts.variant), opts.threads);
    emit(opts, score_table(opts, g, scores, "closeness"));
    return 0;
}

int cmd_betweenness(const Options& opts) {
    Graph g = load_input(opts);
    auto scores = betweenness_centrality(g, opts.threads);
    emit(opts, score_table(opts, g, scores, "betweenness"));
    return 0;
}

int cmd_centralization(const Options& opts) {
    Graph g = load_input(opts);
    CentralityVector scores;
    if (opts.measure == "degree") {
        scores = degree_centrality(g, direction_from_string(opts.mode));
    } else if (opts.measure == "closeness") {
        scores = closeness_centrality(g, direction_from_string(opts.mode),
                                      closeness_variant_from_string(opts.variant), opts.threads);
    } else {
        scores = betweenness_centrality(g, opts.threads);
    }
    const double value = centralization(scores, g);
    if (format_choice(opts, "json") == "json") {
        JsonWriter w(opts.precision);
        w.begin_object()
            .field("measure", opts.measure)
            .field("direction", to_string(scores.direction))
            .field("centralization", value)
            .end_object();
        emit(opts, w.str() + "\n");
    } else {
        CsvBuilder csv;
        csv.row({"measure", "direction", "centralization"});
        csv.row({opts.measure, to_string(scores.direction), fmt(opts, value)});
        emit(opts, csv.str());
    }
    return 0;
}

int cmd_kcore(const Options& opts) {
    Graph g = load_input(opts);
    CorePartition cores = core_decomposition(g, direction_from_string(opts.mode));

    if (opts.extract_k >= 0) {
        Graph core = extract_core(g, cores, opts.extract_k);
        emit(opts, export_edge_list(core));
        return 0;
    }
    if (format_choice(opts, "csv") == "json") {
        Graph max_core = extract_core(g, cores, cores.max_k);
        JsonWriter w(opts.precision);
        w.begin_object()
            .field("mode", to_string(cores.mode))
            .field("max_k", cores.max_k)
            .field("max_core_size", static_cast<std::int64_t>(cores.max_core_members.size()))
            .field("max_core_components", weak_component_count(max_core));
        w.begin_array("max_core_members");
        for (NodeId v : cores.max_core_members) w.value(g.external_id(v));
        w.end_array().end_object();
        emit(opts, w.str() + "\n");
    } else {
        CsvBuilder csv;
        csv.row({"external_id", "coreness"});
        for (NodeId v = 0; v < g.node_count(); ++v) {
            csv.row({std::to_string(g.external_id(v)),
                     std::to_string(cores.coreness[static_cast<std::size_t>(v)])});
        }
        emit(opts, csv.str());
    }
    return 0;
}

int cmd_neighbors(const Options& opts) {
    Graph g = load_input(opts);
    NodeId source = resolve_node(g, opts.source);
    DistancePartition p = k_neighbors(g, source, direction_from_string(opts.mode));

    if (format_choice(opts, "csv") == "json") {
        JsonWriter w(opts.precision);
        w.begin_object()
            .field("source", opts.source)
            .field("direction", to_string(p.direction))
            .field("reachable_count", p.reachable_count)
            .field("reachable_fraction", p.reachable_fraction)
            .field("max_finite_distance", p.max_finite_distance);
        w.begin_array("layers");
        for (std::size_t d = 1; d < p.layers.size(); ++d) {
            w.begin_object()
                .field("distance", static_cast<std::int64_t>(d))
                .field("count", static_cast<std::int64_t>(p.layers[d].size()));
            if (opts.list_nodes) {
                w.begin_array("nodes");
                for (NodeId v : p.layers[d]) w.value(g.external_id(v));
                w.end_array();
            }
            w.end_object();
        }
        w.end_array().end_object();
        emit(opts, w.str() + "\n");
    } else if (opts.list_nodes) {
        CsvBuilder csv;
        csv.row({"distance", "external_id"});
        for (std::size_t d = 1; d < p.layers.size(); ++d) {
            for (NodeId v : p.layers[d]) {
                csv.row({std::to_string(d), std::to_string(g.external_id(v))});
            }
        }
        emit(opts, csv.str());
    } else {
        CsvBuilder csv;
        csv.row({"distance", "count"});
        for (std::size_t d = 1; d < p.layers.size(); ++d) {
            csv.row({std::to_string(d), std::to_string(p.layers[d].size())});
        }
        emit(opts, csv.str());
    }
    return 0;
}

int cmd_domain(const Options& opts) {
    Graph g = load_input(opts);
    NodeId node = resolve_node(g, opts.node);
    InfluenceDomain d = influence_domain(g, node);
    if (format_choice(opts, "json") == "json") {
        JsonWriter w(opts.precision);
        w.begin_object().field("node", opts.node).field("domain_size", d.size);
        w.key("mean_distance");
        if (d.mean_distance) {
            w.value(*d.mean_distance);
        } else {
            w.null_value();
        }
        w.end_object();
        emit(opts, w.str() + "\n");
    } else {
        CsvBuilder csv;
        csv.row({"node", "domain_size", "mean_distance"});
        csv.row({std::to_string(opts.node), std::to_string(d.size),
                 d.mean_distance ? fmt(opts, *d.mean_distance) : ""});
        emit(opts, csv.str());
    }
    return 0;
}

int cmd_diameter(const Options& opts) {
    Graph g = load_input(opts);
    DiameterResult d =
        diameter(g, diameter_interpretation_from_string(opts.interpretation), opts.threads);
    JsonWriter w(opts.precision);
    w.begin_object()
        .field("interpretation", to_string(d.interpretation))
        .field("length", d.length)
        .field("source", g.external_id(d.source))
        .field("target", g.external_id(d.target));
    w.begin_array("path");
    for (NodeId v : d.path) w.value(g.external_id(v));
    w.end_array();
    w.field("mean_finite_distance", d.mean_finite_distance)
        .field("finite_pairs", d.finite_pairs)
        .end_object();
    emit(opts, w.str() + "\n");
    return 0;
}

int cmd_communities(const Options& opts) {
    Graph g = load_input(opts);
    CommunityPartition p = louvain(g, opts.seed, opts.resolution);
    if (format_choice(opts, "csv") == "json") {
        JsonWriter w(opts.precision);
        w.begin_object()
            .field("community_count", p.community_count)
            .field("modularity", p.modularity)
            .field("seed", static_cast<std::int64_t>(p.seed))
            .field("resolution", p.resolution);
        w.begin_array("sizes");
        for (auto s : p.sizes) w.value(s);
        w.end_array().end_object();
        emit(opts, w.str() + "\n");
    } else {
        CsvBuilder csv;
        csv.row({"external_id", "community"});
        for (NodeId v = 0; v < g.node_count(); ++v) {
            csv.row({std::to_string(g.external_id(v)),
                     std::to_string(p.labels[static_cast<std::size_t>(v)])});
        }
        emit(opts, csv.str());
    }
    return 0;
}

int cmd_pagerank(const Options& opts) {
    Graph g = load_input(opts);
    PageRankOptions pr_opts;
    pr_opts.damping = opts.damping;
    pr_opts.tolerance = opts.tolerance;
    ScoreVector r = pagerank(g, pr_opts);
    if (format_choice(opts, "csv") == "json") {
        JsonWriter w(opts.precision);
        w.begin_object()
            .field("damping", r.damping)
            .field("tolerance", opts.tolerance)
            .field("iterations_used", r.iterations_used)
            .field("residual", r.residual)
            .end_object();
        emit(opts, w.str() + "\n");
        return 0;
    }
    auto rows = ranked_rows(g, r.scores, r.scores, opts.top);
    CsvBuilder csv;
    csv.row({"external_id", "pagerank"});
    for (const auto& row : rows) {
        csv.row({std::to_string(row.id), fmt(opts, row.raw)});
    }
    emit(opts, csv.str());
    return 0;
}

std::vector<std::int32_t> load_partition(const Graph& g, const std::string& path) {
    std::ifstream file(path);
    if (!file) throw InputError("cannot open partition file: " + path);
    std::vector<std::int32_t> labels(static_cast<std::size_t>(g.node_count()), -1);
    std::string line;
    std::int64_t line_number = 0;
    while (std::getline(file, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (line_number == 1 && line.rfind("external_id", 0) == 0) continue;  // header
        std::istringstream row(line);
        std::string id_text;
        std::string label_text;
        if (!std::getline(row, id_text, ',') || !std::getline(row, label_text)) {
            throw InputError("malformed partition line " + std::to_string(line_number));
        }
        try {
            const ExternalId id = std::stoll(id_text);
            const auto label = static_cast<std::int32_t>(std::stol(label_text));
            labels[static_cast<std::size_t>(resolve_node(g, id))] = label;
        } catch (const std::logic_error&) {
            throw InputError("malformed partition line " + std::to_string(line_number));
        }
    }
    for (std::size_t v = 0; v < labels.size(); ++v) {
        if (labels[v] < 0) {
            throw InputError("partition is missing node " +
                             std::to_string(g.external_id(static_cast<NodeId>(v))));
        }
    }
    return labels;
}

int cmd_brokerage(const Options& opts) {
    Graph g = load_input(opts);
    std::vector<std::int32_t> partition;
    std::string partition_source;
    if (!opts.partition_file.empty()) {
        partition = load_partition(g, opts.partition_file);
        partition_source = "file";
    } else {
        partition = louvain(g, opts.seed, opts.resolution).labels;
        partition_source = "louvain";
    }
    BrokerageCounts counts = brokerage_census(g, partition, opts.exclude_closed, opts.threads);

    if (format_choice(opts, "csv") == "json") {
        BrokerageSummary summary = brokerage_summary(counts);
        JsonWriter w(opts.precision);
        w.begin_object()
            .field("partition_source", partition_source)
            .field("exclude_closed", counts.exclude_closed)
            .field("persons_with_roles", summary.persons_with_roles)
            .field("persons_without_roles", summary.persons_without_roles);
        w.key("argmax_node");
        if (summary.argmax_node) {
            w.value(g.external_id(*summary.argmax_node));
        } else {
            w.null_value();
        }
        w.field("argmax_total", summary.argmax_total);
        w.key("totals")
            .begin_object()
            .field("coordinator", counts.totals.coordinator)
            .field("gatekeeper", counts.totals.gatekeeper)
            .field("representative", counts.totals.representative)
            .field("itinerant", counts.totals.itinerant)
            .field("liaison", counts.totals.liaison)
            .field("total", counts.totals.total())
            .end_object();
        w.end_object();
        emit(opts, w.str() + "\n");
    } else {
        CsvBuilder csv;
        csv.row({"external_id", "coordinator", "gatekeeper", "representative", "itinerant",
                 "liaison", "total"});
        for (NodeId v = 0; v < g.node_count(); ++v) {
            const auto& c = counts.per_node[static_cast<std::size_t>(v)];
            csv.row({std::to_string(g.external_id(v)), std::to_string(c.coordinator),
                     std::to_string(c.gatekeeper), std::to_string(c.representative),
                     std::to_string(c.itinerant), std::to_string(c.liaison),
                     std::to_string(c.total())});
        }
        emit(opts, csv.str());
    }
    return 0;
}

int cmd_contacts(const Options& opts) {
    Graph g = load_input(opts);
    const int top = opts.top > 0 ? opts.top : 10;
    ContactsReport report = contacts_report(g, top, opts.seed, opts.threads);

    if (format_choice(opts, "csv") == "json") {
        JsonWriter w(opts.precision);
        w.begin_object()
            .field("top_k", report.top_k)
            .field("seed", static_cast<std::int64_t>(report.seed));
        w.begin_array("rows");
        for (const auto& row : report.rows) {
            w.begin_object()
                .field("id", row.id)
                .field("in_degree", row.in_degree)
                .field("out_degree", row.out_degree)
                .field("neighborhood", row.neighborhood)
                .field("closeness", row.closeness)
                .field("betweenness", row.betweenness)
                .field("coreness", row.coreness)
                .field("pagerank", row.pagerank)
                .field("influence_domain", row.influence_domain)
                .field("brokerage_total", row.brokerage_total);
            w.begin_array("ranks");
            for (auto r : row.ranks) w.value(r);
            w.end_array().end_object();
        }
        w.end_array().end_object();
        emit(opts, w.str() + "\n");
        return 0;
    }
    CsvBuilder csv;
    csv.row({"external_id", "in_degree", "out_degree", "neighborhood", "closeness", "betweenness",
             "coreness", "pagerank", "influence_domain", "brokerage_total", "rank_in_degree",
             "rank_out_degree", "rank_neighborhood", "rank_closeness", "rank_betweenness",
             "rank_coreness", "rank_pagerank", "rank_influence_domain", "rank_brokerage_total"});
    for (const auto& row : report.rows) {
        std::vector<std::string> fields{
            std::to_string(row.id),
            std::to_string(row.in_degree),
            std::to_string(row.out_degree),
            std::to_string(row.neighborhood),
            fmt(opts, row.closeness),
            fmt(opts, row.betweenness),
            std::to_string(row.coreness),
            fmt(opts, row.pagerank),
            std::to_string(row.influence_domain),
            std::to_string(row.brokerage_total),
        };
        for (auto r : row.ranks) fields.push_back(std::to_string(r));
        std::string line;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) line += ',';
            line += fields[i];
        }
        csv.raw_row(line);
    }
    emit(opts, csv.str());
    return 0;
}

int cmd_export(const Options& opts) {
    Graph g = load_input(opts);
    emit(opts, export_edge_list(g));
    return 0;
}

int cmd_distribution(const Options& opts) {
    Graph g = load_input(opts);
    DegreeDistribution d = degree_distribution(g, direction_from_string(opts.mode));
    if (!opts.svg.empty()) {
        write_file_atomic(opts.svg, histogram_svg(d.rows, "degree (" + opts.mode + ")", "nodes"));
    }
    if (format_choice(opts, "csv") == "json") {
        JsonWriter w(opts.precision);
        w.begin_object().field("mode", opts.mode);
        w.begin_array("rows");
        for (const auto& [degree, count] : d.rows) {
            w.begin_object().field("degree", degree).field("count", count).end_object();
        }
        w.end_array().end_object();
        emit(opts, w.str() + "\n");
    } else {
        CsvBuilder csv;
        csv.row({"degree", "count"});
        for (const auto& [degree, count] : d.rows) {
            csv.row({std::to_string(degree), std::to_string(count)});
        }
        emit(opts, csv.str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sna: deterministic social-network analysis for directed edge lists"};
    app.require_subcommand(1);

    Options opts;
    int (*handler)(const Options&) = nullptr;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("input", opts.input, "edge-list file (SNAP format)")->required();
        cmd->add_option("--format", opts.format, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", opts.out, "write output to this path (atomic)");
        cmd->add_option("--precision", opts.precision, "significant digits for reals")
            ->check(CLI::Range(1, 17));
        cmd->add_flag("--lenient", opts.lenient, "skip malformed lines instead of failing");
        return cmd;
    };
    // Every subcommand shares one Options struct, so per-command defaults for
    // --mode are applied after parsing, not at registration.
    auto add_mode = [&](CLI::App* cmd, const char* def) {
        cmd->add_option("--mode", opts.mode,
                        std::string("direction: in, out or all (default ") + def + ")")
            ->check(CLI::IsMember({"in", "out", "all"}));
        cmd->parse_complete_callback([&opts, cmd, def_value = std::string(def)] {
            if (cmd->count("--mode") == 0) opts.mode = def_value;
        });
    };
    auto add_threads = [&](CLI::App* cmd) {
        cmd->add_option("--threads", opts.threads, "worker threads (0 = auto)")
            ->check(CLI::Range(0, 1024));
    };

    auto* stats = add_common(app.add_subcommand("stats", "whole-network statistics"));
    stats->callback([&] { handler = cmd_stats; });

    auto* degree = add_common(app.add_subcommand("degree", "degree centrality"));
    add_mode(degree, "in");
    degree->add_option("--top", opts.top, "keep only the K best rows");
    degree->callback([&] { handler = cmd_degree; });

    auto* closeness = add_common(app.add_subcommand("closeness", "closeness centrality"));
    add_mode(closeness, "out");
    closeness->add_option("--variant", opts.variant, "closeness variant")
        ->check(CLI::IsMember({"reachable-corrected", "harmonic"}));
    closeness->add_option("--top", opts.top, "keep only the K best rows");
    add_threads(closeness);
    closeness->callback([&] { handler = cmd_closeness; });

    auto* betweenness = add_common(app.add_subcommand("betweenness", "betweenness centrality"));
    betweenness->add_option("--top", opts.top, "keep only the K best rows");
    add_threads(betweenness);
    betweenness->callback([&] { handler = cmd_betweenness; });

    auto* centralization =
        add_common(app.add_subcommand("centralization", "Freeman network centralization"));
    centralization->add_option("--measure", opts.measure, "degree, closeness or betweenness")
        ->check(CLI::IsMember({"degree", "closeness", "betweenness"}));
    add_mode(centralization, "all");
    centralization->add_option("--variant", opts.variant, "closeness variant")
        ->check(CLI::IsMember({"reachable-corrected", "harmonic"}));
    add_threads(centralization);
    centralization->callback([&] { handler = cmd_centralization; });

    auto* kcore = add_common(app.add_subcommand("kcore", "k-core decomposition"));
    add_mode(kcore, "all");
    kcore->add_option("--extract", opts.extract_k,
                      "write the induced k-core subgraph as an edge list");
    kcore->callback([&] { handler = cmd_kcore; });

    auto* neighbors =
        add_common(app.add_subcommand("neighbors", "k-neighbor distance partition"));
    neighbors->add_option("--source", opts.source, "source node (external id)")->required();
    add_mode(neighbors, "out");
    neighbors->add_flag("--nodes", opts.list_nodes, "list nodes per layer, not just counts");
    neighbors->callback([&] { handler = cmd_neighbors; });

    auto* domain = add_common(app.add_subcommand("domain", "influence domain of a node"));
    domain->add_option("--node", opts.node, "node (external id)")->required();
    domain->callback([&] { handler = cmd_domain; });

    auto* diam = add_common(app.add_subcommand("diameter", "exact diameter with witness path"));
    diam->add_option("--interpretation", opts.interpretation, "directed or undirected")
        ->check(CLI::IsMember({"directed", "undirected"}));
    add_threads(diam);
    diam->callback([&] { handler = cmd_diameter; });

    auto* communities =
        add_common(app.add_subcommand("communities", "Louvain community detection"));
    communities->add_option("--seed", opts.seed, "visit-order seed");
    communities->add_option("--resolution", opts.resolution, "modularity resolution");
    communities->callback([&] { handler = cmd_communities; });

    auto* pr = add_common(app.add_subcommand("pagerank", "PageRank scores"));
    pr->add_option("--damping", opts.damping, "damping factor")
        ->check(CLI::Range(0.0, 1.0));
    pr->add_option("--tol", opts.tolerance, "L1 convergence tolerance");
    pr->add_option("--top", opts.top, "keep only the K best rows");
    pr->callback([&] { handler = cmd_pagerank; });

    auto* brokerage =
        add_common(app.add_subcommand("brokerage", "Gould-Fernandez brokerage census"));
    brokerage->add_option("--seed", opts.seed, "Louvain seed for the default partition");
    brokerage->add_option("--resolution", opts.resolution, "Louvain resolution");
    brokerage->add_option("--partition", opts.partition_file,
                          "use a partition CSV (external_id,community) instead of Louvain");
    brokerage
        ->add_option("--exclude-closed", opts.exclude_closed,
                     "count only open triads (structural holes)")
        ->check(CLI::IsMember({"true", "false", "0", "1"}));
    add_threads(brokerage);
    brokerage->callback([&] { handler = cmd_brokerage; });

    auto* contacts =
        add_common(app.add_subcommand("contacts", "personal vs know-how contacts report"));
    contacts->add_option("--top", opts.top, "per-measure top K (default 10)");
    contacts->add_option("--seed", opts.seed, "Louvain seed");
    add_threads(contacts);
    contacts->callback([&] { handler = cmd_contacts; });

    auto* exp = add_common(app.add_subcommand("export", "canonical edge-list export"));
    exp->callback([&] { handler = cmd_export; });

    auto* distribution =
        add_common(app.add_subcommand("distribution", "degree histogram (plot data)"));
    add_mode(distribution, "out");
    distribution->add_option("--svg", opts.svg, "also render a bar chart to this SVG file");
    distribution->callback([&] { handler = cmd_distribution; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints help, exit 0
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        return handler(opts);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ComputationError& e) {
        std::cerr << "computation error: " << e.what() << "\n";
        return kExitComputation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "computation error: " << e.what() << "\n";
        return kExitComputation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    }
}
