#include "sna/text_io.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

namespace sna {

std::string format_real(double value, int significant_digits) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*g", significant_digits, value);
    return buffer;
}

JsonWriter::JsonWriter(int significant_digits) : digits_(significant_digits) {}

void JsonWriter::separator() {
    if (!needs_comma_.empty()) {
        if (needs_comma_.back()) out_ += ',';
        needs_comma_.back() = true;
    }
}

JsonWriter& JsonWriter::begin_object() {
    separator();
    out_ += '{';
    needs_comma_.push_back(false);
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    out_ += '}';
    needs_comma_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::begin_array(std::string_view key_name) {
    if (!key_name.empty()) key(key_name);
    separator();
    out_ += '[';
    needs_comma_.push_back(false);
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    out_ += ']';
    needs_comma_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::key(std::string_view name) {
    separator();
    out_ += '"';
    out_ += name;
    out_ += "\":";
    needs_comma_.back() = false;  // the value completes this entry
    return *this;
}

JsonWriter& JsonWriter::value(std::string_view text) {
    separator();
    out_ += '"';
    for (char c : text) {
        switch (c) {
            case '"': out_ += "\\\""; break;
            case '\\': out_ += "\\\\"; break;
            case '\n': out_ += "\\n"; break;
            case '\t': out_ += "\\t"; break;
            case '\r': out_ += "\\r"; break;
            default: out_ += c;
        }
    }
    out_ += '"';
    return *this;
}

JsonWriter& JsonWriter::value(const char* text) { return value(std::string_view(text)); }

JsonWriter& JsonWriter::value(double number) {
    separator();
    out_ += format_real(number, digits_);
    return *this;
}

JsonWriter& JsonWriter::value(std::int64_t number) {
    separator();
    out_ += std::to_string(number);
    return *this;
}

JsonWriter& JsonWriter::value(std::int32_t number) {
    return value(static_cast<std::int64_t>(number));
}

JsonWriter& JsonWriter::value(bool flag) {
    separator();
    out_ += flag ? "true" : "false";
    return *this;
}

JsonWriter& JsonWriter::null_value() {
    separator();
    out_ += "null";
    return *this;
}

CsvBuilder& CsvBuilder::row(std::initializer_list<std::string_view> fields) {
    bool first = true;
    for (auto field : fields) {
        if (!first) out_ += ',';
        out_ += field;
        first = false;
    }
    out_ += '\n';
    return *this;
}

CsvBuilder& CsvBuilder::raw_row(std::string_view line) {
    out_ += line;
    out_ += '\n';
    return *this;
}

void write_file_atomic(const std::string& path, std::string_view content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path dir = target.parent_path();
    if (dir.empty()) dir = ".";

    std::random_device rd;
    fs::path temp = dir / (target.filename().string() + ".tmp." + std::to_string(rd()));
    {
        std::ofstream out(temp, std::ios::binary);
        if (!out) {
            throw InputError("cannot open output file: " + temp.string());
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) {
            std::error_code ec;
            fs::remove(temp, ec);
            throw InputError("failed while writing: " + temp.string());
        }
    }
    std::error_code ec;
    fs::rename(temp, target, ec);
    if (ec) {
        fs::remove(temp, ec);
        throw InputError("cannot move output into place: " + path);
    }
}

std::string export_edge_list(const Graph& graph) {
    std::string out;
    out += "# Directed graph: exported edge list\n";
    out += "# Nodes: " + std::to_string(graph.node_count()) +
           " Arcs: " + std::to_string(graph.arc_count()) + "\n";
    out += "# FromNodeId\tToNodeId\n";
    for (NodeId v = 0; v < graph.node_count(); ++v) {
        for (NodeId w : graph.out_neighbors(v)) {
            out += std::to_string(graph.external_id(v));
            out += '\t';
            out += std::to_string(graph.external_id(w));
            out += '\n';
        }
    }
    return out;
}

std::string histogram_svg(const std::vector<std::pair<std::int64_t, std::int64_t>>& rows,
                          std::string_view x_label, std::string_view y_label) {
    const int width = 640;
    const int height = 400;
    const int margin = 48;
    std::int64_t max_x = 1;
    std::int64_t max_y = 1;
    for (const auto& [x, y] : rows) {
        max_x = std::max(max_x, x);
        max_y = std::max(max_y, y);
    }
    const double sx = static_cast<double>(width - 2 * margin) / static_cast<double>(max_x + 1);
    const double sy = static_cast<double>(height - 2 * margin) / static_cast<double>(max_y);

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes
    svg += "<line x1=\"" + std::to_string(margin) + "\" y1=\"" + std::to_string(height - margin) +
           "\" x2=\"" + std::to_string(width - margin) + "\" y2=\"" +
           std::to_string(height - margin) + "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + std::to_string(margin) + "\" y1=\"" + std::to_string(margin) +
           "\" x2=\"" + std::to_string(margin) + "\" y2=\"" + std::to_string(height - margin) +
           "\" stroke=\"black\"/>\n";
    for (const auto& [x, y] : rows) {
        const double px = margin + static_cast<double>(x) * sx;
        const double bar = static_cast<double>(y) * sy;
        svg += "<rect x=\"" + format_real(px, 6) + "\" y=\"" +
               format_real(height - margin - bar, 6) + "\" width=\"" +
               format_real(std::max(sx, 1.0), 6) + "\" height=\"" + format_real(bar, 6) +
               "\" fill=\"steelblue\"/>\n";
    }
    svg += "<text x=\"" + std::to_string(width / 2) + "\" y=\"" + std::to_string(height - 12) +
           "\" text-anchor=\"middle\" font-size=\"12\">" + std::string(x_label) + "</text>\n";
    svg += "<text x=\"16\" y=\"" + std::to_string(height / 2) +
           "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 16 " +
           std::to_string(height / 2) + ")\">" + std::string(y_label) + "</text>\n";
    svg += "<text x=\"" + std::to_string(width / 2) + "\" y=\"24\" text-anchor=\"middle\" "
           "font-size=\"13\">max " + std::to_string(max_y) + " nodes, max value " +
           std::to_string(max_x) + "</text>\n";
    svg += "</svg>\n";
    return svg;
}

}  // namespace sna
