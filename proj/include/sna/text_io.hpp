#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "sna/graph.hpp"

namespace sna {

// %g-style formatting with a fixed number of significant digits (default 6)
// so emitted tables are byte-stable across runs.
std::string format_real(double value, int significant_digits = 6);

// Minimal JSON writer with insertion-ordered keys and format_real floats.
class JsonWriter {
public:
    explicit JsonWriter(int significant_digits = 6);

    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array(std::string_view key = {});
    JsonWriter& end_array();
    JsonWriter& key(std::string_view name);
    JsonWriter& value(std::string_view text);
    JsonWriter& value(const char* text);
    JsonWriter& value(double number);
    JsonWriter& value(std::int64_t number);
    JsonWriter& value(std::int32_t number);
    JsonWriter& value(bool flag);
    JsonWriter& null_value();
    // key + value in one call
    template <typename T>
    JsonWriter& field(std::string_view name, T v) {
        key(name);
        return value(v);
    }

    std::string str() const { return out_; }

private:
    void separator();

    std::string out_;
    std::vector<bool> needs_comma_;
    int digits_ = 6;
};

// RFC-4180-safe CSV assembly: LF line endings, fields joined by commas.
// Fields must not themselves contain commas or newlines.
class CsvBuilder {
public:
    CsvBuilder& row(std::initializer_list<std::string_view> fields);
    CsvBuilder& raw_row(std::string_view line);
    std::string str() const { return out_; }

private:
    std::string out_;
};

// Writes via a temporary file in the same directory, then renames, so a
// failed run never leaves a partial file behind. Throws InputError on I/O
// failure.
void write_file_atomic(const std::string& path, std::string_view content);

// SNAP-format edge list of the graph (external ids, tab separated, arcs
// sorted by source then target), re-ingestable by parse_edge_list.
std::string export_edge_list(const Graph& graph);

// Self-contained SVG bar rendering of a (x, count) histogram.
std::string histogram_svg(const std::vector<std::pair<std::int64_t, std::int64_t>>& rows,
                          std::string_view x_label, std::string_view y_label);

}  // namespace sna
