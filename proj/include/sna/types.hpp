#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sna {

// Dense internal node index, assigned in ascending external-id order.
using NodeId = std::int32_t;
// Node id as it appears in the input file (v-number).
using ExternalId = std::int64_t;

enum class Direction { Out, In, All };

const char* to_string(Direction dir);

// Parses "in" / "out" / "all"; throws std::invalid_argument otherwise.
Direction direction_from_string(const std::string& text);

// Unreadable or malformed input (bad file, bad line, empty edge list).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A computation could not produce a result (non-convergence, undefined
// statistic, empty core request).
class ComputationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace sna
