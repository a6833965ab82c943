#include "sna/types.hpp"

namespace sna {

const char* to_string(Direction dir) {
    switch (dir) {
        case Direction::Out: return "out";
        case Direction::In: return "in";
        case Direction::All: return "all";
    }
    return "?";
}

Direction direction_from_string(const std::string& text) {
    if (text == "out") return Direction::Out;
    if (text == "in") return Direction::In;
    if (text == "all") return Direction::All;
    throw std::invalid_argument("unknown direction: " + text);
}

}  // namespace sna
