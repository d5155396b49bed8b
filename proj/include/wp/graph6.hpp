#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "wp/graph.hpp"

namespace wp {

class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, size_t offset)
        : std::runtime_error(std::move(message)), offset_(offset) {}
    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

// graph6 codec. One record encodes one graph: a length field (n+63 for
// n <= 62, otherwise '~' plus three bytes of 18-bit big-endian n, 6 bits
// per byte offset by 63), followed by ceil(n(n-1)/2 / 6) payload bytes in
// [63,126] holding the upper triangle a(0,1), a(0,2), a(1,2), a(0,3), ...
// column by column, most significant bit first, padded with zero bits.
Graph from_graph6(std::string_view text);

// Canonical bytes: shortest legal length field, zero padding.
std::string to_graph6(const Graph& g);

// Plain text fixture format: "n m" followed by m lines "u v" (0-based).
Graph from_edge_list(std::string_view text);

}  // namespace wp
