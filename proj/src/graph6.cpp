#include "wp/graph6.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace wp {

namespace {

int payload_bytes(long n) { return int((n * (n - 1) / 2 + 5) / 6); }

int decode_byte(std::string_view text, size_t offset) {
    unsigned char c = static_cast<unsigned char>(text[offset]);
    if (c < 63 || c > 126)
        throw ParseError("graph6 byte out of range [63,126] at offset " + std::to_string(offset), offset);
    return c - 63;
}

}  // namespace

Graph from_graph6(std::string_view text) {
    if (text.empty()) throw ParseError("empty graph6 record", 0);

    long n;
    size_t pos;
    if (text[0] != '~') {
        n = decode_byte(text, 0);
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == '~')
            throw ParseError("graph6 8-byte length form exceeds the vertex cap", 1);
        if (text.size() < 4) throw ParseError("truncated graph6 long length field", text.size());
        n = 0;
        for (size_t i = 1; i <= 3; ++i) n = (n << 6) | decode_byte(text, i);
        if (n <= 62)
            throw ParseError("graph6 long length field used for n <= 62", 0);
        pos = 4;
    }
    if (n > Graph::kMaxVertices)
        throw ParseError("graph order " + std::to_string(n) + " exceeds the vertex cap", 0);

    const int bytes = payload_bytes(n);
    if (text.size() < pos + bytes)
        throw ParseError("truncated graph6 payload (expected " + std::to_string(bytes) + " bytes)",
                         text.size());
    if (text.size() > pos + bytes)
        throw ParseError("unexpected trailing data at offset " + std::to_string(pos + bytes),
                         pos + bytes);

    Graph g(int(n));
    long bit = 0;
    const long total_bits = n * (n - 1) / 2;
    for (int b = 0; b < bytes; ++b) {
        int value = decode_byte(text, pos + b);
        for (int k = 5; k >= 0; --k, ++bit) {
            int set = (value >> k) & 1;
            if (bit >= total_bits) {
                if (set)
                    throw ParseError("nonzero padding bit at offset " + std::to_string(pos + b),
                                     pos + b);
                continue;
            }
            if (set) {
                // bit index -> column-major upper triangle position
                long j = 1;
                long before = 0;
                while (before + j <= bit) before += j, ++j;
                long i = bit - before;
                g.add_edge(int(i), int(j));
            }
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    const long n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else {
        out.push_back('~');
        out.push_back(char(((n >> 12) & 63) + 63));
        out.push_back(char(((n >> 6) & 63) + 63));
        out.push_back(char((n & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(char(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(char((acc << (6 - nbits)) + 63));
    return out;
}

Graph from_edge_list(std::string_view text) {
    std::vector<long> nums;
    size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        long value;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
        if (ec != std::errc())
            throw ParseError("edge list: expected an integer at offset " + std::to_string(i), i);
        nums.push_back(value);
        i = size_t(ptr - text.data());
    }
    if (nums.size() < 2) throw ParseError("edge list: missing 'n m' header", 0);
    const long n = nums[0], m = nums[1];
    if (n < 0 || n > Graph::kMaxVertices)
        throw ParseError("edge list: graph order out of range", 0);
    if (m < 0 || nums.size() != size_t(2 + 2 * m))
        throw ParseError("edge list: expected exactly " + std::to_string(m) + " edges", 0);
    Graph g(int(n));
    for (long e = 0; e < m; ++e) {
        long u = nums[2 + 2 * e], v = nums[3 + 2 * e];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge list: vertex out of range in edge " + std::to_string(e), 0);
        if (u == v) throw ParseError("edge list: loop in edge " + std::to_string(e), 0);
        if (g.has_edge(int(u), int(v)))
            throw ParseError("edge list: duplicate edge " + std::to_string(e), 0);
        g.add_edge(int(u), int(v));
    }
    return g;
}

}  // namespace wp
