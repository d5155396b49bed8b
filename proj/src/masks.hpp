#pragma once

// Internal mask primitives for the subset-recursion engines. Two mask types
// share one template implementation: uint64_t for graphs with n <= 64 (the
// enumeration hot path) and WideMask for everything up to the vertex cap.

#include <array>
#include <bit>
#include <cstdint>

#include "wp/bitset.hpp"

namespace wp::detail {

// ---- single word ----

inline void mset(uint64_t& m, int v) { m |= uint64_t{1} << v; }
inline void mclear(uint64_t& m, int v) { m &= ~(uint64_t{1} << v); }
inline bool mtest(uint64_t m, int v) { return (m >> v) & 1u; }
inline uint64_t mand(uint64_t a, uint64_t b) { return a & b; }
inline uint64_t mor(uint64_t a, uint64_t b) { return a | b; }
inline uint64_t mandnot(uint64_t a, uint64_t b) { return a & ~b; }
inline bool mempty(uint64_t a) { return a == 0; }
inline int mpop(uint64_t a) { return std::popcount(a); }
inline int mfirst(uint64_t a) { return std::countr_zero(a); }

template <class F>
void mfor(uint64_t a, F f) {
    while (a) {
        f(std::countr_zero(a));
        a &= a - 1;
    }
}

inline size_t mhash(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return size_t(x ^ (x >> 31));
}

// ---- up to 512 bits ----

struct WideMask {
    std::array<uint64_t, 8> w{};
    bool operator==(const WideMask&) const = default;
};

inline void mset(WideMask& m, int v) { m.w[v >> 6] |= uint64_t{1} << (v & 63); }
inline void mclear(WideMask& m, int v) { m.w[v >> 6] &= ~(uint64_t{1} << (v & 63)); }
inline bool mtest(const WideMask& m, int v) { return (m.w[v >> 6] >> (v & 63)) & 1u; }

inline WideMask mand(const WideMask& a, const WideMask& b) {
    WideMask r;
    for (int i = 0; i < 8; ++i) r.w[i] = a.w[i] & b.w[i];
    return r;
}
inline WideMask mor(const WideMask& a, const WideMask& b) {
    WideMask r;
    for (int i = 0; i < 8; ++i) r.w[i] = a.w[i] | b.w[i];
    return r;
}
inline WideMask mandnot(const WideMask& a, const WideMask& b) {
    WideMask r;
    for (int i = 0; i < 8; ++i) r.w[i] = a.w[i] & ~b.w[i];
    return r;
}
inline bool mempty(const WideMask& a) {
    for (uint64_t w : a.w)
        if (w) return false;
    return true;
}
inline int mpop(const WideMask& a) {
    int c = 0;
    for (uint64_t w : a.w) c += std::popcount(w);
    return c;
}
inline int mfirst(const WideMask& a) {
    for (int i = 0; i < 8; ++i)
        if (a.w[i]) return i * 64 + std::countr_zero(a.w[i]);
    return -1;
}

template <class F>
void mfor(const WideMask& a, F f) {
    for (int i = 0; i < 8; ++i) {
        uint64_t w = a.w[i];
        while (w) {
            f(i * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
}

inline size_t mhash(const WideMask& m) {
    size_t h = 0x811c9dc5u;
    for (uint64_t w : m.w) h = (h ^ mhash(w)) * 0x100000001b3ull;
    return h;
}

template <class M>
struct MaskHash {
    size_t operator()(const M& m) const { return mhash(m); }
};

template <class M>
M mask_of(const VertexSet& s) {
    M m{};
    s.for_each([&](int v) { mset(m, v); });
    return m;
}

template <class M>
VertexSet vertex_set_of(const M& m, int universe) {
    VertexSet s(universe);
    mfor(m, [&](int v) { s.set(v); });
    return s;
}

}  // namespace wp::detail
