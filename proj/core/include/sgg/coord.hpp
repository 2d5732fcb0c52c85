#pragma once
#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace sgg {

// Lattice coordinate of a gasket vertex. Valid coordinates of a level-n
// graph satisfy 0 <= a, 0 <= b, a + b <= side where side = 2^(n-1).
struct Coord {
    int a = 0;
    int b = 0;

    friend auto operator<=>(const Coord&, const Coord&) = default;

    Coord operator+(const Coord& o) const { return {a + o.a, b + o.b}; }
};

struct CoordHash {
    std::size_t operator()(const Coord& c) const {
        return std::hash<std::uint64_t>{}(
            (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.a)) << 32) |
            static_cast<std::uint32_t>(c.b));
    }
};

// The three degree-2 vertices: bottom-left, bottom-right, top.
enum class Corner { L = 0, R = 1, T = 2 };

inline const char* corner_name(Corner c) {
    switch (c) {
        case Corner::L: return "L";
        case Corner::R: return "R";
        default: return "T";
    }
}

inline Coord corner_coord(Corner c, int side) {
    switch (c) {
        case Corner::L: return {0, 0};
        case Corner::R: return {side, 0};
        default: return {0, side};
    }
}

// The corner that is neither a nor b.
inline Corner third_corner(Corner a, Corner b) {
    return static_cast<Corner>(3 - static_cast<int>(a) - static_cast<int>(b));
}

// Translation placing the level-(n-1) copy named c inside a level-n graph
// of the given side.
inline Coord subcopy_offset(Corner c, int side) {
    switch (c) {
        case Corner::L: return {0, 0};
        case Corner::R: return {side / 2, 0};
        default: return {0, side / 2};
    }
}

} // namespace sgg
