#pragma once
#include <array>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sgg/coord.hpp"

namespace sgg {

using AdjList = std::vector<std::vector<int>>;

inline constexpr int kDefaultMaxLevel = 12; // |V| ~ 265k; memory-bound ceiling

// Closed forms: (3/2)(3^(n-1) + 1) vertices, 3^n edges.
long long vertex_count(int n);
long long edge_count(int n);

// The level-n Sierpinski gasket graph on integer lattice coordinates.
// Corners sit at L=(0,0), R=(side,0), T=(0,side) with side = 2^(n-1).
// Immutable after construction; concurrent reads are safe.
class GasketGraph {
public:
    // Builds from an explicit vertex/edge list (canonical order is imposed
    // here, so callers may pass vertices in any order).
    GasketGraph(int level, std::vector<Coord> coords,
                const std::vector<std::pair<int, int>>& edge_indices);

    int level() const { return level_; }
    int side() const { return side_; }
    int vertex_count() const { return static_cast<int>(coords_.size()); }
    long long edge_count() const { return edge_count_; }

    const std::vector<Coord>& coords() const { return coords_; }
    const Coord& coord(int v) const { return coords_[v]; }
    // -1 when no vertex has that coordinate.
    int index_of(const Coord& c) const;

    const AdjList& adjacency() const { return adj_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    int corner(Corner c) const { return corners_[static_cast<int>(c)]; }
    const std::array<int, 3>& corners() const { return corners_; }         // L, R, T
    // Shared sub-copy corners (s/2,0), (0,s/2), (s/2,s/2); empty at level 1.
    const std::vector<int>& middles() const { return middles_; }

    // Edges as index pairs (i < j), sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const GasketGraph& other) const;

private:
    int level_;
    int side_;
    long long edge_count_ = 0;
    std::vector<Coord> coords_;
    AdjList adj_;
    std::array<int, 3> corners_{};
    std::vector<int> middles_;
    std::unordered_map<Coord, int, CoordHash> index_;
};

// Recursive construction: level 1 is the unit triangle; level n+1 is three
// translated level-n copies sharing corner vertices. Edges come only from
// the copies (lattice adjacency across a removed triangle is NOT an edge).
GasketGraph generate(int n, int max_level = kDefaultMaxLevel);

// Proper 3-coloring c(a,b) = (a + 2b) mod 3.
struct Coloring {
    std::vector<int> assignment; // vertex index -> {0,1,2}
};

Coloring three_coloring(const GasketGraph& g);

// Validator: no edge joins equal colors and all three colors occur.
bool coloring_is_proper(const GasketGraph& g, const Coloring& c);

// One of the three level-(n-1) components together with the translation
// embedding it in the parent.
struct Subcopy {
    GasketGraph graph;
    Coord offset;
};

Subcopy subcopy(const GasketGraph& g, Corner which);

} // namespace sgg
