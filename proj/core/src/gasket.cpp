#include "sgg/gasket.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "sgg/errors.hpp"

namespace sgg {

long long vertex_count(int n) {
    if (n < 1) throw std::invalid_argument("level must be >= 1");
    long long p = 1;
    for (int i = 1; i < n; ++i) p *= 3;
    return 3 * (p + 1) / 2;
}

long long edge_count(int n) {
    if (n < 1) throw std::invalid_argument("level must be >= 1");
    long long p = 1;
    for (int i = 0; i < n; ++i) p *= 3;
    return p;
}

GasketGraph::GasketGraph(int level, std::vector<Coord> coords,
                         const std::vector<std::pair<int, int>>& edge_indices)
    : level_(level), side_(1 << (level - 1)) {
    if (level < 1) throw std::invalid_argument("level must be >= 1");

    for (const Coord& c : coords) {
        if (c.a < 0 || c.b < 0 || c.a + c.b > side_)
            throw std::invalid_argument("coordinate outside the level-" +
                                        std::to_string(level) + " triangle");
    }

    // Impose the canonical order (b descending, a ascending) and remap edges.
    std::vector<int> order(coords.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (coords[x].b != coords[y].b) return coords[x].b > coords[y].b;
        return coords[x].a < coords[y].a;
    });
    std::vector<int> rank(coords.size());
    coords_.resize(coords.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        rank[order[pos]] = static_cast<int>(pos);
        coords_[pos] = coords[order[pos]];
    }

    index_.reserve(coords_.size() * 2);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (!index_.emplace(coords_[i], static_cast<int>(i)).second)
            throw std::invalid_argument("duplicate vertex coordinate");
    }

    adj_.assign(coords_.size(), {});
    for (auto [u, v] : edge_indices) {
        if (u < 0 || v < 0 || u >= static_cast<int>(coords.size()) ||
            v >= static_cast<int>(coords.size()) || u == v)
            throw std::invalid_argument("bad edge index");
        adj_[rank[u]].push_back(rank[v]);
        adj_[rank[v]].push_back(rank[u]);
    }
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw std::invalid_argument("duplicate edge");
        edge_count_ += static_cast<long long>(nb.size());
    }
    edge_count_ /= 2;

    for (Corner c : {Corner::L, Corner::R, Corner::T}) {
        int idx = index_of(corner_coord(c, side_));
        if (idx < 0) throw std::invalid_argument("missing corner vertex");
        corners_[static_cast<int>(c)] = idx;
    }
    if (level_ >= 2) {
        int h = side_ / 2;
        for (Coord m : {Coord{h, 0}, Coord{0, h}, Coord{h, h}}) {
            int idx = index_of(m);
            if (idx < 0) throw std::invalid_argument("missing middle vertex");
            middles_.push_back(idx);
        }
    }
}

int GasketGraph::index_of(const Coord& c) const {
    auto it = index_.find(c);
    return it == index_.end() ? -1 : it->second;
}

bool GasketGraph::has_edge(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> GasketGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool GasketGraph::operator==(const GasketGraph& other) const {
    return level_ == other.level_ && side_ == other.side_ &&
           coords_ == other.coords_ && adj_ == other.adj_;
}

GasketGraph generate(int n, int max_level) {
    if (n < 1 || n > max_level)
        throw size_limit_error("level " + std::to_string(n) +
                               " outside the allowed range [1, " +
                               std::to_string(max_level) + "]");

    std::vector<std::pair<Coord, Coord>> edges = {
        {{0, 0}, {1, 0}}, {{0, 0}, {0, 1}}, {{1, 0}, {0, 1}}};
    for (int k = 2; k <= n; ++k) {
        int h = 1 << (k - 2); // side of the level-(k-1) copies
        std::vector<std::pair<Coord, Coord>> next;
        next.reserve(edges.size() * 3);
        for (Coord off : {Coord{0, 0}, Coord{h, 0}, Coord{0, h}})
            for (const auto& [u, v] : edges)
                next.emplace_back(u + off, v + off);
        edges = std::move(next);
    }

    // Copies share corner vertices but never edges, so only vertices need
    // deduplication.
    std::unordered_map<Coord, int, CoordHash> seen;
    std::vector<Coord> coords;
    auto vertex_id = [&](const Coord& c) {
        auto [it, inserted] = seen.emplace(c, static_cast<int>(coords.size()));
        if (inserted) coords.push_back(c);
        return it->second;
    };
    std::vector<std::pair<int, int>> edge_indices;
    edge_indices.reserve(edges.size());
    for (const auto& [u, v] : edges)
        edge_indices.emplace_back(vertex_id(u), vertex_id(v));

    return GasketGraph(n, std::move(coords), edge_indices);
}

Coloring three_coloring(const GasketGraph& g) {
    Coloring c;
    c.assignment.reserve(g.vertex_count());
    for (const Coord& p : g.coords())
        c.assignment.push_back((p.a + 2 * p.b) % 3);
    return c;
}

bool coloring_is_proper(const GasketGraph& g, const Coloring& c) {
    if (static_cast<int>(c.assignment.size()) != g.vertex_count()) return false;
    bool used[3] = {false, false, false};
    for (int col : c.assignment) {
        if (col < 0 || col > 2) return false;
        used[col] = true;
    }
    if (!used[0] || !used[1] || !used[2]) return false;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (c.assignment[u] == c.assignment[v]) return false;
    return true;
}

Subcopy subcopy(const GasketGraph& g, Corner which) {
    if (g.level() < 2)
        throw std::invalid_argument("a level-1 gasket has no sub-copies");
    return Subcopy{generate(g.level() - 1), subcopy_offset(which, g.side())};
}

} // namespace sgg
