#include "sgg/serialize.hpp"

#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace sgg {

using ordered_json = nlohmann::ordered_json;

std::string to_edgelist(const GasketGraph& g) {
    std::ostringstream out;
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string to_dot(const GasketGraph& g) {
    std::ostringstream out;
    out << "graph S" << g.level() << " {\n";
    out << "  node [shape=point];\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        const Coord& c = g.coord(v);
        out << "  v" << v << " [pos=\"" << c.a << ',' << c.b << "!\"];\n";
    }
    for (auto [u, v] : g.edges()) out << "  v" << u << " -- v" << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_json(const GasketGraph& g) {
    ordered_json j;
    j["level"] = g.level();
    j["side"] = g.side();
    j["vertex_count"] = g.vertex_count();
    j["edge_count"] = g.edge_count();
    auto& verts = j["vertices"] = ordered_json::array();
    for (const Coord& c : g.coords()) verts.push_back({c.a, c.b});
    auto& edges = j["edges"] = ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["corners"] = {g.corner(Corner::L), g.corner(Corner::R), g.corner(Corner::T)};
    j["middles"] = g.middles();
    return j.dump(2) + "\n";
}

GasketGraph from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    int level = j.at("level").get<int>();

    std::vector<Coord> coords;
    for (const auto& v : j.at("vertices"))
        coords.push_back({v.at(0).get<int>(), v.at(1).get<int>()});

    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());

    GasketGraph g(level, std::move(coords), edges);
    if (j.contains("vertex_count") &&
        j.at("vertex_count").get<long long>() != g.vertex_count())
        throw std::invalid_argument("vertex_count does not match vertex list");
    if (j.contains("edge_count") &&
        j.at("edge_count").get<long long>() != g.edge_count())
        throw std::invalid_argument("edge_count does not match edge list");
    return g;
}

} // namespace sgg
