#pragma once
#include <string>

#include "sgg/gasket.hpp"

namespace sgg {

// Edge list: one "i j" line per edge, i < j, sorted.
std::string to_edgelist(const GasketGraph& g);

// Graphviz with fixed 2-D positions (pos="a,b!").
std::string to_dot(const GasketGraph& g);

// {level, side, vertex_count, edge_count, vertices, edges, corners, middles}
std::string to_json(const GasketGraph& g);

// Inverse of to_json; validates structure and coordinate invariants.
GasketGraph from_json(const std::string& text);

} // namespace sgg
