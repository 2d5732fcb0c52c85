#pragma once
#include "sgg/certificate.hpp"
#include "sgg/gasket.hpp"

namespace sgg {

// Hamiltonian path between two distinct corners.
Path ham_path(const GasketGraph& g, Corner from, Corner to);

// Path visiting every vertex except the third corner exactly once.
Path ham_path_avoid(const GasketGraph& g, Corner from, Corner to);

// Hamiltonian cycle (all |V| vertices).
Cycle ham_cycle(const GasketGraph& g);

// Simple corner-to-corner path of exactly len edges. Feasible range is
// [side, |V|-1]; the minimum is the straight run along the outer side.
Path path_of_length(const GasketGraph& g, Corner from, Corner to, long long len);

// As path_of_length but never touching the third corner; feasible range
// [side, |V|-2].
Path path_of_length_avoid(const GasketGraph& g, Corner from, Corner to, long long len);

// Simple cycle of exactly len edges, any len in [3, |V|].
Cycle cycle_of_length(const GasketGraph& g, long long len);

} // namespace sgg
