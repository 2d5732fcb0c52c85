#pragma once
#include <vector>

#include "sgg/gasket.hpp"

namespace sgg {

// A walk certificate: consecutive vertices adjacent, all vertices distinct.
struct Path {
    std::vector<int> vertices;
    int length() const { return static_cast<int>(vertices.size()) - 1; } // edges
};

// Closing edge implicit (last vertex adjacent to first).
struct Cycle {
    std::vector<int> vertices;
    int length() const { return static_cast<int>(vertices.size()); }
};

// Independent validators; every constructor re-checks through these before
// returning a certificate.
bool is_simple_path(const GasketGraph& g, const Path& p);
bool is_simple_cycle(const GasketGraph& g, const Cycle& c);

} // namespace sgg
