#pragma once
#include <gmpxx.h>

#include <vector>

#include "sgg/gasket.hpp"

namespace sgg {

// Which vertices have to be covered by a dominating set.
enum class DominationTarget {
    all_vertices, // the whole graph
    interior      // everything except the three corners
};

struct DominatingSet {
    std::vector<int> members;  // chosen vertices (count toward the size)
    std::vector<int> helpers;  // assisting corner vertices (do not count)
    DominationTarget target = DominationTarget::all_vertices;

    int size() const { return static_cast<int>(members.size()); }
};

// Every target vertex is a member, adjacent to a member, or equal/adjacent
// to a helper.
bool is_dominating(const GasketGraph& g, const DominatingSet& d);

// Exact minimum dominating set by branch and bound: branch on the
// lowest-index undominated vertex over its closed neighborhood; bound by
// max(ceil(undominated/5), greedy 2-packing). Level <= 5.
DominatingSet min_dominating_set(const GasketGraph& g);

// Minimum set dominating the interior (all vertices minus the three
// corners) with the given corner vertices assisting for free. Level <= 4.
DominatingSet min_interior_dominating_set(const GasketGraph& g,
                                          const std::vector<Corner>& helpers);

// Common value of min_interior_dominating_set over all helper subsets of
// size k; throws std::logic_error if the symmetry assertion fails.
int gamma_k(const GasketGraph& g, int k);

// 1, 2 for n = 1, 2 and 3^(n-2) for n >= 3.
long long gamma_closed_form(int n);

// |V_n| / (5 * gamma_n) as an exact rational; n >= 3.
mpq_class efficiency(int n);

} // namespace sgg
