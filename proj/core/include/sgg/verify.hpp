#pragma once
#include <functional>
#include <string>
#include <vector>

#include "sgg/gasket.hpp"

namespace sgg {

struct PropertyResult {
    std::string name;
    bool passed = false;
    std::string detail; // populated on failure (or with a short summary)
};

using GraphFactory = std::function<GasketGraph(int)>;

// Per-module invariant suites. max_level caps the sweep; each property
// clamps further to its own feasibility ceiling (search-backed checks stop
// at level 4/5). The factory lets tests inject tampered graphs.
std::vector<PropertyResult> run_core_suite(int max_level, const GraphFactory& make);
std::vector<PropertyResult> run_cycle_suite(int max_level, const GraphFactory& make);
std::vector<PropertyResult> run_domination_suite(int max_level, const GraphFactory& make);
std::vector<PropertyResult> run_pebbling_suite(int max_level, const GraphFactory& make);

namespace testing {
// Deterministically drops one edge; used to prove that verification
// failures propagate into exit codes.
GasketGraph corrupt_drop_edge(const GasketGraph& g);
} // namespace testing

} // namespace sgg
