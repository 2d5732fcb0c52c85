#pragma once
#include <gmpxx.h>

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sgg/gasket.hpp"

namespace sgg {

// BFS census from one source. st = sum over u of 2^dist(u, source); this
// grows past 64 bits from level 7 on, hence the big integer.
struct DistanceProfile {
    int source = 0;
    std::vector<int> dist;       // vertex -> distance
    std::vector<long long> beta; // beta[i] = number of vertices at distance i
    mpz_class st;
};

DistanceProfile distances(const AdjList& adj, int source);

// Exact diameter by a BFS sweep over every vertex.
int diameter(const AdjList& adj);

// max over v of st(v). Sweeps every vertex up to level 9 and asserts the
// corners attain the maximum; above that only the (provably maximal,
// mutually equal) corner values are evaluated.
mpz_class cover_pebbling_number(const GasketGraph& g);

// lambda(1) = 5; lambda(n+1) = (1 + 2^(2^(n-1)+1)) * lambda(n)
//                              - (2^(2^n) + 2^(2^(n-1)+1)).
mpz_class lambda_recursive(int n);

// Corner-census identities for a level-n graph (n >= 2), h = 2^(n-2):
//   beta(j + h) = 2 beta(j)    for 1 <= j <= h-1
//   beta(2h)    = 2 beta(h) - 1
struct CensusReport {
    std::vector<long long> beta;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

CensusReport beta_census_check(const GasketGraph& g, Corner corner = Corner::L);

// ---------------------------------------------------------------------------
// Pebbling simulator
// ---------------------------------------------------------------------------

struct PebbleConfiguration {
    std::vector<int> counts;
    long long weight = 0; // always the sum of counts

    static PebbleConfiguration zero(int n_vertices);
    // All t pebbles stacked on a single vertex.
    static PebbleConfiguration stack(int n_vertices, int vertex, long long t);
};

struct PebbleMove {
    int from = 0;
    int to = 0;
};

// Remove two pebbles at `from`, add one at `to` (must be adjacent).
PebbleConfiguration apply_move(const AdjList& adj, const PebbleConfiguration& c,
                               int from, int to);

struct SearchBudget {
    long long max_weight = 64;
    std::size_t max_states = 5'000'000;
};

// Memoized exhaustive searches over configurations. Each move lowers the
// weight by one, so the state graph is acyclic and the memo table is sound
// to share across queries on the same graph.
class ReachabilitySolver {
public:
    ReachabilitySolver(const AdjList& adj, int target, SearchBudget budget = {});

    bool reachable(const PebbleConfiguration& c);
    // A legal move sequence ending with a pebble on the target, if any.
    std::optional<std::vector<PebbleMove>> witness(const PebbleConfiguration& c);

    std::size_t states_visited() const { return memo_.size(); }

private:
    bool search(std::vector<int>& counts, long long weight);
    bool potential_ok(const std::vector<int>& counts) const;

    const AdjList& adj_;
    int target_;
    SearchBudget budget_;
    std::vector<int> dist_; // distances to target, for the weight-function prune
    int max_dist_ = 0;
    std::unordered_map<std::string, bool> memo_;
};

class CoverSolver {
public:
    explicit CoverSolver(const AdjList& adj, SearchBudget budget = {});

    bool solvable(const PebbleConfiguration& c);
    // Moves reaching a configuration with a pebble on every vertex, if any.
    std::optional<std::vector<PebbleMove>> witness(const PebbleConfiguration& c);

    std::size_t states_visited() const { return memo_.size(); }

private:
    bool search(std::vector<int>& counts, long long weight);

    const AdjList& adj_;
    SearchBudget budget_;
    std::unordered_map<std::string, bool> memo_;
};

bool is_reachable(const AdjList& adj, const PebbleConfiguration& c, int target,
                  SearchBudget budget = {});
bool is_cover_solvable(const AdjList& adj, const PebbleConfiguration& c,
                       SearchBudget budget = {});

// Smallest t such that every configuration of weight t reaches every vertex;
// exhaustive over all weight-t configurations. Graphs of at most 6 vertices.
int pebbling_number_search(const AdjList& adj, SearchBudget budget = {});

// Tiny oracle graphs.
AdjList path_graph(int n);
AdjList complete_graph(int n);

} // namespace sgg
