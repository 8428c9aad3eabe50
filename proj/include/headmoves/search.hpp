#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "headmoves/moves.hpp"

namespace headmoves {

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SearchLimits {
    std::size_t max_states = 2'000'000;
};

// Exact move distance by bidirectional BFS keyed on labeled canonical forms.
// nullopt when the distance exceeds depth_cap. Throws on mismatched leaf
// sets or tiers, and BudgetError when max_states is hit.
std::optional<int> bfs_distance(const Network& n1, const Network& n2, MoveKind kind,
                                std::optional<int> max_distance, int depth_cap,
                                SearchLimits limits = {});

// Deterministic representative of tier (n_leaves, k) on labels x1..xN.
Network tier_seed(std::size_t n_leaves, std::size_t k);

// Every network of the tier, one per labeled-isomorphism class, sorted by
// canonical form. k>0: closure under head moves from the seed; k=0: direct
// tree enumeration.
std::vector<Network> tier_networks(std::size_t n_leaves, std::size_t k, SearchLimits limits = {});

std::vector<CanonicalForm> tier_enumeration(std::size_t n_leaves, std::size_t k, SearchLimits limits = {});

// Independent generator for the dual-generator cross-check: all labeled
// trees plus k successive reticulation-arc insertions.
std::vector<Network> tier_networks_constructive(std::size_t n_leaves, std::size_t k,
                                                SearchLimits limits = {});

// Connected component sizes (descending) of the tier's move graph,
// restricted to moves of distance <= max_distance when given.
std::vector<std::size_t> move_graph_components(std::size_t n_leaves, std::size_t k, MoveKind kind,
                                               std::optional<int> max_distance, SearchLimits limits = {});

// Max over all-pairs shortest paths. Throws std::runtime_error when the
// move graph is disconnected or empty of moves.
int exact_diameter(std::size_t n_leaves, std::size_t k, MoveKind kind, SearchLimits limits = {});

}  // namespace headmoves
