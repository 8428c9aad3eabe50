#pragma once

#include <optional>
#include <string>
#include <vector>

#include "headmoves/isomorphism.hpp"
#include "headmoves/network.hpp"

namespace headmoves {

enum class MoveKind { Head, Tail };

const char* to_string(MoveKind k);

struct Move {
    MoveKind kind = MoveKind::Head;
    Arc moving;  // (u,v): the arc whose head (resp. tail) is relocated
    Arc target;  // (s,t): the arc receiving the new endpoint

    friend auto operator<=>(const Move&, const Move&) = default;
};

// Definition-7/8 movability: detaching the endpoint creates no parallel arc.
bool is_tail_movable(const Network& n, Arc a);
bool is_head_movable(const Network& n, Arc a);

// Exact validity: replay the four definition steps on a scratch copy and
// accept iff the result validates. This is authoritative.
bool check_valid(const Network& n, const Move& m);

// The Lemma 2/3 sufficient condition (movability, endpoint inequality,
// no-cycle ancestry). Implies check_valid; not necessary.
bool sufficient_valid(const Network& n, const Move& m);

struct ApplyResult {
    Network result;
    NodeId new_node = kNoNode;  // the subdivision node carrying the moved endpoint
    Arc gap;                    // arc created by suppressing the old endpoint
};

// Applies a valid move; throws std::invalid_argument naming the failed
// condition otherwise.
ApplyResult apply_move(const Network& n, const Move& m);

// A move on `result` whose application is labeled-isomorphic to n.
Move inverse(const Network& n, const Move& m, const ApplyResult& applied);

// Minimal d such that m is a distance-d move: undirected distance between
// the displaced endpoint and the subdivision node after step 2, minus 1.
int move_distance(const Network& n, const Move& m);

// All exactly-valid moves of the given kind, optionally distance-bounded,
// in deterministic order (canonical node ranks).
std::vector<Move> enumerate_moves(const Network& n, MoveKind kind,
                                  std::optional<int> max_distance = std::nullopt);

// Canonical forms of apply results, deduplicated, sorted.
std::vector<CanonicalForm> neighborhood(const Network& n, MoveKind kind,
                                        std::optional<int> max_distance = std::nullopt);

struct MoveSequence {
    Network start;
    std::vector<Move> moves;  // ids refer to the running network after prior moves

    // Replays every move with exact validity; throws on any invalid step.
    Network replay() const;
    std::vector<Network> replay_states() const;  // start, after move 1, ...
    std::size_t size() const { return moves.size(); }
};

// The reversed sequence: starts at seq.replay(), ends labeled-isomorphic to
// seq.start.
MoveSequence invert_sequence(const MoveSequence& seq);

// Rewrites node ids of a move through an isomorphism map.
Move translate_move(const Move& m, const std::unordered_map<NodeId, NodeId>& map);

}  // namespace headmoves
