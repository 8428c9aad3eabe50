#include "headmoves/moves.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <stdexcept>

namespace headmoves {

const char* to_string(MoveKind k) { return k == MoveKind::Head ? "head" : "tail"; }

bool is_tail_movable(const Network& n, Arc a) {
    const Digraph& g = n.graph();
    if (!g.has_arc(a.tail, a.head)) throw std::invalid_argument("is_tail_movable: missing arc");
    NodeId u = a.tail;
    if (n.node_kind(u) != NodeKind::Split) return false;
    NodeId p = n.parent(u);
    NodeId c = n.other_child(u, a.head);
    return !g.has_arc(p, c);
}

bool is_head_movable(const Network& n, Arc a) {
    const Digraph& g = n.graph();
    if (!g.has_arc(a.tail, a.head)) throw std::invalid_argument("is_head_movable: missing arc");
    NodeId v = a.head;
    if (n.node_kind(v) != NodeKind::Reticulation) return false;
    NodeId p = n.other_parent(v, a.tail);
    NodeId c = n.unique_child(v);
    return !g.has_arc(p, c);
}

namespace {

struct RawApply {
    Digraph graph;
    NodeId new_node = kNoNode;
    Arc gap;
};

// Runs the four definition steps; nullopt when a step is structurally
// impossible. The result may be a non-network (validate catches that).
std::optional<RawApply> raw_apply(const Digraph& g0, const Move& m, std::string* why = nullptr) {
    auto fail = [&](const char* reason) {
        if (why) *why = reason;
        return std::nullopt;
    };
    if (m.moving == m.target) return fail("moving arc equals target arc");
    if (!g0.has_arc(m.moving.tail, m.moving.head)) return fail("moving arc not present");
    if (!g0.has_arc(m.target.tail, m.target.head)) return fail("target arc not present");

    RawApply out;
    out.graph = g0;
    Digraph& g = out.graph;
    NodeId moved = m.kind == MoveKind::Head ? m.moving.head : m.moving.tail;
    NodeId anchor = m.kind == MoveKind::Head ? m.moving.tail : m.moving.head;

    g.remove_arc(m.moving.tail, m.moving.head);                       // step 1
    if (g.indegree(moved) != 1 || g.outdegree(moved) != 1)
        return fail(m.kind == MoveKind::Head ? "moving arc head is not a reticulation"
                                             : "moving arc tail is not a split");
    out.new_node = g.subdivide(m.target);                             // step 2
    out.gap = {g.parents(moved)[0], g.children(moved)[0]};
    g.suppress(moved, /*checked=*/false);                             // step 3
    if (m.kind == MoveKind::Head) g.add_arc(anchor, out.new_node);    // step 4
    else g.add_arc(out.new_node, anchor);
    return out;
}

}  // namespace

bool check_valid(const Network& n, const Move& m) {
    auto raw = raw_apply(n.graph(), m);
    if (!raw) return false;
    return validate(raw->graph).empty();
}

bool sufficient_valid(const Network& n, const Move& m) {
    const Digraph& g = n.graph();
    if (m.moving == m.target) return false;
    if (!g.has_arc(m.moving.tail, m.moving.head) || !g.has_arc(m.target.tail, m.target.head)) return false;
    if (m.kind == MoveKind::Tail) {
        return is_tail_movable(n, m.moving) && m.moving.head != m.target.head &&
               !n.above_or_equal(m.moving.head, m.target.tail);
    }
    return is_head_movable(n, m.moving) && m.moving.tail != m.target.tail &&
           !n.above_or_equal(m.target.head, m.moving.tail);
}

ApplyResult apply_move(const Network& n, const Move& m) {
    std::string why;
    auto raw = raw_apply(n.graph(), m, &why);
    if (!raw) throw std::invalid_argument(std::string("invalid move: ") + why);
    auto violations = validate(raw->graph);
    if (!violations.empty()) {
        std::ostringstream msg;
        msg << "invalid " << to_string(m.kind) << " move (" << m.moving.tail << "," << m.moving.head
            << ") to (" << m.target.tail << "," << m.target.head << "):";
        for (const auto& v : violations) msg << " [" << v.rule << "] " << v.detail << ";";
        throw std::invalid_argument(msg.str());
    }
    return {Network::from_digraph(std::move(raw->graph)), raw->new_node, raw->gap};
}

Move inverse(const Network& n, const Move& m, const ApplyResult& applied) {
    (void)n;
    return {m.kind, m.kind == MoveKind::Head ? Arc{m.moving.tail, applied.new_node}
                                             : Arc{applied.new_node, m.moving.head},
            applied.gap};
}

int move_distance(const Network& n, const Move& m) {
    if (!check_valid(n, m)) throw std::invalid_argument("move_distance: invalid move");
    Digraph g = n.graph();
    NodeId moved = m.kind == MoveKind::Head ? m.moving.head : m.moving.tail;
    g.remove_arc(m.moving.tail, m.moving.head);
    NodeId fresh = g.subdivide(m.target);
    int d = g.undirected_distance(moved, fresh);
    if (d < 0) throw std::logic_error("move_distance: endpoints disconnected after step 2");
    return d - 1;
}

std::vector<Move> enumerate_moves(const Network& n, MoveKind kind, std::optional<int> max_distance) {
    const Digraph& g = n.graph();
    auto order = canonical_order(g, IsoFlavor::Labeled);
    std::vector<std::size_t> rank(g.slot_count(), 0);
    for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;

    std::vector<Arc> movers;
    if (kind == MoveKind::Head) {
        for (NodeId r : n.reticulations())
            for (NodeId p : g.parents(r)) movers.push_back({p, r});
    } else {
        for (NodeId v : g.nodes())
            if (n.node_kind(v) == NodeKind::Split)
                for (NodeId c : g.children(v)) movers.push_back({v, c});
    }

    std::vector<Move> out;
    auto arcs = g.arcs();
    for (Arc e : movers)
        for (Arc f : arcs) {
            if (e == f) continue;
            Move m{kind, e, f};
            if (!check_valid(n, m)) continue;
            if (max_distance && move_distance(n, m) > *max_distance) continue;
            out.push_back(m);
        }
    std::sort(out.begin(), out.end(), [&](const Move& a, const Move& b) {
        auto key = [&](const Move& m) {
            return std::array<std::size_t, 4>{rank[m.moving.tail], rank[m.moving.head],
                                              rank[m.target.tail], rank[m.target.head]};
        };
        return key(a) < key(b);
    });
    return out;
}

std::vector<CanonicalForm> neighborhood(const Network& n, MoveKind kind, std::optional<int> max_distance) {
    std::set<CanonicalForm> seen;
    for (const Move& m : enumerate_moves(n, kind, max_distance))
        seen.insert(canonical_form(apply_move(n, m).result.graph(), IsoFlavor::Labeled));
    return {seen.begin(), seen.end()};
}

Network MoveSequence::replay() const {
    Network cur = start;
    for (const Move& m : moves) cur = apply_move(cur, m).result;
    return cur;
}

std::vector<Network> MoveSequence::replay_states() const {
    std::vector<Network> out{start};
    for (const Move& m : moves) out.push_back(apply_move(out.back(), m).result);
    return out;
}

MoveSequence invert_sequence(const MoveSequence& seq) {
    auto states = seq.replay_states();
    Network cur = states.back();
    // Applying an inverse recreates the displaced endpoint under a fresh id,
    // so moves must be translated from reference-state ids to running ids.
    std::unordered_map<NodeId, NodeId> to_cur;
    for (NodeId v : cur.graph().nodes()) to_cur.emplace(v, v);
    std::vector<Move> out;
    out.reserve(seq.moves.size());
    for (std::size_t i = seq.moves.size(); i-- > 0;) {
        auto applied_ref = apply_move(states[i], seq.moves[i]);  // identical to states[i+1]
        Move inv_ref = inverse(states[i], seq.moves[i], applied_ref);
        Move inv_cur = translate_move(inv_ref, to_cur);
        auto applied_cur = apply_move(cur, inv_cur);
        out.push_back(inv_cur);
        NodeId displaced =
            seq.moves[i].kind == MoveKind::Head ? seq.moves[i].moving.head : seq.moves[i].moving.tail;
        to_cur.erase(applied_ref.new_node);
        to_cur[displaced] = applied_cur.new_node;
        cur = std::move(applied_cur.result);
    }
    return {states.back(), std::move(out)};
}

Move translate_move(const Move& m, const std::unordered_map<NodeId, NodeId>& map) {
    auto tr = [&](NodeId v) {
        auto it = map.find(v);
        if (it == map.end()) throw std::invalid_argument("translate_move: node not in isomorphism map");
        return it->second;
    };
    return {m.kind, {tr(m.moving.tail), tr(m.moving.head)}, {tr(m.target.tail), tr(m.target.head)}};
}

}  // namespace headmoves
