#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "headmoves/isomorphism.hpp"
#include "headmoves/network.hpp"

namespace headmoves::testing {

struct T2Fixture {
    Network net;
    NodeId rho, s, t, r, x, y;
};

// The 2-leaf triangle network: rho->s; s->t, s->r; t->r, t->x; r->y.
inline T2Fixture make_t2() {
    Digraph g;
    NodeId rho = g.add_node();
    NodeId s = g.add_node();
    NodeId t = g.add_node();
    NodeId r = g.add_node();
    NodeId x = g.add_node("x");
    NodeId y = g.add_node("y");
    g.add_arc(rho, s);
    g.add_arc(s, t);
    g.add_arc(s, r);
    g.add_arc(t, r);
    g.add_arc(t, x);
    g.add_arc(r, y);
    return {Network::from_digraph(std::move(g)), rho, s, t, r, x, y};
}

// Independent oracle: backtracking search over degree/label-compatible
// bijections, checking adjacency directly against the definition. Kept
// deliberately separate from the canonical-form path.
inline bool brute_force_isomorphic(const Digraph& g1, const Digraph& g2, IsoFlavor flavor) {
    auto n1 = g1.nodes(), n2 = g2.nodes();
    if (n1.size() != n2.size() || g1.arc_count() != g2.arc_count()) return false;
    const bool labeled = flavor == IsoFlavor::Labeled;

    std::map<NodeId, NodeId> fwd, bwd;
    auto compatible = [&](NodeId a, NodeId b) {
        if (g1.indegree(a) != g2.indegree(b) || g1.outdegree(a) != g2.outdegree(b)) return false;
        if (labeled && g1.label(a) != g2.label(b)) return false;
        return true;
    };
    auto consistent = [&](NodeId a, NodeId b) {
        for (NodeId c : g1.children(a))
            if (auto it = fwd.find(c);
                it != fwd.end() && g1.arc_multiplicity(a, c) != g2.arc_multiplicity(b, it->second))
                return false;
        for (NodeId p : g1.parents(a))
            if (auto it = fwd.find(p);
                it != fwd.end() && g1.arc_multiplicity(p, a) != g2.arc_multiplicity(it->second, b))
                return false;
        return true;
    };
    std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
        if (i == n1.size()) return true;
        NodeId a = n1[i];
        for (NodeId b : n2) {
            if (bwd.count(b) || !compatible(a, b)) continue;
            fwd[a] = b;
            bwd[b] = a;
            if (consistent(a, b) && go(i + 1)) return true;
            fwd.erase(a);
            bwd.erase(b);
        }
        return false;
    };
    return go(0);
}

inline Digraph shuffle_ids(const Digraph& g, std::uint64_t seed) {
    auto nodes = g.nodes();
    std::vector<NodeId> perm = nodes;
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    Digraph out;
    std::map<NodeId, NodeId> remap;
    for (NodeId v : perm) remap[v] = out.add_node(g.label(v));
    for (NodeId v : nodes)
        for (NodeId c : g.children(v)) out.add_arc(remap[v], remap[c]);
    return out;
}

}  // namespace headmoves::testing
