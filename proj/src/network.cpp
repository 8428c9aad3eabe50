#include "headmoves/network.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "headmoves/isomorphism.hpp"

namespace headmoves {

const char* to_string(NodeKind k) {
    switch (k) {
        case NodeKind::Root: return "root";
        case NodeKind::Leaf: return "leaf";
        case NodeKind::Split: return "split";
        case NodeKind::Reticulation: return "reticulation";
    }
    return "?";
}

std::vector<Violation> validate(const Digraph& g) {
    std::vector<Violation> out;
    auto add = [&](std::string rule, std::string detail) {
        out.push_back({std::move(rule), std::move(detail)});
    };

    std::size_t roots = 0, leaves = 0;
    for (NodeId v : g.nodes()) {
        std::size_t in = g.indegree(v), outd = g.outdegree(v);
        if (in == 0 && outd == 1) {
            ++roots;
        } else if (in == 1 && outd == 0) {
            ++leaves;
            if (!g.is_labeled(v)) add("unlabeled-leaf", "leaf node " + std::to_string(v) + " has no label");
        } else if (in == 1 && outd == 2) {
            // split
        } else if (in == 2 && outd == 1) {
            // reticulation
        } else {
            add("node-degree", "node " + std::to_string(v) + " has indegree " + std::to_string(in) +
                                   ", outdegree " + std::to_string(outd));
        }
        if (g.is_labeled(v) && !(in == 1 && outd == 0))
            add("labeled-internal", "non-leaf node " + std::to_string(v) + " carries label '" + g.label(v) + "'");
        for (NodeId c : g.children(v)) {
            if (c == v) add("self-loop", "arc (" + std::to_string(v) + "," + std::to_string(v) + ")");
        }
        std::vector<NodeId> cs = g.children(v);
        std::sort(cs.begin(), cs.end());
        for (std::size_t i = 1; i < cs.size(); ++i)
            if (cs[i] == cs[i - 1] && cs[i] != v)
                add("parallel-arc", "arc (" + std::to_string(v) + "," + std::to_string(cs[i]) + ") repeated");
    }
    if (roots != 1) add("root-count", "found " + std::to_string(roots) + " root nodes, need exactly 1");
    if (leaves < 2) add("min-leaves", "fewer than 2 leaves (" + std::to_string(leaves) + ")");

    std::map<std::string, int> seen;
    for (NodeId v : g.nodes())
        if (g.is_labeled(v)) ++seen[g.label(v)];
    for (const auto& [label, count] : seen)
        if (count > 1) add("label-bijection", "label '" + label + "' used " + std::to_string(count) + " times");

    if (!g.is_acyclic()) add("cycle", "digraph contains a directed cycle");
    return out;
}

Network Network::from_digraph(Digraph g) {
    auto violations = validate(g);
    if (!violations.empty()) {
        std::ostringstream msg;
        msg << "not a valid network:";
        for (const auto& v : violations) msg << " [" << v.rule << "] " << v.detail << ";";
        throw std::invalid_argument(msg.str());
    }
    Network n;
    n.g_ = std::move(g);
    for (NodeId v : n.g_.nodes()) {
        if (n.g_.indegree(v) == 0) n.root_ = v;
        else if (n.g_.outdegree(v) == 0) n.leaves_.push_back(v);
        else if (n.g_.indegree(v) == 2) n.retics_.push_back(v);
    }
    std::sort(n.leaves_.begin(), n.leaves_.end(),
              [&](NodeId a, NodeId b) { return n.g_.label(a) < n.g_.label(b); });
    return n;
}

NodeKind Network::node_kind(NodeId v) const {
    std::size_t in = g_.indegree(v), out = g_.outdegree(v);
    if (in == 0) return NodeKind::Root;
    if (out == 0) return NodeKind::Leaf;
    if (in == 2) return NodeKind::Reticulation;
    return NodeKind::Split;
}

std::vector<std::string> Network::labels() const {
    std::vector<std::string> out;
    out.reserve(leaves_.size());
    for (NodeId v : leaves_) out.push_back(g_.label(v));
    return out;
}

NodeId Network::leaf_by_label(const std::string& label) const {
    for (NodeId v : leaves_)
        if (g_.label(v) == label) return v;
    throw std::invalid_argument("no leaf labeled '" + label + "'");
}

std::vector<NodeId> Network::lca_set(NodeId u, NodeId v) const {
    std::vector<NodeId> common;
    for (NodeId z : g_.nodes())
        if (above_or_equal(z, u) && above_or_equal(z, v)) common.push_back(z);
    std::vector<NodeId> out;
    for (NodeId z : common) {
        bool lowest = true;
        for (NodeId w : common)
            if (w != z && strictly_above(z, w)) {
                lowest = false;
                break;
            }
        if (lowest) out.push_back(z);
    }
    return out;
}

std::vector<Triangle> Network::triangles() const {
    std::vector<Triangle> out;
    for (NodeId t : g_.nodes())
        for (NodeId s : g_.children(t))
            for (NodeId r : g_.children(t))
                if (s != r && g_.has_arc(s, r)) out.push_back({t, s, r});
    std::sort(out.begin(), out.end());
    return out;
}

Network Network::reverse_triangle(const Triangle& t) const {
    auto tris = triangles();
    if (std::find(tris.begin(), tris.end(), t) == tris.end())
        throw std::invalid_argument("reverse_triangle: triangle not present");
    if (node_kind(t.side) != NodeKind::Split)
        throw std::invalid_argument("reverse_triangle: side is not a split node");
    Digraph g = g_;
    g.remove_arc(t.side, t.bottom);
    g.add_arc(t.bottom, t.side);
    return Network::from_digraph(std::move(g));
}

NodeId Network::parent(NodeId v) const {
    if (g_.indegree(v) != 1) throw std::invalid_argument("parent: node has no unique parent");
    return g_.parents(v)[0];
}

NodeId Network::other_parent(NodeId v, NodeId p) const {
    const auto& ps = g_.parents(v);
    if (ps.size() != 2) throw std::invalid_argument("other_parent: not a reticulation");
    if (ps[0] == p) return ps[1];
    if (ps[1] == p) return ps[0];
    throw std::invalid_argument("other_parent: given node is not a parent");
}

NodeId Network::other_child(NodeId v, NodeId c) const {
    const auto& cs = g_.children(v);
    if (cs.size() != 2) throw std::invalid_argument("other_child: not a split");
    if (cs[0] == c) return cs[1];
    if (cs[1] == c) return cs[0];
    throw std::invalid_argument("other_child: given node is not a child");
}

NodeId Network::unique_child(NodeId v) const {
    if (g_.outdegree(v) != 1) throw std::invalid_argument("unique_child: outdegree != 1");
    return g_.children(v)[0];
}

std::vector<EmbeddedTree> embedded_trees(const Network& n, std::size_t max_reticulations) {
    const auto& retics = n.reticulations();
    if (retics.size() > max_reticulations)
        throw std::invalid_argument("embedded_trees: reticulation budget exceeded (" +
                                    std::to_string(retics.size()) + " > " +
                                    std::to_string(max_reticulations) + ")");

    std::vector<EmbeddedTree> out;
    std::set<std::string> seen;
    const std::size_t k = retics.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        Digraph g = n.graph();
        for (std::size_t i = 0; i < k; ++i) {
            NodeId r = retics[i];
            NodeId drop = n.graph().parents(r)[(mask >> i) & 1];
            g.remove_arc(drop, r);
        }
        // Prune childless internal nodes bottom-up, then suppress redundant ones.
        bool changed = true;
        while (changed) {
            changed = false;
            for (NodeId v : g.nodes()) {
                if (g.outdegree(v) == 0 && !g.is_labeled(v)) {
                    for (NodeId p : std::vector<NodeId>(g.parents(v))) g.remove_arc(p, v);
                    g.remove_node(v);
                    changed = true;
                }
            }
        }
        for (NodeId v : g.nodes())
            if (g.indegree(v) == 1 && g.outdegree(v) == 1) g.suppress(v);

        Network tree = Network::from_digraph(g);
        auto key = canonical_form(tree.graph(), IsoFlavor::Labeled).bytes;
        if (!seen.insert(key).second) continue;

        // Recover the arc subset of the host realizing this choice.
        Digraph host = n.graph();
        for (std::size_t i = 0; i < k; ++i) {
            NodeId r = retics[i];
            NodeId drop = n.graph().parents(r)[(mask >> i) & 1];
            host.remove_arc(drop, r);
        }
        bool shrunk = true;
        while (shrunk) {
            shrunk = false;
            for (NodeId v : host.nodes()) {
                if (host.outdegree(v) == 0 && !host.is_labeled(v)) {
                    for (NodeId p : std::vector<NodeId>(host.parents(v))) host.remove_arc(p, v);
                    host.remove_node(v);
                    shrunk = true;
                }
            }
        }
        out.push_back(EmbeddedTree{host.arcs(), std::move(tree)});
    }
    return out;
}

Network random_network(std::size_t n_leaves, std::size_t k, std::uint64_t seed) {
    if (n_leaves < 2) throw std::invalid_argument("random_network: need at least 2 leaves");
    std::mt19937_64 rng(seed);

    Digraph g;
    NodeId root = g.add_node();
    NodeId top = g.add_node();
    NodeId l1 = g.add_node("x1");
    NodeId l2 = g.add_node("x2");
    g.add_arc(root, top);
    g.add_arc(top, l1);
    g.add_arc(top, l2);
    for (std::size_t i = 3; i <= n_leaves; ++i) {
        auto arcs = g.arcs();
        std::uniform_int_distribution<std::size_t> pick(0, arcs.size() - 1);
        NodeId x = g.subdivide(arcs[pick(rng)]);
        NodeId leaf = g.add_node("x" + std::to_string(i));
        g.add_arc(x, leaf);
    }
    for (std::size_t j = 0; j < k; ++j) {
        for (;;) {
            auto arcs = g.arcs();
            std::uniform_int_distribution<std::size_t> pick(0, arcs.size() - 1);
            Arc e = arcs[pick(rng)];
            Arc f = arcs[pick(rng)];
            if (e == f) continue;
            if (g.above_or_equal(f.head, e.tail)) continue;  // new arc would close a cycle
            NodeId tail_pt = g.subdivide(e);
            // e == f excluded above, so f still exists verbatim.
            NodeId head_pt = g.subdivide(f);
            g.add_arc(tail_pt, head_pt);
            break;
        }
    }
    return Network::from_digraph(std::move(g));
}

}  // namespace headmoves
