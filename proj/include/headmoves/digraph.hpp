#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace headmoves {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = static_cast<NodeId>(-1);

struct Arc {
    NodeId tail = kNoNode;
    NodeId head = kNoNode;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Mutable labeled multidigraph. Node ids are slot indices; ids are never
// reused within one value, so untouched nodes keep their ids across edits.
// Parallel arcs are representable on purpose: move application produces them
// transiently and validate() must be able to report them.
class Digraph {
public:
    NodeId add_node(std::string label = {});
    void remove_node(NodeId v);  // v must be isolated
    void add_arc(NodeId u, NodeId v);
    void remove_arc(NodeId u, NodeId v);  // removes one copy, throws if absent

    bool has_node(NodeId v) const { return v < slots_.size() && slots_[v].alive; }
    bool has_arc(NodeId u, NodeId v) const { return arc_multiplicity(u, v) > 0; }
    int arc_multiplicity(NodeId u, NodeId v) const;

    std::size_t indegree(NodeId v) const { return slot(v).parents.size(); }
    std::size_t outdegree(NodeId v) const { return slot(v).children.size(); }
    const std::vector<NodeId>& parents(NodeId v) const { return slot(v).parents; }
    const std::vector<NodeId>& children(NodeId v) const { return slot(v).children; }

    const std::string& label(NodeId v) const { return slot(v).label; }
    void set_label(NodeId v, std::string label) { slot(v).label = std::move(label); }
    bool is_labeled(NodeId v) const { return !slot(v).label.empty(); }

    std::size_t node_count() const { return node_count_; }
    std::size_t arc_count() const { return arc_count_; }
    std::size_t slot_count() const { return slots_.size(); }

    std::vector<NodeId> nodes() const;  // alive ids, ascending
    std::vector<Arc> arcs() const;      // ascending (tail, head), with multiplicity

    // Subdivides (u,v): replaces one copy by (u,x),(x,v); returns x.
    NodeId subdivide(Arc a);
    // Removes an indegree-1 outdegree-1 node, joining parent to child.
    // checked: refuse to create a parallel arc or a self-loop.
    void suppress(NodeId v, bool checked = false);

    // Directed reachability u -> v along a nonempty path.
    bool strictly_above(NodeId u, NodeId v) const;
    bool above_or_equal(NodeId u, NodeId v) const { return u == v || strictly_above(u, v); }

    // Shortest path length in the underlying undirected graph, -1 if none.
    int undirected_distance(NodeId u, NodeId v) const;

    bool is_acyclic() const;

private:
    struct Slot {
        std::vector<NodeId> parents, children;
        std::string label;
        bool alive = false;
    };

    const Slot& slot(NodeId v) const;
    Slot& slot(NodeId v);

    std::vector<Slot> slots_;
    std::size_t node_count_ = 0;
    std::size_t arc_count_ = 0;
};

}  // namespace headmoves
