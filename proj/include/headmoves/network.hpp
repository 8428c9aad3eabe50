#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "headmoves/digraph.hpp"

namespace headmoves {

enum class NodeKind { Root, Leaf, Split, Reticulation };

const char* to_string(NodeKind k);

struct Violation {
    std::string rule;    // stable code, e.g. "cycle", "parallel-arc"
    std::string detail;  // names the offending node/arc
};

// Empty iff g is a binary rooted phylogenetic network with >= 2 leaves.
std::vector<Violation> validate(const Digraph& g);

struct Triangle {
    NodeId top = kNoNode;
    NodeId side = kNoNode;
    NodeId bottom = kNoNode;

    friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

// A validated binary phylogenetic network. Immutable: every operation
// returns a new value. Node ids are stable within one value.
class Network {
public:
    static Network from_digraph(Digraph g);  // throws std::invalid_argument listing violations

    const Digraph& graph() const { return g_; }

    NodeKind node_kind(NodeId v) const;
    NodeId root() const { return root_; }
    NodeId root_child() const { return g_.children(root_)[0]; }

    std::size_t leaf_count() const { return leaves_.size(); }
    std::size_t reticulation_count() const { return retics_.size(); }  // the tier
    const std::vector<NodeId>& leaves() const { return leaves_; }          // sorted by label
    const std::vector<NodeId>& reticulations() const { return retics_; }   // ascending id
    std::vector<std::string> labels() const;                               // sorted

    NodeId leaf_by_label(const std::string& label) const;  // throws if absent

    bool strictly_above(NodeId u, NodeId v) const { return g_.strictly_above(u, v); }
    bool above_or_equal(NodeId u, NodeId v) const { return g_.above_or_equal(u, v); }

    std::vector<NodeId> lca_set(NodeId u, NodeId v) const;

    std::vector<Triangle> triangles() const;
    Network reverse_triangle(const Triangle& t) const;

    NodeId parent(NodeId v) const;                    // unique parent, throws for root/retic
    NodeId other_parent(NodeId v, NodeId p) const;    // reticulation parent != p
    NodeId other_child(NodeId v, NodeId c) const;     // split child != c
    NodeId unique_child(NodeId v) const;              // outdegree-1 child

private:
    Network() = default;

    Digraph g_;
    NodeId root_ = kNoNode;
    std::vector<NodeId> leaves_;
    std::vector<NodeId> retics_;
};

struct EmbeddedTree {
    std::vector<Arc> arcs;  // arc subset of the host realizing the tree
    Network tree;           // suppressed induced tree on the label set
};

// All embedded trees, deduplicated up to labeled isomorphism of the
// suppressed tree. Enumerates the 2^k incoming-arc choices.
std::vector<EmbeddedTree> embedded_trees(const Network& n, std::size_t max_reticulations = 10);

// Seeded generator: random labeled tree plus k reticulation arcs.
// Labels are x1..xN. Distribution is not a contract, validity is.
Network random_network(std::size_t n_leaves, std::size_t k, std::uint64_t seed);

}  // namespace headmoves
