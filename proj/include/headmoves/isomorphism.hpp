#pragma once

#include <compare>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "headmoves/digraph.hpp"

namespace headmoves {

enum class IsoFlavor { Labeled, Unlabeled };

// Opaque key: equal bytes <=> isomorphic (of the stated flavor).
// Stable within one artifact version only; not a wire format.
struct CanonicalForm {
    std::string bytes;
    IsoFlavor flavor = IsoFlavor::Labeled;

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
        return a.flavor == b.flavor && a.bytes == b.bytes;
    }
    friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
        if (auto c = a.flavor <=> b.flavor; c != 0) return c;
        return a.bytes <=> b.bytes;
    }
};

// Individualization-refinement canonical labeling. Works on any labeled
// digraph (forests, networks, raw intermediates), not just valid networks.
CanonicalForm canonical_form(const Digraph& g, IsoFlavor flavor);

// The node order realizing the canonical form: position = canonical rank.
std::vector<NodeId> canonical_order(const Digraph& g, IsoFlavor flavor);

bool are_isomorphic(const Digraph& g1, const Digraph& g2, IsoFlavor flavor);

// A witness mapping g1 -> g2 when isomorphic (canonical positions matched).
std::optional<std::unordered_map<NodeId, NodeId>> isomorphism_map(const Digraph& g1, const Digraph& g2,
                                                                  IsoFlavor flavor);

// Suppresses every indegree-1 outdegree-1 node (unchecked).
Digraph suppress_all_redundant(Digraph g);

// Labeled isomorphism after suppression of all redundant nodes in both.
bool s_isomorphic(const Digraph& g1, const Digraph& g2);

// Does the leaf-labeled forest h embed (s-isomorphism onto a subgraph) in g?
// g must be tree-like: underlying undirected graph a simple forest. Leaf
// labels pin the image, so the embedding is decidable by Steiner subtrees.
bool embeds_in(const Digraph& h, const Digraph& g);

}  // namespace headmoves
