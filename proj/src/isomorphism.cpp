#include "headmoves/isomorphism.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace headmoves {

namespace {

struct CanonCtx {
    const Digraph* g = nullptr;
    std::vector<NodeId> nodes;                  // alive ids
    std::vector<std::uint32_t> index_of;        // id -> dense index
    std::vector<std::vector<std::uint32_t>> kids, pars;  // dense adjacency
    std::vector<int> base_color;                // dense
    std::string best_bytes;
    std::vector<std::uint32_t> best_perm;       // rank -> dense index
    bool have_best = false;
};

// Refine colors to a stable partition: signature = (color, sorted child
// colors, sorted parent colors).
void refine(const CanonCtx& ctx, std::vector<int>& color) {
    const std::size_t n = ctx.nodes.size();
    std::vector<std::vector<int>> sig(n);
    for (;;) {
        for (std::size_t i = 0; i < n; ++i) {
            auto& s = sig[i];
            s.clear();
            s.push_back(color[i]);
            std::size_t kid_end = 1 + ctx.kids[i].size();
            for (auto j : ctx.kids[i]) s.push_back(color[j]);
            std::sort(s.begin() + 1, s.begin() + static_cast<long>(kid_end));
            s.push_back(-1);
            for (auto j : ctx.pars[i]) s.push_back(color[j]);
            std::sort(s.begin() + static_cast<long>(kid_end) + 1, s.end());
        }
        std::vector<std::uint32_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<std::uint32_t>(i);
        std::sort(order.begin(), order.end(),
                  [&](std::uint32_t a, std::uint32_t b) { return sig[a] < sig[b]; });
        std::vector<int> next(n);
        int classes = 0;
        for (std::size_t r = 0; r < n; ++r) {
            if (r > 0 && sig[order[r]] != sig[order[r - 1]]) ++classes;
            next[order[r]] = classes;
        }
        bool stable = true;
        for (std::size_t i = 0; i < n && stable; ++i) stable = (next[i] == color[i]);
        color.swap(next);
        if (stable) return;
    }
}

std::string emit_bytes(const CanonCtx& ctx, const std::vector<std::uint32_t>& perm, bool labeled) {
    // perm: rank -> dense index
    const std::size_t n = perm.size();
    std::vector<std::uint32_t> rank(n);
    for (std::size_t r = 0; r < n; ++r) rank[perm[r]] = static_cast<std::uint32_t>(r);
    std::string out;
    out.reserve(n * 8);
    for (std::size_t r = 0; r < n; ++r) {
        std::uint32_t i = perm[r];
        std::vector<std::uint32_t> ck;
        ck.reserve(ctx.kids[i].size());
        for (auto j : ctx.kids[i]) ck.push_back(rank[j]);
        std::sort(ck.begin(), ck.end());
        out += 'N';
        out += std::to_string(ck.size());
        for (auto cr : ck) {
            out += ':';
            out += std::to_string(cr);
        }
        if (labeled) {
            out += '=';
            out += ctx.g->label(ctx.nodes[i]);
        }
        out += ';';
    }
    return out;
}

void search(CanonCtx& ctx, std::vector<int> color, bool labeled) {
    refine(ctx, color);
    const std::size_t n = ctx.nodes.size();
    // find first non-singleton class
    std::map<int, std::vector<std::uint32_t>> classes;
    for (std::size_t i = 0; i < n; ++i) classes[color[i]].push_back(static_cast<std::uint32_t>(i));
    const std::vector<std::uint32_t>* target = nullptr;
    for (auto& [c, members] : classes)
        if (members.size() > 1) {
            target = &members;
            break;
        }
    if (!target) {
        std::vector<std::uint32_t> perm(n);
        for (auto& [c, members] : classes) perm[static_cast<std::size_t>(c)] = members[0];
        std::string bytes = emit_bytes(ctx, perm, labeled);
        if (!ctx.have_best || bytes < ctx.best_bytes) {
            ctx.best_bytes = std::move(bytes);
            ctx.best_perm = std::move(perm);
            ctx.have_best = true;
        }
        return;
    }
    for (std::uint32_t v : *target) {
        std::vector<int> next = color;
        for (std::size_t i = 0; i < n; ++i)
            if (next[i] >= color[v]) ++next[i];
        next[v] = color[v];
        search(ctx, std::move(next), labeled);
    }
}

CanonCtx make_ctx(const Digraph& g, IsoFlavor flavor) {
    CanonCtx ctx;
    ctx.g = &g;
    ctx.nodes = g.nodes();
    const std::size_t n = ctx.nodes.size();
    ctx.index_of.assign(g.slot_count(), 0);
    for (std::size_t i = 0; i < n; ++i) ctx.index_of[ctx.nodes[i]] = static_cast<std::uint32_t>(i);
    ctx.kids.resize(n);
    ctx.pars.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (NodeId c : g.children(ctx.nodes[i])) ctx.kids[i].push_back(ctx.index_of[c]);
        for (NodeId p : g.parents(ctx.nodes[i])) ctx.pars[i].push_back(ctx.index_of[p]);
    }
    const bool labeled = flavor == IsoFlavor::Labeled;
    std::vector<std::tuple<std::size_t, std::size_t, std::string>> keys(n);
    for (std::size_t i = 0; i < n; ++i) {
        NodeId v = ctx.nodes[i];
        keys[i] = {g.indegree(v), g.outdegree(v), labeled ? g.label(v) : std::string{}};
    }
    auto sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    ctx.base_color.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        ctx.base_color[i] = static_cast<int>(
            std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
    return ctx;
}

void run_canon(CanonCtx& ctx, IsoFlavor flavor) {
    if (ctx.nodes.empty()) {
        ctx.best_bytes.clear();
        ctx.have_best = true;
        return;
    }
    search(ctx, ctx.base_color, flavor == IsoFlavor::Labeled);
}

}  // namespace

CanonicalForm canonical_form(const Digraph& g, IsoFlavor flavor) {
    CanonCtx ctx = make_ctx(g, flavor);
    run_canon(ctx, flavor);
    return {std::move(ctx.best_bytes), flavor};
}

std::vector<NodeId> canonical_order(const Digraph& g, IsoFlavor flavor) {
    CanonCtx ctx = make_ctx(g, flavor);
    run_canon(ctx, flavor);
    std::vector<NodeId> out(ctx.best_perm.size());
    for (std::size_t r = 0; r < ctx.best_perm.size(); ++r) out[r] = ctx.nodes[ctx.best_perm[r]];
    return out;
}

bool are_isomorphic(const Digraph& g1, const Digraph& g2, IsoFlavor flavor) {
    if (g1.node_count() != g2.node_count() || g1.arc_count() != g2.arc_count()) return false;
    return canonical_form(g1, flavor) == canonical_form(g2, flavor);
}

std::optional<std::unordered_map<NodeId, NodeId>> isomorphism_map(const Digraph& g1, const Digraph& g2,
                                                                  IsoFlavor flavor) {
    if (g1.node_count() != g2.node_count() || g1.arc_count() != g2.arc_count()) return std::nullopt;
    CanonCtx c1 = make_ctx(g1, flavor);
    CanonCtx c2 = make_ctx(g2, flavor);
    run_canon(c1, flavor);
    run_canon(c2, flavor);
    if (c1.best_bytes != c2.best_bytes) return std::nullopt;
    std::unordered_map<NodeId, NodeId> map;
    for (std::size_t r = 0; r < c1.best_perm.size(); ++r)
        map[c1.nodes[c1.best_perm[r]]] = c2.nodes[c2.best_perm[r]];
    return map;
}

Digraph suppress_all_redundant(Digraph g) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (NodeId v : g.nodes())
            if (g.indegree(v) == 1 && g.outdegree(v) == 1) {
                g.suppress(v);
                changed = true;
            }
    }
    return g;
}

bool s_isomorphic(const Digraph& g1, const Digraph& g2) {
    return are_isomorphic(suppress_all_redundant(g1), suppress_all_redundant(g2), IsoFlavor::Labeled);
}

namespace {

std::vector<std::vector<NodeId>> undirected_components(const Digraph& g) {
    std::vector<std::vector<NodeId>> out;
    std::set<NodeId> seen;
    for (NodeId s : g.nodes()) {
        if (seen.count(s)) continue;
        std::vector<NodeId> comp;
        std::deque<NodeId> queue{s};
        seen.insert(s);
        while (!queue.empty()) {
            NodeId v = queue.front();
            queue.pop_front();
            comp.push_back(v);
            for (NodeId w : g.children(v))
                if (seen.insert(w).second) queue.push_back(w);
            for (NodeId w : g.parents(v))
                if (seen.insert(w).second) queue.push_back(w);
        }
        out.push_back(std::move(comp));
    }
    return out;
}

bool undirected_forest(const Digraph& g) {
    // acyclic undirected <=> per component: |E| = |V| - 1
    auto comps = undirected_components(g);
    std::size_t vtotal = 0;
    for (auto& c : comps) vtotal += c.size();
    return g.arc_count() + comps.size() == vtotal;
}

// Unique undirected path in a forest, as node sequence; empty if none.
std::vector<NodeId> tree_path(const Digraph& g, NodeId a, NodeId b) {
    std::map<NodeId, NodeId> prev;
    std::deque<NodeId> queue{a};
    prev[a] = a;
    while (!queue.empty()) {
        NodeId v = queue.front();
        queue.pop_front();
        if (v == b) break;
        auto visit = [&](NodeId w) {
            if (!prev.count(w)) {
                prev[w] = v;
                queue.push_back(w);
            }
        };
        for (NodeId w : g.children(v)) visit(w);
        for (NodeId w : g.parents(v)) visit(w);
    }
    if (!prev.count(b)) return {};
    std::vector<NodeId> path{b};
    while (path.back() != a) path.push_back(prev[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

bool embeds_in(const Digraph& h, const Digraph& g) {
    if (!undirected_forest(g))
        throw std::invalid_argument("embeds_in: target is not tree-like (undirected forest required)");
    if (!undirected_forest(h)) return false;

    std::map<std::string, NodeId> g_by_label;
    for (NodeId v : g.nodes())
        if (g.is_labeled(v)) {
            if (g_by_label.count(g.label(v))) throw std::invalid_argument("embeds_in: duplicate label in target");
            g_by_label[g.label(v)] = v;
        }

    std::set<std::string> used_labels;
    std::set<NodeId> used_g_nodes;
    for (const auto& comp : undirected_components(h)) {
        std::vector<NodeId> labeled;
        for (NodeId v : comp) {
            std::size_t deg = h.indegree(v) + h.outdegree(v);
            if (h.is_labeled(v)) {
                if (!used_labels.insert(h.label(v)).second) return false;  // label used twice
                labeled.push_back(v);
            } else if (deg <= 1) {
                return false;  // unlabeled pendant/isolated node cannot anchor
            }
        }
        if (labeled.empty()) return false;

        std::vector<NodeId> image_points;
        for (NodeId v : labeled) {
            auto it = g_by_label.find(h.label(v));
            if (it == g_by_label.end()) return false;
            image_points.push_back(it->second);
        }
        // Steiner subtree of the image points.
        std::set<NodeId> steiner_nodes;
        std::set<std::pair<NodeId, NodeId>> steiner_arcs;
        steiner_nodes.insert(image_points[0]);
        for (std::size_t i = 1; i < image_points.size(); ++i) {
            auto path = tree_path(g, image_points[0], image_points[i]);
            if (path.empty()) return false;  // different g-components
            for (std::size_t j = 0; j < path.size(); ++j) {
                steiner_nodes.insert(path[j]);
                if (j + 1 < path.size()) {
                    NodeId a = path[j], b = path[j + 1];
                    if (g.has_arc(a, b)) steiner_arcs.insert({a, b});
                    else steiner_arcs.insert({b, a});
                }
            }
        }
        for (NodeId v : steiner_nodes)
            if (!used_g_nodes.insert(v).second) return false;  // components must be node-disjoint

        Digraph sub;
        std::map<NodeId, NodeId> local;
        for (NodeId v : steiner_nodes) local[v] = sub.add_node(g.label(v));
        for (auto [a, b] : steiner_arcs) sub.add_arc(local[a], local[b]);

        Digraph part;
        std::map<NodeId, NodeId> hl;
        for (NodeId v : comp) hl[v] = part.add_node(h.label(v));
        for (NodeId v : comp)
            for (NodeId c : h.children(v)) part.add_arc(hl[v], hl[c]);

        if (!s_isomorphic(part, sub)) return false;
    }
    return true;
}

}  // namespace headmoves
