#include "headmoves/search.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace headmoves {

namespace {

CanonicalForm key_of(const Network& n) { return canonical_form(n.graph(), IsoFlavor::Labeled); }

std::vector<Network> expand(const Network& n, MoveKind kind, std::optional<int> max_distance) {
    std::vector<Network> out;
    for (const Move& m : enumerate_moves(n, kind, max_distance))
        out.push_back(apply_move(n, m).result);
    return out;
}

std::vector<std::string> sorted_labels(const Network& n) {
    auto ls = n.labels();
    std::sort(ls.begin(), ls.end());
    return ls;
}

// All labeled rooted binary trees on the given labels, by leaf insertion.
std::vector<Network> all_trees(const std::vector<std::string>& labels) {
    Digraph g;
    NodeId root = g.add_node();
    NodeId top = g.add_node();
    g.add_arc(root, top);
    g.add_arc(top, g.add_node(labels[0]));
    g.add_arc(top, g.add_node(labels[1]));
    std::vector<Digraph> level{g};
    for (std::size_t i = 2; i < labels.size(); ++i) {
        std::vector<Digraph> next;
        for (const Digraph& t : level)
            for (Arc a : t.arcs()) {
                Digraph u = t;
                NodeId x = u.subdivide(a);
                u.add_arc(x, u.add_node(labels[i]));
                next.push_back(std::move(u));
            }
        level = std::move(next);
    }
    std::vector<Network> out;
    out.reserve(level.size());
    for (Digraph& t : level) out.push_back(Network::from_digraph(std::move(t)));
    return out;
}

NodeId build_caterpillar_subtree(Digraph& g, const std::vector<std::string>& labels, std::size_t lo,
                                 std::size_t hi) {
    // comb over labels[lo..hi], deepest pair first
    NodeId cur = g.add_node(labels[lo]);
    for (std::size_t i = lo + 1; i <= hi; ++i) {
        NodeId join = g.add_node();
        g.add_arc(join, cur);
        g.add_arc(join, g.add_node(labels[i]));
        cur = join;
    }
    return cur;
}

}  // namespace

Network tier_seed(std::size_t n_leaves, std::size_t k) {
    if (n_leaves < 2) throw std::invalid_argument("tier_seed: need at least 2 leaves");
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n_leaves; ++i) labels.push_back("x" + std::to_string(i));

    Digraph g;
    NodeId root = g.add_node();
    if (k == 0) {
        NodeId top = build_caterpillar_subtree(g, labels, 0, n_leaves - 1);
        g.add_arc(root, top);
        return Network::from_digraph(std::move(g));
    }
    NodeId c = g.add_node();
    g.add_arc(root, c);
    std::vector<NodeId> a(k), b(k);
    for (std::size_t i = 0; i < k; ++i) {
        a[i] = g.add_node();
        b[i] = g.add_node();
    }
    g.add_arc(c, a[0]);
    g.add_arc(c, b[0]);
    for (std::size_t i = 0; i < k; ++i) g.add_arc(a[i], b[i]);
    for (std::size_t i = 0; i + 1 < k; ++i) {
        g.add_arc(a[i], a[i + 1]);
        g.add_arc(b[i], b[i + 1]);
    }
    NodeId below_a = n_leaves == 2 ? g.add_node(labels[0])
                                   : build_caterpillar_subtree(g, labels, 0, n_leaves - 2);
    g.add_arc(a[k - 1], below_a);
    g.add_arc(b[k - 1], g.add_node(labels[n_leaves - 1]));
    return Network::from_digraph(std::move(g));
}

std::vector<Network> tier_networks(std::size_t n_leaves, std::size_t k, SearchLimits limits) {
    std::map<CanonicalForm, Network> seen;
    if (k == 0) {
        std::vector<std::string> labels;
        for (std::size_t i = 1; i <= n_leaves; ++i) labels.push_back("x" + std::to_string(i));
        for (Network& t : all_trees(labels)) seen.emplace(key_of(t), std::move(t));
    } else {
        Network seed = tier_seed(n_leaves, k);
        std::deque<Network> queue{seed};
        seen.emplace(key_of(seed), seed);
        while (!queue.empty()) {
            Network cur = std::move(queue.front());
            queue.pop_front();
            for (Network& next : expand(cur, MoveKind::Head, std::nullopt)) {
                auto key = key_of(next);
                if (seen.count(key)) continue;
                if (seen.size() >= limits.max_states)
                    throw BudgetError("tier_networks: state budget exceeded (" +
                                      std::to_string(limits.max_states) + ")");
                seen.emplace(std::move(key), next);
                queue.push_back(std::move(next));
            }
        }
    }
    std::vector<Network> out;
    out.reserve(seen.size());
    for (auto& [key, n] : seen) out.push_back(std::move(n));
    return out;
}

std::vector<CanonicalForm> tier_enumeration(std::size_t n_leaves, std::size_t k, SearchLimits limits) {
    std::vector<CanonicalForm> out;
    for (const Network& n : tier_networks(n_leaves, k, limits)) out.push_back(key_of(n));
    return out;
}

std::vector<Network> tier_networks_constructive(std::size_t n_leaves, std::size_t k, SearchLimits limits) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n_leaves; ++i) labels.push_back("x" + std::to_string(i));

    std::map<CanonicalForm, Network> level;
    for (Network& t : all_trees(labels)) level.emplace(key_of(t), std::move(t));
    for (std::size_t j = 0; j < k; ++j) {
        std::map<CanonicalForm, Network> next;
        for (const auto& [key, n] : level) {
            auto arcs = n.graph().arcs();
            for (Arc e : arcs)
                for (Arc f : arcs) {
                    if (e == f) continue;
                    if (n.graph().above_or_equal(f.head, e.tail)) continue;
                    Digraph g = n.graph();
                    NodeId tail_pt = g.subdivide(e);
                    NodeId head_pt = g.subdivide(f);
                    g.add_arc(tail_pt, head_pt);
                    Network candidate = Network::from_digraph(std::move(g));
                    auto ck = key_of(candidate);
                    if (next.count(ck)) continue;
                    if (next.size() >= limits.max_states)
                        throw BudgetError("tier_networks_constructive: state budget exceeded");
                    next.emplace(std::move(ck), std::move(candidate));
                }
        }
        level = std::move(next);
    }
    std::vector<Network> out;
    for (auto& [key, n] : level) out.push_back(std::move(n));
    return out;
}

std::optional<int> bfs_distance(const Network& n1, const Network& n2, MoveKind kind,
                                std::optional<int> max_distance, int depth_cap, SearchLimits limits) {
    if (sorted_labels(n1) != sorted_labels(n2))
        throw std::invalid_argument("bfs_distance: leaf sets differ");
    if (n1.reticulation_count() != n2.reticulation_count())
        throw std::invalid_argument("bfs_distance: tiers differ");

    auto k1 = key_of(n1), k2 = key_of(n2);
    if (k1 == k2) return 0;
    if (depth_cap < 1) return std::nullopt;

    // Bidirectional, levelwise. After both frontiers are complete at depths
    // df and db, every path of length <= df+db+1 has been seen as a meet, so
    // `best` is final once best <= df+db+1.
    std::map<CanonicalForm, int> dist_f{{k1, 0}}, dist_b{{k2, 0}};
    std::vector<Network> front_f{n1}, front_b{n2};
    int df = 0, db = 0;
    std::size_t states = 2;
    int best = -1;

    while (!front_f.empty() && !front_b.empty()) {
        if (best != -1 && best <= df + db + 1) break;
        if (df + db + 1 > depth_cap) break;
        bool forward = front_f.size() <= front_b.size();
        auto& front = forward ? front_f : front_b;
        auto& dist_mine = forward ? dist_f : dist_b;
        auto& dist_other = forward ? dist_b : dist_f;
        int depth = (forward ? df : db) + 1;

        std::vector<Network> next;
        for (const Network& cur : front)
            for (Network& nb : expand(cur, kind, max_distance)) {
                auto key = key_of(nb);
                if (auto it = dist_other.find(key); it != dist_other.end()) {
                    int total = depth + it->second;
                    if (best == -1 || total < best) best = total;
                }
                if (dist_mine.count(key)) continue;
                if (++states > limits.max_states) throw BudgetError("bfs_distance: state budget exceeded");
                dist_mine.emplace(std::move(key), depth);
                next.push_back(std::move(nb));
            }
        front = std::move(next);
        (forward ? df : db) = depth;
    }
    if (best != -1 && best <= depth_cap) return best;
    return std::nullopt;
}

namespace {

struct TierGraph {
    std::vector<Network> nets;
    std::vector<std::vector<std::size_t>> adj;
};

TierGraph tier_move_graph(std::size_t n_leaves, std::size_t k, MoveKind kind,
                          std::optional<int> max_distance, SearchLimits limits) {
    TierGraph tg;
    tg.nets = tier_networks(n_leaves, k, limits);
    std::map<CanonicalForm, std::size_t> index;
    for (std::size_t i = 0; i < tg.nets.size(); ++i) index.emplace(key_of(tg.nets[i]), i);
    tg.adj.resize(tg.nets.size());
    for (std::size_t i = 0; i < tg.nets.size(); ++i) {
        std::set<std::size_t> nbrs;
        for (const Network& nb : expand(tg.nets[i], kind, max_distance)) {
            auto it = index.find(key_of(nb));
            if (it == index.end()) throw std::logic_error("tier not closed under moves");
            if (it->second != i) nbrs.insert(it->second);
        }
        tg.adj[i] = {nbrs.begin(), nbrs.end()};
    }
    return tg;
}

}  // namespace

std::vector<std::size_t> move_graph_components(std::size_t n_leaves, std::size_t k, MoveKind kind,
                                               std::optional<int> max_distance, SearchLimits limits) {
    TierGraph tg = tier_move_graph(n_leaves, k, kind, max_distance, limits);
    std::vector<char> seen(tg.nets.size(), 0);
    std::vector<std::size_t> sizes;
    for (std::size_t s = 0; s < tg.nets.size(); ++s) {
        if (seen[s]) continue;
        std::size_t size = 0;
        std::deque<std::size_t> queue{s};
        seen[s] = 1;
        while (!queue.empty()) {
            std::size_t v = queue.front();
            queue.pop_front();
            ++size;
            for (std::size_t w : tg.adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        }
        sizes.push_back(size);
    }
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

int exact_diameter(std::size_t n_leaves, std::size_t k, MoveKind kind, SearchLimits limits) {
    if (kind == MoveKind::Head && k == 0)
        throw std::runtime_error("exact_diameter: tier-0 has no head moves");
    TierGraph tg = tier_move_graph(n_leaves, k, kind, std::nullopt, limits);
    int diameter = 0;
    for (std::size_t s = 0; s < tg.nets.size(); ++s) {
        std::vector<int> dist(tg.nets.size(), -1);
        dist[s] = 0;
        std::deque<std::size_t> queue{s};
        while (!queue.empty()) {
            std::size_t v = queue.front();
            queue.pop_front();
            for (std::size_t w : tg.adj[v])
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
        }
        for (int d : dist) {
            if (d == -1) throw std::runtime_error("exact_diameter: move graph is disconnected");
            diameter = std::max(diameter, d);
        }
    }
    return diameter;
}

}  // namespace headmoves
