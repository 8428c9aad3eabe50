#include "headmoves/digraph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace headmoves {

namespace {
void erase_one(std::vector<NodeId>& xs, NodeId x) {
    auto it = std::find(xs.begin(), xs.end(), x);
    if (it == xs.end()) throw std::logic_error("digraph: adjacency desync");
    xs.erase(it);
}
}  // namespace

const Digraph::Slot& Digraph::slot(NodeId v) const {
    if (!has_node(v)) throw std::invalid_argument("digraph: unknown node id " + std::to_string(v));
    return slots_[v];
}

Digraph::Slot& Digraph::slot(NodeId v) {
    if (!has_node(v)) throw std::invalid_argument("digraph: unknown node id " + std::to_string(v));
    return slots_[v];
}

NodeId Digraph::add_node(std::string label) {
    Slot s;
    s.alive = true;
    s.label = std::move(label);
    slots_.push_back(std::move(s));
    ++node_count_;
    return static_cast<NodeId>(slots_.size() - 1);
}

void Digraph::remove_node(NodeId v) {
    Slot& s = slot(v);
    if (!s.parents.empty() || !s.children.empty())
        throw std::invalid_argument("digraph: removing non-isolated node " + std::to_string(v));
    s.alive = false;
    s.label.clear();
    --node_count_;
}

void Digraph::add_arc(NodeId u, NodeId v) {
    slot(u).children.push_back(v);
    slot(v).parents.push_back(u);
    ++arc_count_;
}

void Digraph::remove_arc(NodeId u, NodeId v) {
    if (!has_arc(u, v)) throw std::invalid_argument("digraph: missing arc");
    erase_one(slot(u).children, v);
    erase_one(slot(v).parents, u);
    --arc_count_;
}

int Digraph::arc_multiplicity(NodeId u, NodeId v) const {
    if (!has_node(u) || !has_node(v)) return 0;
    return static_cast<int>(std::count(slots_[u].children.begin(), slots_[u].children.end(), v));
}

std::vector<NodeId> Digraph::nodes() const {
    std::vector<NodeId> out;
    out.reserve(node_count_);
    for (NodeId v = 0; v < slots_.size(); ++v)
        if (slots_[v].alive) out.push_back(v);
    return out;
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> out;
    out.reserve(arc_count_);
    for (NodeId v = 0; v < slots_.size(); ++v)
        if (slots_[v].alive)
            for (NodeId c : slots_[v].children) out.push_back({v, c});
    std::sort(out.begin(), out.end());
    return out;
}

NodeId Digraph::subdivide(Arc a) {
    if (!has_arc(a.tail, a.head)) throw std::invalid_argument("digraph: subdividing missing arc");
    remove_arc(a.tail, a.head);
    NodeId x = add_node();
    add_arc(a.tail, x);
    add_arc(x, a.head);
    return x;
}

void Digraph::suppress(NodeId v, bool checked) {
    const Slot& s = slot(v);
    if (s.parents.size() != 1 || s.children.size() != 1)
        throw std::invalid_argument("digraph: suppressing non-redundant node " + std::to_string(v));
    NodeId p = s.parents[0], c = s.children[0];
    if (checked) {
        if (p == c) throw std::invalid_argument("digraph: suppression would create a self-loop");
        if (has_arc(p, c)) throw std::invalid_argument("digraph: suppression would create a parallel arc");
    }
    remove_arc(p, v);
    remove_arc(v, c);
    remove_node(v);
    add_arc(p, c);
}

bool Digraph::strictly_above(NodeId u, NodeId v) const {
    slot(u);
    slot(v);
    std::vector<char> seen(slots_.size(), 0);
    std::deque<NodeId> queue(slots_[u].children.begin(), slots_[u].children.end());
    while (!queue.empty()) {
        NodeId w = queue.front();
        queue.pop_front();
        if (w == v) return true;
        if (seen[w]) continue;
        seen[w] = 1;
        for (NodeId c : slots_[w].children)
            if (!seen[c]) queue.push_back(c);
    }
    return false;
}

int Digraph::undirected_distance(NodeId u, NodeId v) const {
    slot(u);
    slot(v);
    if (u == v) return 0;
    std::vector<int> dist(slots_.size(), -1);
    dist[u] = 0;
    std::deque<NodeId> queue{u};
    while (!queue.empty()) {
        NodeId w = queue.front();
        queue.pop_front();
        auto visit = [&](NodeId x) {
            if (dist[x] == -1) {
                dist[x] = dist[w] + 1;
                queue.push_back(x);
            }
        };
        for (NodeId c : slots_[w].children) visit(c);
        for (NodeId p : slots_[w].parents) visit(p);
        if (dist[v] != -1) return dist[v];
    }
    return -1;
}

bool Digraph::is_acyclic() const {
    std::vector<std::size_t> pending(slots_.size(), 0);
    std::deque<NodeId> queue;
    std::size_t emitted = 0;
    for (NodeId v = 0; v < slots_.size(); ++v) {
        if (!slots_[v].alive) continue;
        pending[v] = slots_[v].parents.size();
        if (pending[v] == 0) queue.push_back(v);
    }
    while (!queue.empty()) {
        NodeId v = queue.front();
        queue.pop_front();
        ++emitted;
        for (NodeId c : slots_[v].children)
            if (--pending[c] == 0) queue.push_back(c);
    }
    return emitted == node_count_;
}

}  // namespace headmoves
