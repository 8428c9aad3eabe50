#include "headmoves/search.hpp"

#include <set>

#include "doctest.h"
#include "fixtures.hpp"

using namespace headmoves;
using headmoves::testing::make_t2;

TEST_CASE("tier_seed validates across sizes") {
    for (std::size_t n = 2; n <= 6; ++n)
        for (std::size_t k = 0; k <= 4; ++k) {
            Network seed = tier_seed(n, k);
            CHECK(validate(seed.graph()).empty());
            CHECK(seed.leaf_count() == n);
            CHECK(seed.reticulation_count() == k);
        }
}

TEST_CASE("tier counts: (2,0)=1, (3,0)=3") {
    CHECK(tier_networks(2, 0).size() == 1);
    CHECK(tier_networks(3, 0).size() == 3);
}

TEST_CASE("dual-generator agreement on small tiers") {
    for (auto [n, k] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 1}, {3, 1}, {2, 2}, {4, 1}}) {
        auto by_moves = tier_enumeration(n, k);
        auto constructive = tier_networks_constructive(n, k);
        std::set<CanonicalForm> a(by_moves.begin(), by_moves.end());
        std::set<CanonicalForm> b;
        for (const Network& net : constructive) b.insert(canonical_form(net.graph(), IsoFlavor::Labeled));
        CHECK(a == b);
        CHECK(a.size() == by_moves.size());
    }
}

TEST_CASE("tier closed under head and tail moves") {
    auto nets = tier_networks(3, 1);
    std::set<CanonicalForm> keys;
    for (const Network& n : nets) keys.insert(canonical_form(n.graph(), IsoFlavor::Labeled));
    for (const Network& n : nets)
        for (MoveKind kind : {MoveKind::Head, MoveKind::Tail})
            for (const Move& m : enumerate_moves(n, kind))
                CHECK(keys.count(canonical_form(apply_move(n, m).result.graph(), IsoFlavor::Labeled)) == 1);
}

TEST_CASE("bfs_distance: identity, symmetry, and an exhaustive tiny value") {
    auto f = make_t2();
    CHECK(bfs_distance(f.net, f.net, MoveKind::Head, std::nullopt, 0) == 0);

    // leaf-swapped twin: swap labels x and y
    Digraph g = f.net.graph();
    g.set_label(f.x, "y");
    g.set_label(f.y, "x");
    Network twin = Network::from_digraph(std::move(g));
    auto d = bfs_distance(f.net, twin, MoveKind::Head, std::nullopt, 10);
    REQUIRE(d.has_value());
    CHECK(*d == 1);  // the triangle-direction flip swaps the two leaves' positions

    auto back = bfs_distance(twin, f.net, MoveKind::Head, std::nullopt, 10);
    CHECK(d == back);

    // symmetry on random same-tier pairs
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        Network a = random_network(3, 1, seed);
        Network b = random_network(3, 1, seed + 100);
        auto ab = bfs_distance(a, b, MoveKind::Head, std::nullopt, 8);
        auto ba = bfs_distance(b, a, MoveKind::Head, std::nullopt, 8);
        CHECK(ab == ba);
    }

    CHECK_THROWS(bfs_distance(f.net, random_network(3, 1, 0), MoveKind::Head, std::nullopt, 3));
}

TEST_CASE("bfs_distance respects the depth cap") {
    auto f = make_t2();
    Digraph g = f.net.graph();
    g.set_label(f.x, "y");
    g.set_label(f.y, "x");
    Network twin = Network::from_digraph(std::move(g));
    CHECK_FALSE(bfs_distance(f.net, twin, MoveKind::Head, std::nullopt, 0).has_value());
    // distance-1 restricted moves still connect these two
    auto d1 = bfs_distance(f.net, twin, MoveKind::Head, 1, 6);
    CHECK(d1.has_value());
}

TEST_CASE("move_graph_components: (3,1) connected, d1 split, d2 connected") {
    auto full = move_graph_components(3, 1, MoveKind::Head, std::nullopt);
    CHECK(full.size() == 1);

    auto d1 = move_graph_components(3, 1, MoveKind::Head, 1);
    CHECK(d1.size() >= 2);

    auto d2 = move_graph_components(3, 1, MoveKind::Head, 2);
    CHECK(d2.size() == 1);
}

TEST_CASE("move_graph_components: tail moves do not connect (2,1)") {
    auto tails = move_graph_components(2, 1, MoveKind::Tail, std::nullopt);
    CHECK(tails.size() == tier_networks(2, 1).size());  // every network is isolated
}

TEST_CASE("exact_diameter: small tiers within the 6n+6k-4 bound") {
    int d21 = exact_diameter(2, 1, MoveKind::Head);
    CHECK(d21 >= 1);
    CHECK(d21 <= 6 * 2 + 6 * 1 - 4);

    int d31 = exact_diameter(3, 1, MoveKind::Head);
    CHECK(d31 >= 1);
    CHECK(d31 <= 6 * 3 + 6 * 1 - 4);

    CHECK_THROWS(exact_diameter(4, 0, MoveKind::Head));
}

TEST_CASE("bfs_distance budget guard raises BudgetError") {
    Network a = random_network(5, 2, 1);
    Network b = random_network(5, 2, 2);
    SearchLimits tiny{.max_states = 5};
    CHECK_THROWS_AS((void)bfs_distance(a, b, MoveKind::Head, std::nullopt, 30, tiny), BudgetError);
}
