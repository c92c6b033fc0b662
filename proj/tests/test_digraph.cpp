#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

#include "inversion/constructions.hpp"
#include "inversion/digraph.hpp"
#include "inversion/io.hpp"

using namespace inversion;

namespace {

// independent cycle detector: plain recursive three-color DFS
bool has_cycle_dfs(const OrientedGraph& g) {
    const int n = g.order();
    std::vector<int> color(n, 0);
    std::function<bool(int)> visit = [&](int u) {
        color[u] = 1;
        for (int v = 0; v < n; ++v) {
            if (!g.arc(u, v)) continue;
            if (color[v] == 1) return true;
            if (color[v] == 0 && visit(v)) return true;
        }
        color[u] = 2;
        return false;
    };
    for (int u = 0; u < n; ++u)
        if (color[u] == 0 && visit(u)) return true;
    return false;
}

// independent girth: min over arcs (u,v) of 1 + BFS distance v -> u
int girth_bfs(const OrientedGraph& g) {
    const int n = g.order();
    int best = -1;
    for (auto [u, v] : g.arcs()) {
        std::vector<int> dist(n, -1);
        std::queue<int> q;
        dist[v] = 0;
        q.push(v);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y = 0; y < n; ++y)
                if (g.arc(x, y) && dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    q.push(y);
                }
        }
        if (dist[u] >= 0 && (best < 0 || dist[u] + 1 < best)) best = dist[u] + 1;
    }
    return best;
}

} // namespace

TEST_CASE("bitset basics") {
    Bitset b(70);
    CHECK(b.none());
    b.set(0);
    b.set(69);
    b.set(64);
    CHECK(b.count() == 3);
    CHECK(b.find_first() == 0);
    CHECK(b.find_next(0) == 64);
    CHECK(b.find_next(64) == 69);
    CHECK(b.find_next(69) == -1);
    CHECK(b.members() == std::vector<int>{0, 64, 69});
    b.reset(64);
    CHECK_FALSE(b.test(64));
    CHECK(b.test(69));
    CHECK_THROWS_AS(b.test(70), std::out_of_range);

    Bitset c = Bitset::of(70, {0, 1, 69});
    CHECK((b & c).count() == 2);
    CHECK((b | c).count() == 3);
    CHECK((b ^ c).members() == std::vector<int>{1});
    CHECK(b.and_not(c).none());
    CHECK(b.intersects(c));
    CHECK(b.is_subset_of(c));
    CHECK(b.dot(c) == false); // |{0,69}| even
    c.reset(0);
    CHECK(b.dot(c));
    CHECK_THROWS_AS(b.dot(Bitset(3)), std::invalid_argument);
}

TEST_CASE("graph construction rejects loops and digons") {
    OrientedGraph g(3);
    g.add_arc(0, 1);
    CHECK_THROWS_AS(g.add_arc(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_arc(2, 2), std::invalid_argument);
    CHECK(g.arc(0, 1));
    CHECK_FALSE(g.arc(1, 0));
    CHECK(g.out_degree(0) == 1);
    CHECK(g.in_degree(1) == 1);
    CHECK(g.arc_count() == 1);
    CHECK_FALSE(g.is_tournament());
    g.add_arc(1, 2);
    g.add_arc(2, 0);
    CHECK(g.is_tournament());
}

TEST_CASE("inversion is an involution and flips exactly the inside arcs") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        OrientedGraph g = random_oriented_graph(9, seed);
        Bitset x = Bitset::of(9, {1, 3, 4, 7});
        OrientedGraph h = invert(g, x);
        for (int u = 0; u < 9; ++u)
            for (int v = 0; v < 9; ++v) {
                if (x.test(u) && x.test(v))
                    CHECK(h.arc(u, v) == g.arc(v, u));
                else
                    CHECK(h.arc(u, v) == g.arc(u, v));
            }
        CHECK(invert(h, x) == g);
    }
}

TEST_CASE("family application is order-independent") {
    InversionFamily f;
    f.push(Bitset::of(8, {0, 1, 2, 5}));
    f.push(Bitset::of(8, {1, 2, 3}));
    f.push(Bitset::of(8, {0, 5, 6, 7}));
    InversionFamily permuted;
    permuted.push(f.sets[2]);
    permuted.push(f.sets[0]);
    permuted.push(f.sets[1]);
    for (uint64_t seed = 0; seed < 10; ++seed) {
        OrientedGraph g = random_tournament(8, seed);
        CHECK(apply_family(g, f) == apply_family(g, permuted));
    }
}

TEST_CASE("acyclicity agrees with an independent DFS") {
    for (uint64_t seed = 0; seed < 200; ++seed) {
        OrientedGraph g = random_oriented_graph(3 + int(seed % 8), seed, 1, 2);
        CHECK(is_acyclic(g) == !has_cycle_dfs(g));
    }
    CHECK(is_acyclic(transitive(6)));
    CHECK_FALSE(is_acyclic(directed_cycle(5)));
}

TEST_CASE("check_acyclic produces valid witnesses") {
    for (uint64_t seed = 0; seed < 100; ++seed) {
        OrientedGraph g = random_oriented_graph(7, seed);
        AcyclicityResult res = check_acyclic(g);
        if (res.acyclic) {
            REQUIRE(res.order.has_value());
            for (auto [u, v] : g.arcs()) CHECK(res.order->position[u] < res.order->position[v]);
        } else {
            REQUIRE(res.cycle.has_value());
            const auto& c = res.cycle->vertices;
            REQUIRE(c.size() >= 3);
            for (size_t i = 0; i < c.size(); ++i) CHECK(g.arc(c[i], c[(i + 1) % c.size()]));
        }
    }
}

TEST_CASE("is_acyclic_induced restricts correctly") {
    OrientedGraph g = directed_cycle(5);
    CHECK_FALSE(is_acyclic_induced(g, Bitset::of(5, {0, 1, 2, 3, 4})));
    CHECK(is_acyclic_induced(g, Bitset::of(5, {0, 1, 2, 3})));
    CHECK(is_acyclic_induced(g, Bitset(5)));
}

TEST_CASE("shortest_cycle matches BFS girth and is deterministic") {
    for (uint64_t seed = 0; seed < 150; ++seed) {
        OrientedGraph g = random_oriented_graph(4 + int(seed % 7), seed);
        if (is_acyclic(g)) {
            CHECK_THROWS_AS(shortest_cycle(g), NoCycleError);
            continue;
        }
        Cycle c = shortest_cycle(g);
        CHECK(c.length() == girth_bfs(g));
        for (int i = 0; i < c.length(); ++i)
            CHECK(g.arc(c.vertices[i], c.vertices[(i + 1) % c.length()]));
        // vertices distinct
        auto sorted = c.vertices;
        std::sort(sorted.begin(), sorted.end());
        CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
        // rooted at its smallest vertex, reproducible
        CHECK(c.vertices[0] == sorted[0]);
        CHECK(shortest_cycle(g).vertices == c.vertices);
        // shortest cycles are chordless
        for (int i = 0; i < c.length(); ++i)
            for (int j = 0; j < c.length(); ++j)
                if (j != (i + 1) % c.length() && j != i)
                    CHECK_FALSE(g.arc(c.vertices[i], c.vertices[j]));
    }
}

TEST_CASE("delete_vertices keeps labels in order") {
    OrientedGraph g = q_tournament(6);
    DeletionResult res = delete_vertices(g, Bitset::of(6, {1, 4}));
    CHECK(res.graph.order() == 4);
    CHECK(res.kept == std::vector<int>{0, 2, 3, 5});
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            if (a != b) CHECK(res.graph.arc(a, b) == g.arc(res.kept[a], res.kept[b]));
}

TEST_CASE("sink_reduction makes x a sink and touches nothing outside") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        OrientedGraph t = random_tournament(7, seed);
        auto [x_set, h] = sink_reduction(t, 3);
        CHECK(h.out_degree(3) == 0);
        CHECK(x_set.test(3));
        for (int u = 0; u < 7; ++u)
            for (int v = 0; v < 7; ++v)
                if (u != 3 && v != 3 && !(x_set.test(u) && x_set.test(v)))
                    CHECK(h.arc(u, v) == t.arc(u, v));
    }
    CHECK_THROWS_AS(sink_reduction(directed_cycle(4), 0), std::domain_error);
}

TEST_CASE("vertex_elimination makes x a sink and fixes the rest") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        OrientedGraph g = random_oriented_graph(8, seed);
        auto [fam, h] = vertex_elimination(g, 2);
        CHECK(fam.length() == 2);
        CHECK(h.out_degree(2) == 0);
        for (int u = 0; u < 8; ++u)
            for (int v = 0; v < 8; ++v)
                if (u != 2 && v != 2) CHECK(h.arc(u, v) == g.arc(u, v));
        CHECK(apply_family(g, fam) == h);
    }
}

TEST_CASE("text format round-trips") {
    for (uint64_t seed = 0; seed < 25; ++seed) {
        OrientedGraph g = random_oriented_graph(10, seed);
        std::stringstream ss;
        render_digraph(g, ss);
        CHECK(parse_digraph(ss) == g);
    }
}

TEST_CASE("parser reports line numbers and rejects bad input") {
    std::stringstream ok("# comment\nn 3\n\na 0 1\na 1 2\n");
    OrientedGraph g = parse_digraph(ok);
    CHECK(g.order() == 3);
    CHECK(g.arc_count() == 2);

    auto expect_error = [](const std::string& text, int line) {
        std::stringstream ss(text);
        try {
            parse_digraph(ss);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == line);
        }
    };
    expect_error("a 0 1\n", 1);             // arc before n
    expect_error("n 3\na 0 5\n", 2);        // out of range
    expect_error("n 3\na 0 1\na 0 1\n", 3); // duplicate
    expect_error("n 3\nz 0 1\n", 2);        // unknown directive
}

TEST_CASE("dot export mentions every arc") {
    OrientedGraph g = directed_cycle(3);
    std::stringstream ss;
    to_dot(g, ss);
    std::string s = ss.str();
    CHECK(s.find("digraph") != std::string::npos);
    CHECK(s.find("0 -> 1") != std::string::npos);
    CHECK(s.find("2 -> 0") != std::string::npos);
}
