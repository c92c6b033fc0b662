#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "inversion/constructions.hpp"
#include "inversion/gf2.hpp"
#include "inversion/solvers.hpp"

using namespace inversion;

TEST_CASE("ceil_log2") {
    CHECK(ceil_log2(1) == 0);
    CHECK(ceil_log2(2) == 1);
    CHECK(ceil_log2(3) == 2);
    CHECK(ceil_log2(4) == 2);
    CHECK(ceil_log2(9) == 4);
    CHECK(ceil_log2(65) == 7);
}

TEST_CASE("oracle on base cases") {
    CHECK(inv_exact_oracle(transitive(6), 3).value == 0);
    for (int p : {3, 4, 5, 6}) {
        CertifiedValue cv = inv_exact_oracle(directed_cycle(p), 3);
        CHECK(cv.value == 1);
        CHECK(cv.found);
        CHECK(is_acyclic(apply_family(directed_cycle(p), cv.family)));
    }
    CertifiedValue r = inv_exact_oracle(r5(), 4);
    CHECK(r.value == 2);
    REQUIRE(r.exhaustion.has_value());
    CHECK(r.exhaustion->examined > 0);
}

TEST_CASE("oracle reports exhaustion when the limit is too small") {
    CertifiedValue cv = inv_exact_oracle(r5(), 1);
    CHECK_FALSE(cv.found);
    CHECK(cv.value == 1);
    REQUIRE(cv.exhaustion.has_value());
    CHECK(cv.exhaustion->examined == cv.exhaustion->candidates);
}

TEST_CASE("oracle guards") {
    CHECK_THROWS_AS(inv_exact_oracle(transitive(15), 1), ResourceError);
    CHECK_THROWS_AS(inv_exact_oracle(random_tournament(10, 1), 3, /*budget=*/50),
                    ResourceError);
}

TEST_CASE("exact tournament solver matches the oracle") {
    enumerate_tournaments(4, /*labeled=*/true, [&](const OrientedGraph& t) {
        CHECK(inv_exact(t).value == inv_exact_oracle(t, 3).value);
    });
    for (uint64_t seed = 0; seed < 30; ++seed) {
        OrientedGraph t = random_tournament(6, seed);
        CertifiedValue e = inv_exact(t);
        CHECK(e.value == inv_exact_oracle(t, 4).value);
        CHECK(is_acyclic(apply_family(t, e.family)));
        CHECK(e.family.length() == e.value);
    }
    CHECK_THROWS_AS(inv_exact(directed_cycle(4)), std::domain_error);
    CHECK_THROWS_AS(inv_exact(random_tournament(10, 0)), ResourceError);
}

TEST_CASE("known inversion numbers") {
    CHECK(inv_exact(r5()).value == 2);
    CHECK(inv_exact(transitive(9)).value == 0);
    CHECK(inv_exact(lex_product(transitive(2), directed_cycle(3))).value == 2);
    for (int n = 1; n <= 7; ++n) CHECK(inv_exact(q_tournament(n)).value == (n - 1) / 2);
}

TEST_CASE("inv_sigma upper-bounds inv and attains it at some ordering") {
    for (uint64_t seed = 0; seed < 15; ++seed) {
        OrientedGraph t = random_tournament(5, seed);
        int exact = inv_exact(t).value;
        std::vector<int> seq{0, 1, 2, 3, 4};
        int best = 99;
        do {
            CertifiedValue cv = inv_sigma(t, Ordering::from_sequence(seq));
            CHECK(cv.value >= exact);
            best = std::min(best, cv.value);
        } while (std::next_permutation(seq.begin(), seq.end()));
        CHECK(best == exact);
    }
}

TEST_CASE("greedy construction decycles within the logarithmic-deficit bound") {
    for (int n : {4, 8, 16, 33, 64}) {
        for (uint64_t seed = 0; seed < 10; ++seed) {
            OrientedGraph t = random_tournament(n, seed * 1000 + n);
            CertifiedValue cv = greedy_upper_bound(t);
            CHECK(is_acyclic(apply_family(t, cv.family)));
            CHECK(cv.value <= n - ceil_log2(n + 1));
            CHECK(cv.value == cv.family.length());
        }
    }
    CHECK(greedy_upper_bound(transitive(16)).value == 0);
    CHECK_THROWS_AS(greedy_upper_bound(directed_cycle(4)), std::domain_error);
}

TEST_CASE("greedy bounds the exact value") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        OrientedGraph t = random_tournament(7, seed);
        CHECK(inv_exact(t).value <= greedy_upper_bound(t).value);
    }
}

TEST_CASE("cycle transversal value is minimal and its witness works") {
    CHECK(tau(transitive(5)).value == 0);
    CHECK(tau(directed_cycle(4)).value == 1);
    CHECK(tau(r5()).value == 2);
    for (uint64_t seed = 0; seed < 40; ++seed) {
        OrientedGraph d = random_oriented_graph(7, seed);
        CertifiedValue cv = tau(d);
        // witness deletes to acyclic
        Bitset keep(7);
        for (int v = 0; v < 7; ++v) keep.set(v);
        for (int v : cv.vertex_witness) keep.reset(v);
        CHECK(is_acyclic_induced(d, keep));
        // minimality: every smaller subset leaves a cycle
        for (uint32_t mask = 0; mask < (1u << 7); ++mask) {
            if (__builtin_popcount(mask) >= cv.value) continue;
            Bitset k2(7);
            for (int v = 0; v < 7; ++v)
                if (!((mask >> v) & 1)) k2.set(v);
            CHECK_FALSE(is_acyclic_induced(d, k2));
        }
    }
    CHECK_THROWS_AS(tau(random_tournament(17, 0)), ResourceError);
}

TEST_CASE("arc transversal value is minimal and its witness works") {
    CHECK(tau_prime(transitive(5)).value == 0);
    CHECK(tau_prime(directed_cycle(4)).value == 1);
    for (uint64_t seed = 0; seed < 25; ++seed) {
        OrientedGraph d = random_oriented_graph(5, seed);
        CertifiedValue cv = tau_prime(d);
        OrientedGraph pruned = d;
        for (auto [u, v] : cv.arc_witness) pruned.remove_arc(u, v);
        CHECK(is_acyclic(pruned));
        // minimality by brute force over all arc subsets of smaller size
        auto arcs = d.arcs();
        bool smaller_works = false;
        for (uint32_t mask = 0; mask < (1u << arcs.size()); ++mask) {
            if (__builtin_popcount(mask) >= cv.value) continue;
            OrientedGraph h = d;
            for (size_t i = 0; i < arcs.size(); ++i)
                if ((mask >> i) & 1) h.remove_arc(arcs[i].first, arcs[i].second);
            if (is_acyclic(h)) smaller_works = true;
        }
        CHECK_FALSE(smaller_works);
    }
    CHECK_THROWS_AS(tau_prime(random_tournament(21, 0)), ResourceError);
}

TEST_CASE("bounds report holds on random inputs") {
    for (uint64_t seed = 0; seed < 12; ++seed) {
        OrientedGraph d = random_oriented_graph(6, seed);
        BoundsReport rep = check_bounds(d);
        CHECK(rep.inv_le_tau_prime);
        CHECK(rep.inv_le_two_tau);
        CHECK(rep.deletion_monotone);
        CHECK(rep.inv.value <= rep.tau_prime_value.value);
        CHECK(rep.inv.value <= 2 * rep.tau_value.value);
    }
}

TEST_CASE("splitting off the shortest cycle keeps the overhead bounded") {
    int tested = 0;
    for (uint64_t seed = 0; tested < 40; ++seed) {
        OrientedGraph d = random_oriented_graph(9, seed);
        if (is_acyclic(d)) continue;
        ++tested;
        Cycle c = shortest_cycle(d);
        Bitset cs(9);
        for (int v : c.vertices) cs.set(v);
        OrientedGraph rest = delete_vertices(d, cs).graph;
        CertifiedValue sub = inv_exact_oracle(rest, tau_prime(rest).value);
        SplitResult sr = split_off_cycle(d, sub.family);
        CHECK(is_acyclic(apply_family(d, sr.family)));
        CHECK(sr.overhead <= (c.length() % 3 == 0 ? 7 : 10));
        CHECK(sr.family.length() == sub.family.length() + sr.overhead);
    }
}

TEST_CASE("splitting rejects a family that does not decycle the rest") {
    OrientedGraph d = dijoin(directed_cycle(3), directed_cycle(3));
    // shortest cycle is the left triangle; an empty family leaves the right
    // one cyclic
    InversionFamily empty;
    CHECK_THROWS_AS(split_off_cycle(d, empty), CertificateError);
}

TEST_CASE("solver certificates always carry timing and method tags") {
    CertifiedValue cv = inv_exact(r5());
    CHECK(cv.method == "gram");
    CHECK(cv.elapsed >= 0.0);
    CHECK(inv_exact_oracle(r5(), 2).method == "oracle");
    CHECK(tau(r5()).method == "tau-subsets");
}
