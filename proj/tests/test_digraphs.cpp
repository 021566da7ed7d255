#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "mlag/digraphs.hpp"
#include "mlag/laguerre.hpp"

using namespace mlag;

namespace {

// Partial injections on n elements: sum_k C(n,k)^2 k!.
long long partial_injection_count(int n) {
    const auto binom = pascal_rows(n);
    mpz_class total = 0;
    mpz_class fact = 1;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) fact *= k;
        total += binom[n][k] * binom[n][k] * fact;
    }
    return total.get_si();
}

}  // namespace

TEST_CASE("enumeration counts") {
    CHECK(count_digraphs({{1}}) == 2);
    CHECK(count_digraphs({{2}}) == 7);
    // Single-layer enumeration is exactly the partial injections.
    for (int n = 0; n <= 5; ++n)
        CHECK(count_digraphs({{n}}) == partial_injection_count(n));
    // Two layers of one vertex each: of the 7 partial injections on {a,b},
    // {b->a} and {a->b, b->a} use the inadmissible downward edge.
    CHECK(count_digraphs({{1, 1}}) == 5);
}

TEST_CASE("no duplicates, invariants hold for every digraph") {
    const LayerGraphSpec spec{{2, 1, 2}};
    std::set<std::vector<int>> seen;
    long long count = 0;
    enumerate_digraphs(spec, {}, [&](const LaguerreDigraph& g) {
        ++count;
        CHECK(seen.insert(g.successor).second);
        // injective where defined
        std::set<int> targets;
        int undefined = 0;
        for (int v = 0; v < spec.vertex_count(); ++v) {
            const int s = g.successor[v];
            if (s < 0) {
                ++undefined;
                continue;
            }
            CHECK(targets.insert(s).second);
            CHECK(spec.layer_of(s) >= spec.layer_of(v));  // layer-monotone
        }
        CHECK(digraph_stats(spec, g).paths == undefined);
    });
    CHECK(count == static_cast<long long>(seen.size()));
}

TEST_CASE("stats examples") {
    const LayerGraphSpec two{{2}};
    CHECK(digraph_stats(two, {{-1, -1}}).paths == 2);
    CHECK(digraph_stats(two, {{-1, -1}}).cycles == std::vector<int>{0});
    CHECK(digraph_stats(two, {{1, -1}}).paths == 1);  // edge 1 -> 2, one path
    CHECK(digraph_stats(two, {{1, 0}}).paths == 0);   // 2-cycle
    CHECK(digraph_stats(two, {{1, 0}}).cycles == std::vector<int>{1});

    const LayerGraphSpec one{{1}};
    CHECK(digraph_stats(one, {{0}}).paths == 0);  // loop
    CHECK(digraph_stats(one, {{0}}).cycles == std::vector<int>{1});
}

TEST_CASE("combinatorial polynomial: frozen small cases") {
    CHECK(combinatorial_laguerre({{1}}) == parse_text("x + b1", 2));
    // 7 digraphs on one layer of 2: x^2 + 2x + 2 b1 x + b1^2 + b1
    CHECK(combinatorial_laguerre({{2}}) ==
          parse_text("x^2 + 2*x*b1 + 2*x + b1^2 + b1", 2));
    // 5 admissible digraphs across two layers of 1
    CHECK(combinatorial_laguerre({{1, 1}}) ==
          parse_text("x^2 + x*b1 + x*b2 + x + b1*b2", 3));
}

TEST_CASE("oracle equality with the explicit formula") {
    for (int r = 1; r <= 2; ++r)
        for (const auto& n : multi_indices_up_to(r, 4))
            CHECK(combinatorial_laguerre({n}) == explicit_laguerre(n));
    for (const auto& n : multi_indices_up_to(3, 3))
        CHECK(combinatorial_laguerre({n}) == explicit_laguerre(n));
}

TEST_CASE("x = beta = 1 evaluation counts the digraphs") {
    for (const auto& n : multi_indices_up_to(2, 4)) {
        const auto p = combinatorial_laguerre({n});
        std::vector<mpq_class> ones(p.num_vars(), 1);
        CHECK(eval_exact(p, ones) == mpq_class(static_cast<long>(count_digraphs({n}))));
    }
}

TEST_CASE("enumeration caps") {
    CHECK_THROWS_AS(count_digraphs({{11}}, {10, 10'000'000}), EnumerationCapExceeded);
    CHECK_THROWS_AS(count_digraphs({{4}}, {10, 5}), EnumerationCapExceeded);
}
