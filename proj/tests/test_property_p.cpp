#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "treepack/error.hpp"
#include "treepack/generators.hpp"
#include "treepack/packing.hpp"
#include "treepack/property_p.hpp"

using namespace treepack;

namespace {

ForestDecomposition labelled(const Graph& g, int forests, const std::vector<std::vector<std::pair<int, int>>>& classes)
{
    ForestDecomposition d;
    d.forests = forests;
    d.label.assign(static_cast<std::size_t>(g.size()), 0);
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (auto [u, v] : classes[c])
            d.label[g.edge_id(u, v)] = static_cast<int>(c) + 1;
    return d;
}

// Independent re-check of a certificate: k spanning trees plus a forest F with (b) and (c).
bool oracle_accepts(const Graph& g, const PQuery& q, const ForestDecomposition& d)
{
    std::vector<int> lab(d.label.begin(), d.label.end());
    const int n = g.order();
    for (int c = 1; c <= q.k; ++c)
        if (!oracle::spanning_tree(n, oracle::label_class(g, lab, c)))
            return false;
    const auto f = oracle::label_class(g, lab, q.k + 1);
    if (!oracle::acyclic(n, f))
        return false;
    const auto fe = static_cast<long>(f.size());
    if (!(q.d * fe > static_cast<long>(q.d - 1) * (n - 1)))
        return false;
    return fe == n - 1 || oracle::largest_component_edges(n, f) >= q.d;
}

}  // namespace

TEST_CASE("query validation")
{
    CHECK_THROWS_AS(PQuery({0, 3}).validate(), InputError);
    CHECK_THROWS_AS(PQuery({1, 0}).validate(), InputError);
    CHECK_NOTHROW(PQuery({1, 1}).validate());
}

TEST_CASE("forest threshold is an exact integer test")
{
    // Petersen, d = 3: 6 edges sit exactly on (d-1)(n-1)/d = 6.
    CHECK_FALSE(forest_large_enough(3, 10, 6));
    CHECK(forest_large_enough(3, 10, 7));
    CHECK(forest_large_enough(4, 11, 8));   // 32 > 30
    CHECK_FALSE(forest_large_enough(4, 11, 7));
}

TEST_CASE("verify_certificate")
{
    const Graph k4 = complete(4);
    const auto good = labelled(k4, 2, {{{0, 1}, {1, 2}, {2, 3}}, {{0, 2}, {0, 3}, {1, 3}}});
    CHECK(verify_certificate(k4, {1, 3}, good));
    CHECK(oracle_accepts(k4, {1, 3}, good));

    const auto not_spanning = labelled(k4, 2, {{{0, 1}, {1, 2}}, {{0, 2}, {0, 3}, {1, 3}}});
    CHECK_FALSE(verify_certificate(k4, {1, 3}, not_spanning));

    // The drawn decomposition of H1 fails (c): 8 edges but components of at most 3.
    const Graph h1 = fixture_H1();
    const auto drawing = fixture_H1_drawing();
    ForestDecomposition drawn;
    drawn.forests = 3;
    drawn.label.assign(28, 0);
    for (int id : drawing.bold)
        drawn.label[id] = 1;
    for (int id : drawing.thin)
        drawn.label[id] = 2;
    for (int id : drawing.dashed)
        drawn.label[id] = 3;
    const auto check = verify_certificate(h1, {2, 4}, drawn);
    CHECK_FALSE(check.ok);
    CHECK_FALSE(check.reason.empty());
    CHECK(forest_large_enough(4, 11, 8));
    CHECK_FALSE(forest_has_big_component(h1, drawing.dashed, 4));
}

TEST_CASE("verify_certificate flips under mutations")
{
    std::mt19937_64 rng(41);
    int mutated = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 5);
        const Graph g = oracle::random_graph(n, 0.8, rng);
        const PQuery q{1, 2};
        const auto v = certify_P(g, q);
        if (v.status != PStatus::certified)
            continue;
        const auto& d = *v.decomposition;
        CHECK(verify_certificate(g, q, d));
        CHECK(oracle_accepts(g, q, d));
        for (int id = 0; id < g.size(); ++id) {
            for (int to = 0; to <= 2; ++to) {
                if (to == d.label[id])
                    continue;
                auto m = d;
                m.label[id] = to;
                ++mutated;
                CHECK(static_cast<bool>(verify_certificate(g, q, m)) == oracle_accepts(g, q, m));
            }
        }
    }
    CHECK(mutated > 100);
}

TEST_CASE("sufficiency via fractional packing")
{
    CHECK(sufficient_by_nuf(complete(6), {2, 5}).status == PStatus::certified);
    const auto p = sufficient_by_nuf(petersen(), {1, 3});
    CHECK(p.status == PStatus::unknown);
    REQUIRE(p.nu_f_bound);
    CHECK(*p.nu_f_bound == Rational(5, 3));
    CHECK(sufficient_by_nuf(disjoint_union(complete(4), complete(4)), {1, 2}).status == PStatus::unknown);
}

TEST_CASE("constructive certificates")
{
    const auto k4 = certify_P(complete(4), {1, 3});
    CHECK(k4.status == PStatus::certified);
    CHECK(verify_certificate(complete(4), {1, 3}, *k4.decomposition));

    const auto k10 = certify_P(complete(10), {3, 9});
    CHECK(k10.status == PStatus::certified);
    CHECK(oracle_accepts(complete(10), {3, 9}, *k10.decomposition));

    CHECK(certify_P(petersen(), {1, 3}).status == PStatus::unknown);
}

TEST_CASE("H1 does have P(2,4) through a different split of its edges")
{
    // ν_f(H1) = 14/5 > 2 + 3/4, and an explicit witness exists.
    const Graph h1 = fixture_H1();
    CHECK(oracle::nu_f(h1) == Rational(14, 5));
    const auto v = certify_P(h1, {2, 4});
    REQUIRE(v.status == PStatus::certified);
    CHECK(oracle_accepts(h1, {2, 4}, *v.decomposition));

    const auto e = refute_exhaustive(h1, {2, 4});
    CHECK(e.status == PStatus::certified);
    CHECK(oracle_accepts(h1, {2, 4}, *e.decomposition));

    CheckOptions all;
    all.cross_check = true;
    CHECK(check_P(h1, {2, 4}, all).status == PStatus::certified);
}

TEST_CASE("counting refutations")
{
    const auto p = refute_by_counting(petersen(), {1, 3});
    CHECK(p.status == PStatus::refuted);
    REQUIRE(p.refutation);
    CHECK(p.refutation->kind == RefutationKind::counting);

    CHECK(refute_by_counting(complete(5), {2, 4}).status == PStatus::refuted);
    CHECK(refute_by_counting(complete_bipartite(7, 7), {3, 7}).status == PStatus::refuted);
    CHECK(refute_by_counting(complete_bipartite(5, 5), {2, 5}).status == PStatus::refuted);
    CHECK(refute_by_counting(complete(4), {1, 3}).status == PStatus::unknown);
    CHECK(refute_by_counting(disjoint_union(complete(4), complete(4)), {1, 1}).status == PStatus::refuted);

    // K_{2k+1} leaves k edges after k trees, and k <= 2k - 1.
    for (int k = 1; k <= 5; ++k)
        CHECK(refute_by_counting(complete(2 * k + 1), {k, 2 * k}).status == PStatus::refuted);
}

TEST_CASE("bipartition budget refutation")
{
    VertexSet u;
    for (int v = 0; v < 16; ++v)
        u.push_back(v);
    const auto h2 = refute_by_bipartition_budget(fixture_H2(), {7, 15}, u);
    CHECK(h2.status == PStatus::refuted);
    REQUIRE(h2.refutation);
    CHECK(h2.refutation->number("bound") == 29);
    CHECK(h2.refutation->number("lhs") == 435);
    CHECK(h2.refutation->number("rhs") == 448);
    CHECK(h2.refutation->side == u);

    // build_B(n, δ+1, k−1) has only k−1 cross edges.
    const auto b = refute_by_bipartition_budget(build_B(25, 11, 2), {3, 10}, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
    CHECK(b.status == PStatus::refuted);

    CHECK(refute_by_bipartition_budget(complete(4), {1, 3}, {0}).status == PStatus::unknown);
    CHECK_THROWS_AS(refute_by_bipartition_budget(complete(4), {1, 3}, {}), InputError);
    CHECK_THROWS_AS(refute_by_bipartition_budget(complete(4), {1, 3}, {0, 1, 2, 3}), InputError);
}

TEST_CASE("exhaustive search")
{
    CHECK(refute_exhaustive(petersen(), {1, 3}).status == PStatus::refuted);
    const auto k4 = refute_exhaustive(complete(4), {1, 3});
    CHECK(k4.status == PStatus::certified);
    CHECK(verify_certificate(complete(4), {1, 3}, *k4.decomposition));
    CHECK(refute_exhaustive(petersen(), {1, 2}, 1).status == PStatus::unknown);
}

TEST_CASE("pipeline on the reference graphs")
{
    const auto h2 = check_P(fixture_H2(), {7, 15});
    CHECK(h2.status == PStatus::refuted);
    CHECK(h2.stage == "bipartition_budget");
    CHECK(h2.refutation->number("bound") == 29);

    for (auto [g, q] : {std::pair{petersen(), PQuery{1, 3}}, std::pair{complete(5), PQuery{2, 4}},
                        std::pair{complete_bipartite(5, 5), PQuery{2, 5}}}) {
        const auto v = check_P(g, q);
        CHECK(v.status == PStatus::refuted);
        CHECK(v.stage == "counting");
    }
    CHECK(check_P(complete(10), {3, 9}).status == PStatus::certified);

    VertexSet u;
    for (int v = 0; v < 16; ++v)
        u.push_back(v);
    CheckOptions explicit_side;
    explicit_side.bipartition = u;
    CHECK(check_P(fixture_H2(), {7, 15}, explicit_side).status == PStatus::refuted);
}

TEST_CASE("soundness against the definition on tiny graphs")
{
    std::mt19937_64 rng(43);
    int decided = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 3);
        const Graph g = oracle::random_graph(n, 0.75, rng);
        if (g.size() > 9)
            continue;
        for (int k = 1; k <= 2; ++k)
            for (int d = 2; d <= 3; ++d) {
                const PQuery q{k, d};
                const bool truth = oracle::has_P(g, k, d);
                CheckOptions all;
                all.cross_check = true;
                const auto v = check_P(g, q, all);
                REQUIRE(v.status != PStatus::unknown);
                CHECK((v.status == PStatus::certified) == truth);
                ++decided;
            }
    }
    CHECK(decided > 100);
}

TEST_CASE("stage agreement on random small graphs")
{
    std::mt19937_64 rng(47);
    int samples = 0;
    while (samples < 200) {
        const int n = 3 + static_cast<int>(rng() % 5);
        const Graph g = oracle::random_graph(n, 0.4 + 0.5 * static_cast<double>(rng() % 100) / 100.0, rng);
        if (g.size() > 15)
            continue;
        ++samples;
        for (int k = 1; k <= 2; ++k)
            for (int d = 2; d <= 3; ++d) {
                const PQuery q{k, d};
                const auto ex = refute_exhaustive(g, q);
                REQUIRE(ex.status != PStatus::unknown);
                if (refute_by_counting(g, q).status == PStatus::refuted)
                    CHECK(ex.status == PStatus::refuted);
                for (const auto& side : bipartition_candidates(g))
                    if (refute_by_bipartition_budget(g, q, side).status == PStatus::refuted)
                        CHECK(ex.status == PStatus::refuted);
                if (certify_P(g, q).status == PStatus::certified)
                    CHECK(ex.status == PStatus::certified);
                if (is_connected(g) && nu_f_exact(g).ratio > Rational(k) + Rational(d - 1, d))
                    CHECK(ex.status == PStatus::certified);
            }
    }
}

TEST_CASE("every graph with δ >= 1 has P(0, δ)")
{
    // Checked constructively: a spanning forest per component.
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 12);
        const Graph g = oracle::random_graph(n, 0.3, rng);
        const int delta = g.min_degree();
        if (delta < 1)
            continue;
        const EdgeSet f = max_spanning_forest(g);
        CHECK(is_forest(g, f));
        CHECK(forest_large_enough(delta, n, static_cast<std::int64_t>(f.size())));
        if (!is_connected(g)) {
            std::vector<std::pair<int, int>> fe;
            for (int id : f)
                fe.emplace_back(g.edge(id).u, g.edge(id).v);
            oracle::Uf uf(n);
            for (auto [a, b] : fe)
                uf.join(a, b);
            std::vector<int> count(static_cast<std::size_t>(n), 0);
            for (auto [a, b] : fe)
                ++count[uf.find(a)];
            for (int v = 0; v < n; ++v)
                if (uf.find(v) == v)
                    CHECK(count[v] >= delta);
        }
    }
}
