#include "treepack/generators.hpp"

#include <array>
#include <set>
#include <string>

#include "treepack/error.hpp"

namespace treepack {

namespace {

void add_clique(std::vector<Edge>& edges, int first, int count)
{
    for (int i = first; i < first + count; ++i)
        for (int j = i + 1; j < first + count; ++j)
            edges.push_back({i, j});
}

// Dashed, bold, thin, in that order.
constexpr std::array<std::pair<int, int>, 8> kH1Dashed{{{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}, {8, 9}, {9, 10}}};
constexpr std::array<std::pair<int, int>, 10> kH1Bold{
    {{1, 3}, {0, 3}, {0, 2}, {3, 8}, {8, 10}, {7, 10}, {5, 7}, {5, 9}, {4, 7}, {4, 6}}};
constexpr std::array<std::pair<int, int>, 10> kH1Thin{
    {{1, 4}, {4, 10}, {6, 10}, {6, 9}, {7, 9}, {2, 5}, {2, 8}, {0, 8}, {3, 10}, {2, 9}}};

}  // namespace

Graph complete(int n)
{
    if (n <= 0)
        throw InputError("complete graph needs n >= 1");
    std::vector<Edge> edges;
    add_clique(edges, 0, n);
    return Graph(n, std::span<const Edge>(edges));
}

Graph complete_bipartite(int a, int b)
{
    if (a <= 0 || b <= 0)
        throw InputError("complete bipartite graph needs positive sides");
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            edges.push_back({i, a + j});
    return Graph(a + b, std::span<const Edge>(edges));
}

Graph petersen()
{
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i)
        edges.push_back({std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5)});
    for (int i = 0; i < 5; ++i) {
        const int a = 5 + i;
        const int b = 5 + (i + 2) % 5;
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    for (int i = 0; i < 5; ++i)
        edges.push_back({i, i + 5});
    return Graph(10, std::span<const Edge>(edges));
}

Graph disjoint_union(const Graph& g, const Graph& h)
{
    std::vector<Edge> edges = g.edges();
    const int shift = g.order();
    for (const auto& e : h.edges())
        edges.push_back({e.u + shift, e.v + shift});
    return Graph(g.order() + h.order(), std::span<const Edge>(edges));
}

Graph build_B(int n, int s, int k)
{
    if (s < 1 || k < 0)
        throw InputError("build_B needs s >= 1 and k >= 0");
    if (n < s + k)
        throw InputError("build_B needs n >= s + k (n=" + std::to_string(n) + ", s=" + std::to_string(s) +
                         ", k=" + std::to_string(k) + ")");
    std::vector<Edge> edges;
    add_clique(edges, 0, s);
    add_clique(edges, s, n - s);
    for (int j = 0; j < k; ++j)
        edges.push_back({0, s + j});
    return Graph(n, std::span<const Edge>(edges));
}

Graph build_G_family(int n, int s, int k, std::span<const std::pair<int, int>> cross)
{
    if (s < 1 || k < 0 || n < s + k)
        throw InputError("build_G_family needs s >= 1, k >= 0, n >= s + k");
    if (static_cast<int>(cross.size()) != k)
        throw InputError("build_G_family needs exactly k cross pairs");
    std::vector<Edge> edges;
    add_clique(edges, 0, s);
    add_clique(edges, s, n - s);
    std::set<std::pair<int, int>> seen;
    for (const auto& [i, j] : cross) {
        if (i < 0 || i >= s || j < s || j >= n)
            throw InputError("cross pair (" + std::to_string(i) + "," + std::to_string(j) +
                             ") violates the sides");
        if (!seen.insert({i, j}).second)
            throw InputError("duplicate cross pair");
        edges.push_back({i, j});
    }
    return Graph(n, std::span<const Edge>(edges));
}

Graph fixture_H1()
{
    std::vector<std::pair<int, int>> edges(kH1Dashed.begin(), kH1Dashed.end());
    edges.insert(edges.end(), kH1Bold.begin(), kH1Bold.end());
    edges.insert(edges.end(), kH1Thin.begin(), kH1Thin.end());
    return Graph(11, std::span<const std::pair<int, int>>(edges));
}

H1Drawing fixture_H1_drawing()
{
    H1Drawing out;
    int id = 0;
    for (std::size_t i = 0; i < kH1Dashed.size(); ++i)
        out.dashed.push_back(id++);
    for (std::size_t i = 0; i < kH1Bold.size(); ++i)
        out.bold.push_back(id++);
    for (std::size_t i = 0; i < kH1Thin.size(); ++i)
        out.thin.push_back(id++);
    return out;
}

Graph fixture_H2()
{
    std::vector<Edge> edges;
    for (int i = 0; i < 16; ++i)
        for (int j = i + 1; j < 16; ++j)
            if (!((i == 0 && j == 1) || (i == 2 && j == 3)))
                edges.push_back({i, j});
    add_clique(edges, 16, 17);
    for (int i = 0; i < 7; ++i)
        edges.push_back({i, 16});
    return Graph(33, std::span<const Edge>(edges));
}

}  // namespace treepack
