#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "algpers/complexes.hpp"
#include "algpers/verify.hpp"

using namespace algpers;

namespace {

// All nonempty subsets of [1, n] as faces.
std::vector<Face> all_subsets(int n)
{
    std::vector<Face> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> v;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) {
                v.push_back(i + 1);
            }
        }
        out.emplace_back(std::move(v));
    }
    return out;
}

bool is_clique(const Graph& g, const Face& f)
{
    for (int a : f) {
        for (int b : f) {
            if (a < b && !g.adjacent(a, b)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

TEST(Face, ValidatesAndOrders)
{
    EXPECT_THROW(Face({2, 1}), std::invalid_argument);
    EXPECT_THROW(Face({0, 1}), std::invalid_argument);
    EXPECT_EQ(Face::from_unsorted({3, 1, 3}), Face({1, 3}));
    EXPECT_EQ(Face({1, 2, 3}).without_index(0), Face({2, 3}));
    EXPECT_EQ(Face({1, 3}).with(2), Face({1, 2, 3}));
    EXPECT_EQ(Face({1, 2}).to_string(), "{1,2}");
    EXPECT_EQ(Face().dim(), -1);
}

TEST(Face, ColexOrdersByLargestVertexFirst)
{
    std::vector<Face> edges{{1, 4}, {2, 3}, {1, 2}, {1, 3}};
    std::sort(edges.begin(), edges.end(), ColexLess{});
    EXPECT_EQ(edges, (std::vector<Face>{{1, 2}, {1, 3}, {2, 3}, {1, 4}}));
}

TEST(SimplicialComplex, ClosureAndValidation)
{
    const auto k = SimplicialComplex::closure(4, {{1, 2, 3}, {1, 4}});
    EXPECT_EQ(k.size(), 9u);
    EXPECT_EQ(k.dimension(), 2);
    EXPECT_EQ(k.faces_of_dim(1), (std::vector<Face>{{1, 2}, {1, 3}, {2, 3}, {1, 4}}));
    EXPECT_EQ(k.faces_of_dim(-1), std::vector<Face>{Face()});
    EXPECT_THROW(SimplicialComplex::from_closed(3, {{1, 2}}), std::invalid_argument);
    EXPECT_THROW(SimplicialComplex::closure(2, {{1, 3}}), std::invalid_argument);
    EXPECT_TRUE(SimplicialComplex::closure(3, {{1, 2}}).is_subcomplex_of(k));
}

TEST(SimplicialComplex, EmptyComplex)
{
    const auto k = SimplicialComplex::closure(3, {});
    EXPECT_TRUE(k.empty());
    EXPECT_EQ(k.dimension(), -1);
    EXPECT_TRUE(maximal_faces(k).empty());
    EXPECT_EQ(minimal_nonfaces(k), (std::vector<Face>{{1}, {2}, {3}}));
}

TEST(SimplicialComplex, MaximalFacesAndNonfacesMatchEnumeration)
{
    verify::Rng rng(11);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = verify::uniform(rng, 1, 7);
        const auto k = verify::random_complex(rng, n);
        std::vector<Face> maximal;
        std::vector<Face> nonfaces;
        const auto subsets = all_subsets(n);
        for (const auto& f : subsets) {
            if (k.contains(f)) {
                const bool is_max = std::none_of(subsets.begin(), subsets.end(), [&](const Face& g) {
                    return k.contains(g) && g.size() > f.size() && f.is_subset_of(g);
                });
                if (is_max) {
                    maximal.push_back(f);
                }
            } else {
                const bool is_min = std::all_of(subsets.begin(), subsets.end(), [&](const Face& g) {
                    return !(g.size() < f.size() && g.is_subset_of(f)) || k.contains(g);
                });
                if (is_min) {
                    nonfaces.push_back(f);
                }
            }
        }
        auto got_max = maximal_faces(k);
        auto got_non = minimal_nonfaces(k);
        std::sort(got_max.begin(), got_max.end());
        std::sort(got_non.begin(), got_non.end());
        std::sort(maximal.begin(), maximal.end());
        std::sort(nonfaces.begin(), nonfaces.end());
        EXPECT_EQ(got_max, maximal);
        EXPECT_EQ(got_non, nonfaces);
    }
}

TEST(CliqueComplex, MatchesSubsetEnumeration)
{
    verify::Rng rng(12);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = verify::uniform(rng, 1, 8);
        const Graph g = verify::random_graph(rng, n);
        std::set<Face> expect;
        for (const auto& f : all_subsets(n)) {
            if (is_clique(g, f)) {
                expect.insert(f);
            }
        }
        EXPECT_EQ(clique_complex(g).faces(), expect);
        // The 1-skeleton of a clique complex is the graph again.
        EXPECT_EQ(one_skeleton(clique_complex(g)).edges(), g.edges());
    }
}

TEST(CliqueComplex, DimensionCap)
{
    Graph g(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}});
    EXPECT_EQ(clique_complex(g).dimension(), 2);
    EXPECT_EQ(clique_complex(g, 1).dimension(), 1);
    EXPECT_EQ(clique_complex(g, 1).size(), 8u);
}

TEST(Graph, RejectsLoopsAndRange)
{
    Graph g(3);
    EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
    EXPECT_THROW(g.add_edge(1, 4), std::invalid_argument);
    g.add_edge(2, 1);
    EXPECT_TRUE(g.adjacent(1, 2));
    EXPECT_TRUE(g.adjacent(2, 1));
}

TEST(FullSubcomplex, KeepsFacesInsideW)
{
    const auto k = SimplicialComplex::closure(4, {{1, 2, 3}, {1, 4}});
    const auto sub = full_subcomplex(k, Face({2, 3, 4}));
    EXPECT_EQ(sub.faces(), (std::set<Face>{{2}, {3}, {4}, {2, 3}}));
}

TEST(DistanceMatrix, Validation)
{
    EXPECT_THROW(DistanceMatrix(2, {0, 1, 2, 0}), std::invalid_argument);
    EXPECT_THROW(DistanceMatrix(2, {1, 1, 1, 0}), std::invalid_argument);
    EXPECT_THROW(DistanceMatrix(2, {0, -1, -1, 0}), std::invalid_argument);
    EXPECT_THROW(DistanceMatrix(2, {0, NAN, NAN, 0}), std::invalid_argument);
    EXPECT_THROW(DistanceMatrix(2, {0, 1, 1}), std::invalid_argument);
    const DistanceMatrix d(2, {0, 3, 3, 0});
    EXPECT_EQ(d.between(2, 1), 3);
}

TEST(VietorisRips, ThreePointSteps)
{
    const double r = 2 * std::sqrt(2.0);
    const auto f = vr_filtration(DistanceMatrix::from_rows({{0, 2, 2}, {2, 0, r}, {2, r, 0}}));
    ASSERT_EQ(f.size(), 3u);
    EXPECT_EQ(f.parameters()[0], 0.0);
    EXPECT_EQ(f.parameters()[1], 1.0);
    EXPECT_NEAR(f.parameters()[2], std::sqrt(2.0), 1e-12);
    EXPECT_EQ(f[0].complex.size(), 3u);
    EXPECT_EQ(f[1].complex.faces_of_dim(1), (std::vector<Face>{{1, 2}, {1, 3}}));
    EXPECT_EQ(f[2].complex.faces_of_dim(2), std::vector<Face>{Face({1, 2, 3})});
    EXPECT_EQ(*f.step_at(1.2), 1u);
    EXPECT_FALSE(f.step_at(-1).has_value());
}

TEST(VietorisRips, ClosedThresholdMatchesBruteForce)
{
    verify::Rng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = verify::uniform(rng, 1, 6);
        const auto d = verify::random_distances(rng, n);
        const auto f = vr_filtration(d);
        std::set<double> crit{0.0};
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                crit.insert(d.between(i, j) / 2);
            }
        }
        EXPECT_EQ(f.parameters(), std::vector<double>(crit.begin(), crit.end()));
        for (const auto& step : f.steps()) {
            std::set<Face> expect;
            for (const auto& face : all_subsets(n)) {
                bool in = true;
                for (int a : face) {
                    for (int b : face) {
                        in = in && (a >= b || d.between(a, b) / 2 <= step.t);
                    }
                }
                if (in) {
                    expect.insert(face);
                }
            }
            EXPECT_EQ(step.complex.faces(), expect);
        }
    }
}

TEST(VietorisRips, MaxDimTruncates)
{
    const auto d = DistanceMatrix::from_rows({{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}});
    EXPECT_EQ(vr_filtration(d).steps().back().complex.dimension(), 3);
    EXPECT_EQ(vr_filtration(d, 1).steps().back().complex.dimension(), 1);
}

TEST(Filtration, RejectsNonMonotone)
{
    const auto a = SimplicialComplex::closure(2, {{1, 2}});
    const auto b = SimplicialComplex::closure(2, {{1}, {2}});
    EXPECT_THROW(Filtration(2, {{0, a}, {1, b}}), std::invalid_argument);
    EXPECT_THROW(Filtration(2, {{1, b}, {1, a}}), std::invalid_argument);
    EXPECT_THROW(Filtration(2, {}), std::invalid_argument);
}
