#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "algpers/monomial_ideal.hpp"
#include "algpers/verify.hpp"

using namespace algpers;

namespace {

FactoredElement mono(std::vector<unsigned> e) { return FactoredElement(std::move(e)); }

// Minimal hitting sets by checking every subset of [1, n].
std::set<std::vector<int>> brute_transversals(int n, const std::vector<std::vector<int>>& edges)
{
    std::vector<unsigned> hitting;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        const bool hits = std::all_of(edges.begin(), edges.end(), [&](const std::vector<int>& e) {
            return std::any_of(e.begin(), e.end(), [&](int v) { return (mask >> (v - 1)) & 1u; });
        });
        if (hits) {
            hitting.push_back(mask);
        }
    }
    std::set<std::vector<int>> out;
    for (unsigned m : hitting) {
        const bool minimal = std::none_of(hitting.begin(), hitting.end(),
                                          [&](unsigned o) { return o != m && (o & m) == o; });
        if (minimal) {
            std::vector<int> w;
            for (int i = 0; i < n; ++i) {
                if ((m >> i) & 1u) {
                    w.push_back(i + 1);
                }
            }
            out.insert(w);
        }
    }
    return out;
}

} // namespace

TEST(FactoredElement, Arithmetic)
{
    const auto a = mono({1, 2, 0});
    const auto b = mono({0, 1, 3});
    EXPECT_EQ(lcm(a, b), mono({1, 2, 3}));
    EXPECT_EQ(gcd(a, b), mono({0, 1, 0}));
    EXPECT_EQ(a * b, mono({1, 3, 3}));
    EXPECT_TRUE(divides(gcd(a, b), a));
    EXPECT_FALSE(divides(a, b));
    EXPECT_EQ(quotient(mono({1, 3, 3}), a), b);
    EXPECT_THROW(quotient(a, b), std::invalid_argument);
    EXPECT_THROW(lcm(a, mono({1})), std::invalid_argument);
    EXPECT_EQ(a.degree(), 3u);
    EXPECT_EQ(a.support(), (std::vector<int>{1, 2}));
    EXPECT_EQ(a.flattened(), mono({1, 1, 0}));
}

TEST(FactoredElement, Rendering)
{
    const AtomTable atoms({"x1", "x2", "x1+x2"});
    EXPECT_EQ(mono({1, 0, 1}).to_string(atoms), "x1*(x1+x2)");
    EXPECT_EQ(mono({0, 2, 0}).to_string(atoms), "x2^2");
    EXPECT_EQ(FactoredElement::unit(3).to_string(atoms), "1");
    EXPECT_THROW(AtomTable({"a", "a"}), std::invalid_argument);
    EXPECT_EQ(atoms.index_of("x1+x2"), 2u);
}

TEST(MonomialIdeal, MinimalBasisIsAntichainGeneratingSameIdeal)
{
    verify::Rng rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = verify::uniform(rng, 1, 4);
        std::vector<FactoredElement> gens;
        const int count = verify::uniform(rng, 0, 6);
        for (int i = 0; i < count; ++i) {
            std::vector<unsigned> e;
            for (int v = 0; v < n; ++v) {
                e.push_back(static_cast<unsigned>(verify::uniform(rng, 0, 2)));
            }
            gens.emplace_back(std::move(e));
        }
        const MonomialIdeal ideal(static_cast<std::size_t>(n), gens);
        const auto& basis = ideal.generators();
        for (const auto& g : basis) {
            for (const auto& h : basis) {
                EXPECT_TRUE(g == h || !divides(g, h));
            }
        }
        // Same ideal: every original generator is a multiple of a basis element
        // and every basis element is an original generator.
        for (const auto& g : gens) {
            EXPECT_TRUE(ideal.contains(g));
        }
        for (const auto& b : basis) {
            EXPECT_NE(std::find(gens.begin(), gens.end(), b), gens.end());
        }
        // Every element of the radical basis is square-free and some power of it
        // lies in the ideal.
        const MonomialIdeal rad = ideal.radical();
        for (const auto& r : rad.generators()) {
            EXPECT_TRUE(r.is_squarefree());
            std::vector<unsigned> big;
            for (unsigned e : r.exponents()) {
                big.push_back(e * 2);
            }
            EXPECT_TRUE(ideal.contains(FactoredElement(big)));
        }
    }
}

TEST(MonomialIdeal, StructuralEqualityAndPrinting)
{
    const MonomialIdeal a(4, {mono({1, 0, 0, 1}), mono({0, 1, 0, 1}), mono({1, 1, 0, 1})});
    const MonomialIdeal b(4, {mono({0, 1, 0, 1}), mono({1, 0, 0, 1})});
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.to_string(), "<x1*x4, x2*x4>");
    EXPECT_EQ(MonomialIdeal::zero(3).to_string(), "<0>");
    EXPECT_TRUE(MonomialIdeal(2, {FactoredElement::unit(2)}).is_unit_ideal());
    EXPECT_TRUE(a.is_subset_of(MonomialIdeal::linear(4, {4})));
    EXPECT_FALSE(MonomialIdeal::linear(4, {4}).is_subset_of(a));
}

TEST(LinearPrime, OrderAndContainment)
{
    EXPECT_LT(LinearPrime({3}), LinearPrime({1, 2}));
    EXPECT_LT(LinearPrime({1, 2}), LinearPrime({1, 3}));
    EXPECT_TRUE(LinearPrime().is_zero());
    EXPECT_EQ(LinearPrime({2, 3}).to_string(), "<x2, x3>");
    const MonomialIdeal i(3, {mono({0, 1, 1})});
    EXPECT_TRUE(LinearPrime({2}).contains(i));
    EXPECT_FALSE(LinearPrime({1}).contains(i));
}

TEST(Transversals, EmptyFamilyAndEdgeCases)
{
    EXPECT_EQ(minimal_transversals(3, {}), (std::vector<std::vector<int>>{{}}));
    EXPECT_THROW(minimal_transversals(3, {{}}), std::invalid_argument);
    EXPECT_EQ(minimal_transversals(2, {{1}, {1, 2}}), (std::vector<std::vector<int>>{{1}}));
}

TEST(Transversals, MatchBruteForce)
{
    verify::Rng rng(22);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = verify::uniform(rng, 1, 9);
        std::vector<std::vector<int>> edges;
        const int count = verify::uniform(rng, 0, 8);
        for (int i = 0; i < count; ++i) {
            std::vector<int> e;
            for (int v = 1; v <= n; ++v) {
                if (verify::uniform(rng, 0, 2) == 0) {
                    e.push_back(v);
                }
            }
            if (e.empty()) {
                e.push_back(verify::uniform(rng, 1, n));
            }
            edges.push_back(e);
        }
        const auto got = minimal_transversals(static_cast<std::size_t>(n), edges);
        EXPECT_EQ(std::set<std::vector<int>>(got.begin(), got.end()), brute_transversals(n, edges));
        EXPECT_EQ(std::set<std::vector<int>>(got.begin(), got.end()).size(), got.size());
    }
}

TEST(Transversals, WideUniverseUsesDynamicBitsets)
{
    // A perfect matching on 70 vertices has 2^k transversals; keep k small but
    // place the edges beyond the 64-bit fast path.
    std::vector<std::vector<int>> edges{{1, 70}, {65, 66}, {2, 67}};
    const auto got = minimal_transversals(70, edges);
    EXPECT_EQ(got.size(), 8u);
    for (const auto& t : got) {
        EXPECT_EQ(t.size(), 3u);
    }
    EXPECT_EQ(minimal_transversals(70, {{3, 68}, {68, 69}}).size(), 2u);
}

TEST(MinimalPrimes, SquarefreeOnly)
{
    EXPECT_EQ(minimal_primes_squarefree(MonomialIdeal::zero(3)), PrimeSet{LinearPrime()});
    EXPECT_THROW(minimal_primes_squarefree(MonomialIdeal(2, {mono({2, 0})})), std::invalid_argument);
    EXPECT_THROW(minimal_primes_squarefree(MonomialIdeal(2, {FactoredElement::unit(2)})), std::invalid_argument);
    const MonomialIdeal i(4, {mono({1, 0, 0, 1}), mono({0, 1, 0, 1})});
    EXPECT_EQ(minimal_primes_squarefree(i), (PrimeSet{LinearPrime({4}), LinearPrime({1, 2})}));
}
