#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "algpers/persistence.hpp"
#include "algpers/verify.hpp"

using namespace algpers;

namespace {

const double root2 = std::sqrt(2.0);

// Right isosceles triangle: legs 2, hypotenuse 2*sqrt(2).
Filtration three_points()
{
    return vr_filtration(DistanceMatrix::from_rows({{0, 2, 2 * root2}, {2, 0, 2}, {2 * root2, 2, 0}}));
}

Filtration three_points_as_stated()
{
    return vr_filtration(DistanceMatrix::from_rows({{0, 2, 2}, {2, 0, 2 * root2}, {2, 2 * root2, 0}}));
}

PrimeSet edge_primes_by_transversals(const SimplicialComplex& k)
{
    std::vector<std::vector<int>> edges;
    for (const auto& f : k.faces_of_dim(1)) {
        edges.push_back(f.vertices());
    }
    PrimeSet out;
    for (auto& t : minimal_transversals(k.universe(), edges)) {
        out.emplace(std::move(t));
    }
    return out;
}

} // namespace

TEST(PrimeBarcode, ThreePointStanleyReisner)
{
    const auto f = three_points_as_stated();
    const auto bc = prime_barcode(f, IdealKind::stanley_reisner);
    EXPECT_EQ(bc.alive_at(0), (PrimeSet{LinearPrime({2, 3}), LinearPrime({1, 3}), LinearPrime({1, 2})}));
    EXPECT_EQ(bc.alive_at(1), (PrimeSet{LinearPrime({2}), LinearPrime({3})}));
    EXPECT_EQ(bc.alive_at(root2), PrimeSet{LinearPrime()});
    int deaths_at_root2 = 0;
    for (const auto& e : bc.entries) {
        if (e.prime == LinearPrime({2}) || e.prime == LinearPrime({3})) {
            EXPECT_EQ(e.birth, 1.0);
            EXPECT_NEAR(e.death, root2, 1e-12);
            ++deaths_at_root2;
        }
    }
    EXPECT_EQ(deaths_at_root2, 2);
    EXPECT_TRUE(bc.resurrected().empty());
}

TEST(PrimeBarcode, ThreePointEdgeIdeal)
{
    const auto bc = prime_barcode(three_points_as_stated(), IdealKind::edge);
    EXPECT_EQ(bc.alive_at(0), PrimeSet{LinearPrime()});
    EXPECT_EQ(bc.alive_at(1), (PrimeSet{LinearPrime({1}), LinearPrime({2, 3})}));
    EXPECT_EQ(bc.alive_at(1.5), (PrimeSet{LinearPrime({1, 2}), LinearPrime({1, 3}), LinearPrime({2, 3})}));
    // <x2, x3> persists from t = 1 onwards in one interval.
    for (const auto& e : bc.entries) {
        if (e.prime == LinearPrime({2, 3})) {
            EXPECT_EQ(e.birth, 1.0);
            EXPECT_EQ(e.death, infinity);
        }
    }
}

TEST(PHBarcode, ThreePointHasNoEndpointAtHypotenuse)
{
    const auto ph = ph_barcode(three_points_as_stated());
    EXPECT_EQ(ph.bars.at(0), (std::vector<PHBar>{{0, 1}, {0, 1}, {0, infinity}}));
    EXPECT_EQ(ph.bars.count(1), 0u);
    for (double x : ph.endpoints()) {
        EXPECT_GT(std::abs(x - root2), 1e-6);
    }
    // Relabelling the points does not change the multiset of bars.
    EXPECT_EQ(ph_barcode(three_points()).bars, ph.bars);
}

TEST(PHBarcode, AliveCountsEqualBettiNumbers)
{
    verify::Rng rng(51);
    for (int trial = 0; trial < 80; ++trial) {
        const auto f = vr_filtration(verify::random_distances(rng, verify::uniform(rng, 1, 6)));
        for (const FieldChoice field : {FieldChoice::prime(2), FieldChoice::prime(3), FieldChoice::rationals()}) {
            const auto ph = ph_barcode(f, field);
            for (const auto& step : f.steps()) {
                const auto b = betti_numbers(step.complex, field);
                for (int k = 0; k <= step.complex.dimension(); ++k) {
                    EXPECT_EQ(ph.alive(k, step.t), b.at(k)) << "dim " << k << " at t=" << step.t;
                }
            }
        }
    }
}

TEST(PHBarcode, TorsionShowsOverF2Only)
{
    // Six-vertex triangulation of the projective plane as a one-step filtration.
    const auto rp2 = SimplicialComplex::closure(6, {{1, 2, 4}, {1, 2, 6}, {1, 3, 4}, {1, 3, 5}, {1, 5, 6}, {2, 3, 5},
                                                    {2, 3, 6}, {2, 4, 5}, {3, 4, 6}, {4, 5, 6}});
    const Filtration f(6, {{0, rp2}});
    EXPECT_EQ(ph_barcode(f, FieldChoice::prime(2)).alive(2, 0), 1u);
    EXPECT_EQ(ph_barcode(f, FieldChoice::prime(2)).alive(1, 0), 1u);
    EXPECT_EQ(ph_barcode(f, FieldChoice::rationals()).alive(2, 0), 0u);
    EXPECT_EQ(ph_barcode(f, FieldChoice::rationals()).alive(1, 0), 0u);
}

TEST(PrimeBarcode, AliveSetsMatchIndependentRoutes)
{
    verify::Rng rng(52);
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = vr_filtration(verify::random_distances(rng, verify::uniform(rng, 1, 7)));
        const auto sr = prime_barcode(f, IdealKind::stanley_reisner);
        const auto edge = prime_barcode(f, IdealKind::edge);
        for (const auto& step : f.steps()) {
            EXPECT_EQ(sr.alive_at(step.t), minimal_primes_squarefree(stanley_reisner(step.complex)));
            EXPECT_EQ(edge.alive_at(step.t), edge_primes_by_transversals(step.complex));
        }
        EXPECT_TRUE(sr.resurrected().empty());
        EXPECT_TRUE(edge.resurrected().empty());
    }
}

TEST(PrimeBarcode, GenericHookDetectsResurrection)
{
    // A family that drops a prime for one step and brings it back.
    const auto f = three_points_as_stated();
    std::size_t call = 0;
    const auto bc = prime_barcode_from(f, IdealKind::stanley_reisner, [&](const SimplicialComplex&) {
        return ++call == 2 ? PrimeSet{} : PrimeSet{LinearPrime({1})};
    });
    EXPECT_EQ(bc.resurrected(), std::vector<LinearPrime>{LinearPrime({1})});
    EXPECT_EQ(bc.interval_counts().at(LinearPrime({1})), 2u);
}

TEST(JumpWitness, ThreePoints)
{
    const auto f = three_points_as_stated();
    const auto w = jump_witness(f, 0, 1.0);
    EXPECT_TRUE(w.betti_jump);
    EXPECT_EQ(w.level, JumpWitness::Level::associated);
    ASSERT_TRUE(w.prime.has_value());
    EXPECT_EQ(*w.prime, LinearPrime({2}));
    EXPECT_FALSE(jump_witness(f, 0, root2).betti_jump);
    EXPECT_THROW(jump_witness(f, 0, 0.0), std::invalid_argument);
    EXPECT_THROW(jump_witness(f, 0, 5.0), std::invalid_argument);
}

TEST(JumpWitness, EveryJumpHasAWitness)
{
    verify::Rng rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        const auto f = vr_filtration(verify::random_distances(rng, verify::uniform(rng, 2, 7)));
        const auto ts = f.parameters();
        for (std::size_t s = 1; s < ts.size(); ++s) {
            for (int k = 0; k <= 2; ++k) {
                const auto w = jump_witness(f, k, ts[s]);
                const bool jump = betti_numbers(f[s - 1].complex, FieldChoice::prime(2)).at(k) !=
                                  betti_numbers(f[s].complex, FieldChoice::prime(2)).at(k);
                EXPECT_EQ(w.betti_jump, jump);
                if (jump) {
                    EXPECT_NE(w.level, JumpWitness::Level::none);
                }
            }
        }
    }
}

TEST(Coverage, HalfDistancesAreEndpoints)
{
    const DistanceMatrix d = DistanceMatrix::from_rows({{0, 2, 2}, {2, 0, 2 * root2}, {2, 2 * root2, 0}});
    const auto rep = coverage_report(d, prime_barcode(vr_filtration(d), IdealKind::stanley_reisner));
    EXPECT_EQ(rep.pairs_checked, 3u);
    EXPECT_TRUE(rep.ok());
    // A barcode with a missing endpoint is reported.
    PrimeBarcode empty;
    EXPECT_EQ(coverage_report(d, empty).violations.size(), 3u);
}

TEST(BettiProfile, StepFunction)
{
    const auto prof = betti_profile(three_points_as_stated());
    EXPECT_EQ(prof.at(0.5)->at(0), 3u);
    EXPECT_EQ(prof.at(1.0)->at(0), 1u);
    EXPECT_FALSE(prof.at(-0.1).has_value());
    EXPECT_EQ(betti_profile(three_points_as_stated(), FieldChoice::prime(2), true).at(0)->at(-1), 0u);
}
