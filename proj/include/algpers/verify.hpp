#pragma once

// Seeded random instances and the property suites run by `verify` and the
// acceptance tests. Every suite compares two independent computations.

#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "algpers/complex_ideals.hpp"
#include "algpers/complexes.hpp"
#include "algpers/labelled.hpp"
#include "algpers/monomial_ideal.hpp"
#include "algpers/persistence.hpp"

namespace algpers::verify {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Graph random_graph(Rng& rng, int n)
{
    Graph g(static_cast<std::size_t>(n));
    const double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    std::bernoulli_distribution coin(p);
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            if (coin(rng)) {
                g.add_edge(a, b);
            }
        }
    }
    return g;
}

/// Closure of a few random faces; vertices may be missing entirely.
inline SimplicialComplex random_complex(Rng& rng, int n)
{
    std::vector<Face> gens;
    const int count = uniform(rng, 0, n + 1);
    for (int i = 0; i < count; ++i) {
        std::vector<int> f;
        const double p = std::uniform_real_distribution<double>(0.2, 0.7)(rng);
        std::bernoulli_distribution coin(p);
        for (int v = 1; v <= n; ++v) {
            if (coin(rng)) {
                f.push_back(v);
            }
        }
        if (!f.empty()) {
            gens.emplace_back(std::move(f));
        }
    }
    return SimplicialComplex::closure(static_cast<std::size_t>(n), gens);
}

/// Half the time Euclidean distances of random planar points (generic), half
/// the time small integer distances (many ties).
inline DistanceMatrix random_distances(Rng& rng, int n)
{
    const auto un = static_cast<std::size_t>(n);
    std::vector<double> flat(un * un, 0.0);
    const bool euclidean = uniform(rng, 0, 1) == 0;
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < n; ++i) {
        pts.emplace_back(std::uniform_real_distribution<double>(0, 10)(rng),
                         std::uniform_real_distribution<double>(0, 10)(rng));
    }
    for (std::size_t a = 0; a < un; ++a) {
        for (std::size_t b = a + 1; b < un; ++b) {
            const double d = euclidean ? std::hypot(pts[a].first - pts[b].first, pts[a].second - pts[b].second)
                                       : uniform(rng, 1, 5);
            flat[a * un + b] = flat[b * un + a] = d;
        }
    }
    return DistanceMatrix(un, flat);
}

/// Monomial labels in t variables with exponents 0..2.
inline LabelledComplex random_monomial_labelled(Rng& rng, const SimplicialComplex& k, int t, bool reduced)
{
    std::vector<FactoredElement> labels;
    for (std::size_t i = 0; i < k.universe(); ++i) {
        std::vector<unsigned> e;
        for (int a = 0; a < t; ++a) {
            e.push_back(static_cast<unsigned>(std::max(0, uniform(rng, -1, 2))));
        }
        labels.emplace_back(std::move(e));
    }
    return make_labelled(k, AtomTable::variables(static_cast<std::size_t>(t)), labels, reduced);
}

struct SuiteResult {
    SuiteResult() = default;
    explicit SuiteResult(std::string n) : name(std::move(n)) {}

    std::string name;
    std::size_t trials = 0;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0; }

    void fail(const std::string& what)
    {
        if (failures++ == 0) {
            first_failure = what;
        }
    }
};

struct Options {
    std::uint64_t seed = 1;
    std::size_t trials = 200;
    int n_max = 8;
    int n_min = 1;
    bool inject_fault = false;
};

inline std::string describe(const SimplicialComplex& k)
{
    std::string s = "n=" + std::to_string(k.universe()) + " facets";
    for (const auto& f : maximal_faces(k)) {
        s += " " + f.to_string();
    }
    return s;
}

inline std::string describe(const DistanceMatrix& d)
{
    std::string s = "n=" + std::to_string(d.size()) + " d=";
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            s += std::to_string(d.at(i, j)) + " ";
        }
    }
    return s;
}

/// Clique complex SR ideal equals the edge ideal of the complement graph.
inline SuiteResult clique_complement_suite(const Options& o)
{
    SuiteResult r{"clique-complement"};
    Rng rng(o.seed);
    for (std::size_t i = 0; i < o.trials; ++i) {
        const Graph g = random_graph(rng, uniform(rng, o.n_min, o.n_max));
        ++r.trials;
        ++r.checks;
        const MonomialIdeal a = stanley_reisner(clique_complex(g));
        const MonomialIdeal b = edge_ideal(complement_graph(g));
        if (!(a == b)) {
            r.fail("graph n=" + std::to_string(g.order()) + ": " + a.to_string() + " vs " + b.to_string());
        }
    }
    return r;
}

/// Each SR and edge prime occupies a single interval. The injected fault
/// re-emits every prime ever seen at the last step.
inline SuiteResult no_resurrection_suite(const Options& o)
{
    SuiteResult r{"no-resurrection"};
    Rng rng(o.seed + 1);
    for (std::size_t i = 0; i < o.trials; ++i) {
        const DistanceMatrix d = random_distances(rng, uniform(rng, o.n_min, std::min(o.n_max, 7)));
        const Filtration f = vr_filtration(d);
        ++r.trials;
        for (IdealKind kind : {IdealKind::stanley_reisner, IdealKind::edge}) {
            PrimeBarcode bc;
            if (o.inject_fault) {
                std::size_t call = 0;
                PrimeSet seen;
                bc = prime_barcode_from(f, kind, [&](const SimplicialComplex& k) {
                    PrimeSet now = associated_primes(k, kind);
                    seen.insert(now.begin(), now.end());
                    return ++call == f.size() ? seen : now;
                });
            } else {
                bc = prime_barcode(f, kind);
            }
            ++r.checks;
            if (const auto res = bc.resurrected(); !res.empty()) {
                r.fail(to_string(kind) + " prime " + res.front().to_string() + " resurrects; " + describe(d));
            }
        }
    }
    return r;
}

/// Every Betti jump at a critical parameter has a linear-prime witness.
inline SuiteResult betti_jump_suite(const Options& o)
{
    SuiteResult r{"betti-jump-witness"};
    Rng rng(o.seed + 2);
    for (std::size_t i = 0; i < o.trials; ++i) {
        const DistanceMatrix d = random_distances(rng, uniform(rng, o.n_min, std::min(o.n_max, 7)));
        const Filtration f = vr_filtration(d);
        ++r.trials;
        const auto ts = f.parameters();
        for (std::size_t s = 1; s < ts.size(); ++s) {
            for (int k = 0; k <= f[s].complex.dimension(); ++k) {
                const JumpWitness w = jump_witness(f, k, ts[s]);
                if (!w.betti_jump) {
                    continue;
                }
                ++r.checks;
                if (w.level == JumpWitness::Level::none) {
                    r.fail("no witness for b_" + std::to_string(k) + " at t=" + std::to_string(ts[s]) + "; " +
                           describe(d));
                }
            }
        }
    }
    return r;
}

/// Every half-distance is an endpoint of the SR prime barcode.
inline SuiteResult endpoint_coverage_suite(const Options& o)
{
    SuiteResult r{"endpoint-coverage"};
    Rng rng(o.seed + 3);
    for (std::size_t i = 0; i < o.trials; ++i) {
        const DistanceMatrix d = random_distances(rng, uniform(rng, o.n_min, std::min(o.n_max, 7)));
        const CoverageReport rep = coverage_report(d, prime_barcode(vr_filtration(d), IdealKind::stanley_reisner));
        ++r.trials;
        r.checks += rep.pairs_checked;
        if (!rep.ok()) {
            const auto& v = rep.violations.front();
            r.fail("h/2 of pair (" + std::to_string(v.i) + "," + std::to_string(v.j) + ") is no endpoint; " +
                   describe(d));
        }
    }
    return r;
}

namespace detail {

inline SimplicialComplex labelled_base(Rng& rng, int n)
{
    // Alternate between random complexes and steps of random VR filtrations.
    if (uniform(rng, 0, 1) == 0) {
        return random_complex(rng, n);
    }
    const Filtration f = vr_filtration(random_distances(rng, n));
    return f[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(f.size()) - 1))].complex;
}

inline std::vector<Rational> point_with_zeros(Rng& rng, std::size_t t)
{
    std::vector<Rational> p;
    for (std::size_t i = 0; i < t; ++i) {
        p.emplace_back(uniform(rng, 0, 1) == 0 ? 0 : uniform(rng, 1, 4));
    }
    return p;
}

} // namespace detail

/// Evaluation at an admissible point preserves Betti numbers (reduced and
/// unreduced, over Q and F_p); at an inadmissible point the same holds on
/// the full subcomplex of the surviving vertices.
inline SuiteResult evaluation_suite(const Options& o)
{
    SuiteResult r{"evaluation-homology"};
    Rng rng(o.seed + 4);
    for (std::size_t i = 0; i < o.trials; ++i) {
        const int n = uniform(rng, o.n_min, std::min(o.n_max, 7));
        const int t = uniform(rng, 1, 4);
        const LabelledComplex lc = random_monomial_labelled(rng, detail::labelled_base(rng, n), t, uniform(rng, 0, 1));
        ++r.trials;
        ++r.checks;
        if (!chain_condition_holds(lc) || !diag_relation_check(lc)) {
            r.fail("chain condition or diagonal relation fails; " + describe(lc.complex()));
            continue;
        }
        for (const FieldChoice field : {FieldChoice::rationals(), FieldChoice::prime(5)}) {
            const auto p = random_admissible_point(lc, rng, field);
            const auto ev = evaluate_chain(lc, p, field);
            ++r.checks;
            if (!(ev.betti == ev.classical_betti)) {
                r.fail("evaluated Betti numbers differ over " + field.name() + "; " + describe(lc.complex()));
            }
        }
        const auto q = detail::point_with_zeros(rng, static_cast<std::size_t>(t));
        const LocalWindow w = local_subcomplex(lc, q);
        const auto ev = evaluate_chain(w.restricted, q);
        ++r.checks;
        if (!(ev.betti == ev.classical_betti)) {
            r.fail("restricted Betti numbers differ on W=" + w.vertices.to_string() + "; " + describe(lc.complex()));
        }
    }
    return r;
}

/// Fraction-field ranks of labelled boundaries equal classical ranks, both
/// on the whole complex and on the window of an allowed atom subset.
inline SuiteResult fraction_rank_suite(const Options& o)
{
    SuiteResult r{"fraction-field-rank"};
    Rng rng(o.seed + 5);
    for (std::size_t i = 0; i < o.trials; ++i) {
        const int n = uniform(rng, o.n_min, std::min(o.n_max, 7));
        const int t = uniform(rng, 1, 4);
        const LabelledComplex lc = random_monomial_labelled(rng, detail::labelled_base(rng, n), t, uniform(rng, 0, 1));
        ++r.trials;
        std::vector<std::size_t> allowed;
        for (int a = 0; a < t; ++a) {
            if (uniform(rng, 0, 1)) {
                allowed.push_back(static_cast<std::size_t>(a));
            }
        }
        const LocalWindow window = local_subcomplex(lc, allowed);
        for (const LabelledComplex* c : {&lc, &window.restricted}) {
            for (const auto& fr : fraction_field_ranks(*c)) {
                ++r.checks;
                if (fr.labelled_rank != fr.classical_rank) {
                    r.fail("rank " + std::to_string(fr.labelled_rank) + " vs " + std::to_string(fr.classical_rank) +
                           " in dim " + std::to_string(fr.dim) + "; " + describe(c->complex()));
                }
            }
            ++r.checks;
            if (!evaluation_ranks_agree(*c, rng)) {
                r.fail("evaluation ranks disagree with symbolic ranks; " + describe(c->complex()));
            }
        }
    }
    return r;
}

/// Degree-alpha slices have the reduced homology of Delta_{m_alpha} and the
/// explicit basis map is a chain isomorphism.
inline SuiteResult graded_slice_suite(const Options& o, std::size_t alphas_per_complex = 5)
{
    SuiteResult r{"graded-slice"};
    Rng rng(o.seed + 6);
    for (std::size_t i = 0; i < o.trials; ++i) {
        const int n = uniform(rng, o.n_min, std::min(o.n_max, 7));
        const int t = uniform(rng, 1, 4);
        const LabelledComplex lc = random_monomial_labelled(rng, detail::labelled_base(rng, n), t, true);
        ++r.trials;
        FactoredElement top = FactoredElement::unit(static_cast<std::size_t>(t));
        for (const auto& l : lc.vertex_labels()) {
            top = lcm(top, l);
        }
        for (std::size_t a = 0; a < alphas_per_complex; ++a) {
            std::vector<unsigned> alpha;
            for (int v = 0; v < t; ++v) {
                alpha.push_back(static_cast<unsigned>(uniform(rng, 0, static_cast<int>(top[static_cast<std::size_t>(v)]))));
            }
            ++r.checks;
            const GradedSlice s = graded_slice(lc, alpha);
            const BettiVector expect = betti_numbers(degree_subcomplex(lc, alpha), FieldChoice::rationals(), true);
            if (!(s.betti == expect) || !slice_iso_check(lc, alpha)) {
                r.fail("slice mismatch at alpha " + FactoredElement(alpha).to_string() + "; " + describe(lc.complex()));
            }
        }
    }
    return r;
}

/// Independent routes to the same prime sets: facet complements against
/// minimal transversals, Bron-Kerbosch against minimal transversals.
inline SuiteResult oracle_agreement_suite(const Options& o)
{
    SuiteResult r{"oracle-agreement"};
    Rng rng(o.seed + 7);
    for (std::size_t i = 0; i < o.trials; ++i) {
        const SimplicialComplex k = random_complex(rng, uniform(rng, o.n_min, std::min(o.n_max, 7)));
        ++r.trials;
        ++r.checks;
        if (sr_associated_primes(k) != minimal_primes_squarefree(stanley_reisner(k))) {
            r.fail("SR primes disagree; " + describe(k));
        }
        const Graph g = random_graph(rng, uniform(rng, o.n_min, o.n_max));
        std::vector<std::vector<int>> edges;
        for (const auto& [a, b] : g.edges()) {
            edges.push_back({a, b});
        }
        ++r.checks;
        PrimeSet via_transversals;
        for (auto& t : minimal_transversals(g.order(), edges)) {
            via_transversals.emplace(std::move(t));
        }
        if (minimal_vertex_covers(g) != via_transversals) {
            r.fail("vertex covers disagree on graph with " + std::to_string(g.edges().size()) + " edges");
        }
    }
    return r;
}

inline std::vector<SuiteResult> run_all(const Options& o)
{
    return {clique_complement_suite(o), no_resurrection_suite(o), betti_jump_suite(o), endpoint_coverage_suite(o),
            evaluation_suite(o),        fraction_rank_suite(o),    graded_slice_suite(o), oracle_agreement_suite(o)};
}

} // namespace algpers::verify
