#pragma once

// Persistence along a filtration: barcodes of associated linear primes of
// the Stanley-Reisner and edge ideals, Betti profiles, classical
// persistent homology, and the cross-checks tying them together.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "algpers/chains.hpp"
#include "algpers/complex_ideals.hpp"
#include "algpers/complexes.hpp"
#include "algpers/exact/matrix.hpp"

namespace algpers {

inline constexpr double infinity = std::numeric_limits<double>::infinity();

enum class IdealKind { stanley_reisner, edge };

inline std::string to_string(IdealKind k) { return k == IdealKind::stanley_reisner ? "SR" : "EDGE"; }

/// Ass of the chosen ideal of one complex.
inline PrimeSet associated_primes(const SimplicialComplex& k, IdealKind kind)
{
    return kind == IdealKind::stanley_reisner ? sr_associated_primes(k) : minimal_vertex_covers(one_skeleton(k));
}

/// Half-open lifetime [birth, death) of a prime in Ass. The zero prime
/// P_empty (full simplex or edgeless epochs) is kept and flagged.
struct PrimeInterval {
    LinearPrime prime;
    double birth = 0;
    double death = infinity;
    IdealKind kind = IdealKind::stanley_reisner;

    bool is_zero_prime() const { return prime.is_zero(); }
    bool contains(double t) const { return birth <= t && t < death; }
};

struct PrimeBarcode {
    IdealKind kind = IdealKind::stanley_reisner;
    std::vector<PrimeInterval> entries;

    /// Intervals per prime; a prime that appears twice has resurrected.
    std::map<LinearPrime, std::size_t> interval_counts() const
    {
        std::map<LinearPrime, std::size_t> counts;
        for (const auto& e : entries) {
            ++counts[e.prime];
        }
        return counts;
    }

    std::vector<LinearPrime> resurrected() const
    {
        std::vector<LinearPrime> out;
        for (const auto& [p, c] : interval_counts()) {
            if (c > 1) {
                out.push_back(p);
            }
        }
        return out;
    }

    /// Primes alive at parameter t.
    PrimeSet alive_at(double t) const
    {
        PrimeSet out;
        for (const auto& e : entries) {
            if (e.contains(t)) {
                out.insert(e.prime);
            }
        }
        return out;
    }
};

using AssociatedPrimesFn = std::function<PrimeSet(const SimplicialComplex&)>;

/// Barcode of any per-step prime family. Intervals are the maximal runs of
/// consecutive steps in which a prime is present.
inline PrimeBarcode prime_barcode_from(const Filtration& f, IdealKind kind, const AssociatedPrimesFn& ass)
{
    PrimeBarcode bc{kind, {}};
    std::map<LinearPrime, double> open;
    for (const auto& step : f.steps()) {
        const PrimeSet now = ass(step.complex);
        for (auto it = open.begin(); it != open.end();) {
            if (!now.count(it->first)) {
                bc.entries.push_back({it->first, it->second, step.t, kind});
                it = open.erase(it);
            } else {
                ++it;
            }
        }
        for (const auto& p : now) {
            open.emplace(p, step.t);
        }
    }
    for (const auto& [p, birth] : open) {
        bc.entries.push_back({p, birth, infinity, kind});
    }
    std::sort(bc.entries.begin(), bc.entries.end(), [](const PrimeInterval& a, const PrimeInterval& b) {
        if (a.birth != b.birth) {
            return a.birth < b.birth;
        }
        return a.prime < b.prime;
    });
    return bc;
}

inline PrimeBarcode prime_barcode(const Filtration& f, IdealKind kind)
{
    return prime_barcode_from(f, kind, [kind](const SimplicialComplex& k) { return associated_primes(k, kind); });
}

/// Betti numbers at each critical parameter.
struct BettiProfile {
    std::vector<double> params;
    std::vector<BettiVector> betti;

    /// Betti vector in effect at t (closed on the left); nullopt before the
    /// first parameter.
    std::optional<BettiVector> at(double t) const
    {
        std::optional<BettiVector> out;
        for (std::size_t i = 0; i < params.size() && params[i] <= t; ++i) {
            out = betti[i];
        }
        return out;
    }
};

inline BettiProfile betti_profile(const Filtration& f, const FieldChoice& field = FieldChoice::prime(2),
                                  bool reduced = false)
{
    BettiProfile prof;
    for (const auto& step : f.steps()) {
        prof.params.push_back(step.t);
        prof.betti.push_back(betti_numbers(step.complex, field, reduced));
    }
    return prof;
}

struct PHBar {
    double birth = 0;
    double death = infinity;

    bool contains(double t) const { return birth <= t && t < death; }
    friend bool operator==(const PHBar&, const PHBar&) = default;
};

/// Classical persistence barcode; zero-length pairs are dropped.
struct PHBarcode {
    std::map<int, std::vector<PHBar>> bars;

    std::size_t alive(int dim, double t) const
    {
        auto it = bars.find(dim);
        if (it == bars.end()) {
            return 0;
        }
        return static_cast<std::size_t>(
            std::count_if(it->second.begin(), it->second.end(), [t](const PHBar& b) { return b.contains(t); }));
    }

    std::vector<double> endpoints() const
    {
        std::vector<double> out;
        for (const auto& [d, bs] : bars) {
            for (const auto& b : bs) {
                out.push_back(b.birth);
                if (std::isfinite(b.death)) {
                    out.push_back(b.death);
                }
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
};

/// Cells of the final complex in filtration order: birth, then dimension,
/// then colex.
inline std::vector<std::pair<Face, double>> filtration_order(const Filtration& f)
{
    const auto births = f.births();
    std::vector<std::pair<Face, double>> cells(births.begin(), births.end());
    std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) {
            return a.second < b.second;
        }
        if (a.first.size() != b.first.size()) {
            return a.first.size() < b.first.size();
        }
        return ColexLess{}(a.first, b.first);
    });
    return cells;
}

/// Boundary columns for persistence_reduce, given a cell order.
inline std::vector<BoundaryColumn> boundary_columns(const std::vector<std::pair<Face, double>>& cells)
{
    std::map<Face, std::size_t> index;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        index.emplace(cells[i].first, i);
    }
    std::vector<BoundaryColumn> cols;
    for (const auto& [face, birth] : cells) {
        BoundaryColumn c{face.dim(), {}};
        for (std::size_t pos = 0; face.size() > 1 && pos < face.size(); ++pos) {
            c.boundary.emplace_back(index.at(face.without_index(pos)), removal_sign(pos));
        }
        cols.push_back(std::move(c));
    }
    return cols;
}

/// Persistent homology in dimensions 0..max_dim (negative: all).
inline PHBarcode ph_barcode(const Filtration& f, const FieldChoice& field = FieldChoice::prime(2), int max_dim = -1)
{
    const auto cells = filtration_order(f);
    const auto cols = boundary_columns(cells);
    const PersistencePairing pairing =
        with_field(field, [&](const auto& fld) { return persistence_reduce(cols, fld); });
    PHBarcode out;
    auto keep = [&](int d) { return max_dim < 0 || d <= max_dim; };
    for (auto [b, d] : pairing.pairs) {
        const int dim = cells[b].first.dim();
        if (keep(dim) && cells[b].second < cells[d].second) {
            out.bars[dim].push_back({cells[b].second, cells[d].second});
        }
    }
    for (auto e : pairing.essential) {
        const int dim = cells[e].first.dim();
        if (keep(dim)) {
            out.bars[dim].push_back({cells[e].second, infinity});
        }
    }
    for (auto& [d, bs] : out.bars) {
        std::sort(bs.begin(), bs.end(), [](const PHBar& x, const PHBar& y) {
            return x.birth != y.birth ? x.birth < y.birth : x.death < y.death;
        });
    }
    return out;
}

/// A linear prime whose indicator changes across a Betti jump.
struct JumpWitness {
    enum class Level { none, associated, containment };

    bool betti_jump = false;
    Level level = Level::none;
    std::optional<LinearPrime> prime;
};

namespace detail {

inline std::vector<LinearPrime> all_linear_primes(std::size_t n)
{
    if (n > 20) {
        throw std::invalid_argument("containment fallback limited to 20 variables");
    }
    std::vector<LinearPrime> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<int> w;
        for (std::size_t i = 0; i < n; ++i) {
            if ((mask >> i) & 1u) {
                w.push_back(static_cast<int>(i + 1));
            }
        }
        out.emplace_back(std::move(w));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

/// Compares the state just before t0 with the state at t0 (the filtration is
/// closed on the left). When b_k jumps, returns the first prime (by |W|,
/// then lex) whose membership in Ass of the Stanley-Reisner ideal changes,
/// falling back to the containment indicator I subset of P_W.
/// Requires first parameter < t0 <= last parameter.
inline JumpWitness jump_witness(const Filtration& f, int dim, double t0,
                                const FieldChoice& field = FieldChoice::prime(2))
{
    const auto ts = f.parameters();
    if (!(t0 > ts.front()) || t0 > ts.back()) {
        throw std::invalid_argument("t0 must satisfy first parameter < t0 <= last parameter");
    }
    std::size_t before = 0;
    while (before + 1 < ts.size() && ts[before + 1] < t0) {
        ++before;
    }
    const std::size_t after = *f.step_at(t0);
    JumpWitness w;
    const auto& k_before = f[before].complex;
    const auto& k_after = f[after].complex;
    w.betti_jump = betti_numbers(k_before, field).at(dim) != betti_numbers(k_after, field).at(dim);
    if (!w.betti_jump) {
        return w;
    }
    const PrimeSet a = sr_associated_primes(k_before);
    const PrimeSet b = sr_associated_primes(k_after);
    std::vector<LinearPrime> changed;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(changed));
    if (!changed.empty()) {
        w.level = JumpWitness::Level::associated;
        w.prime = *std::min_element(changed.begin(), changed.end());
        return w;
    }
    const MonomialIdeal ia = stanley_reisner(k_before);
    const MonomialIdeal ib = stanley_reisner(k_after);
    for (const auto& p : detail::all_linear_primes(f.universe())) {
        if (p.contains(ia) != p.contains(ib)) {
            w.level = JumpWitness::Level::containment;
            w.prime = p;
            return w;
        }
    }
    return w;
}

/// Pairs i < j whose half-distance is not an endpoint of any SR prime
/// interval.
struct CoverageReport {
    struct Violation {
        int i = 0;
        int j = 0;
        double value = 0;
    };

    std::size_t pairs_checked = 0;
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

inline CoverageReport coverage_report(const DistanceMatrix& dist, const PrimeBarcode& barcode)
{
    std::vector<double> endpoints;
    for (const auto& e : barcode.entries) {
        endpoints.push_back(e.birth);
        if (std::isfinite(e.death)) {
            endpoints.push_back(e.death);
        }
    }
    CoverageReport rep;
    const int n = static_cast<int>(dist.size());
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const double h = dist.between(i, j) / 2;
            ++rep.pairs_checked;
            const bool hit = std::any_of(endpoints.begin(), endpoints.end(), [h](double x) {
                return std::abs(x - h) <= 1e-12 * std::max(1.0, std::abs(h));
            });
            if (!hit) {
                rep.violations.push_back({i, j, h});
            }
        }
    }
    return rep;
}

} // namespace algpers
