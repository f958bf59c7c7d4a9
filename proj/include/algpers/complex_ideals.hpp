#pragma once

// Stanley-Reisner and edge ideals of complexes and graphs, the inverse
// correspondence for square-free ideals, and the combinatorial routes to
// their associated primes (maximal faces, minimal vertex covers).

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "algpers/bits.hpp"
#include "algpers/complexes.hpp"
#include "algpers/monomial_ideal.hpp"

namespace algpers {

/// I_K, generated by the minimal non-faces. The full simplex gives the
/// zero ideal.
inline MonomialIdeal stanley_reisner(const SimplicialComplex& k)
{
    const std::size_t n = k.universe();
    std::vector<FactoredElement> gens;
    for (const Face& f : minimal_nonfaces(k)) {
        gens.push_back(FactoredElement::squarefree(n, f.vertices()));
    }
    return MonomialIdeal(n, std::move(gens));
}

inline MonomialIdeal edge_ideal(const Graph& g)
{
    const std::size_t n = g.order();
    std::vector<FactoredElement> gens;
    for (auto [a, b] : g.edges()) {
        gens.push_back(FactoredElement::squarefree(n, {a, b}));
    }
    return MonomialIdeal(n, std::move(gens));
}

/// Edge ideal of the 1-faces of a complex.
inline MonomialIdeal edge_ideal(const SimplicialComplex& k) { return edge_ideal(one_skeleton(k)); }

/// The complex {sigma != {} : x_sigma not in I}, inverse to stanley_reisner.
inline SimplicialComplex complex_of_squarefree_ideal(const MonomialIdeal& ideal, std::size_t n)
{
    if (ideal.ambient() != n) {
        throw std::invalid_argument("ideal lives in a ring with a different number of variables");
    }
    if (!ideal.is_squarefree()) {
        throw std::invalid_argument("ideal is not square-free");
    }
    if (ideal.is_unit_ideal()) {
        throw std::invalid_argument("the unit ideal does not determine a complex");
    }
    SimplicialComplex k(n);
    // Non-membership is downward closed, so grow increasing sequences.
    std::vector<int> cur;
    auto grow = [&](auto&& self) -> void {
        k.insert_unchecked(Face(cur));
        for (int v = cur.back() + 1; v <= static_cast<int>(n); ++v) {
            cur.push_back(v);
            if (!ideal.contains(FactoredElement::squarefree(n, cur))) {
                self(self);
            }
            cur.pop_back();
        }
    };
    for (int v = 1; v <= static_cast<int>(n); ++v) {
        cur = {v};
        if (!ideal.contains(FactoredElement::squarefree(n, cur))) {
            grow(grow);
        }
    }
    return k;
}

/// Ass(I_K) read off the maximal faces: P_W with W the complement of a
/// maximal face. The empty complex has the single prime P_[n].
inline PrimeSet sr_associated_primes(const SimplicialComplex& k)
{
    const int n = static_cast<int>(k.universe());
    PrimeSet out;
    if (k.empty()) {
        std::vector<int> all;
        for (int v = 1; v <= n; ++v) {
            all.push_back(v);
        }
        out.insert(LinearPrime(std::move(all)));
        return out;
    }
    for (const Face& f : maximal_faces(k)) {
        std::vector<int> w;
        for (int v = 1; v <= n; ++v) {
            if (!f.contains(v)) {
                w.push_back(v);
            }
        }
        out.insert(LinearPrime(std::move(w)));
    }
    return out;
}

inline Graph complement_graph(const Graph& g)
{
    const int n = static_cast<int>(g.order());
    Graph out(g.order());
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            if (!g.adjacent(a, b)) {
                out.add_edge(a, b);
            }
        }
    }
    return out;
}

namespace detail {

// Bron-Kerbosch with pivoting over an adjacency given as bit patterns.
template <class Set>
void bron_kerbosch(const std::vector<Set>& adj, Set r, Set p, Set x, std::vector<Set>& out)
{
    if (!bits::any(p) && !bits::any(x)) {
        out.push_back(r);
        return;
    }
    std::size_t pivot = 0;
    std::size_t best = 0;
    bool have = false;
    auto consider = [&](std::size_t u) {
        const std::size_t c = bits::count(bits::meet(p, adj[u]));
        if (!have || c > best) {
            pivot = u;
            best = c;
            have = true;
        }
    };
    bits::for_each(p, consider);
    bits::for_each(x, consider);
    const Set candidates = bits::minus(p, adj[pivot]);
    bits::for_each(candidates, [&](std::size_t v) {
        Set r2 = r;
        bits::set(r2, v);
        bron_kerbosch(adj, r2, bits::meet(p, adj[v]), bits::meet(x, adj[v]), out);
        bits::reset(p, v);
        bits::set(x, v);
    });
}

template <class Set>
PrimeSet vertex_covers_with(const Graph& g)
{
    const std::size_t n = g.order();
    // Maximal independent sets of g are the maximal cliques of its
    // complement; their complements are the minimal vertex covers.
    std::vector<Set> adj(n, bits::make<Set>(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a != b && !g.adjacent(static_cast<int>(a + 1), static_cast<int>(b + 1))) {
                bits::set(adj[a], b);
            }
        }
    }
    Set all = bits::make<Set>(n);
    for (std::size_t v = 0; v < n; ++v) {
        bits::set(all, v);
    }
    std::vector<Set> independent;
    bron_kerbosch(adj, bits::make<Set>(n), all, bits::make<Set>(n), independent);
    PrimeSet out;
    for (const Set& s : independent) {
        std::vector<int> cover;
        for (std::size_t v = 0; v < n; ++v) {
            if (!bits::test(s, v)) {
                cover.push_back(static_cast<int>(v + 1));
            }
        }
        out.insert(LinearPrime(std::move(cover)));
    }
    return out;
}

} // namespace detail

/// All inclusion-minimal vertex covers, as linear primes (= Ass of the edge
/// ideal). An edgeless graph has the single cover {}.
inline PrimeSet minimal_vertex_covers(const Graph& g)
{
    if (g.order() == 0) {
        return {LinearPrime{}};
    }
    if (g.order() <= bits::small_limit) {
        return detail::vertex_covers_with<bits::Small>(g);
    }
    return detail::vertex_covers_with<bits::Large>(g);
}

} // namespace algpers
