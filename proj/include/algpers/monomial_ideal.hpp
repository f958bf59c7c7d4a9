#pragma once

// Monomial ideals in k[x1..xn], their minimal bases and radicals, and the
// prime decomposition of square-free monomial ideals into linear primes.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "algpers/bits.hpp"
#include "algpers/factored.hpp"

namespace algpers {

/// Divisibility antichain generating the same ideal, in canonical order.
inline std::vector<FactoredElement> minimal_basis(std::vector<FactoredElement> gens)
{
    std::sort(gens.begin(), gens.end(), CanonicalOrder{});
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<FactoredElement> out;
    // A divisor has degree <= its multiple, so earlier survivors are the
    // only candidates that can divide a later generator.
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& kept : out) {
            if (divides(kept, g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) {
            out.push_back(g);
        }
    }
    return out;
}

/// Generators of the radical: flatten exponents, then minimize.
inline std::vector<FactoredElement> radical_generators(const std::vector<FactoredElement>& gens)
{
    std::vector<FactoredElement> flat;
    flat.reserve(gens.size());
    for (const auto& g : gens) {
        flat.push_back(g.flattened());
    }
    return minimal_basis(std::move(flat));
}

/// Ideal of k[x1..xn] generated by finitely many monomials, always kept in
/// minimal canonical form so equality is structural. No generators means
/// the zero ideal.
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    MonomialIdeal(std::size_t ambient_n, std::vector<FactoredElement> gens) : n_(ambient_n)
    {
        for (const auto& g : gens) {
            g.require_arity(n_);
        }
        gens_ = minimal_basis(std::move(gens));
    }

    static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n, {}); }

    /// <x_i : i in vars>.
    static MonomialIdeal linear(std::size_t n, const std::vector<int>& vars)
    {
        std::vector<FactoredElement> g;
        for (int v : vars) {
            g.push_back(FactoredElement::squarefree(n, {v}));
        }
        return MonomialIdeal(n, std::move(g));
    }

    std::size_t ambient() const noexcept { return n_; }
    const std::vector<FactoredElement>& generators() const noexcept { return gens_; }
    bool is_zero() const noexcept { return gens_.empty(); }

    bool is_unit_ideal() const
    {
        return std::any_of(gens_.begin(), gens_.end(), [](const auto& g) { return g.is_unit(); });
    }

    bool is_squarefree() const
    {
        return std::all_of(gens_.begin(), gens_.end(), [](const auto& g) { return g.is_squarefree(); });
    }

    /// m in I iff some generator divides m.
    bool contains(const FactoredElement& m) const
    {
        m.require_arity(n_);
        return std::any_of(gens_.begin(), gens_.end(), [&](const auto& g) { return divides(g, m); });
    }

    bool is_subset_of(const MonomialIdeal& other) const
    {
        return std::all_of(gens_.begin(), gens_.end(), [&](const auto& g) { return other.contains(g); });
    }

    MonomialIdeal radical() const { return MonomialIdeal(n_, radical_generators(gens_)); }

    std::string to_string() const
    {
        if (gens_.empty()) {
            return "<0>";
        }
        std::string out = "<";
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            out += (i ? ", " : "") + gens_[i].to_string();
        }
        return out + ">";
    }

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    std::size_t n_ = 0;
    std::vector<FactoredElement> gens_;
};

/// Linear prime P_W = <x_i : i in W>. W empty is the zero ideal. Ordered by
/// |W|, then lexicographically.
class LinearPrime {
public:
    LinearPrime() = default;

    explicit LinearPrime(std::vector<int> vars) : w_(std::move(vars))
    {
        std::sort(w_.begin(), w_.end());
        if (std::adjacent_find(w_.begin(), w_.end()) != w_.end()) {
            throw std::invalid_argument("linear prime with repeated variable");
        }
        if (!w_.empty() && w_.front() < 1) {
            throw std::invalid_argument("variable indices are 1-based");
        }
    }

    LinearPrime(std::initializer_list<int> vars) : LinearPrime(std::vector<int>(vars)) {}

    const std::vector<int>& vars() const noexcept { return w_; }
    std::size_t size() const noexcept { return w_.size(); }
    bool is_zero() const noexcept { return w_.empty(); }

    bool contains_var(int i) const { return std::binary_search(w_.begin(), w_.end(), i); }

    bool is_subset_of(const LinearPrime& other) const
    {
        return std::includes(other.w_.begin(), other.w_.end(), w_.begin(), w_.end());
    }

    /// I subset of P_W iff every generator's support meets W.
    bool contains(const MonomialIdeal& ideal) const
    {
        for (const auto& g : ideal.generators()) {
            const auto s = g.support();
            if (std::none_of(s.begin(), s.end(), [&](int v) { return contains_var(v); })) {
                return false;
            }
        }
        return true;
    }

    std::string to_string() const
    {
        if (w_.empty()) {
            return "<0>";
        }
        std::ostringstream os;
        os << '<';
        for (std::size_t i = 0; i < w_.size(); ++i) {
            os << (i ? ", " : "") << 'x' << w_[i];
        }
        os << '>';
        return os.str();
    }

    friend std::strong_ordering operator<=>(const LinearPrime& a, const LinearPrime& b)
    {
        if (auto c = a.w_.size() <=> b.w_.size(); c != 0) {
            return c;
        }
        return a.w_ <=> b.w_;
    }
    friend bool operator==(const LinearPrime&, const LinearPrime&) = default;

private:
    std::vector<int> w_;
};

using PrimeSet = std::set<LinearPrime>;

namespace detail {

// Branching enumeration of the minimal transversals of a set family over
// [0, n). Branch on the vertices of the first unhit edge; the vertices
// skipped in earlier sibling branches are forbidden, so each candidate is
// produced once. Leaves are kept only if every chosen vertex owns a private
// edge, i.e. the transversal is inclusion-minimal.
template <class Set>
class TransversalEnumerator {
public:
    TransversalEnumerator(std::size_t n, std::vector<Set> edges) : n_(n), edges_(std::move(edges)) {}

    std::vector<Set> run()
    {
        Set chosen = bits::make<Set>(n_);
        Set forbidden = bits::make<Set>(n_);
        descend(chosen, forbidden);
        return std::move(out_);
    }

private:
    void descend(Set& chosen, Set& forbidden)
    {
        const Set* unhit = nullptr;
        for (const Set& e : edges_) {
            if (!bits::intersects(e, chosen)) {
                if (bits::is_subset(e, forbidden)) {
                    return;
                }
                if (unhit == nullptr) {
                    unhit = &e;
                }
            }
        }
        if (unhit == nullptr) {
            if (is_minimal(chosen)) {
                out_.push_back(chosen);
            }
            return;
        }
        const Set branch = bits::minus(*unhit, forbidden);
        std::vector<std::size_t> added;
        bits::for_each(branch, [&](std::size_t v) {
            bits::set(chosen, v);
            if (has_private_edges(chosen)) {
                descend(chosen, forbidden);
            }
            bits::reset(chosen, v);
            bits::set(forbidden, v);
            added.push_back(v);
        });
        for (std::size_t v : added) {
            bits::reset(forbidden, v);
        }
    }

    // Necessary for minimality at every depth: a chosen vertex that already
    // lost all private edges stays redundant in every extension.
    bool has_private_edges(const Set& chosen) const { return is_minimal(chosen); }

    bool is_minimal(const Set& chosen) const
    {
        bool ok = true;
        bits::for_each(chosen, [&](std::size_t v) {
            if (!ok) {
                return;
            }
            bool owns = false;
            for (const Set& e : edges_) {
                if (bits::test(e, v) && bits::count(bits::meet(e, chosen)) == 1) {
                    owns = true;
                    break;
                }
            }
            ok = owns;
        });
        return ok;
    }

    std::size_t n_;
    std::vector<Set> edges_;
    std::vector<Set> out_;
};

template <class Set>
std::vector<std::vector<int>> transversals_with(std::size_t n, const std::vector<std::vector<int>>& edges)
{
    std::vector<Set> sets;
    for (const auto& e : edges) {
        std::vector<int> zero;
        for (int v : e) {
            zero.push_back(v - 1);
        }
        sets.push_back(bits::from_indices<Set>(n, zero));
    }
    std::vector<std::vector<int>> out;
    for (const Set& t : TransversalEnumerator<Set>(n, std::move(sets)).run()) {
        std::vector<int> one;
        for (int v : bits::to_indices(t)) {
            one.push_back(v + 1);
        }
        out.push_back(std::move(one));
    }
    return out;
}

} // namespace detail

/// Inclusion-minimal hitting sets of a family of nonempty subsets of [1, n].
/// The empty family has the single transversal {}.
inline std::vector<std::vector<int>> minimal_transversals(std::size_t n,
                                                          const std::vector<std::vector<int>>& edges)
{
    for (const auto& e : edges) {
        if (e.empty()) {
            throw std::invalid_argument("cannot hit an empty edge");
        }
    }
    if (n <= bits::small_limit) {
        return detail::transversals_with<bits::Small>(n, edges);
    }
    return detail::transversals_with<bits::Large>(n, edges);
}

/// Ass(I) for a square-free proper monomial ideal: the minimal linear
/// primes containing I, i.e. the minimal transversals of the generator
/// supports. The zero ideal gives {P_empty}.
inline PrimeSet minimal_primes_squarefree(const MonomialIdeal& ideal)
{
    if (ideal.is_unit_ideal()) {
        throw std::invalid_argument("the unit ideal has no associated primes");
    }
    if (!ideal.is_squarefree()) {
        throw std::invalid_argument("ideal is not square-free; take its radical first");
    }
    std::vector<std::vector<int>> supports;
    for (const auto& g : ideal.generators()) {
        supports.push_back(g.support());
    }
    PrimeSet out;
    for (auto& t : minimal_transversals(ideal.ambient(), supports)) {
        out.insert(LinearPrime(std::move(t)));
    }
    return out;
}

} // namespace algpers
