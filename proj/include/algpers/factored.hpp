#pragma once

// Elements of a unique factorization domain written in factored form over a
// declared table of pairwise-coprime irreducible atoms. Monomials are the
// special case where every atom is a variable.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace algpers {

/// Ordered list of distinct atom names ("x1", "x1+x2", "3", ...).
class AtomTable {
public:
    AtomTable() = default;

    explicit AtomTable(std::vector<std::string> names) : names_(std::move(names))
    {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            for (std::size_t j = i + 1; j < names_.size(); ++j) {
                if (names_[i] == names_[j]) {
                    throw std::invalid_argument("duplicate atom '" + names_[i] + "'");
                }
            }
        }
    }

    /// x1, ..., xn.
    static AtomTable variables(std::size_t n)
    {
        std::vector<std::string> names;
        for (std::size_t i = 1; i <= n; ++i) {
            names.push_back("x" + std::to_string(i));
        }
        return AtomTable(std::move(names));
    }

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const noexcept { return names_; }

    std::size_t index_of(const std::string& name) const
    {
        auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end()) {
            throw std::invalid_argument("unknown atom '" + name + "'");
        }
        return static_cast<std::size_t>(it - names_.begin());
    }

    friend bool operator==(const AtomTable&, const AtomTable&) = default;

private:
    std::vector<std::string> names_;
};

/// Nonzero element prod_i atom_i^exp_i. The unit is the all-zero vector.
/// Two elements are compatible iff they have the same arity (atom count).
class FactoredElement {
public:
    FactoredElement() = default;

    explicit FactoredElement(std::vector<unsigned> exponents) : exp_(std::move(exponents)) {}

    static FactoredElement unit(std::size_t arity) { return FactoredElement(std::vector<unsigned>(arity, 0)); }

    /// Square-free product of the given 1-based atom indices.
    static FactoredElement squarefree(std::size_t arity, const std::vector<int>& support)
    {
        std::vector<unsigned> e(arity, 0);
        for (int i : support) {
            if (i < 1 || static_cast<std::size_t>(i) > arity) {
                throw std::invalid_argument("atom index out of range");
            }
            e[static_cast<std::size_t>(i - 1)] = 1;
        }
        return FactoredElement(std::move(e));
    }

    std::size_t arity() const noexcept { return exp_.size(); }
    const std::vector<unsigned>& exponents() const noexcept { return exp_; }
    unsigned operator[](std::size_t i) const { return exp_[i]; }

    bool is_unit() const
    {
        return std::all_of(exp_.begin(), exp_.end(), [](unsigned e) { return e == 0; });
    }

    bool is_squarefree() const
    {
        return std::all_of(exp_.begin(), exp_.end(), [](unsigned e) { return e <= 1; });
    }

    unsigned degree() const { return std::accumulate(exp_.begin(), exp_.end(), 0u); }

    /// 1-based atom indices with positive exponent.
    std::vector<int> support() const
    {
        std::vector<int> s;
        for (std::size_t i = 0; i < exp_.size(); ++i) {
            if (exp_[i] > 0) {
                s.push_back(static_cast<int>(i + 1));
            }
        }
        return s;
    }

    FactoredElement flattened() const
    {
        std::vector<unsigned> e(exp_);
        for (auto& x : e) {
            x = x > 0 ? 1 : 0;
        }
        return FactoredElement(std::move(e));
    }

    std::string to_string(const AtomTable& atoms) const
    {
        require_arity(atoms.size());
        std::string out;
        for (std::size_t i = 0; i < exp_.size(); ++i) {
            if (exp_[i] == 0) {
                continue;
            }
            if (!out.empty()) {
                out += '*';
            }
            const std::string& a = atoms.name(i);
            const bool composite = a.find_first_of("+-* ") != std::string::npos;
            out += composite ? "(" + a + ")" : a;
            if (exp_[i] > 1) {
                out += '^' + std::to_string(exp_[i]);
            }
        }
        return out.empty() ? "1" : out;
    }

    /// Rendering over the default variable table x1..xn.
    std::string to_string() const { return to_string(AtomTable::variables(arity())); }

    void require_arity(std::size_t n) const
    {
        if (arity() != n) {
            throw std::invalid_argument("mismatched atom tables: arity " + std::to_string(arity()) +
                                        " vs " + std::to_string(n));
        }
    }

    friend auto operator<=>(const FactoredElement&, const FactoredElement&) = default;
    friend bool operator==(const FactoredElement&, const FactoredElement&) = default;

private:
    std::vector<unsigned> exp_;
};

namespace detail {

template <class Op>
FactoredElement zip_exponents(const FactoredElement& a, const FactoredElement& b, Op op)
{
    b.require_arity(a.arity());
    std::vector<unsigned> e(a.arity());
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = op(a[i], b[i]);
    }
    return FactoredElement(std::move(e));
}

} // namespace detail

inline FactoredElement lcm(const FactoredElement& a, const FactoredElement& b)
{
    return detail::zip_exponents(a, b, [](unsigned x, unsigned y) { return std::max(x, y); });
}

inline FactoredElement gcd(const FactoredElement& a, const FactoredElement& b)
{
    return detail::zip_exponents(a, b, [](unsigned x, unsigned y) { return std::min(x, y); });
}

inline FactoredElement operator*(const FactoredElement& a, const FactoredElement& b)
{
    return detail::zip_exponents(a, b, [](unsigned x, unsigned y) { return x + y; });
}

/// a | b.
inline bool divides(const FactoredElement& a, const FactoredElement& b)
{
    b.require_arity(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
    }
    return true;
}

/// b / a; throws unless a | b.
inline FactoredElement quotient(const FactoredElement& b, const FactoredElement& a)
{
    if (!divides(a, b)) {
        throw std::invalid_argument("quotient is not exact");
    }
    return detail::zip_exponents(b, a, [](unsigned x, unsigned y) { return x - y; });
}

/// Canonical generator order: by total degree, then larger exponent
/// vectors first (so x1*x4 precedes x2*x4).
struct CanonicalOrder {
    bool operator()(const FactoredElement& a, const FactoredElement& b) const
    {
        if (a.degree() != b.degree()) {
            return a.degree() < b.degree();
        }
        return a > b;
    }
};

} // namespace algpers
