#pragma once

// Sparse column-major matrices and exact elimination kernels: field rank,
// fraction-free (Bareiss) rank over integral domains, and the standard
// persistence column reduction.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "algpers/exact/field.hpp"
#include "algpers/exact/polynomial.hpp"

namespace algpers {

inline bool is_zero(std::int64_t v) { return v == 0; }
inline bool is_zero(std::uint64_t v) { return v == 0; }

template <class T>
class SparseMatrix {
public:
    using Entry = std::pair<std::size_t, T>;
    using Column = std::vector<Entry>;

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const Column& column(std::size_t c) const { return data_.at(c); }

    /// Stores v at (r, c); zero values erase the entry.
    void set(std::size_t r, std::size_t c, T v)
    {
        if (r >= rows_ || c >= cols_) {
            throw std::out_of_range("matrix index out of range");
        }
        auto& col = data_[c];
        auto it = std::lower_bound(col.begin(), col.end(), r,
                                   [](const Entry& e, std::size_t row) { return e.first < row; });
        const bool present = it != col.end() && it->first == r;
        if (is_zero(v)) {
            if (present) {
                col.erase(it);
            }
        } else if (present) {
            it->second = std::move(v);
        } else {
            col.insert(it, Entry{r, std::move(v)});
        }
    }

    /// Entry at (r, c), or `zero` if none is stored.
    T get(std::size_t r, std::size_t c, const T& zero) const
    {
        const auto& col = data_.at(c);
        auto it = std::lower_bound(col.begin(), col.end(), r,
                                   [](const Entry& e, std::size_t row) { return e.first < row; });
        return (it != col.end() && it->first == r) ? it->second : zero;
    }

    std::size_t nonzeros() const
    {
        std::size_t k = 0;
        for (const auto& c : data_) {
            k += c.size();
        }
        return k;
    }

    template <class F>
    auto map(F&& f) const -> SparseMatrix<decltype(f(std::declval<const T&>()))>
    {
        SparseMatrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
        for (std::size_t c = 0; c < cols_; ++c) {
            for (const auto& [r, v] : data_[c]) {
                out.set(r, c, f(v));
            }
        }
        return out;
    }

    friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Column> data_;
};

struct RankKernel {
    std::size_t rank = 0;
    std::size_t kernel_dim = 0;
};

/// Rank and nullity over a field by left-to-right column reduction on the
/// lowest nonzero row.
template <class Field>
RankKernel rank_kernel(const Field& field, const SparseMatrix<typename Field::value_type>& m)
{
    using V = typename Field::value_type;
    using Col = std::vector<std::pair<std::size_t, V>>;
    std::map<std::size_t, Col> by_pivot;
    std::size_t rank = 0;

    auto axpy = [&](const Col& a, const V& s, const Col& b) {
        // a - s*b, both sorted by row.
        Col out;
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                V v = field.sub(field.zero(), field.mul(s, b[j].second));
                out.emplace_back(b[j].first, std::move(v));
                ++j;
            } else {
                V v = field.sub(a[i].second, field.mul(s, b[j].second));
                if (!field.is_zero(v)) {
                    out.emplace_back(a[i].first, std::move(v));
                }
                ++i;
                ++j;
            }
        }
        return out;
    };

    for (std::size_t c = 0; c < m.cols(); ++c) {
        Col col;
        for (const auto& [r, v] : m.column(c)) {
            if (!field.is_zero(v)) {
                col.emplace_back(r, v);
            }
        }
        while (!col.empty()) {
            auto it = by_pivot.find(col.back().first);
            if (it == by_pivot.end()) {
                break;
            }
            const V s = field.mul(col.back().second, field.inv(it->second.back().second));
            col = axpy(col, s, it->second);
        }
        if (!col.empty()) {
            const std::size_t low = col.back().first;
            by_pivot.emplace(low, std::move(col));
            ++rank;
        }
    }
    return {rank, m.cols() - rank};
}

/// Rank over the fraction field of an integral domain by fraction-free
/// Gaussian elimination. Every division performed is exact.
template <class T, class Div>
std::size_t bareiss_rank_dense(std::vector<std::vector<T>> a, const T& one, Div&& divide)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    T prev = one;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(a[p][c])) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = divide(a[r][c] * a[i][j] - a[i][c] * a[r][j], prev);
            }
            a[i][c] = a[i][c] - a[i][c];
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

/// Fraction-field rank of a polynomial matrix.
inline std::size_t bareiss_rank(const SparseMatrix<Polynomial>& m, std::size_t nvars)
{
    const Polynomial zero(nvars);
    std::vector<std::vector<Polynomial>> a(m.rows(), std::vector<Polynomial>(m.cols(), zero));
    for (std::size_t c = 0; c < m.cols(); ++c) {
        for (const auto& [r, v] : m.column(c)) {
            a[r][c] = v;
        }
    }
    return bareiss_rank_dense(std::move(a), Polynomial::constant(nvars, 1),
                              [](const Polynomial& x, const Polynomial& y) { return divide_exact(x, y); });
}

/// Rank of a rational matrix by the same fraction-free route.
inline std::size_t bareiss_rank(const SparseMatrix<Rational>& m)
{
    std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols(), Rational(0)));
    for (std::size_t c = 0; c < m.cols(); ++c) {
        for (const auto& [r, v] : m.column(c)) {
            a[r][c] = v;
        }
    }
    return bareiss_rank_dense(std::move(a), Rational(1),
                              [](const Rational& x, const Rational& y) { return x / y; });
}

/// One boundary column of a filtered complex: its dimension and the
/// (earlier) cells of its boundary with integer coefficients.
struct BoundaryColumn {
    int dim = 0;
    std::vector<std::pair<std::size_t, std::int64_t>> boundary;
};

struct PersistencePairing {
    std::vector<std::pair<std::size_t, std::size_t>> pairs; // (birth cell, death cell)
    std::vector<std::size_t> essential;                     // never-killed creators
};

/// Standard persistence reduction over a field. Columns must be listed in a
/// filtration-compatible order: every boundary cell precedes its column and
/// has dimension one less.
template <class Field>
PersistencePairing persistence_reduce(const std::vector<BoundaryColumn>& cols, const Field& field)
{
    using V = typename Field::value_type;
    using Col = std::vector<std::pair<std::size_t, V>>;
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    const std::size_t n = cols.size();
    std::vector<Col> reduced(n);
    std::vector<std::size_t> low_owner(n, none);
    std::vector<bool> killed(n, false);
    PersistencePairing out;

    for (std::size_t j = 0; j < n; ++j) {
        Col col;
        for (const auto& [i, coeff] : cols[j].boundary) {
            if (i >= j) {
                throw std::invalid_argument("boundary cell " + std::to_string(i) + " does not precede column " +
                                            std::to_string(j));
            }
            if (cols[i].dim != cols[j].dim - 1) {
                throw std::invalid_argument("boundary cell " + std::to_string(i) + " has the wrong dimension");
            }
            V v = field.from_int(coeff);
            if (!field.is_zero(v)) {
                col.emplace_back(i, std::move(v));
            }
        }
        std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        while (!col.empty() && low_owner[col.back().first] != none) {
            const Col& other = reduced[low_owner[col.back().first]];
            const V s = field.mul(col.back().second, field.inv(other.back().second));
            Col next;
            std::size_t a = 0;
            std::size_t b = 0;
            while (a < col.size() || b < other.size()) {
                if (b == other.size() || (a < col.size() && col[a].first < other[b].first)) {
                    next.push_back(col[a++]);
                } else if (a == col.size() || other[b].first < col[a].first) {
                    next.emplace_back(other[b].first, field.sub(field.zero(), field.mul(s, other[b].second)));
                    ++b;
                } else {
                    V v = field.sub(col[a].second, field.mul(s, other[b].second));
                    if (!field.is_zero(v)) {
                        next.emplace_back(col[a].first, std::move(v));
                    }
                    ++a;
                    ++b;
                }
            }
            col = std::move(next);
        }
        if (!col.empty()) {
            const std::size_t low = col.back().first;
            low_owner[low] = j;
            killed[low] = true;
            out.pairs.emplace_back(low, j);
        }
        reduced[j] = std::move(col);
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (reduced[j].empty() && !killed[j]) {
            out.essential.push_back(j);
        }
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

} // namespace algpers
