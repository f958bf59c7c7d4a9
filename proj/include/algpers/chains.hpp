#pragma once

// Classical simplicial chain complexes: canonical bases, integer boundary
// matrices and Betti numbers over a chosen field.

#include <cstddef>
#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "algpers/complexes.hpp"
#include "algpers/exact/field.hpp"
#include "algpers/exact/matrix.hpp"

namespace algpers {

/// Canonical basis of C_k: the k-faces in colex order (k = -1: {empty}).
struct ChainBasis {
    int dim = 0;
    std::vector<Face> faces;
    std::map<Face, std::size_t> index;

    ChainBasis() = default;
    ChainBasis(int k, std::vector<Face> fs) : dim(k), faces(std::move(fs))
    {
        for (std::size_t i = 0; i < faces.size(); ++i) {
            index.emplace(faces[i], i);
        }
    }

    static ChainBasis of(const SimplicialComplex& k, int dim) { return ChainBasis(dim, k.faces_of_dim(dim)); }

    std::size_t size() const noexcept { return faces.size(); }
};

/// Sign of removing the vertex at 0-based position `pos`: (-1)^u with u
/// the 1-based position, so the smallest vertex carries -1.
inline std::int64_t removal_sign(std::size_t pos) { return pos % 2 == 0 ? -1 : 1; }

/// Matrix of d_k : C_k -> C_{k-1} in canonical bases. For k = 0 the target
/// is C_{-1} = span{empty} in the reduced complex and zero otherwise.
inline SparseMatrix<std::int64_t> classical_boundary(const SimplicialComplex& k, int dim, bool reduced)
{
    const ChainBasis cols = ChainBasis::of(k, dim);
    if (dim == 0 && !reduced) {
        return SparseMatrix<std::int64_t>(0, cols.size());
    }
    const ChainBasis rows = ChainBasis::of(k, dim - 1);
    SparseMatrix<std::int64_t> m(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const Face& sigma = cols.faces[c];
        for (std::size_t pos = 0; pos < sigma.size(); ++pos) {
            m.set(rows.index.at(sigma.without_index(pos)), c, removal_sign(pos));
        }
    }
    return m;
}

/// Betti numbers indexed from min_dim (-1 for reduced, 0 otherwise).
struct BettiVector {
    int min_dim = 0;
    std::vector<std::size_t> values;

    std::size_t at(int k) const
    {
        const int i = k - min_dim;
        return (i < 0 || i >= static_cast<int>(values.size())) ? 0 : values[static_cast<std::size_t>(i)];
    }

    int max_dim() const { return min_dim + static_cast<int>(values.size()) - 1; }

    friend bool operator==(const BettiVector& a, const BettiVector& b)
    {
        const int lo = std::min(a.min_dim, b.min_dim);
        const int hi = std::max(a.max_dim(), b.max_dim());
        for (int k = lo; k <= hi; ++k) {
            if (a.at(k) != b.at(k)) {
                return false;
            }
        }
        return true;
    }
};

/// b_k = dim C_k - rank d_k - rank d_{k+1}. `chain_dims[i]` and
/// `ranks[i]` (rank of the map out of C_{min_dim+i}) are indexed from min_dim.
inline BettiVector betti_from_ranks(int min_dim, const std::vector<std::size_t>& chain_dims,
                                    const std::vector<std::size_t>& ranks)
{
    BettiVector b{min_dim, {}};
    for (std::size_t i = 0; i < chain_dims.size(); ++i) {
        const std::size_t out = ranks[i];
        const std::size_t in = i + 1 < ranks.size() ? ranks[i + 1] : 0;
        b.values.push_back(chain_dims[i] - out - in);
    }
    return b;
}

inline BettiVector betti_numbers(const SimplicialComplex& k, const FieldChoice& field, bool reduced = false)
{
    const int lo = reduced ? -1 : 0;
    const int hi = k.dimension();
    std::vector<std::size_t> dims;
    std::vector<std::size_t> ranks;
    with_field(field, [&](const auto& f) {
        for (int d = lo; d <= hi; ++d) {
            dims.push_back(ChainBasis::of(k, d).size());
            if (d == lo) {
                ranks.push_back(0);
                continue;
            }
            const auto m = classical_boundary(k, d, reduced).map([&](std::int64_t v) { return f.from_int(v); });
            ranks.push_back(rank_kernel(f, m).rank);
        }
        return 0;
    });
    return betti_from_ranks(lo, dims, ranks);
}

} // namespace algpers
