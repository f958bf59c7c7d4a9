#pragma once

// Labelled complexes over a factored UFD. Each vertex i carries a nonzero
// label m_i, each face the lcm m_sigma of its vertex labels, and the
// boundary map sends sigma to sum_u (-1)^u (m_sigma / m_{sigma - i_u}) (sigma - i_u).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "algpers/chains.hpp"
#include "algpers/complexes.hpp"
#include "algpers/exact/field.hpp"
#include "algpers/exact/matrix.hpp"
#include "algpers/exact/polynomial.hpp"
#include "algpers/factored.hpp"

namespace algpers {

/// Matrix entry +-coeff of a labelled boundary map; sign 0 is the zero entry.
struct LabelledEntry {
    int sign = 0;
    FactoredElement coeff;

    friend bool operator==(const LabelledEntry&, const LabelledEntry&) = default;
};

inline bool is_zero(const LabelledEntry& e) { return e.sign == 0; }

/// Raised when a labelled evaluation point kills some vertex label.
class InadmissiblePoint : public std::invalid_argument {
public:
    explicit InadmissiblePoint(std::vector<int> vanishing)
        : std::invalid_argument(message(vanishing)), vanishing_(std::move(vanishing))
    {
    }

    const std::vector<int>& vanishing() const noexcept { return vanishing_; }

private:
    static std::string message(const std::vector<int>& v)
    {
        std::string s = "inadmissible point: labels of vertices";
        for (int i : v) {
            s += " " + std::to_string(i);
        }
        return s + " vanish";
    }

    std::vector<int> vanishing_;
};

class LabelledComplex {
public:
    LabelledComplex() = default;

    /// `expansions[a]` is atom a as a polynomial in x1..x_nvars. When omitted
    /// each atom name is parsed as a polynomial expression.
    LabelledComplex(SimplicialComplex k, AtomTable atoms, std::vector<FactoredElement> labels, bool reduced,
                    std::optional<std::vector<Polynomial>> expansions = std::nullopt)
        : k_(std::move(k)), atoms_(std::move(atoms)), labels_(std::move(labels)), reduced_(reduced)
    {
        if (labels_.size() != k_.universe()) {
            throw std::invalid_argument("need one label per vertex: got " + std::to_string(labels_.size()) +
                                        " for n = " + std::to_string(k_.universe()));
        }
        for (const auto& l : labels_) {
            l.require_arity(atoms_.size());
        }
        if (expansions) {
            expansions_ = std::move(*expansions);
            if (expansions_.size() != atoms_.size()) {
                throw std::invalid_argument("need one expansion per atom");
            }
            nvars_ = expansions_.empty() ? 0 : expansions_.front().arity();
        } else {
            for (const auto& name : atoms_.names()) {
                nvars_ = std::max(nvars_, max_variable_index(name));
            }
            for (const auto& name : atoms_.names()) {
                expansions_.push_back(Polynomial::parse(name, nvars_));
            }
        }
        for (std::size_t a = 0; a < expansions_.size(); ++a) {
            if (expansions_[a].arity() != nvars_) {
                throw std::invalid_argument("atom expansions disagree on the number of variables");
            }
            if (expansions_[a].is_zero()) {
                throw std::invalid_argument("atom '" + atoms_.name(a) + "' is zero; labels must be nonzero");
            }
        }
        for (const Face& f : k_.faces()) {
            FactoredElement m = FactoredElement::unit(atoms_.size());
            for (int v : f) {
                m = lcm(m, labels_[static_cast<std::size_t>(v - 1)]);
            }
            face_labels_.emplace(f, std::move(m));
        }
    }

    const SimplicialComplex& complex() const noexcept { return k_; }
    const AtomTable& atoms() const noexcept { return atoms_; }
    const std::vector<FactoredElement>& vertex_labels() const noexcept { return labels_; }
    const std::vector<Polynomial>& expansions() const noexcept { return expansions_; }
    std::size_t variables() const noexcept { return nvars_; }
    bool reduced() const noexcept { return reduced_; }

    /// m_sigma; the empty face is labelled 1.
    const FactoredElement& label(const Face& f) const
    {
        if (f.empty()) {
            static thread_local std::map<std::size_t, FactoredElement> units;
            return units.try_emplace(atoms_.size(), FactoredElement::unit(atoms_.size())).first->second;
        }
        return face_labels_.at(f);
    }

    /// The factored element multiplied out as a polynomial.
    Polynomial expand(const FactoredElement& m) const
    {
        Polynomial p = Polynomial::constant(nvars_, 1);
        for (std::size_t a = 0; a < m.arity(); ++a) {
            if (m[a] > 0) {
                p = p * expansions_[a].pow(m[a]);
            }
        }
        return p;
    }

    Polynomial expand(const LabelledEntry& e) const
    {
        if (e.sign == 0) {
            return Polynomial(nvars_);
        }
        Polynomial p = expand(e.coeff);
        return e.sign < 0 ? -p : p;
    }

    /// True iff every atom is a distinct bare variable, so labels are monomials.
    bool is_monomial_labelled() const
    {
        std::vector<bool> seen(nvars_, false);
        for (const auto& p : expansions_) {
            if (p.terms().size() != 1 || p.terms().begin()->second != 1) {
                return false;
            }
            const auto& e = p.terms().begin()->first;
            std::size_t ones = 0;
            std::size_t where = 0;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 1) {
                    ++ones;
                    where = i;
                } else if (e[i] != 0) {
                    return false;
                }
            }
            if (ones != 1 || seen[where]) {
                return false;
            }
            seen[where] = true;
        }
        return true;
    }

    /// Same labels on another complex over the same vertex universe.
    LabelledComplex with_complex(SimplicialComplex k) const
    {
        return LabelledComplex(std::move(k), atoms_, labels_, reduced_, expansions_);
    }

    LabelledComplex with_reduced(bool reduced) const
    {
        return LabelledComplex(k_, atoms_, labels_, reduced, expansions_);
    }

private:
    SimplicialComplex k_;
    AtomTable atoms_;
    std::vector<FactoredElement> labels_;
    bool reduced_ = false;
    std::vector<Polynomial> expansions_;
    std::size_t nvars_ = 0;
    std::map<Face, FactoredElement> face_labels_;
};

inline LabelledComplex make_labelled(const SimplicialComplex& k, const AtomTable& atoms,
                                     const std::vector<FactoredElement>& labels, bool reduced = false,
                                     std::optional<std::vector<Polynomial>> expansions = std::nullopt)
{
    return LabelledComplex(k, atoms, labels, reduced, std::move(expansions));
}

/// Matrix of the labelled boundary from dimension `dim` to `dim - 1`.
struct LabelledBoundary {
    int dim = 0;
    ChainBasis rows;
    ChainBasis cols;
    SparseMatrix<LabelledEntry> matrix;

    std::string entry_string(std::size_t r, std::size_t c, const AtomTable& atoms) const
    {
        const LabelledEntry e = matrix.get(r, c, LabelledEntry{});
        if (e.sign == 0) {
            return "0";
        }
        const std::string body = e.coeff.to_string(atoms);
        return e.sign > 0 ? body : "-" + body;
    }
};

/// All boundary matrices, lowest dimension first (0 -> {empty} only when
/// reduced).
inline std::vector<LabelledBoundary> boundary_matrices(const LabelledComplex& lc)
{
    const auto& k = lc.complex();
    std::vector<LabelledBoundary> out;
    const int lo = lc.reduced() ? 0 : 1;
    for (int d = lo; d <= k.dimension(); ++d) {
        LabelledBoundary b{d, ChainBasis::of(k, d - 1), ChainBasis::of(k, d), {}};
        b.matrix = SparseMatrix<LabelledEntry>(b.rows.size(), b.cols.size());
        for (std::size_t c = 0; c < b.cols.size(); ++c) {
            const Face& sigma = b.cols.faces[c];
            for (std::size_t pos = 0; pos < sigma.size(); ++pos) {
                const Face tau = sigma.without_index(pos);
                b.matrix.set(b.rows.index.at(tau), c,
                             LabelledEntry{static_cast<int>(removal_sign(pos)), quotient(lc.label(sigma), lc.label(tau))});
            }
        }
        out.push_back(std::move(b));
    }
    return out;
}

/// Every composite of consecutive labelled boundaries vanishes, summed
/// symbolically in the factored ring.
inline bool chain_condition_holds(const LabelledComplex& lc)
{
    const auto mats = boundary_matrices(lc);
    for (std::size_t i = 1; i < mats.size(); ++i) {
        const auto& lower = mats[i - 1];
        const auto& upper = mats[i];
        for (std::size_t c = 0; c < upper.cols.size(); ++c) {
            std::map<std::pair<std::size_t, FactoredElement>, long> sums;
            for (const auto& [mid, e1] : upper.matrix.column(c)) {
                for (const auto& [row, e2] : lower.matrix.column(mid)) {
                    sums[{row, e1.coeff * e2.coeff}] += e1.sign * e2.sign;
                }
            }
            for (const auto& [key, s] : sums) {
                if (s != 0) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// Entrywise over the fraction field: labelled D_k equals
/// diag(1/m_rows) * classical D_k * diag(m_cols).
inline bool diag_relation_check(const LabelledComplex& lc)
{
    for (const auto& b : boundary_matrices(lc)) {
        const auto classical = classical_boundary(lc.complex(), b.dim, lc.reduced());
        for (std::size_t c = 0; c < b.cols.size(); ++c) {
            for (std::size_t r = 0; r < b.rows.size(); ++r) {
                const std::int64_t d = classical.get(r, c, 0);
                const LabelledEntry e = b.matrix.get(r, c, LabelledEntry{});
                if (e.sign != d) {
                    return false;
                }
                if (d != 0 && !(e.coeff * lc.label(b.rows.faces[r]) == lc.label(b.cols.faces[c]))) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// Values of the vertex labels at a point of Q^nvars.
inline std::vector<Rational> label_values(const LabelledComplex& lc, const std::vector<Rational>& point)
{
    std::vector<Rational> atom_vals;
    for (const auto& p : lc.expansions()) {
        atom_vals.push_back(p.evaluate(point));
    }
    std::vector<Rational> out;
    for (const auto& l : lc.vertex_labels()) {
        Rational v = 1;
        for (std::size_t a = 0; a < l.arity(); ++a) {
            for (unsigned e = 0; e < l[a]; ++e) {
                v *= atom_vals[a];
            }
        }
        out.push_back(v);
    }
    return out;
}

/// Vertices (of the complex) whose label vanishes in the residue field of
/// the point.
inline std::vector<int> vanishing_labels(const LabelledComplex& lc, const std::vector<Rational>& point,
                                         const FieldChoice& field = FieldChoice::rationals())
{
    const auto vals = label_values(lc, point);
    std::vector<int> out;
    for (int v : lc.complex().vertices()) {
        const Rational& x = vals[static_cast<std::size_t>(v - 1)];
        const bool zero = with_field(field, [&](const auto& f) {
            try {
                return f.is_zero(f.from_rational(x));
            } catch (const std::domain_error&) {
                return true;
            }
        });
        if (zero) {
            out.push_back(v);
        }
    }
    return out;
}

struct EvaluatedChain {
    std::vector<int> dims;                         // source dimension of each matrix
    std::vector<SparseMatrix<Rational>> matrices;  // entries in Q before any reduction mod p
    BettiVector betti;                             // of the evaluated complex
    BettiVector classical_betti;                   // of the plain complex, same field
};

/// Evaluates every labelled boundary at `point` and computes homology over
/// `field`. Throws InadmissiblePoint if a label vanishes.
inline EvaluatedChain evaluate_chain(const LabelledComplex& lc, const std::vector<Rational>& point,
                                     const FieldChoice& field = FieldChoice::rationals())
{
    if (point.size() != lc.variables()) {
        throw std::invalid_argument("evaluation point needs " + std::to_string(lc.variables()) + " coordinates");
    }
    if (auto bad = vanishing_labels(lc, point, field); !bad.empty()) {
        throw InadmissiblePoint(std::move(bad));
    }
    EvaluatedChain out;
    const auto mats = boundary_matrices(lc);
    for (const auto& b : mats) {
        out.dims.push_back(b.dim);
        out.matrices.push_back(b.matrix.map([&](const LabelledEntry& e) { return lc.expand(e).evaluate(point); }));
    }
    const auto& k = lc.complex();
    const int lo = lc.reduced() ? -1 : 0;
    std::vector<std::size_t> chain_dims;
    std::vector<std::size_t> ranks;
    with_field(field, [&](const auto& f) {
        for (int d = lo; d <= k.dimension(); ++d) {
            chain_dims.push_back(ChainBasis::of(k, d).size());
            std::size_t r = 0;
            for (std::size_t i = 0; i < out.dims.size(); ++i) {
                if (out.dims[i] == d) {
                    r = rank_kernel(f, out.matrices[i].map([&](const Rational& x) { return f.from_rational(x); })).rank;
                }
            }
            ranks.push_back(r);
        }
        return 0;
    });
    out.betti = betti_from_ranks(lo, chain_dims, ranks);
    out.classical_betti = betti_numbers(k, field, lc.reduced());
    return out;
}

struct FractionRank {
    int dim = 0;
    std::size_t labelled_rank = 0;   // Bareiss over the polynomial ring
    std::size_t classical_rank = 0;  // classical boundary over Q
};

/// Ranks of the labelled boundaries over the fraction field of the
/// polynomial ring, alongside the classical ranks over Q.
inline std::vector<FractionRank> fraction_field_ranks(const LabelledComplex& lc)
{
    std::vector<FractionRank> out;
    for (const auto& b : boundary_matrices(lc)) {
        const auto poly = b.matrix.map([&](const LabelledEntry& e) { return lc.expand(e); });
        const auto classical = classical_boundary(lc.complex(), b.dim, lc.reduced())
                                   .map([](std::int64_t v) { return Rational(v); });
        out.push_back({b.dim, bareiss_rank(poly, lc.variables()), rank_kernel(RationalField{}, classical).rank});
    }
    return out;
}

/// Random point of Q^nvars where no label vanishes over `field`. Coordinates
/// are small nonzero fractions whose denominators are units in `field`.
template <class Rng>
std::vector<Rational> random_admissible_point(const LabelledComplex& lc, Rng& rng,
                                              const FieldChoice& field = FieldChoice::rationals(), int attempts = 1000)
{
    const auto usable = [&](const Rational& x) {
        return with_field(field, [&](const auto& f) {
            try {
                return !f.is_zero(f.from_rational(x));
            } catch (const std::domain_error&) {
                return false;
            }
        });
    };
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    for (int a = 0; a < attempts; ++a) {
        std::vector<Rational> p;
        for (std::size_t i = 0; i < lc.variables(); ++i) {
            int n = 0;
            while (n == 0) {
                n = num(rng);
            }
            p.emplace_back(Integer(n), Integer(den(rng)));
        }
        if (std::all_of(p.begin(), p.end(), usable) && vanishing_labels(lc, p, field).empty()) {
            return p;
        }
    }
    throw std::runtime_error("no admissible point found");
}

/// Fraction-field rank cross-check by evaluation: ranks at random admissible
/// points, retried once on disagreement with the symbolic value.
template <class Rng>
bool evaluation_ranks_agree(const LabelledComplex& lc, Rng& rng)
{
    const auto symbolic = fraction_field_ranks(lc);
    for (int attempt = 0; attempt < 2; ++attempt) {
        const auto point = random_admissible_point(lc, rng);
        const auto ev = evaluate_chain(lc, point, FieldChoice::rationals());
        bool agree = true;
        for (std::size_t i = 0; i < symbolic.size(); ++i) {
            agree = agree && rank_kernel(RationalField{}, ev.matrices[i]).rank == symbolic[i].labelled_rank;
        }
        if (agree) {
            return true;
        }
    }
    return false;
}

/// Restriction to the full subcomplex on W, keeping the labels.
struct LocalWindow {
    Face vertices;
    LabelledComplex restricted;
};

/// W = {i : m_i does not vanish at the point}.
inline LocalWindow local_subcomplex(const LabelledComplex& lc, const std::vector<Rational>& point,
                                    const FieldChoice& field = FieldChoice::rationals())
{
    const auto vals = label_values(lc, point);
    std::vector<int> w;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        const bool zero = with_field(field, [&](const auto& f) {
            try {
                return f.is_zero(f.from_rational(vals[i]));
            } catch (const std::domain_error&) {
                return true;
            }
        });
        if (!zero) {
            w.push_back(static_cast<int>(i + 1));
        }
    }
    Face wf(std::move(w));
    return {wf, lc.with_complex(full_subcomplex(lc.complex(), wf))};
}

/// W = {i : m_i lies in the multiplicative set generated by the allowed
/// atoms (0-based atom indices)}.
inline LocalWindow local_subcomplex(const LabelledComplex& lc, const std::vector<std::size_t>& allowed_atoms)
{
    std::vector<int> w;
    for (std::size_t i = 0; i < lc.vertex_labels().size(); ++i) {
        const auto& l = lc.vertex_labels()[i];
        bool ok = true;
        for (std::size_t a = 0; a < l.arity() && ok; ++a) {
            ok = l[a] == 0 || std::find(allowed_atoms.begin(), allowed_atoms.end(), a) != allowed_atoms.end();
        }
        if (ok) {
            w.push_back(static_cast<int>(i + 1));
        }
    }
    Face wf(std::move(w));
    return {wf, lc.with_complex(full_subcomplex(lc.complex(), wf))};
}

/// Basis element (m_alpha / m_sigma) * sigma of a degree-alpha slice.
struct SliceCell {
    Face face;
    FactoredElement multiplier;
};

/// Degree-alpha part of a monomial-labelled chain complex, with integer
/// matrices in the bases {(m_alpha / m_sigma) sigma : m_sigma | m_alpha}.
struct GradedSlice {
    FactoredElement m_alpha;
    int min_dim = 0;
    std::map<int, std::vector<SliceCell>> bases;
    std::map<int, SparseMatrix<std::int64_t>> boundary;  // k -> matrix from dim k to k - 1
    BettiVector betti;                                   // over Q
};

namespace detail {

inline void require_graded(const LabelledComplex& lc, const std::vector<unsigned>& alpha)
{
    if (!lc.is_monomial_labelled()) {
        throw std::invalid_argument("graded operations need monomial labels (every atom a distinct variable)");
    }
    if (alpha.size() != lc.atoms().size()) {
        throw std::invalid_argument("degree vector needs " + std::to_string(lc.atoms().size()) + " entries");
    }
}

} // namespace detail

/// Graded operations always use the reduced complex.
inline GradedSlice graded_slice(const LabelledComplex& input, const std::vector<unsigned>& alpha)
{
    detail::require_graded(input, alpha);
    const LabelledComplex lc = input.reduced() ? input : input.with_reduced(true);
    GradedSlice s;
    s.m_alpha = FactoredElement(alpha);
    const auto& k = lc.complex();
    s.min_dim = lc.reduced() ? -1 : 0;
    for (int d = s.min_dim; d <= k.dimension(); ++d) {
        auto& basis = s.bases[d];
        for (const Face& f : k.faces_of_dim(d)) {
            if (divides(lc.label(f), s.m_alpha)) {
                basis.push_back({f, quotient(s.m_alpha, lc.label(f))});
            }
        }
    }
    for (const auto& b : boundary_matrices(lc)) {
        const auto& src = s.bases[b.dim];
        const auto& dst = s.bases[b.dim - 1];
        std::map<Face, std::size_t> dst_index;
        for (std::size_t i = 0; i < dst.size(); ++i) {
            dst_index.emplace(dst[i].face, i);
        }
        SparseMatrix<std::int64_t> m(dst.size(), src.size());
        for (std::size_t c = 0; c < src.size(); ++c) {
            const std::size_t col = b.cols.index.at(src[c].face);
            for (const auto& [row, e] : b.matrix.column(col)) {
                const Face& tau = b.rows.faces[row];
                auto it = dst_index.find(tau);
                const FactoredElement image = src[c].multiplier * e.coeff;
                if (it == dst_index.end() || !(image == dst[it->second].multiplier)) {
                    throw std::logic_error("labelled boundary is not homogeneous of degree zero at " +
                                           src[c].face.to_string());
                }
                m.set(it->second, c, e.sign);
            }
        }
        s.boundary.emplace(b.dim, std::move(m));
    }
    std::vector<std::size_t> dims;
    std::vector<std::size_t> ranks;
    for (int d = s.min_dim; d <= k.dimension(); ++d) {
        dims.push_back(s.bases[d].size());
        auto it = s.boundary.find(d);
        ranks.push_back(it == s.boundary.end()
                            ? 0
                            : rank_kernel(RationalField{}, it->second.map([](std::int64_t v) { return Rational(v); })).rank);
    }
    s.betti = betti_from_ranks(s.min_dim, dims, ranks);
    return s;
}

/// Delta_{m_alpha}: faces whose label divides x^alpha, built as the full
/// subcomplex on {i : m_i | x^alpha}.
inline SimplicialComplex degree_subcomplex(const LabelledComplex& lc, const std::vector<unsigned>& alpha)
{
    const FactoredElement m_alpha(alpha);
    std::vector<int> w;
    for (std::size_t i = 0; i < lc.vertex_labels().size(); ++i) {
        if (divides(lc.vertex_labels()[i], m_alpha)) {
            w.push_back(static_cast<int>(i + 1));
        }
    }
    return full_subcomplex(lc.complex(), Face(std::move(w)));
}

/// Checks that sigma -> (m_alpha / m_sigma) sigma is a bijection from the
/// canonical bases of Delta_{m_alpha} onto the slice bases and intertwines
/// the classical and labelled boundaries.
inline bool slice_iso_check(const LabelledComplex& input, const std::vector<unsigned>& alpha)
{
    detail::require_graded(input, alpha);
    const LabelledComplex lc = input.reduced() ? input : input.with_reduced(true);
    const FactoredElement m_alpha(alpha);
    const SimplicialComplex sub = degree_subcomplex(lc, alpha);
    const GradedSlice slice = graded_slice(lc, alpha);
    const auto& k = lc.complex();

    for (int d = slice.min_dim; d <= k.dimension(); ++d) {
        const auto faces = sub.faces_of_dim(d);
        const auto& basis = slice.bases.at(d);
        if (d >= 0 && faces.size() != basis.size()) {
            return false;
        }
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if ((d >= 0 && !(faces[i] == basis[i].face)) || !(basis[i].multiplier * lc.label(basis[i].face) == m_alpha)) {
                return false;
            }
        }
    }

    // F_{k-1}(d sigma) and dtilde(F_k sigma) as maps tau -> (sign, monomial).
    for (const auto& b : boundary_matrices(lc)) {
        const auto classical = classical_boundary(sub, b.dim, lc.reduced());
        const ChainBasis sub_cols = ChainBasis::of(sub, b.dim);
        const ChainBasis sub_rows = ChainBasis::of(sub, b.dim - 1);
        for (std::size_t c = 0; c < sub_cols.size(); ++c) {
            const Face& sigma = sub_cols.faces[c];
            std::map<Face, LabelledEntry> lhs;
            for (const auto& [r, v] : classical.column(c)) {
                const Face& tau = sub_rows.faces[r];
                lhs[tau] = {static_cast<int>(v), quotient(m_alpha, lc.label(tau))};
            }
            std::map<Face, LabelledEntry> rhs;
            const FactoredElement q = quotient(m_alpha, lc.label(sigma));
            for (const auto& [r, e] : b.matrix.column(b.cols.index.at(sigma))) {
                rhs[b.rows.faces[r]] = {e.sign, q * e.coeff};
            }
            if (lhs != rhs) {
                return false;
            }
        }
    }
    return true;
}

} // namespace algpers
