#pragma once

// Simplicial complexes, graphs, clique complexes and Vietoris-Rips
// filtrations. Vertices are 1-based ids in [1, n].

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <iterator>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace algpers {

/// A simplex: strictly increasing list of 1-based vertex ids. The empty
/// face is representable (it stands for the reduced (-1)-cell and for the
/// zero prime) but never stored inside a SimplicialComplex.
class Face {
public:
    Face() = default;

    Face(std::initializer_list<int> vs) : Face(std::vector<int>(vs)) {}

    explicit Face(std::vector<int> vs) : v_(std::move(vs))
    {
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (v_[i] < 1) {
                throw std::invalid_argument("face vertex ids must be >= 1");
            }
            if (i > 0 && v_[i - 1] >= v_[i]) {
                throw std::invalid_argument("face vertices must be strictly increasing");
            }
        }
    }

    static Face from_unsorted(std::vector<int> vs)
    {
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        return Face(std::move(vs));
    }

    const std::vector<int>& vertices() const noexcept { return v_; }
    std::size_t size() const noexcept { return v_.size(); }
    bool empty() const noexcept { return v_.empty(); }
    int dim() const noexcept { return static_cast<int>(v_.size()) - 1; }
    int front() const { return v_.front(); }
    int back() const { return v_.back(); }
    auto begin() const noexcept { return v_.begin(); }
    auto end() const noexcept { return v_.end(); }
    int operator[](std::size_t i) const { return v_[i]; }

    bool contains(int v) const { return std::binary_search(v_.begin(), v_.end(), v); }

    bool is_subset_of(const Face& other) const
    {
        return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
    }

    /// The face with the vertex at position `pos` removed.
    Face without_index(std::size_t pos) const
    {
        std::vector<int> out;
        out.reserve(v_.size() - 1);
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (i != pos) {
                out.push_back(v_[i]);
            }
        }
        Face f;
        f.v_ = std::move(out);
        return f;
    }

    Face with(int v) const
    {
        std::vector<int> out = v_;
        out.insert(std::upper_bound(out.begin(), out.end(), v), v);
        return Face(std::move(out));
    }

    std::string to_string() const
    {
        std::ostringstream os;
        os << '{';
        for (std::size_t i = 0; i < v_.size(); ++i) {
            os << (i ? "," : "") << v_[i];
        }
        os << '}';
        return os.str();
    }

    friend auto operator<=>(const Face&, const Face&) = default;
    friend bool operator==(const Face&, const Face&) = default;

private:
    std::vector<int> v_;
};

/// Colexicographic order: compare from the largest vertex down. This is
/// the canonical basis order used for chain groups of a fixed dimension.
struct ColexLess {
    bool operator()(const Face& a, const Face& b) const
    {
        return std::lexicographical_compare(a.vertices().rbegin(), a.vertices().rend(),
                                            b.vertices().rbegin(), b.vertices().rend());
    }
};

/// Downward-closed family of nonempty faces over the vertex universe [1, n].
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Downward closure of `generators`. Maximal faces suffice.
    static SimplicialComplex closure(std::size_t n, const std::vector<Face>& generators)
    {
        SimplicialComplex k(n);
        for (const Face& g : generators) {
            k.add_with_subfaces(g);
        }
        return k;
    }

    /// Build from an explicit face list; throws unless it is downward closed.
    static SimplicialComplex from_closed(std::size_t n, const std::vector<Face>& faces)
    {
        SimplicialComplex k(n);
        for (const Face& f : faces) {
            k.check_face(f);
            k.faces_.insert(f);
        }
        for (const Face& f : k.faces_) {
            for (std::size_t i = 0; f.size() > 1 && i < f.size(); ++i) {
                if (!k.faces_.count(f.without_index(i))) {
                    throw std::invalid_argument("face list is not downward closed: " + f.to_string() +
                                                " lacks " + f.without_index(i).to_string());
                }
            }
        }
        return k;
    }

    static SimplicialComplex simplex(std::size_t n, const Face& w)
    {
        return w.empty() ? SimplicialComplex(n) : closure(n, {w});
    }

    explicit SimplicialComplex(std::size_t n) : n_(n) {}

    std::size_t universe() const noexcept { return n_; }
    const std::set<Face>& faces() const noexcept { return faces_; }
    std::size_t size() const noexcept { return faces_.size(); }
    bool empty() const noexcept { return faces_.empty(); }
    bool contains(const Face& f) const { return faces_.count(f) != 0; }

    int dimension() const
    {
        int d = -1;
        for (const Face& f : faces_) {
            d = std::max(d, f.dim());
        }
        return d;
    }

    /// Faces of dimension k in canonical (colex) order. k = -1 yields the
    /// empty face only.
    std::vector<Face> faces_of_dim(int k) const
    {
        std::vector<Face> out;
        if (k == -1) {
            out.emplace_back();
            return out;
        }
        for (const Face& f : faces_) {
            if (f.dim() == k) {
                out.push_back(f);
            }
        }
        std::sort(out.begin(), out.end(), ColexLess{});
        return out;
    }

    std::vector<int> vertices() const
    {
        std::vector<int> vs;
        for (const Face& f : faces_) {
            if (f.size() == 1) {
                vs.push_back(f.front());
            }
        }
        return vs;
    }

    bool is_subcomplex_of(const SimplicialComplex& other) const
    {
        return std::includes(other.faces_.begin(), other.faces_.end(), faces_.begin(), faces_.end());
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b)
    {
        return a.n_ == b.n_ && a.faces_ == b.faces_;
    }

    /// Insert a face whose proper subfaces are already present.
    void insert_unchecked(Face f) { faces_.insert(std::move(f)); }

private:
    void check_face(const Face& f) const
    {
        if (f.empty()) {
            throw std::invalid_argument("the empty face is not stored in a complex");
        }
        if (static_cast<std::size_t>(f.back()) > n_) {
            throw std::invalid_argument("face " + f.to_string() + " exceeds vertex universe " +
                                        std::to_string(n_));
        }
    }

    void add_with_subfaces(const Face& g)
    {
        check_face(g);
        if (faces_.count(g)) {
            return;
        }
        if (g.size() > 30) {
            throw std::invalid_argument("generator too large to close");
        }
        const auto& vs = g.vertices();
        const std::size_t m = vs.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
            std::vector<int> sub;
            for (std::size_t i = 0; i < m; ++i) {
                if ((mask >> i) & 1u) {
                    sub.push_back(vs[i]);
                }
            }
            faces_.insert(Face(std::move(sub)));
        }
    }

    std::size_t n_ = 0;
    std::set<Face> faces_;
};

/// Simple undirected graph on [1, n].
class Graph {
public:
    Graph() = default;

    Graph(std::size_t n, const std::vector<std::pair<int, int>>& edges) : n_(n)
    {
        for (auto [a, b] : edges) {
            add_edge(a, b);
        }
    }

    explicit Graph(std::size_t n) : n_(n) {}

    void add_edge(int a, int b)
    {
        if (a == b) {
            throw std::invalid_argument("graph loops are not allowed");
        }
        if (a < 1 || b < 1 || static_cast<std::size_t>(std::max(a, b)) > n_) {
            throw std::invalid_argument("edge endpoint outside vertex universe");
        }
        edges_.emplace(std::min(a, b), std::max(a, b));
    }

    std::size_t order() const noexcept { return n_; }
    const std::set<std::pair<int, int>>& edges() const noexcept { return edges_; }

    bool adjacent(int a, int b) const
    {
        return edges_.count({std::min(a, b), std::max(a, b)}) != 0;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t n_ = 0;
    std::set<std::pair<int, int>> edges_;
};

inline Graph one_skeleton(const SimplicialComplex& k)
{
    Graph g(k.universe());
    for (const Face& f : k.faces()) {
        if (f.size() == 2) {
            g.add_edge(f[0], f[1]);
        }
    }
    return g;
}

/// All cliques of `g` of dimension <= max_dim (size <= max_dim + 1); every
/// vertex of [1, n] is included. A negative max_dim means n - 1.
inline SimplicialComplex clique_complex(const Graph& g, int max_dim = -1)
{
    const std::size_t n = g.order();
    const std::size_t cap = max_dim < 0 ? n : static_cast<std::size_t>(max_dim) + 1;
    SimplicialComplex k(n);
    if (cap == 0) {
        return k;
    }
    std::vector<std::vector<int>> higher(n + 1);
    for (auto [a, b] : g.edges()) {
        higher[static_cast<std::size_t>(a)].push_back(b);
    }
    for (auto& h : higher) {
        std::sort(h.begin(), h.end());
    }
    // Depth-first over increasing vertex sequences; `cand` holds the common
    // higher neighbours of the current clique.
    std::vector<int> current;
    auto extend = [&](auto&& self, const std::vector<int>& cand) -> void {
        k.insert_unchecked(Face(current));
        if (current.size() == cap) {
            return;
        }
        for (int v : cand) {
            std::vector<int> next;
            const auto& hv = higher[static_cast<std::size_t>(v)];
            std::set_intersection(cand.begin(), cand.end(), hv.begin(), hv.end(),
                                  std::back_inserter(next));
            current.push_back(v);
            self(self, next);
            current.pop_back();
        }
    };
    for (int v = 1; v <= static_cast<int>(n); ++v) {
        current = {v};
        extend(extend, higher[static_cast<std::size_t>(v)]);
    }
    return k;
}

/// {sigma in K : sigma subset of W}. An empty W gives the empty complex.
inline SimplicialComplex full_subcomplex(const SimplicialComplex& k, const Face& w)
{
    SimplicialComplex out(k.universe());
    for (const Face& f : k.faces()) {
        if (f.is_subset_of(w)) {
            out.insert_unchecked(f);
        }
    }
    return out;
}

/// Faces with no proper superface in K, in lex order.
inline std::vector<Face> maximal_faces(const SimplicialComplex& k)
{
    std::vector<Face> out;
    const int n = static_cast<int>(k.universe());
    for (const Face& f : k.faces()) {
        bool maximal = true;
        for (int v = 1; v <= n && maximal; ++v) {
            if (!f.contains(v) && k.contains(f.with(v))) {
                maximal = false;
            }
        }
        if (maximal) {
            out.push_back(f);
        }
    }
    return out;
}

/// Minimal non-faces: sigma not in K whose proper nonempty subsets all lie
/// in K. Singletons of absent vertices qualify. Sorted by size, then lex.
inline std::vector<Face> minimal_nonfaces(const SimplicialComplex& k)
{
    std::set<Face> out;
    const int n = static_cast<int>(k.universe());
    for (int v = 1; v <= n; ++v) {
        if (!k.contains(Face{v})) {
            out.insert(Face{v});
        }
    }
    // Every minimal non-face of size >= 2 is tau + {v} with tau in K and v
    // larger than all of tau.
    for (const Face& tau : k.faces()) {
        for (int v = tau.back() + 1; v <= n; ++v) {
            Face sigma = tau.with(v);
            if (k.contains(sigma) || !k.contains(Face{v})) {
                continue;
            }
            bool minimal = true;
            for (std::size_t i = 0; i + 1 < sigma.size() && minimal; ++i) {
                minimal = k.contains(sigma.without_index(i));
            }
            if (minimal) {
                out.insert(std::move(sigma));
            }
        }
    }
    std::vector<Face> sorted(out.begin(), out.end());
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Face& a, const Face& b) { return a.size() < b.size(); });
    return sorted;
}

/// Symmetric, non-negative, zero-diagonal matrix of pairwise distances.
class DistanceMatrix {
public:
    DistanceMatrix() = default;

    DistanceMatrix(std::size_t n, std::vector<double> entries) : n_(n), d_(std::move(entries))
    {
        if (d_.size() != n * n) {
            throw std::invalid_argument("distance matrix must have n*n entries");
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const double x = at(i, j);
                const double y = at(j, i);
                if (!std::isfinite(x)) {
                    throw std::invalid_argument(where(i, j) + " is not a finite number");
                }
                if (x < 0) {
                    throw std::invalid_argument(where(i, j) + " is negative");
                }
                if (i == j && x != 0) {
                    throw std::invalid_argument(where(i, j) + " is a nonzero diagonal entry");
                }
                if (std::abs(x - y) > 1e-12 * std::max(1.0, std::abs(x))) {
                    throw std::invalid_argument("matrix is not symmetric at " + where(i, j));
                }
            }
        }
    }

    static DistanceMatrix from_rows(const std::vector<std::vector<double>>& rows)
    {
        std::vector<double> flat;
        for (const auto& r : rows) {
            if (r.size() != rows.size()) {
                throw std::invalid_argument("distance matrix must be square");
            }
            flat.insert(flat.end(), r.begin(), r.end());
        }
        return DistanceMatrix(rows.size(), std::move(flat));
    }

    std::size_t size() const noexcept { return n_; }

    /// 0-based access.
    double at(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }

    /// Distance between 1-based points i < j, read from the upper triangle.
    double between(int i, int j) const
    {
        const auto a = static_cast<std::size_t>(std::min(i, j) - 1);
        const auto b = static_cast<std::size_t>(std::max(i, j) - 1);
        return at(a, b);
    }

private:
    static std::string where(std::size_t i, std::size_t j)
    {
        return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    }

    std::size_t n_ = 0;
    std::vector<double> d_;
};

struct FiltrationStep {
    double t = 0;
    SimplicialComplex complex;
};

/// Monotone sequence of complexes at strictly increasing parameters.
class Filtration {
public:
    Filtration() = default;

    Filtration(std::size_t n, std::vector<FiltrationStep> steps) : n_(n), steps_(std::move(steps))
    {
        if (steps_.empty()) {
            throw std::invalid_argument("a filtration needs at least one step");
        }
        for (std::size_t i = 0; i < steps_.size(); ++i) {
            if (steps_[i].complex.universe() != n_) {
                throw std::invalid_argument("filtration step over a different vertex universe");
            }
            if (i > 0) {
                if (!(steps_[i - 1].t < steps_[i].t)) {
                    throw std::invalid_argument("filtration parameters must increase strictly");
                }
                if (!steps_[i - 1].complex.is_subcomplex_of(steps_[i].complex)) {
                    throw std::invalid_argument("filtration is not monotone");
                }
            }
        }
    }

    std::size_t universe() const noexcept { return n_; }
    const std::vector<FiltrationStep>& steps() const noexcept { return steps_; }
    std::size_t size() const noexcept { return steps_.size(); }
    const FiltrationStep& operator[](std::size_t i) const { return steps_[i]; }

    std::vector<double> parameters() const
    {
        std::vector<double> ts;
        for (const auto& s : steps_) {
            ts.push_back(s.t);
        }
        return ts;
    }

    /// Index of the last step with parameter <= t, if any.
    std::optional<std::size_t> step_at(double t) const
    {
        std::optional<std::size_t> idx;
        for (std::size_t i = 0; i < steps_.size() && steps_[i].t <= t; ++i) {
            idx = i;
        }
        return idx;
    }

    /// Birth parameter of every face of the final complex.
    std::map<Face, double> births() const
    {
        std::map<Face, double> b;
        for (const auto& s : steps_) {
            for (const Face& f : s.complex.faces()) {
                b.emplace(f, s.t);
            }
        }
        return b;
    }

private:
    std::size_t n_ = 0;
    std::vector<FiltrationStep> steps_;
};

/// Vietoris-Rips filtration: edge {i,j} is present at t iff d(i,j)/2 <= t.
/// Critical parameters are {0} and every d(i,j)/2; faces above max_dim are
/// dropped. A negative max_dim means n - 1.
inline Filtration vr_filtration(const DistanceMatrix& dist, int max_dim = -1)
{
    const std::size_t n = dist.size();
    if (n == 0) {
        throw std::invalid_argument("distance matrix is empty");
    }
    const std::size_t cap = max_dim < 0 ? n : static_cast<std::size_t>(max_dim) + 1;

    std::vector<double> params{0.0};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            params.push_back(dist.at(i, j) / 2);
        }
    }
    std::sort(params.begin(), params.end());
    params.erase(std::unique(params.begin(), params.end()), params.end());

    // Birth of a face = max over its edges of d/2; enumerate increasing
    // vertex sequences of the complete graph up to the size cap.
    std::vector<std::pair<double, Face>> born;
    std::vector<int> cur;
    auto grow = [&](auto&& self, double birth) -> void {
        born.emplace_back(birth, Face(cur));
        if (cur.size() == cap) {
            return;
        }
        for (int v = cur.back() + 1; v <= static_cast<int>(n); ++v) {
            double b = birth;
            for (int u : cur) {
                b = std::max(b, dist.between(u, v) / 2);
            }
            cur.push_back(v);
            self(self, b);
            cur.pop_back();
        }
    };
    if (cap > 0) {
        for (int v = 1; v <= static_cast<int>(n); ++v) {
            cur = {v};
            grow(grow, 0.0);
        }
    }
    std::sort(born.begin(), born.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<FiltrationStep> steps;
    SimplicialComplex k(n);
    std::size_t next = 0;
    for (double t : params) {
        while (next < born.size() && born[next].first <= t) {
            k.insert_unchecked(born[next].second);
            ++next;
        }
        steps.push_back({t, k});
    }
    return Filtration(n, std::move(steps));
}

} // namespace algpers
