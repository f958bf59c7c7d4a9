#pragma once

// Reading distance matrices, complexes and labelled complexes; writing
// barcodes as JSON and SVG.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "algpers/complexes.hpp"
#include "algpers/factored.hpp"
#include "algpers/labelled.hpp"
#include "algpers/monomial_ideal.hpp"
#include "algpers/persistence.hpp"

namespace algpers {

using json = nlohmann::json;

/// Malformed or missing input; the CLI maps it to exit status 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace io {

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline bool blank(const std::string& s)
{
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

/// n x n CSV of decimal floats. Blank lines are skipped; '#' starts a
/// comment line.
inline DistanceMatrix parse_distance_csv(const std::string& text)
{
    if (blank(text)) {
        throw InputError("empty input");
    }
    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::size_t width = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (blank(line) || line.front() == '#') {
            continue;
        }
        std::vector<double> row;
        std::size_t start = 0;
        std::size_t col = 0;
        while (true) {
            ++col;
            const std::size_t comma = line.find(',', start);
            std::string cell = line.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            const auto a = cell.find_first_not_of(" \t");
            const auto b = cell.find_last_not_of(" \t");
            cell = a == std::string::npos ? "" : cell.substr(a, b - a + 1);
            char* end = nullptr;
            const double v = std::strtod(cell.c_str(), &end);
            if (cell.empty() || end != cell.c_str() + cell.size()) {
                throw InputError("line " + std::to_string(lineno) + ", column " + std::to_string(col) +
                                 ": expected a number, got '" + cell + "'");
            }
            if (!std::isfinite(v) || v < 0) {
                throw InputError("line " + std::to_string(lineno) + ", column " + std::to_string(col) +
                                 ": distances must be finite and nonnegative");
            }
            row.push_back(v);
            if (comma == std::string::npos) {
                break;
            }
            start = comma + 1;
        }
        if (width == 0) {
            width = row.size();
        } else if (row.size() != width) {
            throw InputError("line " + std::to_string(lineno) + ": expected " + std::to_string(width) +
                             " columns, got " + std::to_string(row.size()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.size() != width) {
        throw InputError("distance matrix is " + std::to_string(rows.size()) + " x " + std::to_string(width) +
                         ", expected square");
    }
    try {
        return DistanceMatrix::from_rows(rows);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

inline json parse_json(const std::string& text)
{
    if (blank(text)) {
        throw InputError("empty input");
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

template <class F>
auto guarded(F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const InputError&) {
        throw;
    } catch (const json::exception& e) {
        throw InputError(std::string("bad JSON structure: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    } catch (const std::domain_error& e) {
        throw InputError(e.what());
    }
}

/// {"points": [[x, y, ...], ...]} or a bare list of points; Euclidean
/// distances.
inline DistanceMatrix parse_points_json(const std::string& text)
{
    const json j = parse_json(text);
    return guarded([&] {
        const json& pts = j.is_object() ? j.at("points") : j;
        const auto points = pts.get<std::vector<std::vector<double>>>();
        const std::size_t n = points.size();
        std::vector<double> flat(n * n, 0.0);
        for (std::size_t a = 0; a < n; ++a) {
            if (points[a].size() != points[0].size()) {
                throw InputError("point " + std::to_string(a + 1) + " has the wrong dimension");
            }
            for (std::size_t b = a + 1; b < n; ++b) {
                double s = 0;
                for (std::size_t c = 0; c < points[a].size(); ++c) {
                    s += (points[a][c] - points[b][c]) * (points[a][c] - points[b][c]);
                }
                flat[a * n + b] = flat[b * n + a] = std::sqrt(s);
            }
        }
        return DistanceMatrix(n, flat);
    });
}

inline std::vector<Face> faces_from_json(const json& j)
{
    std::vector<Face> out;
    for (const auto& f : j) {
        out.push_back(Face::from_unsorted(f.get<std::vector<int>>()));
    }
    return out;
}

inline SimplicialComplex complex_from_json(const json& j)
{
    return guarded([&] {
        return SimplicialComplex::closure(j.at("n").get<std::size_t>(), faces_from_json(j.at("faces")));
    });
}

/// A complex ({"n", "faces"}) becomes a one-step filtration at t = 0. With
/// {"n", "steps": [{"t", "faces"}, ...]} each step is closed and joined
/// with the previous one.
inline Filtration filtration_from_json(const std::string& text)
{
    const json j = parse_json(text);
    return guarded([&] {
        const auto n = j.at("n").get<std::size_t>();
        if (!j.contains("steps")) {
            return Filtration(n, {{0.0, complex_from_json(j)}});
        }
        std::vector<FiltrationStep> steps;
        std::vector<Face> acc;
        for (const auto& s : j.at("steps")) {
            for (auto& f : faces_from_json(s.at("faces"))) {
                acc.push_back(std::move(f));
            }
            steps.push_back({s.at("t").get<double>(), SimplicialComplex::closure(n, acc)});
        }
        return Filtration(n, std::move(steps));
    });
}

inline json to_json(const SimplicialComplex& k)
{
    json faces = json::array();
    for (const auto& f : maximal_faces(k)) {
        faces.push_back(f.vertices());
    }
    return {{"n", k.universe()}, {"faces", faces}};
}

inline json to_json(const FactoredElement& m, const AtomTable& atoms)
{
    return {{"atoms", atoms.names()}, {"exp", m.exponents()}};
}

inline FactoredElement factored_from_json(const json& j, const AtomTable& atoms)
{
    return guarded([&] {
        const AtomTable own(j.at("atoms").get<std::vector<std::string>>());
        if (!(own == atoms)) {
            throw InputError("element uses a different atom table");
        }
        FactoredElement m(j.at("exp").get<std::vector<unsigned>>());
        m.require_arity(atoms.size());
        return m;
    });
}

inline json to_json(const MonomialIdeal& ideal)
{
    const AtomTable vars = AtomTable::variables(ideal.ambient());
    json gens = json::array();
    for (const auto& g : ideal.generators()) {
        gens.push_back(to_json(g, vars));
    }
    return {{"ambient_n", ideal.ambient()}, {"generators", gens}};
}

inline MonomialIdeal ideal_from_json(const json& j)
{
    return guarded([&] {
        const auto n = j.at("ambient_n").get<std::size_t>();
        const AtomTable vars = AtomTable::variables(n);
        std::vector<FactoredElement> gens;
        for (const auto& g : j.at("generators")) {
            gens.push_back(factored_from_json(g, vars));
        }
        return MonomialIdeal(n, gens);
    });
}

/// {"n", "faces", "atoms", "atom_polys"?, "labels", "reduced"?}.
inline LabelledComplex labelled_from_json(const std::string& text)
{
    const json j = parse_json(text);
    return guarded([&] {
        const SimplicialComplex k = complex_from_json(j);
        const AtomTable atoms(j.at("atoms").get<std::vector<std::string>>());
        std::vector<FactoredElement> labels;
        for (const auto& l : j.at("labels")) {
            labels.emplace_back(l.get<std::vector<unsigned>>());
        }
        std::optional<std::vector<Polynomial>> expansions;
        if (j.contains("atom_polys")) {
            const auto texts = j.at("atom_polys").get<std::vector<std::string>>();
            std::size_t nvars = j.value("nvars", std::size_t{0});
            for (const auto& t : texts) {
                nvars = std::max(nvars, max_variable_index(t));
            }
            std::vector<Polynomial> ps;
            for (const auto& t : texts) {
                ps.push_back(Polynomial::parse(t, nvars));
            }
            expansions = std::move(ps);
        }
        return LabelledComplex(k, atoms, labels, j.value("reduced", false), std::move(expansions));
    });
}

inline json endpoint(double x)
{
    return std::isfinite(x) ? json(x) : json("inf");
}

inline json to_json(const PrimeBarcode& bc)
{
    json intervals = json::array();
    for (const auto& e : bc.entries) {
        intervals.push_back({{"prime", e.prime.vars()}, {"dim", nullptr}, {"birth", e.birth}, {"death", endpoint(e.death)}});
    }
    return {{"kind", to_string(bc.kind)}, {"intervals", intervals}};
}

inline json to_json(const PHBarcode& bc)
{
    json intervals = json::array();
    for (const auto& [d, bars] : bc.bars) {
        for (const auto& b : bars) {
            intervals.push_back({{"prime", nullptr}, {"dim", d}, {"birth", b.birth}, {"death", endpoint(b.death)}});
        }
    }
    return {{"kind", "PH"}, {"intervals", intervals}};
}

/// One horizontal rect per interval, grouped by kind in the order given.
/// Infinite bars run to the right edge.
inline std::string barcode_svg(const std::vector<json>& barcodes)
{
    double tmax = 0;
    std::size_t count = 0;
    for (const auto& bc : barcodes) {
        for (const auto& iv : bc.at("intervals")) {
            tmax = std::max(tmax, iv.at("birth").get<double>());
            if (iv.at("death").is_number()) {
                tmax = std::max(tmax, iv.at("death").get<double>());
            }
            ++count;
        }
    }
    if (tmax <= 0) {
        tmax = 1;
    }
    const double left = 110;
    const double width = 600;
    const double bar_h = 8;
    const double gap = 4;
    const double header = 22;
    const double scale = width / (tmax * 1.1);
    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", v);
        return std::string(buf);
    };
    const std::map<std::string, std::string> colours{{"SR", "#1f77b4"}, {"EDGE", "#d62728"}, {"PH", "#2ca02c"}};

    std::string body;
    double y = 10;
    for (const auto& bc : barcodes) {
        const std::string kind = bc.at("kind").get<std::string>();
        body += "  <text x=\"4\" y=\"" + num(y + 14) + "\" font-family=\"monospace\" font-size=\"12\">" + kind +
                "</text>\n";
        y += header;
        for (const auto& iv : bc.at("intervals")) {
            const double b = iv.at("birth").get<double>();
            const double d = iv.at("death").is_number() ? iv.at("death").get<double>() : tmax * 1.1;
            std::string label;
            if (iv.at("prime").is_array()) {
                label = "<";
                for (std::size_t i = 0; i < iv.at("prime").size(); ++i) {
                    label += (i ? "," : "") + std::string("x") + std::to_string(iv.at("prime")[i].get<int>());
                }
                label += ">";
            } else {
                label = "H" + std::to_string(iv.at("dim").get<int>());
            }
            const auto it = colours.find(kind);
            body += "  <rect x=\"" + num(left + b * scale) + "\" y=\"" + num(y) + "\" width=\"" +
                    num(std::max(1.0, (d - b) * scale)) + "\" height=\"" + num(bar_h) + "\" fill=\"" +
                    (it == colours.end() ? "#555555" : it->second) + "\"><title>" +
                    (label == "<>" ? "zero prime" : label) + "</title></rect>\n";
            y += bar_h + gap;
        }
        y += gap;
    }
    const double axis_y = y + 4;
    body += "  <line x1=\"" + num(left) + "\" y1=\"" + num(axis_y) + "\" x2=\"" + num(left + width) + "\" y2=\"" +
            num(axis_y) + "\" stroke=\"black\"/>\n";
    for (int tick = 0; tick <= 4; ++tick) {
        const double t = tmax * 1.1 * tick / 4;
        body += "  <text x=\"" + num(left + t * scale) + "\" y=\"" + num(axis_y + 14) +
                "\" font-family=\"monospace\" font-size=\"10\" text-anchor=\"middle\">" + num(t) + "</text>\n";
    }
    const double height = axis_y + 24;
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           num(left + width + 20) + "\" height=\"" + num(height) + "\" data-intervals=\"" + std::to_string(count) +
           "\">\n" + body + "</svg>\n";
}

} // namespace io
} // namespace algpers
