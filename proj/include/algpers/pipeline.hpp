#pragma once

// The three end-user pipelines behind the command line tool. Each returns
// an exit status: 0 ok, 1 a verification failed, 2 usage or input error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "algpers/io.hpp"
#include "algpers/labelled.hpp"
#include "algpers/persistence.hpp"
#include "algpers/verify.hpp"

namespace algpers {

enum class ExitCode : int { ok = 0, verification_failed = 1, usage = 2 };

struct RunConfig {
    std::string input;
    std::string format = "dist-csv";
    int max_dim = -1;
    FieldChoice field = FieldChoice::prime(2);
    std::string out_dir = ".";
    bool svg = false;
    std::uint64_t seed = 1;
    std::optional<std::vector<unsigned>> alpha;
    std::optional<std::vector<Rational>> point;
    std::size_t trials = 200;
    int n_max = 8;
    bool inject_fault = false;
};

namespace pipeline {

/// "1,-1/2,3" -> rationals.
inline std::vector<Rational> parse_point(const std::string& text)
{
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string cell = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            const Polynomial p = Polynomial::parse(cell, 0);
            out.push_back(p.is_zero() ? Rational(0) : p.terms().begin()->second);
        } catch (const std::invalid_argument&) {
            throw InputError("bad point coordinate '" + cell + "'");
        }
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

inline std::vector<unsigned> parse_alpha(const std::string& text)
{
    std::vector<unsigned> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string cell = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        std::size_t used = 0;
        long v = -1;
        try {
            v = std::stol(cell, &used);
        } catch (const std::exception&) {
        }
        if (v < 0 || used != cell.size()) {
            throw InputError("bad degree entry '" + cell + "'");
        }
        out.push_back(static_cast<unsigned>(v));
        if (comma == std::string::npos) {
            return out;
        }
        start = comma + 1;
    }
}

inline void write_file(const std::filesystem::path& path, const std::string& text)
{
    std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot write '" + path.string() + "'");
    }
    out << text;
}

inline json betti_json(const BettiVector& b)
{
    json j = json::object();
    for (int k = b.min_dim; k <= b.max_dim(); ++k) {
        j[std::to_string(k)] = b.at(k);
    }
    return j;
}

inline json metadata(const RunConfig& cfg, const std::string& pipeline)
{
    return {{"pipeline", pipeline}, {"format", cfg.format}, {"field", cfg.field.name()},
            {"max_dim", cfg.max_dim}, {"seed", cfg.seed}};
}

inline ExitCode run_barcodes(const RunConfig& cfg, std::ostream& log)
{
    std::optional<DistanceMatrix> dist;
    const int cap = cfg.max_dim < 0 ? -1 : cfg.max_dim + 1;
    Filtration f;
    const std::string text = io::read_file(cfg.input);
    if (cfg.format == "dist-csv") {
        dist = io::parse_distance_csv(text);
    } else if (cfg.format == "points-json") {
        dist = io::parse_points_json(text);
    } else if (cfg.format == "complex-json") {
        f = io::filtration_from_json(text);
    } else {
        throw InputError("barcodes needs dist-csv, points-json or complex-json input, not " + cfg.format);
    }
    if (dist) {
        if (dist->size() == 0) {
            throw InputError("distance matrix has no points");
        }
        f = vr_filtration(*dist, cap);
    }

    const PrimeBarcode sr = prime_barcode(f, IdealKind::stanley_reisner);
    const PrimeBarcode edge = prime_barcode(f, IdealKind::edge);
    const PHBarcode ph = ph_barcode(f, cfg.field, cfg.max_dim);
    const std::vector<json> codes{io::to_json(sr), io::to_json(edge), io::to_json(ph)};

    json meta = metadata(cfg, "barcodes");
    meta["n"] = f.universe();
    const json doc{{"metadata", meta}, {"barcodes", codes}};

    json report{{"metadata", meta}};
    bool ok = true;
    report["no_resurrection"] = {{"SR", sr.resurrected().empty()}, {"EDGE", edge.resurrected().empty()}};
    ok = ok && sr.resurrected().empty() && edge.resurrected().empty();
    if (dist && cap < 0) {
        const CoverageReport cov = coverage_report(*dist, sr);
        json bad = json::array();
        for (const auto& v : cov.violations) {
            bad.push_back({{"i", v.i}, {"j", v.j}, {"value", v.value}});
        }
        report["coverage"] = {{"pairs_checked", cov.pairs_checked}, {"ok", cov.ok()}, {"violations", bad}};
        ok = ok && cov.ok();
    } else {
        report["coverage"] = nullptr;
    }
    json steps = json::array();
    const BettiProfile prof = betti_profile(f, cfg.field);
    for (std::size_t i = 0; i < prof.params.size(); ++i) {
        steps.push_back({{"t", prof.params[i]}, {"faces", f[i].complex.size()}, {"betti", betti_json(prof.betti[i])}});
    }
    report["steps"] = steps;

    const std::filesystem::path out(cfg.out_dir);
    write_file(out / "barcodes.json", doc.dump(2) + "\n");
    write_file(out / "report.json", report.dump(2) + "\n");
    if (cfg.svg) {
        write_file(out / "barcodes.svg", io::barcode_svg(codes));
    }
    log << "SR intervals: " << sr.entries.size() << ", EDGE intervals: " << edge.entries.size()
        << ", PH intervals: " << codes[2].at("intervals").size() << "\n";
    log << (ok ? "checks passed" : "checks FAILED") << "\n";
    return ok ? ExitCode::ok : ExitCode::verification_failed;
}

inline std::string cell_name(const FactoredElement& mult, const Face& f, const AtomTable& atoms)
{
    const std::string face = f.empty() ? "{}" : f.to_string();
    return mult.is_unit() ? face : mult.to_string(atoms) + "*" + face;
}

inline ExitCode run_labelled(const RunConfig& cfg, std::ostream& log)
{
    if (cfg.format != "labelled-json") {
        throw InputError("labelled needs labelled-json input, not " + cfg.format);
    }
    const LabelledComplex lc = io::labelled_from_json(io::read_file(cfg.input));
    const AtomTable& atoms = lc.atoms();
    bool ok = true;
    json report{{"metadata", metadata(cfg, "labelled")}};

    bool classical = true;
    json labels = json::array();
    for (const auto& l : lc.vertex_labels()) {
        labels.push_back(l.to_string(atoms));
        classical = classical && l.is_unit();
    }
    report["atoms"] = atoms.names();
    report["labels"] = labels;
    report["reduced"] = lc.reduced();
    report["classical"] = classical;

    json mats = json::array();
    for (const auto& b : boundary_matrices(lc)) {
        json rows = json::array();
        json cols = json::array();
        for (const auto& f : b.rows.faces) {
            rows.push_back(f.empty() ? "{}" : f.to_string());
        }
        for (const auto& f : b.cols.faces) {
            cols.push_back(f.to_string());
        }
        json entries = json::array();
        for (std::size_t r = 0; r < b.rows.size(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < b.cols.size(); ++c) {
                row.push_back(b.entry_string(r, c, atoms));
            }
            entries.push_back(row);
        }
        mats.push_back({{"dim", b.dim}, {"rows", rows}, {"cols", cols}, {"entries", entries}});
    }
    report["boundary_matrices"] = mats;

    const bool chain = chain_condition_holds(lc);
    const bool diag = diag_relation_check(lc);
    report["chain_condition"] = chain;
    report["diag_relation"] = diag;
    ok = ok && chain && diag;

    json ranks = json::array();
    bool ranks_equal = true;
    for (const auto& fr : fraction_field_ranks(lc)) {
        ranks.push_back({{"dim", fr.dim}, {"labelled", fr.labelled_rank}, {"classical", fr.classical_rank}});
        ranks_equal = ranks_equal && fr.labelled_rank == fr.classical_rank;
    }
    verify::Rng rng(cfg.seed);
    const bool spot = evaluation_ranks_agree(lc, rng);
    report["fraction_field_ranks"] = {{"ranks", ranks}, {"equal", ranks_equal}, {"evaluation_cross_check", spot}};
    ok = ok && ranks_equal && spot;

    if (cfg.point) {
        const auto& p = *cfg.point;
        json ev{{"point", json::array()}};
        for (const auto& x : p) {
            ev["point"].push_back(x.str());
        }
        if (p.size() != lc.variables()) {
            throw InputError("--point needs " + std::to_string(lc.variables()) + " coordinates");
        }
        try {
            const EvaluatedChain e = evaluate_chain(lc, p, cfg.field);
            ev["admissible"] = true;
            ev["betti"] = betti_json(e.betti);
            ev["classical_betti"] = betti_json(e.classical_betti);
            ev["equal"] = e.betti == e.classical_betti;
            ok = ok && e.betti == e.classical_betti;
        } catch (const InadmissiblePoint& bad) {
            ev["admissible"] = false;
            ev["vanishing"] = bad.vanishing();
            const LocalWindow w = local_subcomplex(lc, p, cfg.field);
            const EvaluatedChain e = evaluate_chain(w.restricted, p, cfg.field);
            ev["window"] = {{"W", w.vertices.vertices()},
                            {"complex", io::to_json(w.restricted.complex())},
                            {"betti", betti_json(e.betti)},
                            {"classical_betti", betti_json(e.classical_betti)},
                            {"equal", e.betti == e.classical_betti}};
            ok = ok && e.betti == e.classical_betti;
            log << "point is inadmissible: labels of vertices";
            for (int v : bad.vanishing()) {
                log << " " << v;
            }
            log << " vanish; local window W = " << w.vertices.to_string() << "\n";
        }
        report["evaluation"] = ev;
    }

    if (cfg.alpha) {
        const GradedSlice s = graded_slice(lc, *cfg.alpha);
        json bases = json::object();
        for (const auto& [d, cells] : s.bases) {
            json names = json::array();
            for (const auto& c : cells) {
                names.push_back(cell_name(c.multiplier, c.face, atoms));
            }
            bases[std::to_string(d)] = names;
        }
        json smats = json::array();
        for (const auto& [d, m] : s.boundary) {
            json entries = json::array();
            for (std::size_t r = 0; r < m.rows(); ++r) {
                json row = json::array();
                for (std::size_t c = 0; c < m.cols(); ++c) {
                    row.push_back(m.get(r, c, 0));
                }
                entries.push_back(row);
            }
            smats.push_back({{"dim", d}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}});
        }
        const BettiVector sub = betti_numbers(degree_subcomplex(lc, *cfg.alpha), FieldChoice::rationals(), true);
        const bool iso = slice_iso_check(lc, *cfg.alpha);
        report["slice"] = {{"alpha", *cfg.alpha},         {"bases", bases},
                           {"matrices", smats},           {"betti", betti_json(s.betti)},
                           {"subcomplex_betti", betti_json(sub)}, {"iso", iso}};
        ok = ok && iso && s.betti == sub;
    }

    write_file(std::filesystem::path(cfg.out_dir) / "report.json", report.dump(2) + "\n");
    if (classical) {
        log << "all labels are units: classical complex\n";
    }
    log << (ok ? "checks passed" : "checks FAILED") << "\n";
    return ok ? ExitCode::ok : ExitCode::verification_failed;
}

inline ExitCode run_verify(const RunConfig& cfg, std::ostream& log)
{
    verify::Options o;
    o.seed = cfg.seed;
    o.trials = cfg.trials;
    o.n_max = cfg.n_max;
    o.n_min = std::min(1, cfg.n_max);
    o.inject_fault = cfg.inject_fault;
    if (o.n_max < 1) {
        throw InputError("--n-max must be at least 1");
    }
    json suites = json::array();
    bool ok = true;
    for (const auto& r : verify::run_all(o)) {
        log << (r.ok() ? "PASS " : "FAIL ") << r.name << " (" << r.trials << " instances, " << r.checks
            << " checks)";
        if (!r.ok()) {
            log << ": " << r.failures << " failures, first: " << r.first_failure;
        }
        log << "\n";
        suites.push_back({{"name", r.name},
                          {"ok", r.ok()},
                          {"trials", r.trials},
                          {"checks", r.checks},
                          {"failures", r.failures},
                          {"first_failure", r.first_failure}});
        ok = ok && r.ok();
    }
    json meta = metadata(cfg, "verify");
    meta["trials"] = cfg.trials;
    meta["n_max"] = cfg.n_max;
    meta["inject_fault"] = cfg.inject_fault;
    write_file(std::filesystem::path(cfg.out_dir) / "report.json",
               json{{"metadata", meta}, {"suites", suites}, {"ok", ok}}.dump(2) + "\n");
    return ok ? ExitCode::ok : ExitCode::verification_failed;
}

} // namespace pipeline
} // namespace algpers
