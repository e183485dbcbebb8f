#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "vci/json_io.hpp"
#include "vci/oracle.hpp"

namespace {

using namespace vci;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // reject / NOT_VCI
constexpr int kExitInput = 2;
constexpr int kExitUndecided = 3;

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw JsonError("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

int verdict_exit(const VciVerdict& v) {
    switch (v.status) {
        case VerdictStatus::Vci: return kExitOk;
        case VerdictStatus::NotVci: return kExitNegative;
        default: return kExitUndecided;
    }
}

void print_verdict(const VciVerdict& v) {
    std::cout << verdict_to_json(v).dump(2) << "\n";
    std::cout << "status: " << status_name(v.status) << "\n";
    if (v.certificate)
        std::cout << "f = " << v.certificate->f.str() << "\ng = " << v.certificate->g.str()
                  << "\n";
    if (v.refutation)
        std::cout << "criterion: " << criterion_name(v.refutation->criterion) << "\n";
}

std::string join_counts(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += "|";
        s += std::to_string(v[i]);
    }
    return s;
}

int run_census(int max_rows, int max_cols, int max_points, FieldDesc fd) {
    if (max_rows < 1 || max_cols < 1 || max_rows * max_cols > 16 || max_points > 8) {
        std::cerr << "census limits: grid at most 16 cells, at most 8 points\n";
        return kExitInput;
    }
    if (fd.is_rational()) {
        std::cerr << "census requires a finite field (--field fp:<p>)\n";
        return kExitInput;
    }
    const int cells = max_rows * max_cols;
    std::mt19937 rng(20260826);
    std::uniform_int_distribution<std::int64_t> dist(1, fd.p - 1);
    auto fresh_coords = [&](int count) {
        std::set<std::int64_t> vals;
        while (static_cast<int>(vals.size()) < count) vals.insert(dist(rng));
        return std::vector<std::int64_t>(vals.begin(), vals.end());
    };

    // One representative point set per canonical configuration.
    std::map<std::string, PointSet> reps;
    for (unsigned mask = 1; mask < (1u << cells); ++mask) {
        if (__builtin_popcount(mask) > max_points) continue;
        auto rows = fresh_coords(max_rows);
        auto cols = fresh_coords(max_cols);
        std::vector<BiProjPoint> pts;
        for (int i = 0; i < cells; ++i)
            if (mask & (1u << i))
                pts.push_back({ProjPoint::finite(Scalar::from_residue(cols[i % max_cols], fd.p)),
                               ProjPoint::finite(Scalar::from_residue(rows[i / max_cols], fd.p))});
        PointSet x = PointSet::make(std::move(pts), fd);
        std::string id = configuration_of(x).id();
        reps.try_emplace(id, std::move(x));
    }

    std::cout << "configuration-id,row_counts,col_counts,|X|,m,n,verdict,criterion\n";
    for (const auto& [id, x] : reps) {
        Configuration cfg = configuration_of(x);
        VciVerdict v = analyze(x);
        std::string crit =
            v.refutation ? criterion_name(v.refutation->criterion) : std::string();
        std::cout << id << "," << join_counts(cfg.row_counts) << ","
                  << join_counts(cfg.col_counts) << "," << x.size() << "," << cfg.m << ","
                  << cfg.n << "," << status_name(v.status) << "," << crit << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact decision toolkit for virtual complete intersections of points in P1 x P1"};
    app.require_subcommand(1);

    std::string points_path, cert_path, ideal_path, mode = "fast", field = "qq", grid = "3x3";
    int bid_a = 0, bid_b = 0;
    bool set_theoretic = false;
    int max_points = 6;

    auto* analyze_cmd = app.add_subcommand("analyze", "Decide whether a point set is a VCI");
    analyze_cmd->add_option("points", points_path, "point set JSON")->required();

    auto* certify_cmd = app.add_subcommand("certify", "Check a certificate against a point set");
    certify_cmd->add_option("points", points_path, "point set JSON")->required();
    certify_cmd->add_option("--cert", cert_path, "certificate JSON")->required();
    certify_cmd->add_option("--mode", mode, "fast|saturation|both")
        ->check(CLI::IsMember({"fast", "saturation", "both"}));

    auto* construct_cmd = app.add_subcommand("construct", "Construct a witness pair");
    construct_cmd->add_option("points", points_path, "point set JSON")->required();
    construct_cmd->add_flag("--set-theoretic", set_theoretic,
                            "set-theoretic witness with multiplicities");

    auto* saturate_cmd = app.add_subcommand("saturate", "Saturate an ideal by the irrelevant ideal");
    saturate_cmd->add_option("ideal", ideal_path, "ideal JSON")->required();

    auto* groebner_cmd = app.add_subcommand("groebner", "Reduced Groebner basis");
    groebner_cmd->add_option("ideal", ideal_path, "ideal JSON")->required();

    auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert function value of S/I");
    hilbert_cmd->add_option("ideal", ideal_path, "ideal JSON")->required();
    hilbert_cmd->add_option("--bidegree", [&bid_a, &bid_b](const std::vector<std::string>& vals) {
        return std::sscanf(vals[0].c_str(), "%d,%d", &bid_a, &bid_b) == 2;
    }, "a,b")->required();

    auto* classify_cmd = app.add_subcommand("classify", "Structured classification with criterion");
    classify_cmd->add_option("points", points_path, "point set JSON")->required();

    auto* census_cmd = app.add_subcommand("census", "Tabulate verdicts per configuration (CSV)");
    census_cmd->add_option("--max-grid", grid, "RxC grid bound (default 3x3)");
    census_cmd->add_option("--max-points", max_points, "point-count cap (default 6)");
    census_cmd->add_option("--field", field, "qq | fp:<prime> (census default fp:32003)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        if (analyze_cmd->parsed() || classify_cmd->parsed()) {
            PointSet x = point_set_from_json(load_json(points_path));
            VciVerdict v = analyze(x);
            print_verdict(v);
            return verdict_exit(v);
        }
        if (certify_cmd->parsed()) {
            PointSet x = point_set_from_json(load_json(points_path));
            VciCertificate cert = certificate_from_json(load_json(cert_path), x.field);
            VerifyMode vm = mode == "fast"         ? VerifyMode::Fast
                            : mode == "saturation" ? VerifyMode::Saturation
                                                   : VerifyMode::Both;
            VerifyResult r = verify_vci(x, cert.f, cert.g, vm);
            for (const auto& line : r.trace) std::cout << line << "\n";
            std::cout << (r.accepted ? "ACCEPT" : "REJECT") << "\n";
            return r.accepted ? kExitOk : kExitNegative;
        }
        if (construct_cmd->parsed()) {
            PointSet x = point_set_from_json(load_json(points_path));
            if (set_theoretic) {
                SetTheoreticWitness w = construct_set_theoretic(x);
                Json mult = Json::array();
                for (const auto& [p, k] : w.mult.entries)
                    mult.push_back({{"point", Json::array({Json::array({p.x.c0.str(), p.x.c1.str()}),
                                                           Json::array({p.y.c0.str(), p.y.c1.str()})})},
                                    {"multiplicity", k}});
                Json out{{"field", x.field.name()},
                         {"f", poly_to_json(w.f)},
                         {"g", poly_to_json(w.g)},
                         {"multiplicities", mult}};
                std::cout << out.dump(2) << "\n";
                return kExitOk;
            }
            VciCertificate cert = construct_balanced_vci(x);
            std::cout << certificate_to_json(cert).dump(2) << "\n";
            return kExitOk;
        }
        if (saturate_cmd->parsed()) {
            Ideal ideal = ideal_from_json(load_json(ideal_path));
            std::cout << ideal_to_json(saturate_by_irrelevant(ideal)).dump(2) << "\n";
            return kExitOk;
        }
        if (groebner_cmd->parsed()) {
            Ideal ideal = ideal_from_json(load_json(ideal_path));
            GroebnerBasis gb = buchberger(ideal);
            Json basis = Json::array();
            for (const auto& g : gb.basis) basis.push_back(poly_to_json(g));
            Json out{{"field", ideal.field.name()},
                     {"order", "aux-block grevlex (x0 > x1 > y0 > y1)"},
                     {"reduced", gb.reduced},
                     {"basis", basis}};
            std::cout << out.dump(2) << "\n";
            return kExitOk;
        }
        if (hilbert_cmd->parsed()) {
            Ideal ideal = ideal_from_json(load_json(ideal_path));
            std::cout << hilbert_value(ideal, {bid_a, bid_b}) << "\n";
            return kExitOk;
        }
        if (census_cmd->parsed()) {
            int r = 0, c = 0;
            if (std::sscanf(grid.c_str(), "%dx%d", &r, &c) != 2) {
                std::cerr << "--max-grid must look like 3x3\n";
                return kExitInput;
            }
            FieldDesc fd = field == "qq" && !census_cmd->count("--field")
                               ? FieldDesc::prime_field(kDefaultPrime)
                               : FieldDesc::parse(field);
            return run_census(r, c, max_points, fd);
        }
    } catch (const Json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const JsonError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const FieldError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
