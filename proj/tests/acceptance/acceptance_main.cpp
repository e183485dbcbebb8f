// Acceptance gate: one line per criterion, exit 0 iff everything passes.
#include <functional>
#include <numeric>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "vci/oracle.hpp"

using namespace vci;

namespace {

const FieldDesc QQ = FieldDesc::rationals();
const FieldDesc FP = FieldDesc::prime_field(kDefaultPrime);

Poly X0(FieldDesc fd = QQ) { return Poly::variable(Monomial::kX0, fd); }
Poly X1(FieldDesc fd = QQ) { return Poly::variable(Monomial::kX1, fd); }
Poly Y0(FieldDesc fd = QQ) { return Poly::variable(Monomial::kY0, fd); }
Poly Y1(FieldDesc fd = QQ) { return Poly::variable(Monomial::kY1, fd); }

std::mt19937 rng(20260826);

std::int64_t rnd_residue() {
    static std::uniform_int_distribution<std::int64_t> d(1, kDefaultPrime - 1);
    return d(rng);
}

ProjPoint fp_pt(std::int64_t v) { return ProjPoint::finite(Scalar::from_residue(v, kDefaultPrime)); }

std::vector<std::int64_t> distinct_residues(int count) {
    std::set<std::int64_t> vals;
    while (static_cast<int>(vals.size()) < count) vals.insert(rnd_residue());
    return {vals.begin(), vals.end()};
}

PointSet grid_qq(const std::vector<std::pair<int, int>>& coords) {
    std::vector<BiProjPoint> pts;
    for (auto [x, y] : coords)
        pts.push_back({ProjPoint::finite(Scalar::from_int(x)), ProjPoint::finite(Scalar::from_int(y))});
    return PointSet::make(pts, QQ);
}

// Generic F_p realization of an incidence pattern given as (row, col) cells.
PointSet realize_fp(const std::vector<std::pair<int, int>>& cells, int nrows, int ncols) {
    auto rows = distinct_residues(nrows);
    auto cols = distinct_residues(ncols);
    std::vector<BiProjPoint> pts;
    for (auto [r, c] : cells) pts.push_back({fp_pt(cols[c]), fp_pt(rows[r])});
    return PointSet::make(pts, FP);
}

PointSet random_balanced(int k, int n) {
    auto xs = distinct_residues(k);
    std::vector<BiProjPoint> pts;
    for (auto xc : xs)
        for (auto yc : distinct_residues(n)) pts.push_back({fp_pt(xc), fp_pt(yc)});
    return PointSet::make(pts, FP);
}

struct Gate {
    bool all_pass = true;

    void run(int number, const std::string& label, const std::function<bool(std::string&)>& body) {
        std::string detail;
        bool ok = false;
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << label;
        if (!detail.empty()) std::cout << " — " << detail;
        std::cout << std::endl;
        if (!ok) all_pass = false;
    }
};

}  // namespace

int main() {
    Gate gate;

    gate.run(1, "saturation of the two-generator model ideal", [](std::string& detail) {
        Ideal lhs = saturate_by_irrelevant(Ideal::make({X0() * Y0(), X1() * Y1()}, QQ));
        Ideal rhs = Ideal::make({X0() * X1(), X0() * Y0(), X1() * Y1(), Y0() * Y1()}, QQ);
        bool ok = ideal_equal(lhs, rhs);
        detail = ok ? "ideal_equal holds" : "ideals differ";
        return ok;
    });

    gate.run(2, "three-point certificate, both modes, Koszul end twist", [](std::string& detail) {
        PointSet x = PointSet::make({{ProjPoint::infinity(QQ), ProjPoint::finite(Scalar::from_int(1))},
                                     {ProjPoint::finite(Scalar::from_int(0)), ProjPoint::infinity(QQ)},
                                     {ProjPoint::finite(Scalar::from_int(1)), ProjPoint::infinity(QQ)}},
                                    QQ);
        Poly f = X1() * Y1();
        Poly g = X0() * (X1() - X0()) * (Y1() - Y0());
        bool both = verify_vci(x, f, g, VerifyMode::Both).accepted;
        VciCertificate cert{f, g, {1, 1}, {2, 1}, {}};
        bool twist = koszul_shape(cert).end == Bidegree{-3, -2};
        detail = "both-mode verify " + std::string(both ? "accepts" : "rejects") +
                 ", end twist " + (twist ? "(-3,-2)" : "wrong");
        return both && twist;
    });

    gate.run(3, "six-point coordinate dependence", [](std::string& detail) {
        auto six = [](bool co_conic) {
            std::vector<BiProjPoint> pts = {
                {ProjPoint::finite(Scalar::from_int(1)), ProjPoint::make(Scalar::one(QQ), Scalar::from_int(1))},
                {ProjPoint::finite(Scalar::from_int(2)), ProjPoint::make(Scalar::one(QQ), Scalar::from_int(2))},
                {ProjPoint::finite(Scalar::from_int(3)), ProjPoint::make(Scalar::one(QQ), Scalar::from_int(3))},
                {ProjPoint::infinity(QQ), ProjPoint::finite(Scalar::one(QQ))},
                {ProjPoint::infinity(QQ), ProjPoint::infinity(QQ)}};
            pts.push_back({ProjPoint::finite(Scalar::from_int(4)),
                           ProjPoint::make(Scalar::one(QQ), Scalar::from_int(co_conic ? 4 : 5))});
            return PointSet::make(pts, QQ);
        };
        Poly f = X0() * X1() * Y0() - X1() * X1() * Y1();
        Poly g = (X1() * X1() * Y0() * Y0()) * Scalar::from_int(24) - X0() * X0() * Y0() * Y1() -
                 (X1() * X1() * Y0() * Y1()) * Scalar::from_int(50) + X0() * X0() * Y1() * Y1() -
                 (X0() * X1() * Y1() * Y1()) * Scalar::from_int(9) +
                 (X1() * X1() * Y1() * Y1()) * Scalar::from_int(35);
        bool verify = verify_vci(six(true), f, g, VerifyMode::Both).accepted;
        bool bezout = bezout_count({2, 1}, {2, 2}) == 6;
        bool pos = analyze(six(true)).status == VerdictStatus::Vci;
        VciVerdict moved = analyze(six(false));
        bool neg = moved.status == VerdictStatus::NotVci ||
                   moved.status == VerdictStatus::CoordinateDependent;
        bool traced = false;
        for (const auto& line : moved.trace)
            if (line.find("special coordinates") != std::string::npos ||
                line.find("forced degree") != std::string::npos ||
                line.find("no verified witness") != std::string::npos)
                traced = true;
        std::ostringstream os;
        os << "verify=" << verify << " bezout=" << bezout << " analyze=" << pos
           << " moved=" << status_name(moved.status) << " trace=" << traced;
        detail = os.str();
        return verify && bezout && pos && neg && traced;
    });

    gate.run(4, "set-theoretic witness with padding multiplicities", [](std::string& detail) {
        PointSet x = grid_qq({{0, 0}, {1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}});
        SetTheoreticWitness w = construct_set_theoretic(x);
        Poly expected_f = X0() * (X0() - X1()) * (X0() - X1() * Scalar::from_int(2));
        bool f_ok = w.f.monic() == expected_f.monic();
        bool sum_ok = w.mult.total() == 9 && static_cast<int>(w.mult.entries.size()) == 6;
        bool mult_ok = w.mult.at({ProjPoint::finite(Scalar::from_int(0)),
                                  ProjPoint::finite(Scalar::from_int(0))}) == 3 &&
                       w.mult.at({ProjPoint::finite(Scalar::from_int(1)),
                                  ProjPoint::finite(Scalar::from_int(1))}) == 2;
        bool bez_ok = bezout_count({3, 0}, {3, 3}) == 9;
        std::ostringstream os;
        os << "f=" << f_ok << " sum9/support6=" << sum_ok << " padded mults {3,2}=" << mult_ok
           << " bezout=" << bez_ok;
        detail = os.str();
        return f_ok && sum_ok && mult_ok && bez_ok;
    });

    gate.run(5, "200 balanced sets verify in both modes", [](std::string& detail) {
        std::uniform_int_distribution<int> kd(1, 5), nd(1, 3);
        int pass = 0;
        for (int i = 0; i < 200; ++i) {
            PointSet x = random_balanced(kd(rng), nd(rng));
            VciCertificate c = construct_balanced_vci(x);
            if (verify_vci(x, c.f, c.g, VerifyMode::Both).accepted) ++pass;
        }
        detail = std::to_string(pass) + "/200";
        return pass == 200;
    });

    gate.run(6, "Ferrers dichotomy on the 5x5 grid", [](std::string& detail) {
        int configs = 0, searched = 0;
        // all partitions with at most 5 parts, each part at most 5
        std::vector<std::vector<int>> parts;
        std::function<void(std::vector<int>&, int)> rec = [&](std::vector<int>& cur, int maxp) {
            if (!cur.empty()) parts.push_back(cur);
            if (static_cast<int>(cur.size()) == 5) return;
            for (int p = maxp; p >= 1; --p) {
                cur.push_back(p);
                rec(cur, p);
                cur.pop_back();
            }
        };
        std::vector<int> cur;
        rec(cur, 5);
        for (const auto& lam : parts) {
            std::vector<std::pair<int, int>> cells;
            int total = 0;
            for (std::size_t r = 0; r < lam.size(); ++r) {
                total += lam[r];
                for (int c = 0; c < lam[r]; ++c) cells.push_back({static_cast<int>(r), c});
            }
            PointSet x = realize_fp(cells, static_cast<int>(lam.size()), lam[0]);
            bool rectangle = std::all_of(lam.begin(), lam.end(), [&](int p) { return p == lam[0]; });
            VciVerdict v = classify_ferrers(x);
            if ((v.status == VerdictStatus::Vci) != rectangle) {
                detail = "classification mismatch on a partition of " + std::to_string(total);
                return false;
            }
            ++configs;
            if (total <= 6) {
                bool found = exhaustive_witness_search(x).outcome == SearchOutcome::Found;
                if (found != rectangle) {
                    detail = "search mismatch on a partition of " + std::to_string(total);
                    return false;
                }
                ++searched;
            }
        }
        detail = std::to_string(configs) + " partitions, " + std::to_string(searched) +
                 " searched";
        return configs == 251;
    });

    gate.run(7, "500 fast/saturation verifier agreements", [](std::string& detail) {
        std::uniform_int_distribution<int> coord(0, 3), pick(0, 2);
        int agree = 0;
        for (int i = 0; i < 500; ++i) {
            std::set<std::pair<int, int>> used;
            int want = 2 + pick(rng);
            while (static_cast<int>(used.size()) < want) used.insert({coord(rng), coord(rng)});
            std::vector<BiProjPoint> pts;
            for (auto [a, b] : used)
                pts.push_back({ProjPoint::finite(Scalar::from_int(a, FP)),
                               ProjPoint::finite(Scalar::from_int(b, FP))});
            PointSet x = PointSet::make(pts, FP);
            Poly f = Poly::constant(Scalar::one(FP));
            Poly g = Poly::constant(Scalar::one(FP));
            for (const auto& p : x.points) {
                f *= Ruling::through(Ruling::Axis::Vertical, p.x, FP).linear_form;
                g *= Ruling::through(Ruling::Axis::Horizontal, p.y, FP).linear_form;
            }
            if (pick(rng) == 0) f *= Ruling::through(Ruling::Axis::Vertical, fp_pt(7), FP).linear_form;
            if (verify_vci(x, f, g, VerifyMode::Fast).accepted ==
                verify_vci(x, f, g, VerifyMode::Saturation).accepted)
                ++agree;
        }
        detail = std::to_string(agree) + "/500";
        return agree == 500;
    });

    gate.run(8, "refuter soundness vs exhaustive search on the 4x4 grid", [](std::string& detail) {
        std::map<std::string, PointSet> reps;
        for (unsigned mask = 1; mask < (1u << 16); ++mask) {
            if (__builtin_popcount(mask) > 6) continue;
            std::vector<std::pair<int, int>> cells;
            for (int i = 0; i < 16; ++i)
                if (mask & (1u << i)) cells.push_back({i / 4, i % 4});
            PointSet x = realize_fp(cells, 4, 4);
            reps.try_emplace(configuration_of(x).id(), std::move(x));
        }
        int fired = 0;
        for (const auto& [id, x] : reps) {
            Configuration cfg = configuration_of(x);
            if (x.size() >= cfg.m * cfg.n) continue;
            bool refuted = refute_cross(x).has_value() || refute_gcd(x).has_value() ||
                           (std::gcd(cfg.m, cfg.n) == 1 && refute_number_theory(x).has_value());
            if (!refuted) continue;
            ++fired;
            if (exhaustive_witness_search(x).outcome != SearchOutcome::Exhausted) {
                detail = "configuration " + id + " refuted but not exhausted";
                return false;
            }
        }
        detail = std::to_string(reps.size()) + " configurations, " + std::to_string(fired) +
                 " refuted, all exhausted";
        return fired > 0;
    });

    gate.run(9, "300 few-ruling classifications vs search", [](std::string& detail) {
        std::uniform_int_distribution<int> rows_d(1, 3), count_d(1, 4), col_d(0, 5);
        int positives = 0, negatives = 0;
        for (int i = 0; i < 300; ++i) {
            int nrows = rows_d(rng);
            std::set<std::pair<int, int>> cells;
            for (int r = 0; r < nrows; ++r) {
                int want = count_d(rng);
                std::set<int> cols;
                while (static_cast<int>(cols.size()) < want) cols.insert(col_d(rng));
                for (int c : cols) cells.insert({r, c});
            }
            PointSet x = realize_fp({cells.begin(), cells.end()}, 3, 6);
            VciVerdict v = classify_few_rulings(x);
            WitnessSearchResult s = exhaustive_witness_search(x);
            if (v.status == VerdictStatus::Vci) {
                ++positives;
                if (!verify_vci(x, v.certificate->f, v.certificate->g, VerifyMode::Fast).accepted) {
                    detail = "positive verdict with invalid witness (iteration " +
                             std::to_string(i) + ")";
                    return false;
                }
                if (s.outcome == SearchOutcome::Exhausted) {
                    detail = "classifier VCI but search exhausted (iteration " +
                             std::to_string(i) + ")";
                    return false;
                }
            } else if (v.status == VerdictStatus::NotVci) {
                ++negatives;
                if (s.outcome == SearchOutcome::Found) {
                    detail = "classifier NOT_VCI but search found a witness (iteration " +
                             std::to_string(i) + ")";
                    return false;
                }
            } else {
                detail = "classifier undecided on a few-ruling instance (iteration " +
                         std::to_string(i) + ")";
                return false;
            }
        }
        detail = std::to_string(positives) + " VCI / " + std::to_string(negatives) + " NOT_VCI";
        return positives + negatives == 300;
    });

    gate.run(10, "cross-ratio vs (1,1)-form on 100 anti-diagonal quadruples", [](std::string& detail) {
        int agree = 0, equal_cases = 0;
        for (int i = 0; i < 100; ++i) {
            auto xs = distinct_residues(4);
            std::shuffle(xs.begin(), xs.end(), rng);
            std::vector<ProjPoint> px, py;
            for (auto v : xs) px.push_back(fp_pt(v));
            if (i % 2 == 0) {
                // image under a random Moebius map: equal cross ratios
                std::int64_t a, b, c, d;
                do {
                    a = rnd_residue(); b = rnd_residue(); c = rnd_residue(); d = rnd_residue();
                } while (((a * d - b * c) % kDefaultPrime) == 0);
                for (auto v : xs)
                    py.push_back(ProjPoint::make(
                        Scalar::from_residue(a, kDefaultPrime) * Scalar::from_residue(v, kDefaultPrime) +
                            Scalar::from_residue(b, kDefaultPrime),
                        Scalar::from_residue(c, kDefaultPrime) * Scalar::from_residue(v, kDefaultPrime) +
                            Scalar::from_residue(d, kDefaultPrime)));
            } else {
                for (auto v : distinct_residues(4)) py.push_back(fp_pt(v));
            }
            std::vector<BiProjPoint> pts;
            for (int j = 0; j < 4; ++j) pts.push_back({px[j], py[j]});
            PointSet x = PointSet::make(pts, FP);
            bool cr_equal = cross_ratio(px[0], px[1], px[2], px[3]) ==
                            cross_ratio(py[0], py[1], py[2], py[3]);
            bool form_exists = !form_through_points(x, {1, 1}).empty();
            if (cr_equal) ++equal_cases;
            if (cr_equal == form_exists) ++agree;
        }
        detail = std::to_string(agree) + "/100 agree (" + std::to_string(equal_cases) +
                 " with equal cross ratios)";
        return agree == 100 && equal_cases >= 50;
    });

    gate.run(11, "Hilbert stabilization and linear-algebra saturation", [](std::string& detail) {
        std::uniform_int_distribution<int> coord(0, 4), size_d(1, 6);
        for (int i = 0; i < 50; ++i) {
            std::set<std::pair<int, int>> used;
            int want = size_d(rng);
            while (static_cast<int>(used.size()) < want) used.insert({coord(rng), coord(rng)});
            std::vector<BiProjPoint> pts;
            for (auto [a, b] : used)
                pts.push_back({ProjPoint::finite(Scalar::from_int(a, FP)),
                               ProjPoint::finite(Scalar::from_int(b, FP))});
            PointSet x = PointSet::make(pts, FP);
            Ideal ix = vanishing_ideal(x);
            for (int a = x.size(); a <= x.size() + 2; ++a)
                for (int b = x.size(); b <= x.size() + 2; ++b)
                    if (hilbert_value(ix, {a, b}) != x.size()) {
                        detail = "no stabilization at |X| (iteration " + std::to_string(i) + ")";
                        return false;
                    }
        }
        // linear-algebra saturation vs Groebner saturation on random ideals
        std::uniform_int_distribution<int> shape(0, 2), coeff(1, 50);
        auto random_form = [&](int kind) {
            Poly p = Poly::zero(FP);
            Scalar c1 = Scalar::from_residue(coeff(rng), kDefaultPrime);
            Scalar c2 = Scalar::from_residue(coeff(rng), kDefaultPrime);
            if (kind == 0) return X0(FP) * c1 + X1(FP) * c2;
            if (kind == 1) return Y0(FP) * c1 + Y1(FP) * c2;
            return X0(FP) * Y0(FP) * c1 + X1(FP) * Y1(FP) * c2;
        };
        for (int i = 0; i < 50; ++i) {
            Poly g1 = random_form(shape(rng)) * random_form(shape(rng));
            Poly g2 = random_form(shape(rng));
            Ideal ideal = Ideal::make({g1, g2}, FP);
            SaturationTable table(ideal, 6, 6);
            Ideal sat = saturate_by_irrelevant(ideal);
            for (int a = 0; a <= 2; ++a)
                for (int b = 0; b <= 2; ++b)
                    if (table.saturation_dim(a, b) !=
                        (a + 1) * (b + 1) - hilbert_value(sat, {a, b})) {
                        detail = "saturation dimension mismatch (iteration " + std::to_string(i) +
                                 ")";
                        return false;
                    }
        }
        detail = "50 point sets stabilized, 50 ideals matched";
        return true;
    });

    std::cout << (gate.all_pass ? "ACCEPTANCE: ALL CRITERIA PASS" : "ACCEPTANCE: FAILURES PRESENT")
              << std::endl;
    return gate.all_pass ? 0 : 1;
}
