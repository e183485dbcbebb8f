#include "vci/vciengine.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "vci/groebner.hpp"

namespace vci {

namespace {

// Row/column statistics of the grid: rows are horizontal rulings, columns
// vertical ones; m and n are the maximal counts, s and t how many rulings
// attain them.
struct GridStats {
    std::vector<RulingGroup> rows, cols;
    int m = 0, n = 0, s = 0, t = 0;
};

GridStats grid_stats(const PointSet& x) {
    GridStats gs;
    Rulings r = rulings_of(x);
    gs.rows = std::move(r.horizontal);
    gs.cols = std::move(r.vertical);
    for (const auto& g : gs.rows) gs.m = std::max<int>(gs.m, g.points.size());
    for (const auto& g : gs.cols) gs.n = std::max<int>(gs.n, g.points.size());
    for (const auto& g : gs.rows)
        if (static_cast<int>(g.points.size()) == gs.m) ++gs.s;
    for (const auto& g : gs.cols)
        if (static_cast<int>(g.points.size()) == gs.n) ++gs.t;
    return gs;
}

Bidegree required_bidegree(const Poly& f, const char* which) {
    auto deg = f.bidegree();
    if (!deg) throw FieldError(std::string(which) + " must be a nonzero bihomogeneous form");
    return *deg;
}

Poly vertical_form(const ProjPoint& coord, FieldDesc fd) {
    return Ruling::through(Ruling::Axis::Vertical, coord, fd).linear_form;
}

Poly horizontal_form(const ProjPoint& coord, FieldDesc fd) {
    return Ruling::through(Ruling::Axis::Horizontal, coord, fd).linear_form;
}

// Small deterministic set of projective combinations of a kernel basis,
// used to hunt for a witness inside a solution space.
std::vector<Poly> combination_candidates(const std::vector<Poly>& basis, std::size_t limit = 120) {
    std::vector<Poly> out;
    if (basis.empty()) return out;
    FieldDesc fd = basis[0].field();
    auto push = [&](Poly p) {
        if (p.is_zero() || out.size() >= limit) return;
        p = p.monic();
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    };
    for (const auto& b : basis) push(b);
    const long weights[] = {1, -1, 2, -2, 3};
    for (std::size_t i = 0; i < basis.size() && out.size() < limit; ++i)
        for (std::size_t j = i + 1; j < basis.size() && out.size() < limit; ++j)
            for (long w : weights) push(basis[i] + basis[j] * Scalar::from_int(w, fd));
    for (std::size_t i = 0; i < basis.size() && out.size() < limit; ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            for (std::size_t k = j + 1; k < basis.size(); ++k)
                for (long w1 : {1, -1, 2})
                    for (long w2 : {1, -1, 2})
                        push(basis[i] + basis[j] * Scalar::from_int(w1, fd) +
                             basis[k] * Scalar::from_int(w2, fd));
    return out;
}

std::string degree_str(Bidegree d) {
    return "(" + std::to_string(d.a) + "," + std::to_string(d.b) + ")";
}

}  // namespace

int bezout_count(Bidegree f_deg, Bidegree g_deg) {
    return f_deg.a * g_deg.b + f_deg.b * g_deg.a;
}

KoszulShape koszul_shape(const VciCertificate& cert) {
    KoszulShape shape;
    shape.start = {0, 0};
    shape.middle = {Bidegree{-cert.f_deg.a, -cert.f_deg.b},
                    Bidegree{-cert.g_deg.a, -cert.g_deg.b}};
    shape.end = {-cert.f_deg.a - cert.g_deg.a, -cert.f_deg.b - cert.g_deg.b};
    return shape;
}

std::string criterion_name(RefutationCriterion c) {
    switch (c) {
        case RefutationCriterion::Cross: return "CROSS";
        case RefutationCriterion::Gcd: return "GCD";
        case RefutationCriterion::DegreeCandidates: return "DEGREE_CANDIDATES";
        case RefutationCriterion::LineBudget: return "LINE_BUDGET";
        case RefutationCriterion::RulingGap: return "RULING_GAP";
        case RefutationCriterion::Ferrers: return "FERRERS";
        case RefutationCriterion::ForcedDegree: return "FORCED_DEGREE";
        case RefutationCriterion::TwoRuling: return "TWO_RULING";
        case RefutationCriterion::ThreeRuling: return "THREE_RULING";
    }
    return "?";
}

std::string status_name(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Vci: return "VCI";
        case VerdictStatus::NotVci: return "NOT_VCI";
        case VerdictStatus::CoordinateDependent: return "COORDINATE_DEPENDENT";
        case VerdictStatus::Undecided: return "UNDECIDED";
    }
    return "?";
}

int MultiplicityMap::total() const {
    int sum = 0;
    for (const auto& [p, k] : entries) sum += k;
    return sum;
}

int MultiplicityMap::at(const BiProjPoint& p) const {
    for (const auto& [q, k] : entries)
        if (q == p) return k;
    return 0;
}

Poly swap_factors(const Poly& f) {
    std::vector<Term> ts;
    for (const Term& t : f.terms()) {
        Monomial m = t.mono;
        std::swap(m.e[Monomial::kX0], m.e[Monomial::kY0]);
        std::swap(m.e[Monomial::kX1], m.e[Monomial::kY1]);
        ts.push_back({m, t.coeff});
    }
    return Poly::from_terms(std::move(ts), f.field());
}

VerifyResult verify_vci(const PointSet& x, const Poly& f, const Poly& g, VerifyMode mode) {
    VerifyResult res;
    Bidegree fd = required_bidegree(f, "f");
    Bidegree gd = required_bidegree(g, "g");

    auto fast = [&](std::vector<std::string>& trace) {
        Poly h = poly_gcd(f, g);
        if (!h.is_unit()) {
            trace.push_back("fast: common factor " + h.str());
            return false;
        }
        trace.push_back("fast: gcd(f,g) is a unit");
        for (const auto& p : x.points)
            if (!f.evaluate(p).is_zero() || !g.evaluate(p).is_zero()) {
                trace.push_back("fast: does not vanish at " + p.str());
                return false;
            }
        trace.push_back("fast: f and g vanish on all " + std::to_string(x.size()) + " points");
        int count = bezout_count(fd, gd);
        trace.push_back("fast: bezout count " + degree_str(fd) + "," + degree_str(gd) + " = " +
                        std::to_string(count) + " vs |X| = " + std::to_string(x.size()));
        return count == x.size();
    };
    auto saturation = [&](std::vector<std::string>& trace) {
        Ideal fg = Ideal::make({f, g}, x.field);
        Ideal sat = saturate_by_irrelevant(fg);
        bool equal = ideal_equal(sat, vanishing_ideal(x));
        trace.push_back(std::string("saturation: sat<f,g> ") + (equal ? "equals" : "differs from") +
                        " I_X");
        return equal;
    };

    switch (mode) {
        case VerifyMode::Fast: res.accepted = fast(res.trace); break;
        case VerifyMode::Saturation: res.accepted = saturation(res.trace); break;
        case VerifyMode::Both: {
            bool a = fast(res.trace);
            bool b = saturation(res.trace);
            if (a != b) throw FieldError("verification modes disagree");
            res.accepted = a;
            break;
        }
    }
    return res;
}

namespace {

// Constructive witness for a set whose vertical rulings all carry
// the same number of points.
VciCertificate build_balanced_vertical(const PointSet& x, const std::vector<RulingGroup>& cols) {
    FieldDesc fd = x.field;
    int k = static_cast<int>(cols.size());
    int n = static_cast<int>(cols[0].points.size());

    std::vector<Poly> ell;
    Poly f = Poly::constant(Scalar::one(fd));
    for (const auto& g : cols) {
        ell.push_back(g.ruling.linear_form);
        f *= ell.back();
    }
    Poly g = Poly::zero(fd);
    for (int i = 0; i < k; ++i) {
        Poly term = Poly::constant(Scalar::one(fd));
        for (int j = 0; j < k; ++j)
            if (j != i) term *= ell[j];
        for (const auto& p : cols[i].points) term *= horizontal_form(p.y, fd);
        g += term;
    }
    VciCertificate cert{f, g, {k, 0}, {k - 1, n}, {}};
    if (k == 1) cert.g_deg = {0, n};
    cert.trace.push_back("balanced construction: " + std::to_string(k) +
                         " vertical rulings, " + std::to_string(n) + " points each");
    return cert;
}

std::optional<std::vector<RulingGroup>> balanced_groups(const std::vector<RulingGroup>& gs) {
    for (const auto& g : gs)
        if (g.points.size() != gs[0].points.size()) return std::nullopt;
    return gs;
}

VciCertificate transpose_certificate(VciCertificate cert) {
    cert.f = swap_factors(cert.f);
    cert.g = swap_factors(cert.g);
    std::swap(cert.f_deg.a, cert.f_deg.b);
    std::swap(cert.g_deg.a, cert.g_deg.b);
    cert.trace.push_back("constructed on the transposed set");
    return cert;
}

}  // namespace

VciCertificate construct_balanced_vci(const PointSet& x) {
    GridStats gs = grid_stats(x);
    if (balanced_groups(gs.cols)) return build_balanced_vertical(x, gs.cols);
    if (balanced_groups(gs.rows)) {
        PointSet t = x.transposed();
        return transpose_certificate(build_balanced_vertical(t, grid_stats(t).cols));
    }
    throw FieldError("point set is not balanced in either orientation");
}

SetTheoreticWitness construct_set_theoretic(const PointSet& x) {
    FieldDesc fd = x.field;
    GridStats gs = grid_stats(x);
    int k = static_cast<int>(gs.cols.size());
    int n = gs.n;

    std::vector<Poly> ell;
    Poly f = Poly::constant(Scalar::one(fd));
    for (const auto& g : gs.cols) {
        ell.push_back(g.ruling.linear_form);
        f *= ell.back();
    }

    MultiplicityMap mult;
    Poly g = Poly::zero(fd);
    for (int i = 0; i < k; ++i) {
        const auto& pts = gs.cols[i].points;  // deterministic (sorted) order
        int deficit = n - static_cast<int>(pts.size());
        Poly gi = Poly::constant(Scalar::one(fd));
        for (std::size_t j = 0; j < pts.size(); ++j) {
            // The padding multiplies the last point's form until the
            // column total reaches n.
            int count = 1 + (j + 1 == pts.size() ? deficit : 0);
            Poly h = horizontal_form(pts[j].y, fd);
            for (int r = 0; r < count; ++r) gi *= h;
            mult.entries.push_back({pts[j], count});
        }
        Poly term = gi;
        for (int j = 0; j < k; ++j)
            if (j != i) term *= ell[j];
        g += term;
    }
    std::sort(mult.entries.begin(), mult.entries.end(),
              [](const auto& a, const auto& b) { return BiProjPoint::cmp(a.first, b.first) < 0; });
    return {f, g, mult};
}

std::optional<Refutation> refute_cross(const PointSet& x) {
    GridStats gs = grid_stats(x);
    if (x.size() >= gs.m * gs.n) return std::nullopt;
    for (const auto& row : gs.rows) {
        if (static_cast<int>(row.points.size()) != gs.m) continue;
        for (const auto& p : row.points)
            for (const auto& col : gs.cols)
                if (static_cast<int>(col.points.size()) == gs.n &&
                    col.ruling.coordinate == p.x) {
                    Refutation r{RefutationCriterion::Cross, gs.m, gs.n};
                    r.s = gs.s;
                    r.t = gs.t;
                    r.witness_point = p;
                    r.detail = "|X| = " + std::to_string(x.size()) + " < " +
                               std::to_string(gs.m * gs.n) + " and " + p.str() +
                               " lies on maximal rulings in both directions";
                    return r;
                }
    }
    return std::nullopt;
}

std::optional<Refutation> refute_gcd(const PointSet& x) {
    GridStats gs = grid_stats(x);
    if (x.size() >= gs.m * gs.n) return std::nullopt;
    int g = std::gcd(gs.m, gs.n);
    if (x.size() % g == 0) return std::nullopt;
    Refutation r{RefutationCriterion::Gcd, gs.m, gs.n};
    r.s = gs.s;
    r.t = gs.t;
    r.detail = "gcd(" + std::to_string(gs.m) + "," + std::to_string(gs.n) + ") = " +
               std::to_string(g) + " does not divide |X| = " + std::to_string(x.size());
    return r;
}

std::pair<int, int> degree_candidates(const PointSet& x) {
    GridStats gs = grid_stats(x);
    if (x.size() >= gs.m * gs.n) throw FieldError("degree_candidates requires |X| < mn");
    if (std::gcd(gs.m, gs.n) != 1) throw FieldError("degree_candidates requires gcd(m,n) = 1");
    long sz = x.size();
    int c = gs.m == 1 ? 0
                      : static_cast<int>(mod_inverse(gs.n % gs.m, gs.m) * (sz % gs.m) % gs.m);
    int d = gs.n == 1 ? 0
                      : static_cast<int>(mod_inverse(gs.m % gs.n, gs.n) * (sz % gs.n) % gs.n);
    return {c, d};
}

std::optional<Refutation> refute_number_theory(const PointSet& x) {
    GridStats gs = grid_stats(x);
    auto [c, d] = degree_candidates(x);  // checks the preconditions
    Refutation r{RefutationCriterion::DegreeCandidates, gs.m, gs.n};
    r.s = gs.s;
    r.t = gs.t;
    r.c = c;
    r.d = d;
    r.residual_x = c - gs.t;
    r.residual_y = d - gs.s;

    if (d * gs.m + c * gs.n != x.size()) {
        r.criterion = RefutationCriterion::DegreeCandidates;
        r.detail = "dm + cn = " + std::to_string(d * gs.m + c * gs.n) + " != |X| = " +
                   std::to_string(x.size());
        return r;
    }
    if (d < gs.s || c < gs.t) {
        r.criterion = RefutationCriterion::LineBudget;
        r.detail = "g of degree (" + std::to_string(c) + "," + std::to_string(d) +
                   ") cannot carry " + std::to_string(gs.s) + " horizontal and " +
                   std::to_string(gs.t) + " vertical forced lines";
        return r;
    }
    // The forced line components of g are exactly the maximal rulings; a
    // point on a maximal opposite ruling is already covered and imposes no
    // condition on the residual part. On a non-maximal horizontal ruling
    // the residual restricts to a nonzero x-form of degree c - t, so more
    // than c - t uncovered points there are impossible (and symmetrically).
    auto on_maximal = [](const std::vector<RulingGroup>& opposite, int maximal,
                         const BiProjPoint& p) {
        for (const auto& og : opposite) {
            if (static_cast<int>(og.points.size()) != maximal) continue;
            const ProjPoint& coord =
                og.ruling.axis == Ruling::Axis::Vertical ? p.x : p.y;
            if (og.ruling.coordinate == coord) return true;
        }
        return false;
    };
    for (const auto& row : gs.rows) {
        if (static_cast<int>(row.points.size()) >= gs.m) continue;
        int uncovered = 0;
        for (const auto& p : row.points)
            if (!on_maximal(gs.cols, gs.n, p)) ++uncovered;
        if (uncovered > r.residual_x) {
            r.criterion = RefutationCriterion::RulingGap;
            r.detail = "non-maximal horizontal ruling with " + std::to_string(uncovered) +
                       " points off maximal vertical rulings, exceeding the residual x-degree " +
                       std::to_string(r.residual_x);
            return r;
        }
    }
    for (const auto& col : gs.cols) {
        if (static_cast<int>(col.points.size()) >= gs.n) continue;
        int uncovered = 0;
        for (const auto& p : col.points)
            if (!on_maximal(gs.rows, gs.m, p)) ++uncovered;
        if (uncovered > r.residual_y) {
            r.criterion = RefutationCriterion::RulingGap;
            r.detail = "non-maximal vertical ruling with " + std::to_string(uncovered) +
                       " points off maximal horizontal rulings, exceeding the residual y-degree " +
                       std::to_string(r.residual_y);
            return r;
        }
    }
    return std::nullopt;
}

VciVerdict classify_ferrers(const PointSet& x) {
    Configuration cfg = configuration_of(x);
    if (!cfg.is_ferrers()) throw FieldError("classify_ferrers requires a Ferrers configuration");
    VciVerdict v;
    if (cfg.is_rectangle()) {
        FieldDesc fd = x.field;
        GridStats gs = grid_stats(x);
        Poly f = Poly::constant(Scalar::one(fd));
        for (const auto& col : gs.cols) f *= col.ruling.linear_form;
        Poly g = Poly::constant(Scalar::one(fd));
        for (const auto& row : gs.rows) g *= row.ruling.linear_form;
        VciCertificate cert{f, g, {static_cast<int>(gs.cols.size()), 0},
                            {0, static_cast<int>(gs.rows.size())}, {}};
        cert.trace.push_back("rectangle: complete intersection of the ruling products");
        v.status = VerdictStatus::Vci;
        v.certificate = std::move(cert);
        v.trace.push_back("Ferrers rectangle: complete intersection");
    } else {
        v.status = VerdictStatus::NotVci;
        auto r = refute_cross(x);
        if (r) {
            v.refutation = *r;
        } else {
            Refutation fr{RefutationCriterion::Ferrers, cfg.m, cfg.n};
            fr.detail = "non-rectangle Ferrers diagram";
            v.refutation = fr;
        }
        v.trace.push_back("Ferrers non-rectangle: the corner point meets both maximal rulings");
    }
    return v;
}

namespace {

std::optional<Refutation> any_refuter(const PointSet& x) {
    if (auto r = refute_cross(x)) return r;
    if (auto r = refute_gcd(x)) return r;
    GridStats gs = grid_stats(x);
    if (x.size() < gs.m * gs.n && std::gcd(gs.m, gs.n) == 1)
        if (auto r = refute_number_theory(x)) return r;
    return std::nullopt;
}

// Assemble g as the product of one candidate conic per pair; iterate over
// a bounded number of per-pair choices until verify_vci accepts.
std::optional<VciCertificate> assemble_pair_product(const PointSet& x, const Poly& f,
                                                    Bidegree f_deg, Bidegree g_deg,
                                                    const std::vector<std::vector<Poly>>& choices,
                                                    int attempts = 200) {
    std::vector<std::size_t> idx(choices.size(), 0);
    for (int round = 0; round < attempts; ++round) {
        Poly g = Poly::constant(Scalar::one(x.field));
        for (std::size_t i = 0; i < choices.size(); ++i) g *= choices[i][idx[i]];
        VerifyResult vr = verify_vci(x, f, g, VerifyMode::Fast);
        if (vr.accepted) {
            VciCertificate cert{f, g, f_deg, g_deg, {}};
            cert.trace = std::move(vr.trace);
            return cert;
        }
        // mixed-radix increment over the per-pair choice lists
        std::size_t i = 0;
        while (i < idx.size()) {
            if (++idx[i] < choices[i].size()) break;
            idx[i] = 0;
            ++i;
        }
        if (i == idx.size()) break;
    }
    return std::nullopt;
}

// Candidate (1,1)-forms through two points of an equal-count two-ruling
// set, avoiding the two ruling forms.
std::vector<Poly> pair_conics(const PointSet& x, const BiProjPoint& p, const BiProjPoint& q,
                              const ProjPoint& row_a, const ProjPoint& row_b) {
    FieldDesc fd = x.field;
    std::vector<Poly> out;
    if (p.x == q.x) {
        // Degenerate conic: the shared vertical line times a horizontal
        // line distinct from both rulings.
        for (long v = 0; v < 8 && out.size() < 4; ++v) {
            ProjPoint cand = v == 0 ? ProjPoint::infinity(fd)
                                    : ProjPoint::finite(Scalar::from_int(v - 1, fd));
            if (cand == row_a || cand == row_b) continue;
            out.push_back(vertical_form(p.x, fd) * horizontal_form(cand, fd));
        }
        return out;
    }
    PointSet two = PointSet::make({p, q}, fd);
    return combination_candidates(form_through_points(two, {1, 1}), 8);
}

VciVerdict classify_two_rows(const PointSet& x, const GridStats& gs) {
    VciVerdict v;
    FieldDesc fd = x.field;
    const auto& rows = gs.rows;
    int k1 = static_cast<int>(rows[0].points.size());
    int k2 = static_cast<int>(rows[1].points.size());

    if (gs.n == 1) {  // condition (1): no shared vertical ruling
        v.status = VerdictStatus::Vci;
        v.certificate = construct_balanced_vci(x);
        v.trace.push_back("two rulings, all columns simple: balanced construction");
        return v;
    }
    if (k1 == k2) {  // condition (2): equal counts, pair the points
        Poly f = rows[0].ruling.linear_form * rows[1].ruling.linear_form;
        ProjPoint ya = rows[0].ruling.coordinate, yb = rows[1].ruling.coordinate;
        std::vector<std::pair<BiProjPoint, BiProjPoint>> pairs;
        std::vector<BiProjPoint> loose_a, loose_b;
        for (const auto& p : rows[0].points) {
            bool aligned = false;
            for (const auto& q : rows[1].points)
                if (q.x == p.x) {
                    pairs.push_back({p, q});
                    aligned = true;
                }
            if (!aligned) loose_a.push_back(p);
        }
        for (const auto& q : rows[1].points) {
            bool aligned = false;
            for (const auto& p : rows[0].points)
                if (p.x == q.x) aligned = true;
            if (!aligned) loose_b.push_back(q);
        }
        for (std::size_t i = 0; i < loose_a.size(); ++i) pairs.push_back({loose_a[i], loose_b[i]});

        std::vector<std::vector<Poly>> choices;
        for (const auto& [p, q] : pairs) choices.push_back(pair_conics(x, p, q, ya, yb));
        auto cert = assemble_pair_product(x, f, {0, 2}, {k1, k1}, choices);
        if (cert) {
            v.status = VerdictStatus::Vci;
            v.certificate = std::move(*cert);
            v.trace.push_back("two equal rulings: product of paired (1,1)-forms");
            return v;
        }
        v.status = VerdictStatus::Undecided;
        v.trace.push_back("two equal rulings: no verified pairing found within the search bound");
        return v;
    }
    // Negative case: a shared column and unequal counts.
    v.status = VerdictStatus::NotVci;
    if (auto r = refute_cross(x)) {
        v.refutation = *r;
    } else {
        Refutation tr{RefutationCriterion::TwoRuling, gs.m, gs.n};
        tr.detail = "two rulings with unequal counts and a shared column";
        v.refutation = tr;
    }
    v.trace.push_back("two rulings, unequal counts, shared column: not a VCI");
    return v;
}

VciVerdict classify_three_rows(const PointSet& x, const GridStats& gs) {
    VciVerdict v;
    FieldDesc fd = x.field;
    const auto& rows = gs.rows;

    // conditions (1) and (2): balanced in either orientation
    if (balanced_groups(gs.rows) || balanced_groups(gs.cols)) {
        v.status = VerdictStatus::Vci;
        v.certificate = construct_balanced_vci(x);
        v.trace.push_back("three rulings: balanced orientation");
        return v;
    }

    // condition (3): two rulings fully paired on shared columns, no
    // column with three points
    if (gs.n <= 2) {
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) {
                int c = 3 - a - b;
                auto xs = [](const RulingGroup& g) {
                    std::vector<std::string> v;
                    for (const auto& p : g.points) v.push_back(p.x.str());
                    std::sort(v.begin(), v.end());
                    return v;
                };
                if (xs(rows[a]) != xs(rows[b])) continue;
                Poly f = rows[a].ruling.linear_form * rows[b].ruling.linear_form;
                for (const auto& p : rows[c].points) f *= vertical_form(p.x, fd);
                Poly g = rows[c].ruling.linear_form;
                for (const auto& p : rows[a].points) g *= vertical_form(p.x, fd);
                int gamma = static_cast<int>(rows[c].points.size());
                int k = static_cast<int>(rows[a].points.size());
                VerifyResult vr = verify_vci(x, f, g, VerifyMode::Fast);
                if (vr.accepted) {
                    VciCertificate cert{f, g, {gamma, 2}, {k, 1}, std::move(vr.trace)};
                    v.status = VerdictStatus::Vci;
                    v.certificate = std::move(cert);
                    v.trace.push_back("three rulings: two paired rulings plus a loose ruling");
                    return v;
                }
            }
    }

    // condition (4): two rulings of equal count k and all points on a
    // (k,1)-curve
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
            if (rows[a].points.size() != rows[b].points.size()) continue;
            int c = 3 - a - b;
            int k = static_cast<int>(rows[a].points.size());
            auto kernel = form_through_points(x, {k, 1});
            if (kernel.empty()) continue;
            Poly g = rows[a].ruling.linear_form * rows[b].ruling.linear_form;
            for (const auto& p : rows[c].points) g *= vertical_form(p.x, fd);
            int gamma = static_cast<int>(rows[c].points.size());
            for (const Poly& f : combination_candidates(kernel)) {
                VerifyResult vr = verify_vci(x, f, g, VerifyMode::Fast);
                if (vr.accepted) {
                    VciCertificate cert{f, g, {k, 1}, {gamma, 2}, std::move(vr.trace)};
                    v.status = VerdictStatus::Vci;
                    v.certificate = std::move(cert);
                    v.trace.push_back("three rulings: (k,1)-curve through all points");
                    return v;
                }
            }
        }

    v.status = VerdictStatus::NotVci;
    if (auto r = any_refuter(x)) {
        v.refutation = *r;
    } else {
        Refutation tr{RefutationCriterion::ThreeRuling, gs.m, gs.n};
        tr.detail = "none of the three-ruling classification conditions hold";
        v.refutation = tr;
    }
    v.trace.push_back("three rulings: no classification condition satisfied");
    return v;
}

Refutation transpose_refutation(Refutation r) {
    std::swap(r.m, r.n);
    std::swap(r.s, r.t);
    std::swap(r.c, r.d);
    std::swap(r.residual_x, r.residual_y);
    if (r.witness_point) r.witness_point = BiProjPoint{r.witness_point->y, r.witness_point->x};
    return r;
}

VciVerdict transpose_verdict(VciVerdict v) {
    if (v.certificate) v.certificate = transpose_certificate(std::move(*v.certificate));
    if (v.refutation) v.refutation = transpose_refutation(std::move(*v.refutation));
    v.trace.push_back("classified on the transposed set");
    return v;
}

}  // namespace

VciVerdict classify_few_rulings(const PointSet& x) {
    GridStats gs = grid_stats(x);
    if (gs.rows.size() > 3 && gs.cols.size() > 3)
        throw FieldError("classify_few_rulings requires at most three rulings in one orientation");
    if (gs.rows.size() > 3) return transpose_verdict(classify_few_rulings(x.transposed()));

    if (gs.rows.size() == 1) {
        VciVerdict v;
        v.status = VerdictStatus::Vci;
        v.certificate = construct_balanced_vci(x);  // every column carries one point
        v.trace.push_back("single ruling: complete intersection");
        return v;
    }
    if (gs.rows.size() == 2) return classify_two_rows(x, gs);
    return classify_three_rows(x, gs);
}

namespace {

// Witness search when |X| < mn: f is forced to degree (m,n), g to carry
// every maximal ruling as a line component with a residual factor of
// degree (c-t, d-s). Complete up to the bounded kernel-combination scan.
VciVerdict constrained_search(const PointSet& x, const GridStats& gs,
                              std::vector<std::string> trace) {
    FieldDesc fd = x.field;
    VciVerdict v;
    v.trace = std::move(trace);

    auto kf = form_through_points(x, {gs.m, gs.n});
    if (kf.empty()) {
        Refutation r{RefutationCriterion::ForcedDegree, gs.m, gs.n};
        r.s = gs.s;
        r.t = gs.t;
        r.detail = "no form of the forced degree (" + std::to_string(gs.m) + "," +
                   std::to_string(gs.n) + ") passes through X";
        v.status = VerdictStatus::NotVci;
        v.refutation = r;
        v.trace.push_back(r.detail);
        return v;
    }

    // Forced line components of g and the points left to the residual.
    Poly forced = Poly::constant(Scalar::one(fd));
    std::set<std::string> covered;
    for (const auto& row : gs.rows)
        if (static_cast<int>(row.points.size()) == gs.m) {
            forced *= row.ruling.linear_form;
            for (const auto& p : row.points) covered.insert(p.str());
        }
    for (const auto& col : gs.cols)
        if (static_cast<int>(col.points.size()) == gs.n) {
            forced *= col.ruling.linear_form;
            for (const auto& p : col.points) covered.insert(p.str());
        }
    std::vector<BiProjPoint> residual_pts;
    for (const auto& p : x.points)
        if (!covered.count(p.str())) residual_pts.push_back(p);

    bool reached_kernel_stage = false;
    std::string failure = "no admissible degree for g";
    for (int c = 0; c * gs.n <= x.size(); ++c) {
        if ((x.size() - c * gs.n) % gs.m != 0) continue;
        int d = (x.size() - c * gs.n) / gs.m;
        if (d >= gs.n || c >= gs.m) continue;  // forced by |X| < mn
        if (d < gs.s || c < gs.t) {
            failure = "line budget: g of degree (" + std::to_string(c) + "," +
                      std::to_string(d) + ") cannot carry the forced lines";
            continue;
        }
        std::vector<Poly> kg0;
        Bidegree res_deg{c - gs.t, d - gs.s};
        if (residual_pts.empty()) {
            // No uncovered points: the residual can be any form of the
            // right degree.
            for (const auto& mo : monomial_basis(res_deg))
                kg0.push_back(Poly::term(mo, Scalar::one(fd)));
        } else {
            kg0 = form_through_points(PointSet::make(residual_pts, fd), res_deg);
        }
        if (kg0.empty()) {
            failure = "no residual form of degree (" + std::to_string(res_deg.a) + "," +
                      std::to_string(res_deg.b) + ") through the uncovered points";
            continue;
        }
        reached_kernel_stage = true;
        for (const Poly& f : combination_candidates(kf, 25))
            for (const Poly& g0 : combination_candidates(kg0, 40)) {
                Poly g = forced * g0;
                VerifyResult vr = verify_vci(x, f, g, VerifyMode::Fast);
                if (vr.accepted) {
                    VciCertificate cert{f, g, {gs.m, gs.n}, {c, d}, std::move(vr.trace)};
                    v.status = VerdictStatus::Vci;
                    v.certificate = std::move(cert);
                    v.trace.push_back("witness found at forced degrees (" + std::to_string(gs.m) +
                                      "," + std::to_string(gs.n) + ") / (" + std::to_string(c) +
                                      "," + std::to_string(d) + ")");
                    return v;
                }
            }
        failure = "kernel candidates at degree (" + std::to_string(c) + "," +
                  std::to_string(d) + ") all fail verification";
    }

    if (reached_kernel_stage) {
        v.status = VerdictStatus::CoordinateDependent;
        v.trace.push_back("forced-degree analysis: candidate spaces exist but the given "
                          "coordinates admit no verified witness");
    } else {
        v.status = VerdictStatus::NotVci;
        Refutation r{RefutationCriterion::ForcedDegree, gs.m, gs.n};
        r.s = gs.s;
        r.t = gs.t;
        r.detail = failure;
        v.refutation = r;
        v.trace.push_back(failure);
    }
    return v;
}

// Heuristic bounded-degree search for the |X| >= mn regime. Sound but
// incomplete: it never reports NOT_VCI.
VciVerdict heuristic_search(const PointSet& x, const GridStats& gs,
                            std::vector<std::string> trace, int degree_cap = 8) {
    VciVerdict v;
    v.trace = std::move(trace);
    bool coordinate_sensitive = false;

    for (int a = 0; a <= degree_cap; ++a)
        for (int b = 0; a + b <= degree_cap; ++b) {
            if (a == 0 && b == 0) continue;
            for (int c = a; c <= degree_cap; ++c)
                for (int d = 0; c + d <= degree_cap; ++d) {
                    if (c == 0 && d == 0) continue;
                    if (c == a && d < b) continue;  // unordered pairs once
                    if (a * d + b * c != x.size()) continue;
                    if (std::max(a, c) < gs.m || std::max(b, d) < gs.n) continue;

                    auto kf = form_through_points(x, {a, b});
                    auto kg = form_through_points(x, {c, d});
                    int dim_f = (a + 1) * (b + 1), dim_g = (c + 1) * (d + 1);
                    if (kf.empty() || kg.empty()) {
                        // A kernel that is empty here but would be nonzero
                        // for special coordinates marks the degree pair as
                        // coordinate dependent.
                        if ((kf.empty() && dim_f <= x.size()) ||
                            (kg.empty() && dim_g <= x.size())) {
                            coordinate_sensitive = true;
                            v.trace.push_back("degrees (" + std::to_string(a) + "," +
                                              std::to_string(b) + ")/(" + std::to_string(c) + "," +
                                              std::to_string(d) +
                                              "): a form through X of the forced degree exists "
                                              "only for special coordinates");
                        }
                        continue;
                    }
                    for (const Poly& f : combination_candidates(kf, 25))
                        for (const Poly& g : combination_candidates(kg, 40)) {
                            VerifyResult vr = verify_vci(x, f, g, VerifyMode::Fast);
                            if (vr.accepted) {
                                VciCertificate cert{f, g, {a, b}, {c, d}, std::move(vr.trace)};
                                v.status = VerdictStatus::Vci;
                                v.certificate = std::move(cert);
                                v.trace.push_back("witness found at degrees (" +
                                                  std::to_string(a) + "," + std::to_string(b) +
                                                  ")/(" + std::to_string(c) + "," +
                                                  std::to_string(d) + ")");
                                return v;
                            }
                        }
                    coordinate_sensitive = true;
                    v.trace.push_back("degrees (" + std::to_string(a) + "," + std::to_string(b) +
                                      ")/(" + std::to_string(c) + "," + std::to_string(d) +
                                      "): candidate spaces nonzero but no verified witness");
                }
        }

    v.status = coordinate_sensitive ? VerdictStatus::CoordinateDependent
                                    : VerdictStatus::Undecided;
    v.trace.push_back(coordinate_sensitive
                          ? "no witness up to the degree cap; the obstruction is coordinate "
                            "dependent"
                          : "no witness up to the degree cap");
    return v;
}

}  // namespace

VciVerdict analyze(const PointSet& x) {
    GridStats gs = grid_stats(x);
    std::vector<std::string> trace;

    if (balanced_groups(gs.cols) || balanced_groups(gs.rows)) {
        VciVerdict v;
        v.status = VerdictStatus::Vci;
        v.certificate = construct_balanced_vci(x);
        v.trace.push_back("balanced rulings: constructive witness");
        return v;
    }
    trace.push_back("not balanced in either orientation");

    if (gs.rows.size() <= 3 || gs.cols.size() <= 3) {
        VciVerdict v = classify_few_rulings(x);
        v.trace.insert(v.trace.begin(), trace.begin(), trace.end());
        return v;
    }
    trace.push_back("more than three rulings in both orientations");

    Configuration cfg = configuration_of(x);
    if (cfg.is_ferrers()) {
        VciVerdict v = classify_ferrers(x);
        v.trace.insert(v.trace.begin(), trace.begin(), trace.end());
        return v;
    }
    trace.push_back("not a Ferrers configuration");

    if (x.size() < gs.m * gs.n) {
        if (auto r = any_refuter(x)) {
            VciVerdict v;
            v.status = VerdictStatus::NotVci;
            v.refutation = *r;
            v.trace = trace;
            v.trace.push_back("refuted: " + criterion_name(r->criterion) + " (" + r->detail + ")");
            return v;
        }
        trace.push_back("no combinatorial refuter fires; forced-degree search");
        return constrained_search(x, gs, std::move(trace));
    }
    trace.push_back("|X| >= mn: bounded heuristic search");
    return heuristic_search(x, gs, std::move(trace));
}

}  // namespace vci
