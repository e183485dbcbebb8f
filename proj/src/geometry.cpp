#include "vci/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "vci/linalg.hpp"

namespace vci {

ProjPoint ProjPoint::make(Scalar a, Scalar b) {
    if (!b.is_zero()) return ProjPoint{a / b, Scalar::one(b.field())};
    if (a.is_zero()) throw FieldError("projective point [0:0]");
    return ProjPoint{Scalar::one(a.field()), Scalar::zero(a.field())};
}

ProjPoint ProjPoint::finite(Scalar alpha) {
    FieldDesc fd = alpha.field();
    return ProjPoint{std::move(alpha), Scalar::one(fd)};
}

ProjPoint ProjPoint::infinity(FieldDesc fd) {
    return ProjPoint{Scalar::one(fd), Scalar::zero(fd)};
}

int ProjPoint::cmp(const ProjPoint& a, const ProjPoint& b) {
    if (a.is_infinity() && b.is_infinity()) return 0;
    if (a.is_infinity()) return 1;
    if (b.is_infinity()) return -1;
    return Scalar::cmp(a.c0, b.c0);
}

std::string ProjPoint::str() const {
    return "[" + c0.str() + ":" + c1.str() + "]";
}

int BiProjPoint::cmp(const BiProjPoint& a, const BiProjPoint& b) {
    int c = ProjPoint::cmp(a.x, b.x);
    if (c != 0) return c;
    return ProjPoint::cmp(a.y, b.y);
}

std::string BiProjPoint::str() const { return "(" + x.str() + "," + y.str() + ")"; }

Ruling Ruling::through(Axis axis, const ProjPoint& coord, FieldDesc fd) {
    Ruling r;
    r.axis = axis;
    r.coordinate = coord;
    int v0 = axis == Axis::Vertical ? Monomial::kX0 : Monomial::kY0;
    // form c1*u0 - c0*u1 vanishes exactly at [c0:c1]
    Poly form = Poly::term(Monomial::var(v0), coord.c1) -
                Poly::term(Monomial::var(v0 + 1), coord.c0);
    r.linear_form = form.monic();
    (void)fd;
    return r;
}

PointSet PointSet::make(std::vector<BiProjPoint> pts, FieldDesc fd) {
    std::sort(pts.begin(), pts.end(),
              [](const BiProjPoint& a, const BiProjPoint& b) { return BiProjPoint::cmp(a, b) < 0; });
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (pts[i] == pts[i - 1])
            throw FieldError("duplicate point in point set: " + pts[i].str());
    return PointSet{std::move(pts), fd};
}

bool PointSet::contains(const BiProjPoint& p) const {
    return std::any_of(points.begin(), points.end(),
                       [&](const BiProjPoint& q) { return q == p; });
}

PointSet PointSet::transposed() const {
    std::vector<BiProjPoint> pts;
    pts.reserve(points.size());
    for (const auto& p : points) pts.push_back({p.y, p.x});
    return PointSet::make(std::move(pts), field);
}

Rulings rulings_of(const PointSet& x) {
    Rulings out;
    auto group = [&](bool vertical) {
        std::vector<RulingGroup> groups;
        for (const auto& p : x.points) {
            const ProjPoint& key = vertical ? p.x : p.y;
            auto it = std::find_if(groups.begin(), groups.end(), [&](const RulingGroup& g) {
                return g.ruling.coordinate == key;
            });
            if (it == groups.end()) {
                groups.push_back({Ruling::through(vertical ? Ruling::Axis::Vertical
                                                           : Ruling::Axis::Horizontal,
                                                  key, x.field),
                                  {p}});
            } else {
                it->points.push_back(p);
            }
        }
        std::sort(groups.begin(), groups.end(), [](const RulingGroup& a, const RulingGroup& b) {
            return ProjPoint::cmp(a.ruling.coordinate, b.ruling.coordinate) < 0;
        });
        return groups;
    };
    out.vertical = group(true);
    out.horizontal = group(false);
    return out;
}

namespace {

bool matrix_less(const std::vector<std::vector<bool>>& a, const std::vector<std::vector<bool>>& b) {
    return a < b;
}

}  // namespace

Configuration configuration_of(const PointSet& x) {
    if (x.points.empty()) throw FieldError("configuration of empty point set");
    Rulings rl = rulings_of(x);
    int nrows = static_cast<int>(rl.horizontal.size());
    int ncols = static_cast<int>(rl.vertical.size());

    std::vector<std::vector<bool>> inc(nrows, std::vector<bool>(ncols, false));
    for (int i = 0; i < nrows; ++i)
        for (const auto& p : rl.horizontal[i].points)
            for (int j = 0; j < ncols; ++j)
                if (rl.vertical[j].ruling.coordinate == p.x) inc[i][j] = true;

    std::vector<int> row_count(nrows), col_count(ncols);
    for (int i = 0; i < nrows; ++i)
        row_count[i] = static_cast<int>(std::count(inc[i].begin(), inc[i].end(), true));
    for (int j = 0; j < ncols; ++j)
        for (int i = 0; i < nrows; ++i) col_count[j] += inc[i][j] ? 1 : 0;

    // order rows by decreasing count; enumerate permutations within ties
    std::vector<int> row_order(nrows);
    std::iota(row_order.begin(), row_order.end(), 0);
    std::sort(row_order.begin(), row_order.end(),
              [&](int a, int b) { return row_count[a] > row_count[b]; });

    auto columns_for = [&](const std::vector<int>& rord) {
        // column keys: (count desc, bit pattern under row order desc)
        std::vector<int> cord(ncols);
        std::iota(cord.begin(), cord.end(), 0);
        auto col_bits = [&](int j) {
            std::vector<bool> bits(nrows);
            for (int i = 0; i < nrows; ++i) bits[i] = inc[rord[i]][j];
            return bits;
        };
        std::sort(cord.begin(), cord.end(), [&](int a, int b) {
            if (col_count[a] != col_count[b]) return col_count[a] > col_count[b];
            return col_bits(a) > col_bits(b);
        });
        std::vector<std::vector<bool>> m(nrows, std::vector<bool>(ncols));
        for (int i = 0; i < nrows; ++i)
            for (int j = 0; j < ncols; ++j) m[i][j] = inc[rord[i]][cord[j]];
        return m;
    };

    // permutations within equal-count row classes, capped
    std::vector<std::vector<bool>> best;
    long budget = 50000;
    std::vector<int> rord = row_order;
    // group boundaries
    std::vector<std::pair<int, int>> classes;
    for (int i = 0; i < nrows;) {
        int j = i;
        while (j < nrows && row_count[row_order[j]] == row_count[row_order[i]]) ++j;
        classes.push_back({i, j});
        i = j;
    }
    // iterative permutation over classes via odometer on next_permutation
    std::vector<std::vector<int>> class_perms;
    long total = 1;
    for (auto [lo, hi] : classes) {
        long f = 1;
        for (int k = 2; k <= hi - lo; ++k) f *= k;
        total *= f;
        if (total > budget) break;
    }
    if (total <= budget) {
        // enumerate the product of class permutations recursively
        std::vector<int> cur = row_order;
        auto rec = [&](auto&& self, std::size_t ci) -> void {
            if (ci == classes.size()) {
                auto m = columns_for(cur);
                if (best.empty() || matrix_less(best, m)) best = std::move(m);
                return;
            }
            auto [lo, hi] = classes[ci];
            std::vector<int> seg(cur.begin() + lo, cur.begin() + hi);
            std::sort(seg.begin(), seg.end());
            do {
                std::copy(seg.begin(), seg.end(), cur.begin() + lo);
                self(self, ci + 1);
            } while (std::next_permutation(seg.begin(), seg.end()));
        };
        rec(rec, 0);
    } else {
        // fallback: refinement by (count, bit pattern) until fixpoint
        std::vector<int> cur = row_order;
        for (int pass = 0; pass < 4; ++pass) {
            auto m = columns_for(cur);
            std::vector<int> idx(nrows);
            std::iota(idx.begin(), idx.end(), 0);
            std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
                if (row_count[cur[a]] != row_count[cur[b]])
                    return row_count[cur[a]] > row_count[cur[b]];
                return m[a] > m[b];
            });
            std::vector<int> next(nrows);
            for (int i = 0; i < nrows; ++i) next[i] = cur[idx[i]];
            if (next == cur) break;
            cur = next;
        }
        best = columns_for(cur);
    }

    Configuration cfg;
    cfg.incidence = best;
    cfg.row_counts.resize(nrows);
    cfg.col_counts.assign(ncols, 0);
    for (int i = 0; i < nrows; ++i)
        cfg.row_counts[i] =
            static_cast<int>(std::count(cfg.incidence[i].begin(), cfg.incidence[i].end(), true));
    for (int j = 0; j < ncols; ++j)
        for (int i = 0; i < nrows; ++i) cfg.col_counts[j] += cfg.incidence[i][j] ? 1 : 0;
    cfg.m = *std::max_element(cfg.row_counts.begin(), cfg.row_counts.end());
    cfg.n = *std::max_element(cfg.col_counts.begin(), cfg.col_counts.end());
    return cfg;
}

bool Configuration::is_ferrers() const {
    for (std::size_t i = 0; i < incidence.size(); ++i)
        for (std::size_t j = 0; j < incidence[i].size(); ++j)
            if (incidence[i][j] != (static_cast<int>(j) < row_counts[i])) return false;
    return true;
}

bool Configuration::is_rectangle() const {
    for (const auto& row : incidence)
        for (bool b : row)
            if (!b) return false;
    return true;
}

std::string Configuration::id() const {
    std::string s;
    for (const auto& row : incidence) {
        for (bool b : row) s += b ? '1' : '0';
        s += '.';
    }
    return s;
}

Ideal vanishing_ideal(const PointSet& x) {
    if (x.points.empty()) throw FieldError("vanishing ideal of empty point set");
    FieldDesc fd = x.field;
    std::vector<Ideal> layer;
    for (const auto& p : x.points) {
        Poly lx = Ruling::through(Ruling::Axis::Vertical, p.x, fd).linear_form;
        Poly ly = Ruling::through(Ruling::Axis::Horizontal, p.y, fd).linear_form;
        layer.push_back(Ideal::make({lx, ly}, fd));
    }
    // balanced binary intersection keeps intermediate ideals small
    while (layer.size() > 1) {
        std::vector<Ideal> next;
        for (std::size_t i = 0; i + 1 < layer.size(); i += 2)
            next.push_back(intersect(layer[i], layer[i + 1]));
        if (layer.size() % 2) next.push_back(layer.back());
        layer = std::move(next);
    }
    return layer[0];
}

CrossRatio cross_ratio(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
                       const ProjPoint& p4) {
    const ProjPoint* pts[4] = {&p1, &p2, &p3, &p4};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (*pts[i] == *pts[j]) throw FieldError("cross ratio of repeated points");
    auto det = [](const ProjPoint& u, const ProjPoint& v) {
        // (u c0)(v c1) pairing as in the displayed formula: ca' - ac'
        return u.c0 * v.c1 - v.c0 * u.c1;
    };
    Scalar num = det(p3, p1) * det(p4, p2);
    Scalar den = det(p4, p1) * det(p3, p2);
    CrossRatio out;
    if (den.is_zero()) {
        out.infinite = true;
        out.value = Scalar::zero(num.field());
    } else {
        out.value = num / den;
    }
    return out;
}

std::vector<Monomial> monomial_basis(Bidegree deg) {
    std::vector<Monomial> ms;
    for (int i = deg.a; i >= 0; --i) {
        for (int j = deg.b; j >= 0; --j) {
            Monomial m;
            m.e[Monomial::kX0] = i;
            m.e[Monomial::kX1] = deg.a - i;
            m.e[Monomial::kY0] = j;
            m.e[Monomial::kY1] = deg.b - j;
            ms.push_back(m);
        }
    }
    std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
        return mono_cmp(a, b) > 0;
    });
    return ms;
}

std::vector<Poly> form_through_points(const PointSet& x, Bidegree deg) {
    FieldDesc fd = x.field;
    auto ms = monomial_basis(deg);
    Mat rows;
    for (const auto& p : x.points) {
        Vec row;
        row.reserve(ms.size());
        for (const auto& m : ms)
            row.push_back(Poly::term(m, Scalar::one(fd)).evaluate(p));
        rows.push_back(std::move(row));
    }
    Mat ker = kernel_basis(std::move(rows), static_cast<int>(ms.size()), fd);
    std::vector<Poly> out;
    for (const auto& v : ker) {
        std::vector<Term> ts;
        for (std::size_t k = 0; k < ms.size(); ++k)
            if (!v[k].is_zero()) ts.push_back({ms[k], v[k]});
        out.push_back(Poly::from_terms(std::move(ts), fd).monic());
    }
    return out;
}

}  // namespace vci
