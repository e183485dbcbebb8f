#include "vci/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace vci {

namespace {

// Coordinate index of a monomial inside the descending basis of (a,b).
// monomial_basis is deterministic, so a map lookup is enough.
std::map<std::array<int, 5>, int> index_of(const std::vector<Monomial>& basis) {
    std::map<std::array<int, 5>, int> idx;
    for (std::size_t i = 0; i < basis.size(); ++i) idx[basis[i].e] = static_cast<int>(i);
    return idx;
}

Vec poly_to_vec(const Poly& f, const std::map<std::array<int, 5>, int>& idx, int ncols,
                FieldDesc fd) {
    Vec v(ncols, Scalar::zero(fd));
    for (const auto& t : f.terms()) {
        auto it = idx.find(t.mono.e);
        if (it == idx.end()) throw FieldError("polynomial outside the graded piece");
        v[it->second] = t.coeff;
    }
    return v;
}

std::vector<Monomial> irrelevant_gens() {
    using M = Monomial;
    return {M::var(M::kX0) * M::var(M::kY0), M::var(M::kX0) * M::var(M::kY1),
            M::var(M::kX1) * M::var(M::kY0), M::var(M::kX1) * M::var(M::kY1)};
}

}  // namespace

SaturationTable::SaturationTable(const Ideal& ideal, int amax, int bmax)
    : fd_(ideal.field), amax_(amax), bmax_(bmax) {
    sat_.assign(amax + 1, std::vector<Piece>(bmax + 1));
    idim_.assign(amax + 1, std::vector<int>(bmax + 1, 0));

    // Seed with the graded pieces of the ideal itself.
    for (int a = 0; a <= amax; ++a) {
        for (int b = 0; b <= bmax; ++b) {
            auto basis = monomial_basis({a, b});
            auto idx = index_of(basis);
            int ncols = static_cast<int>(basis.size());
            Mat rows;
            for (const Poly& gen : ideal.generators) {
                auto bd = gen.bidegree();
                if (!bd || bd->a > a || bd->b > b) continue;
                for (const Monomial& shift : monomial_basis({a - bd->a, b - bd->b}))
                    rows.push_back(
                        poly_to_vec(gen * Poly::term(shift, Scalar::one(fd_)), idx, ncols, fd_));
            }
            sat_[a][b].pivots = rref(rows);
            sat_[a][b].rows = std::move(rows);
            idim_[a][b] = static_cast<int>(sat_[a][b].pivots.size());
        }
    }

    // Backward fixpoint: a form of degree (a,b) belongs to the saturation
    // as soon as its four products with the irrelevant generators lie one
    // bidegree higher. Sweep until the dimensions stabilize.
    auto bgens = irrelevant_gens();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = amax - 1; a >= 0; --a) {
            for (int b = bmax - 1; b >= 0; --b) {
                auto lo = monomial_basis({a, b});
                auto hi = monomial_basis({a + 1, b + 1});
                auto hi_idx = index_of(hi);
                int nlo = static_cast<int>(lo.size());
                int nhi = static_cast<int>(hi.size());
                const Piece& up = sat_[a + 1][b + 1];

                // Equations: for each irrelevant generator t and each hi
                // coordinate, the residual of v * t mod the upper piece.
                Mat residual_cols;  // one column (as Vec of 4*nhi) per lo monomial
                residual_cols.reserve(nlo);
                for (int j = 0; j < nlo; ++j) {
                    Vec col;
                    col.reserve(4 * static_cast<std::size_t>(nhi));
                    for (const Monomial& t : bgens) {
                        Vec unit(nhi, Scalar::zero(fd_));
                        unit[hi_idx.at((lo[j] * t).e)] = Scalar::one(fd_);
                        Vec res = reduce_by(up.rows, up.pivots, std::move(unit));
                        col.insert(col.end(), res.begin(), res.end());
                    }
                    residual_cols.push_back(std::move(col));
                }
                Mat eqs(4 * static_cast<std::size_t>(nhi), Vec(nlo, Scalar::zero(fd_)));
                for (int j = 0; j < nlo; ++j)
                    for (std::size_t r = 0; r < eqs.size(); ++r) eqs[r][j] = residual_cols[j][r];

                Mat ker = kernel_basis(std::move(eqs), nlo, fd_);
                auto pivots = rref(ker);
                if (static_cast<int>(pivots.size()) >
                    static_cast<int>(sat_[a][b].pivots.size())) {
                    sat_[a][b].rows = std::move(ker);
                    sat_[a][b].pivots = std::move(pivots);
                    changed = true;
                }
            }
        }
    }
}

const SaturationTable::Piece& SaturationTable::piece(int a, int b) const {
    if (a < 0 || b < 0 || a > amax_ || b > bmax_)
        throw FieldError("bidegree outside the saturation table box");
    return sat_[a][b];
}

int SaturationTable::ideal_dim(int a, int b) const {
    piece(a, b);
    return idim_[a][b];
}

int SaturationTable::saturation_dim(int a, int b) const {
    return static_cast<int>(piece(a, b).pivots.size());
}

int SaturationTable::quotient_dim(int a, int b) const {
    return (a + 1) * (b + 1) - saturation_dim(a, b);
}

bool SaturationTable::contains(const Poly& f) const {
    if (f.is_zero()) return true;
    auto bd = f.bidegree();
    if (!bd) throw FieldError("membership requires a bihomogeneous polynomial");
    const Piece& p = piece(bd->a, bd->b);
    auto basis = monomial_basis(*bd);
    auto idx = index_of(basis);
    return in_row_span(p.rows, p.pivots,
                       poly_to_vec(f, idx, static_cast<int>(basis.size()), fd_));
}

std::string outcome_name(SearchOutcome o) {
    switch (o) {
        case SearchOutcome::Found: return "FOUND";
        case SearchOutcome::Exhausted: return "EXHAUSTED";
        case SearchOutcome::Capped: return "CAPPED";
    }
    return "?";
}

namespace {

Poly kernel_fixed_divisor(const std::vector<Poly>& basis) {
    Poly g = basis.front();
    for (std::size_t i = 1; i < basis.size() && !g.is_constant(); ++i)
        g = poly_gcd(g, basis[i]);
    return g;
}

// Deterministic bounded enumeration of monic kernel combinations:
// singles, then weighted pairs, then weighted triples.
std::vector<Poly> combos(const std::vector<Poly>& basis, int limit, FieldDesc fd) {
    std::vector<Poly> out;
    auto push = [&](Poly p) {
        if (!p.is_zero() && static_cast<int>(out.size()) < limit) out.push_back(p.monic());
    };
    for (const auto& b : basis) push(b);
    std::vector<long> weights = {1, -1, 2, -2, 3};
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            for (long w : weights) push(basis[i] + basis[j] * Scalar::from_int(w, fd));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            for (std::size_t k = j + 1; k < basis.size(); ++k)
                for (long w1 : {1, -1, 2})
                    for (long w2 : {1, -1, 2})
                        push(basis[i] + basis[j] * Scalar::from_int(w1, fd) +
                             basis[k] * Scalar::from_int(w2, fd));
    return out;
}

}  // namespace

WitnessSearchResult exhaustive_witness_search(const PointSet& x, int combo_limit) {
    WitnessSearchResult res;
    FieldDesc fd = x.field;
    Configuration cfg = configuration_of(x);
    const int m = cfg.m, n = cfg.n, sz = x.size();

    // Admissible degree pairs. Below the grid bound the first form is
    // forced to degree (m,n) and the second to (c,d) with d*m + c*n = |X|,
    // c < m, d < n. Otherwise fall back to a total-degree cap.
    std::vector<std::pair<Bidegree, Bidegree>> pairs;
    if (sz < m * n) {
        for (int c = 0; c < m; ++c) {
            if ((sz - c * n) % m != 0) continue;
            int d = (sz - c * n) / m;
            if (d < 0 || d >= n) continue;
            pairs.push_back({{m, n}, {c, d}});
        }
    } else {
        const int cap = 8;
        for (int a = 0; a <= cap; ++a)
            for (int b = 0; a + b <= cap; ++b)
                for (int c = a; c <= cap; ++c)
                    for (int d = 0; c + d <= cap; ++d) {
                        if (c == a && d < b) continue;
                        if (a * d + b * c != sz) continue;
                        if (std::max(a, c) < m || std::max(b, d) < n) continue;
                        pairs.push_back({{a, b}, {c, d}});
                    }
    }

    bool all_sound = true;
    for (auto [fdg, gdg] : pairs) {
        ++res.pairs_examined;
        auto kf = form_through_points(x, fdg);
        auto kg = form_through_points(x, gdg);
        if (kf.empty() || kg.empty()) {
            res.notes.push_back("degree pair excluded: empty kernel");
            continue;  // kernel dimension is field-extension invariant
        }
        Poly hf = kernel_fixed_divisor(kf);
        Poly hg = kernel_fixed_divisor(kg);
        if (!poly_gcd(hf, hg).is_constant()) {
            res.notes.push_back("degree pair excluded: shared fixed divisor");
            continue;
        }
        all_sound = false;
        auto cf = combos(kf, combo_limit / 8 + 1, fd);
        auto cg = combos(kg, combo_limit, fd);
        for (const auto& f : cf) {
            for (const auto& g : cg) {
                ++res.candidates_tried;
                if (verify_vci(x, f, g, VerifyMode::Fast).accepted) {
                    res.outcome = SearchOutcome::Found;
                    res.certificate = VciCertificate{f, g, fdg, gdg, {}};
                    return res;
                }
            }
        }
    }
    res.outcome = all_sound ? SearchOutcome::Exhausted : SearchOutcome::Capped;
    return res;
}

}  // namespace vci
