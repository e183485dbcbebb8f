#include "vci/groebner.hpp"

#include <algorithm>
#include <set>

namespace vci {

Ideal Ideal::make(std::vector<Poly> gens, FieldDesc fd) {
    Ideal out;
    out.field = fd;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        Poly m = g.monic();
        bool dup = false;
        for (const auto& h : out.generators)
            if (h == m) { dup = true; break; }
        if (!dup) out.generators.push_back(std::move(m));
    }
    return out;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& basis) {
    Poly rem(f.field());
    Poly work = f;
    while (!work.is_zero()) {
        bool reduced_step = false;
        for (const auto& g : basis) {
            if (g.leading_mono().divides(work.leading_mono())) {
                Monomial m = work.leading_mono().quotient(g.leading_mono());
                Scalar c = work.leading_coeff() / g.leading_coeff();
                work = work - Poly::term(m, c) * g;
                reduced_step = true;
                break;
            }
        }
        if (!reduced_step) {
            rem = rem + Poly::term(work.leading_mono(), work.leading_coeff());
            work = work - Poly::term(work.leading_mono(), work.leading_coeff());
        }
    }
    return rem;
}

namespace {

struct Pair {
    Monomial lcm;
    int i, j;
};

bool pair_less(const Pair& a, const Pair& b) {
    int c = mono_cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

Poly spoly(const Poly& f, const Poly& g) {
    Monomial l = Monomial::lcm(f.leading_mono(), g.leading_mono());
    Poly a = Poly::term(l.quotient(f.leading_mono()),
                        Scalar::one(f.field()) / f.leading_coeff());
    Poly b = Poly::term(l.quotient(g.leading_mono()),
                        Scalar::one(g.field()) / g.leading_coeff());
    return a * f - b * g;
}

std::vector<Poly> interreduce(std::vector<Poly> basis) {
    // drop elements whose leading monomial is divisible by another's
    std::vector<Poly> kept;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            if (basis[j].leading_mono().divides(basis[i].leading_mono())) {
                if (!(basis[i].leading_mono() == basis[j].leading_mono()) || j < i) {
                    redundant = true;
                    break;
                }
            }
        }
        if (!redundant) kept.push_back(basis[i]);
    }
    // tail-reduce each element against the others
    std::vector<Poly> out;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        Poly r = normal_form(kept[i], others);
        if (!r.is_zero()) out.push_back(r.monic());
    }
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
        return mono_cmp(a.leading_mono(), b.leading_mono()) > 0;
    });
    return out;
}

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, MonomialOrder order) {
    std::vector<Poly> basis;
    for (const auto& g : ideal.generators)
        if (!g.is_zero()) basis.push_back(g.monic());

    std::set<Pair, decltype(&pair_less)> pairs(&pair_less);
    auto add_pairs = [&](int k) {
        for (int i = 0; i < k; ++i) {
            pairs.insert({Monomial::lcm(basis[i].leading_mono(), basis[k].leading_mono()), i, k});
        }
    };
    for (int k = 1; k < static_cast<int>(basis.size()); ++k) add_pairs(k);

    while (!pairs.empty()) {
        Pair p = *pairs.begin();
        pairs.erase(pairs.begin());
        const Poly& f = basis[p.i];
        const Poly& g = basis[p.j];
        // Buchberger's coprimality criterion
        if (f.leading_mono().coprime(g.leading_mono())) continue;
        // chain criterion
        bool chained = false;
        for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
            if (k == p.i || k == p.j) continue;
            if (!basis[k].leading_mono().divides(p.lcm)) continue;
            Pair pik{Monomial::lcm(f.leading_mono(), basis[k].leading_mono()),
                     std::min(p.i, k), std::max(p.i, k)};
            Pair pjk{Monomial::lcm(g.leading_mono(), basis[k].leading_mono()),
                     std::min(p.j, k), std::max(p.j, k)};
            if (!pairs.count(pik) && !pairs.count(pjk)) { chained = true; break; }
        }
        if (chained) continue;

        Poly r = normal_form(spoly(f, g), basis);
        if (!r.is_zero()) {
            basis.push_back(r.monic());
            add_pairs(static_cast<int>(basis.size()) - 1);
        }
    }

    GroebnerBasis gb;
    gb.basis = interreduce(std::move(basis));
    gb.order = order;
    gb.reduced = true;
    gb.field = ideal.field;
    return gb;
}

bool ideal_member(const Poly& f, const GroebnerBasis& gb) {
    return normal_form(f, gb.basis).is_zero();
}

bool ideal_equal(const Ideal& lhs, const Ideal& rhs) {
    if (!(lhs.field == rhs.field)) return false;
    GroebnerBasis a = buchberger(lhs);
    GroebnerBasis b = buchberger(rhs);
    if (a.basis.size() != b.basis.size()) return false;
    for (std::size_t i = 0; i < a.basis.size(); ++i)
        if (a.basis[i] != b.basis[i]) return false;
    return true;
}

namespace {

// Basis elements free of the auxiliary variable, i.e. the elimination ideal.
Ideal eliminate_aux(const Ideal& ideal) {
    GroebnerBasis gb = buchberger(ideal, {MonomialOrder::Kind::ElimAux});
    std::vector<Poly> kept;
    for (const auto& g : gb.basis)
        if (!g.has_aux()) kept.push_back(g);
    return Ideal::make(std::move(kept), ideal.field);
}

}  // namespace

Ideal intersect(const Ideal& lhs, const Ideal& rhs) {
    FieldDesc fd = lhs.field;
    Poly t = Poly::variable(Monomial::kAux, fd);
    Poly one_minus_t = Poly::constant(Scalar::one(fd)) - t;
    std::vector<Poly> gens;
    for (const auto& f : lhs.generators) gens.push_back(t * f);
    for (const auto& g : rhs.generators) gens.push_back(one_minus_t * g);
    return eliminate_aux(Ideal::make(std::move(gens), fd));
}

Ideal saturate_single(const Ideal& ideal, const Poly& f) {
    FieldDesc fd = ideal.field;
    Poly t = Poly::variable(Monomial::kAux, fd);
    std::vector<Poly> gens = ideal.generators;
    gens.push_back(t * f - Poly::constant(Scalar::one(fd)));
    return eliminate_aux(Ideal::make(std::move(gens), fd));
}

Ideal saturate(const Ideal& ideal, const Ideal& by) {
    if (by.generators.empty()) throw FieldError("saturate: zero ideal");
    bool first = true;
    Ideal acc;
    for (const auto& g : by.generators) {
        Ideal s = saturate_single(ideal, g);
        acc = first ? std::move(s) : intersect(acc, s);
        first = false;
    }
    return acc;
}

Ideal saturate_by_irrelevant(const Ideal& ideal) {
    FieldDesc fd = ideal.field;
    auto var_ideal = [&](int v0, int v1) {
        return Ideal::make({Poly::variable(v0, fd), Poly::variable(v1, fd)}, fd);
    };
    Ideal sx = saturate(ideal, var_ideal(Monomial::kX0, Monomial::kX1));
    return saturate(sx, var_ideal(Monomial::kY0, Monomial::kY1));
}

int hilbert_value(const Ideal& ideal, Bidegree deg) {
    GroebnerBasis gb = buchberger(ideal);
    int count = 0;
    for (int i = 0; i <= deg.a; ++i) {
        for (int j = 0; j <= deg.b; ++j) {
            Monomial m;
            m.e[Monomial::kX0] = i;
            m.e[Monomial::kX1] = deg.a - i;
            m.e[Monomial::kY0] = j;
            m.e[Monomial::kY1] = deg.b - j;
            bool standard = true;
            for (const auto& g : gb.basis) {
                if (g.leading_mono().divides(m)) { standard = false; break; }
            }
            if (standard) ++count;
        }
    }
    return count;
}

}  // namespace vci
