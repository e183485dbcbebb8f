#pragma once

#include <vector>

#include "vci/bipoly.hpp"

namespace vci {

struct MonomialOrder {
    enum class Kind { GradedReverseLex, ElimAux } kind = Kind::GradedReverseLex;
    // Both kinds share the global comparator: the auxiliary variable is a
    // leading block, and aux-free monomials are compared grevlex.
    int compare(const Monomial& a, const Monomial& b) const { return mono_cmp(a, b); }
};

struct Ideal {
    std::vector<Poly> generators;  // nonzero, deduplicated
    FieldDesc field;

    static Ideal make(std::vector<Poly> gens, FieldDesc fd);
};

struct GroebnerBasis {
    std::vector<Poly> basis;  // monic, sorted descending by leading monomial
    MonomialOrder order;
    bool reduced = false;
    FieldDesc field;
};

// Normal form of f modulo the basis (full reduction of every term).
Poly normal_form(const Poly& f, const std::vector<Poly>& basis);

// Reduced Groebner basis via Buchberger with the normal pair-selection
// strategy; deterministic.
GroebnerBasis buchberger(const Ideal& ideal, MonomialOrder order = {});

bool ideal_member(const Poly& f, const GroebnerBasis& gb);
bool ideal_equal(const Ideal& lhs, const Ideal& rhs);

// I ∩ J via the auxiliary-variable construction t·I + (1−t)·J.
Ideal intersect(const Ideal& lhs, const Ideal& rhs);

// I : f^∞ via t·f − 1 and elimination of t.
Ideal saturate_single(const Ideal& ideal, const Poly& f);

// I : J^∞ as the intersection of single-generator saturations.
Ideal saturate(const Ideal& ideal, const Ideal& by);

// I : B^∞ with B = <x0,x1> ∩ <y0,y1>.
Ideal saturate_by_irrelevant(const Ideal& ideal);

// dim_k (S/I)_(a,b), counting standard monomials.
int hilbert_value(const Ideal& ideal, Bidegree deg);

}  // namespace vci
