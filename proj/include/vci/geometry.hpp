#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vci/bipoly.hpp"
#include "vci/groebner.hpp"

namespace vci {

// Point of P^1 with a canonical representative: [alpha:1] when the second
// coordinate is nonzero, [1:0] otherwise.
struct ProjPoint {
    Scalar c0, c1;

    static ProjPoint make(Scalar a, Scalar b);  // canonicalizes
    static ProjPoint finite(Scalar alpha);      // [alpha:1]
    static ProjPoint infinity(FieldDesc fd);    // [1:0]

    bool is_infinity() const { return c1.is_zero(); }
    bool operator==(const ProjPoint& o) const { return c0 == o.c0 && c1 == o.c1; }
    // Deterministic order: finite points by coordinate, then [1:0].
    static int cmp(const ProjPoint& a, const ProjPoint& b);
    std::string str() const;
};

struct BiProjPoint {
    ProjPoint x, y;
    bool operator==(const BiProjPoint&) const = default;
    static int cmp(const BiProjPoint& a, const BiProjPoint& b);
    std::string str() const;
};

struct Ruling {
    enum class Axis { Vertical, Horizontal };  // vertical fixes x, horizontal fixes y
    Axis axis = Axis::Vertical;
    ProjPoint coordinate;
    Poly linear_form;  // (1,0)-form for vertical, (0,1)-form for horizontal

    static Ruling through(Axis axis, const ProjPoint& coord, FieldDesc fd);
};

// Finite reduced set of points; duplicates are rejected.
struct PointSet {
    std::vector<BiProjPoint> points;
    FieldDesc field;

    static PointSet make(std::vector<BiProjPoint> pts, FieldDesc fd);
    int size() const { return static_cast<int>(points.size()); }
    bool contains(const BiProjPoint& p) const;
    PointSet transposed() const;  // swap the two factors
};

struct RulingGroup {
    Ruling ruling;
    std::vector<BiProjPoint> points;
};

struct Rulings {
    std::vector<RulingGroup> vertical;    // grouped by x, deterministic order
    std::vector<RulingGroup> horizontal;  // grouped by y
};

Rulings rulings_of(const PointSet& x);

// Combinatorial grid shape in canonical form.
struct Configuration {
    std::vector<int> row_counts;  // horizontal rulings, sorted decreasing
    std::vector<int> col_counts;  // vertical rulings, sorted decreasing
    std::vector<std::vector<bool>> incidence;  // rows x cols, canonical
    int m = 0;  // max points on a horizontal ruling
    int n = 0;  // max points on a vertical ruling

    bool operator==(const Configuration&) const = default;
    bool is_ferrers() const;    // rows nested (left-justified staircase)
    bool is_rectangle() const;
    std::string id() const;     // compact canonical identifier
};

Configuration configuration_of(const PointSet& x);

// I_X as the intersection of the point ideals; B-saturated by construction.
Ideal vanishing_ideal(const PointSet& x);

struct CrossRatio {
    bool infinite = false;
    Scalar value;  // meaningful when !infinite
    bool operator==(const CrossRatio& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
};

// Cross ratio of four pairwise distinct points, with the drop rule for
// [1:0] and [0:1]. Throws on repeated points.
CrossRatio cross_ratio(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
                       const ProjPoint& p4);

// Basis of the bidegree-(a,b) forms vanishing on X (kernel of the
// evaluation matrix), each monic, deterministic order.
std::vector<Poly> form_through_points(const PointSet& x, Bidegree deg);

// Monomials of bidegree (a,b) in descending global order.
std::vector<Monomial> monomial_basis(Bidegree deg);

}  // namespace vci
