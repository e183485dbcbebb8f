#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vci/field.hpp"

namespace vci {

// Exponent vector in k[t, x0, x1, y0, y1]. Slot 0 is the auxiliary
// elimination variable and is zero for every polynomial of the Cox ring.
struct Monomial {
    std::array<int, 5> e{};

    static constexpr int kAux = 0;
    static constexpr int kX0 = 1, kX1 = 2, kY0 = 3, kY1 = 4;

    static Monomial unit() { return {}; }
    static Monomial var(int i, int exp = 1) {
        Monomial m;
        m.e[i] = exp;
        return m;
    }

    int xdeg() const { return e[kX0] + e[kX1]; }
    int ydeg() const { return e[kY0] + e[kY1]; }
    int total() const { return e[0] + e[1] + e[2] + e[3] + e[4]; }

    Monomial operator*(const Monomial& o) const {
        Monomial m;
        for (int i = 0; i < 5; ++i) m.e[i] = e[i] + o.e[i];
        return m;
    }
    bool divides(const Monomial& o) const {
        for (int i = 0; i < 5; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    Monomial quotient(const Monomial& o) const {  // *this / o
        Monomial m;
        for (int i = 0; i < 5; ++i) m.e[i] = e[i] - o.e[i];
        return m;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial m;
        for (int i = 0; i < 5; ++i) m.e[i] = std::max(a.e[i], b.e[i]);
        return m;
    }
    bool coprime(const Monomial& o) const {
        for (int i = 0; i < 5; ++i)
            if (e[i] > 0 && o.e[i] > 0) return false;
        return true;
    }
    bool operator==(const Monomial&) const = default;
};

// Global term order: the auxiliary variable dominates (block elimination),
// then graded reverse lexicographic with x0 > x1 > y0 > y1.
// Returns <0, 0, >0 as a <, ==, > b.
int mono_cmp(const Monomial& a, const Monomial& b);

struct Term {
    Monomial mono;
    Scalar coeff;
};

struct Bidegree {
    int a = 0, b = 0;
    bool operator==(const Bidegree&) const = default;
};

class Poly;
struct ProjPoint;
struct BiProjPoint;
struct Ruling;

// Homogeneous form in one coordinate pair; coeffs[i] multiplies
// u0^(deg-i) * u1^i where (u0,u1) is (x0,x1) or (y0,y1).
struct BinaryForm {
    enum class Pair { X, Y };
    Pair pair = Pair::X;
    std::vector<Scalar> coeffs;  // size deg+1; empty means the zero form

    bool is_zero() const;
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    FieldDesc field() const;
    Scalar evaluate(const ProjPoint& p) const;
    Poly to_poly() const;
};

struct BinaryRoot {
    // Projective root as canonical [alpha:1] or [1:0]; see geometry.hpp.
    Scalar coord0, coord1;
    int multiplicity = 0;
};

struct BinaryRootResult {
    std::vector<BinaryRoot> roots;
    int residual_degree = 0;  // degree of the non-split factor over the field
};

// Sparse polynomial over an exact field, terms kept sorted descending
// under the global order, coefficients nonzero.
class Poly {
  public:
    Poly() = default;
    explicit Poly(FieldDesc fd) : fd_(fd) {}

    static Poly zero(FieldDesc fd) { return Poly(fd); }
    static Poly constant(Scalar c);
    static Poly term(Monomial m, Scalar c);
    static Poly variable(int i, FieldDesc fd);
    // Sums an arbitrary term list (merges duplicates, drops zeros).
    static Poly from_terms(std::vector<Term> ts, FieldDesc fd);

    FieldDesc field() const { return fd_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.size() == 1 && terms_[0].mono == Monomial::unit(); }
    bool is_unit() const { return is_constant() && !terms_[0].coeff.is_zero(); }
    std::size_t size() const { return terms_.size(); }

    const Term& leading() const;
    const Monomial& leading_mono() const { return leading().mono; }
    const Scalar& leading_coeff() const { return leading().coeff; }

    bool has_aux() const;
    bool is_bihomogeneous() const;  // single bidegree, no aux variable
    std::optional<Bidegree> bidegree() const;  // nullopt for 0 or inhomogeneous

    int deg_in(int var) const;
    // Coefficient of var^k, with the var exponent removed.
    Poly coeff_of(int var, int k) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Scalar& c) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    // Leading coefficient scaled to 1.
    Poly monic() const;

    Scalar evaluate(const BiProjPoint& p) const;
    // Substitute the given coordinate pair with fixed scalars.
    Poly substitute_pair(BinaryForm::Pair pair, const Scalar& c0, const Scalar& c1) const;

    std::string str() const;  // "24*x1^2*y0^2 - ..." under the global order

  private:
    FieldDesc fd_;
    std::vector<Term> terms_;
};

// Adding bihomogeneous polynomials of different bidegrees is an error;
// this checks and then adds.
Poly bihom_add(const Poly& f, const Poly& g);

// Exact quotient f/g, or nullopt when g does not divide f.
std::optional<Poly> exact_divide(const Poly& f, const Poly& g);

// Content/primitive-part recursion with a primitive pseudo-remainder
// sequence; result is monic under the global order.
Poly poly_gcd(const Poly& f, const Poly& g);

// Substitutes the ruling's fixed coordinate pair, leaving a form in the
// free pair. Identically zero iff the ruling's linear form divides f.
BinaryForm restrict_to_ruling(const Poly& f, const Ruling& ruling);

// All projective roots over the coefficient field with multiplicities,
// plus the degree of the residual non-split factor.
BinaryRootResult binary_roots(const BinaryForm& q);

}  // namespace vci
