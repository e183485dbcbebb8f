#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vci/geometry.hpp"

namespace vci {

// ad + bc for forms of bidegrees (a,b) and (c,d): the length of their
// intersection scheme when they share no component.
int bezout_count(Bidegree f_deg, Bidegree g_deg);

struct BezoutData {
    Bidegree f_deg, g_deg;
    int count = 0;

    static BezoutData of(Bidegree f, Bidegree g) { return {f, g, bezout_count(f, g)}; }
};

// Twist table of the Koszul complex K(f,g):
//   S <- S(-a,-b) + S(-c,-d) <- S(-a-c,-b-d).
struct KoszulShape {
    Bidegree start;                        // (0,0)
    std::pair<Bidegree, Bidegree> middle;  // (-a,-b), (-c,-d)
    Bidegree end;                          // (-a-c,-b-d)
    bool operator==(const KoszulShape&) const = default;
};

struct VciCertificate {
    Poly f, g;
    Bidegree f_deg, g_deg;
    std::vector<std::string> trace;
};

KoszulShape koszul_shape(const VciCertificate& cert);

enum class RefutationCriterion {
    Cross,             // |X| < mn with a point on both maximal rulings
    Gcd,               // |X| < mn with gcd(m,n) not dividing |X|
    DegreeCandidates,  // dm + cn != |X|
    LineBudget,        // d < s or c < t
    RulingGap,         // a ruling count strictly between the residual degree and the maximum
    Ferrers,           // non-rectangle Ferrers diagram
    ForcedDegree,      // |X| < mn but no (m,n)-form passes through X
    TwoRuling,         // two-ruling classification, negative case
    ThreeRuling,       // three-ruling classification, negative case
};

std::string criterion_name(RefutationCriterion c);

struct Refutation {
    RefutationCriterion criterion;
    int m = 0, n = 0;
    int s = -1, t = -1;               // counts of maximal horizontal / vertical rulings
    int c = -1, d = -1;               // forced degree of g, when applicable
    int residual_x = -1, residual_y = -1;  // (c - t, d - s)
    std::optional<BiProjPoint> witness_point;
    std::string detail;
};

struct MultiplicityMap {
    std::vector<std::pair<BiProjPoint, int>> entries;  // point order of the set

    int total() const;
    int at(const BiProjPoint& p) const;  // 0 when absent
};

enum class VerdictStatus { Vci, NotVci, CoordinateDependent, Undecided };

std::string status_name(VerdictStatus s);

struct VciVerdict {
    VerdictStatus status = VerdictStatus::Undecided;
    std::optional<VciCertificate> certificate;  // when status == Vci
    std::optional<Refutation> refutation;       // when status == NotVci
    bool extension_required = false;  // witness exists only over a field extension
    std::vector<std::string> trace;
};

enum class VerifyMode { Fast, Saturation, Both };

struct VerifyResult {
    bool accepted = false;
    std::vector<std::string> trace;
};

// Fast mode: gcd(f,g) unit, f and g vanish on X, and bezout_count = |X|.
// Saturation mode: saturate_by_irrelevant(<f,g>) equals the vanishing
// ideal of X. Both: runs the two and requires agreement.
VerifyResult verify_vci(const PointSet& x, const Poly& f, const Poly& g,
                        VerifyMode mode = VerifyMode::Fast);

// Witness for a set with equally many points on every vertical ruling
// (or, transposing, every horizontal ruling): f the product of the ruling
// forms, g the matching sum of padded products. Throws FieldError when
// neither orientation is balanced.
VciCertificate construct_balanced_vci(const PointSet& x);

struct SetTheoreticWitness {
    Poly f, g;
    MultiplicityMap mult;
};

// f cuts the vertical rulings through X; g restricts on each ruling to a
// form whose roots are exactly the points there, with padding
// multiplicities recorded.
SetTheoreticWitness construct_set_theoretic(const PointSet& x);

std::optional<Refutation> refute_cross(const PointSet& x);
std::optional<Refutation> refute_gcd(const PointSet& x);

// Forced degree (c,d) of the second form when |X| < mn and gcd(m,n) = 1;
// throws FieldError outside that regime.
std::pair<int, int> degree_candidates(const PointSet& x);

std::optional<Refutation> refute_number_theory(const PointSet& x);

// Requires a Ferrers configuration; VCI iff rectangle.
VciVerdict classify_ferrers(const PointSet& x);

// Complete classification for point sets on at most three rulings in one
// of the two orientations; throws FieldError otherwise.
VciVerdict classify_few_rulings(const PointSet& x);

// Full decision pipeline; sound, and complete except in the |X| >= mn
// regime where it may return CoordinateDependent or Undecided.
VciVerdict analyze(const PointSet& x);

// Swap the two P^1 factors of a polynomial (x_i <-> y_i).
Poly swap_factors(const Poly& f);

}  // namespace vci
