#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vci/linalg.hpp"
#include "vci/vciengine.hpp"

namespace vci {

// Degreewise saturation computed by plain linear algebra, independent of
// the Groebner engine: starting from the graded pieces of the ideal, a
// backward fixpoint repeatedly adjoins every form all of whose four
// products with the irrelevant-ideal generators already lie one bidegree
// higher. Pieces near the (amax, bmax) boundary of the box may
// under-approximate the true saturation; callers should leave slack.
class SaturationTable {
  public:
    SaturationTable(const Ideal& ideal, int amax, int bmax);

    FieldDesc field() const { return fd_; }
    int amax() const { return amax_; }
    int bmax() const { return bmax_; }

    // Dimension of the degree-(a,b) piece of the original ideal.
    int ideal_dim(int a, int b) const;
    // Dimension of the degree-(a,b) piece of the computed saturation.
    int saturation_dim(int a, int b) const;
    // codim in the full space of (a,b)-forms, i.e. the Hilbert function
    // of the saturated quotient at (a,b).
    int quotient_dim(int a, int b) const;

    // Membership of a bihomogeneous polynomial in the computed saturation.
    bool contains(const Poly& f) const;

  private:
    struct Piece {
        Mat rows;                // rref basis in monomial coordinates
        std::vector<int> pivots;
    };

    FieldDesc fd_;
    int amax_, bmax_;
    std::vector<std::vector<Piece>> sat_;   // [a][b]
    std::vector<std::vector<int>> idim_;    // ideal piece dims

    const Piece& piece(int a, int b) const;
};

enum class SearchOutcome {
    Found,      // a verified witness pair exists
    Exhausted,  // every admissible degree pair is soundly excluded
    Capped,     // some pair survived the exclusions but the bounded
                // enumeration produced no witness
};

std::string outcome_name(SearchOutcome o);

struct WitnessSearchResult {
    SearchOutcome outcome = SearchOutcome::Capped;
    std::optional<VciCertificate> certificate;
    int pairs_examined = 0;
    int candidates_tried = 0;
    std::vector<std::string> notes;
};

// Brute-force witness search over admissible degree pairs, independent of
// the classification pipeline. A degree pair is soundly excluded when one
// of the two kernels of forms through the points is empty (kernel
// dimensions do not change under field extension) or when the fixed
// divisors of the two kernels share a non-unit common factor. Otherwise a
// bounded deterministic enumeration of kernel combinations is verified.
WitnessSearchResult exhaustive_witness_search(const PointSet& x, int combo_limit = 400);

}  // namespace vci
