#pragma once

#include <vector>

#include "vci/field.hpp"

namespace vci {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(Mat& m);

int rank(Mat m);

// Basis of {v : M v = 0} for an ncols-wide matrix (rows may be empty).
Mat kernel_basis(Mat m, int ncols, FieldDesc fd);

// Whether v lies in the row span of an echelonized matrix.
bool in_row_span(const Mat& rrefm, const std::vector<int>& pivots, Vec v);

// Residual of v after elimination against an echelonized matrix; zero iff
// v lies in the row span.
Vec reduce_by(const Mat& rrefm, const std::vector<int>& pivots, Vec v);

}  // namespace vci
