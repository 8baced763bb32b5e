#pragma once

#include "kleinq/tower.hpp"

#include <vector>

namespace kleinq {

using Vec = std::vector<TowerElement>;
using Mat = std::vector<Vec>; // row-major

inline Mat zero_matrix(size_t r, size_t c) { return Mat(r, Vec(c, TowerElement())); }

int rank(Mat m); // destructive Gaussian elimination on a copy

/// Reduced-echelon basis of the kernel of a single row functional, one basis
/// vector per free column in ascending order (deterministic).
std::vector<Vec> kernel_of_row(const Vec& row);

Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_apply(const Mat& a, const Vec& x);
Mat transpose(const Mat& a);
TowerElement det4(const Mat& a);
Mat inverse4(const Mat& a); // adjugate / det

} // namespace kleinq
