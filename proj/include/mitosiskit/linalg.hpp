#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include "mitosiskit/rational.hpp"

#include <optional>
#include <vector>

namespace mitosiskit {

using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using IMat = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;

Eigen::Index rank_of(const Mat& a);

Rational det_of(const Mat& a);

// Fraction-free Bareiss determinant; much faster than det_of on integer data.
Integer det_of_int(IMat a);

// Solves a*x = b exactly; returns nullopt when the system is inconsistent.
// When the kernel is nontrivial an arbitrary solution is returned.
std::optional<Vec> solve_exact(const Mat& a, const Vec& b);

// Columns form a basis of ker(a); zero-column matrix when the kernel is trivial.
Mat kernel_of(const Mat& a);

// Columns form a basis of { x in Z^k : c*x = 0 } where c is integer, k = c.cols().
IMat integer_kernel(IMat c);

// Scales a rational vector to a primitive integer vector (gcd 1), preserving
// direction. Zero vector maps to zero.
IVec primitive_vector(const Vec& v);

// Given rational columns spanning a subspace V of Q^k, returns an integer
// matrix whose columns form a basis of the saturated lattice Z^k intersect V.
// Returns a k x 0 matrix for the zero subspace.
Mat saturated_lattice_basis(const Mat& span_cols);

Mat identity_mat(Eigen::Index d);

Vec to_vec(const std::vector<Rational>& v);
std::vector<Rational> from_vec(const Vec& v);

}  // namespace mitosiskit
