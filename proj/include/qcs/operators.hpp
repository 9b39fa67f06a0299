#ifndef QCS_OPERATORS_HPP
#define QCS_OPERATORS_HPP

#include <Eigen/Dense>

#include "qcs/common.hpp"

namespace qcs {

using Eigen::MatrixXd;
using Eigen::VectorXd;

/// First-order difference matrix D and its powers. D has 1 on the diagonal
/// and -1 on the first subdiagonal; D^r is lower banded with entries
/// (-1)^j * binomial(r, j) along diagonal j. D^{-1} is cumulative summation.
struct DifferenceOperator {
  int order;  // r >= 1
  int dim;    // m >= 1

  MatrixXd dense() const;          // D^r, dim x dim
  MatrixXd dense_inverse() const;  // D^{-r}, dim x dim (nonnegative integers)
};

/// (D^r v)_i = sum_{j=0..r} (-1)^j binomial(r,j) v_{i-j}, with v_t = 0 for t < 0.
VectorXd apply_diff(int r, const VectorXd& v);

/// r successive cumulative sums; inverse of apply_diff.
VectorXd apply_diff_inv(int r, const VectorXd& v);

/// In-place kernels used in solver hot paths. The stacked vector is split
/// into `channels` equal segments and each segment is transformed on its own.
void apply_diff_inv_inplace(int r, int channels, VectorXd& v);
/// Adjoint of apply_diff_inv_inplace (reverse cumulative sums per segment).
void apply_diff_inv_adjoint_inplace(int r, int channels, VectorXd& v);

/// H = [C_r D^r  (eps/delta) I]; the right block is dropped when eps == 0.
struct NoiseShapingMatrix {
  double cr = 0.5;
  double delta = 0.0;
  double eps = 0.0;
  int dim = 0;    // m
  int order = 0;  // r
  MatrixXd H;     // m x m (eps == 0) or m x 2m
};

NoiseShapingMatrix build_noise_shaping(double cr, double delta, double eps, int m, int r);
/// C_r defaulted to 1/2 (greedy quantizer constant).
inline NoiseShapingMatrix build_noise_shaping(double delta, double eps, int m, int r) {
  return build_noise_shaping(0.5, delta, eps, m, r);
}

struct SvdFactors {
  MatrixXd U;  // m x m orthogonal
  VectorXd S;  // nonincreasing
  MatrixXd V;  // cols x m (thin)
};

/// Thin SVD of H with columns canonicalized so the first nonzero entry of
/// each column of V is positive. Throws computation_error if the factors do
/// not reproduce H to 1e-8 relative.
SvdFactors svd_orthogonal_factor(const NoiseShapingMatrix& nsm);

/// Nonincreasing singular values of H.
VectorXd singular_values(const NoiseShapingMatrix& nsm);

/// Type-III discrete sine transform with entries sqrt(2/N) sin((2k-1) l pi / (2N)).
/// Direct O(N^2) evaluation; n must equal v.size().
VectorXd dst_iii(const VectorXd& v, int n);

/// Dense closed-form orthogonal factor for r = 1, eps = 0:
/// U(k,l) = sqrt(2/(m+1/2)) (-1)^{k+1} sin((2k-1) l pi / (2m+1)).
MatrixXd closed_form_u(int m);

/// Applies the r = 1, eps = 0 orthogonal factor through a zero-interleaved
/// DST-III of size 2m+1. Throws std::domain_error when called for r >= 2 or
/// eps != 0 (dense multiply is the fallback there).
VectorXd fast_u_apply(const VectorXd& y, int r = 1, double eps = 0.0);

}  // namespace qcs

#endif  // QCS_OPERATORS_HPP
