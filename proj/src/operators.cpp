#include "qcs/operators.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace qcs {

namespace {

void check_order(int r) {
  if (r < 1) throw std::invalid_argument("difference order must be >= 1");
}

}  // namespace

MatrixXd DifferenceOperator::dense() const {
  check_order(order);
  MatrixXd d = MatrixXd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j <= order && j <= i; ++j)
      d(i, i - j) = (j % 2 == 0 ? 1.0 : -1.0) * binomial(order, j);
  return d;
}

MatrixXd DifferenceOperator::dense_inverse() const {
  check_order(order);
  // (D^{-r})_{ij} = binomial(i - j + r - 1, r - 1) for i >= j.
  MatrixXd d = MatrixXd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j <= i; ++j) d(i, j) = binomial(i - j + order - 1, order - 1);
  return d;
}

VectorXd apply_diff(int r, const VectorXd& v) {
  check_order(r);
  if (v.size() == 0) throw std::invalid_argument("apply_diff: empty input");
  const int m = static_cast<int>(v.size());
  VectorXd out(m);
  for (int i = 0; i < m; ++i) {
    double acc = 0.0;
    for (int j = 0; j <= r && j <= i; ++j)
      acc += (j % 2 == 0 ? 1.0 : -1.0) * binomial(r, j) * v[i - j];
    out[i] = acc;
  }
  return out;
}

VectorXd apply_diff_inv(int r, const VectorXd& v) {
  check_order(r);
  if (v.size() == 0) throw std::invalid_argument("apply_diff_inv: empty input");
  VectorXd out = v;
  apply_diff_inv_inplace(r, 1, out);
  return out;
}

void apply_diff_inv_inplace(int r, int channels, VectorXd& v) {
  check_order(r);
  if (channels < 1 || v.size() % channels != 0)
    throw std::invalid_argument("apply_diff_inv_inplace: bad channel split");
  const Eigen::Index seg = v.size() / channels;
  for (int c = 0; c < channels; ++c) {
    double* p = v.data() + c * seg;
    for (int pass = 0; pass < r; ++pass) {
      double acc = 0.0;
      for (Eigen::Index i = 0; i < seg; ++i) {
        acc += p[i];
        p[i] = acc;
      }
    }
  }
}

void apply_diff_inv_adjoint_inplace(int r, int channels, VectorXd& v) {
  check_order(r);
  if (channels < 1 || v.size() % channels != 0)
    throw std::invalid_argument("apply_diff_inv_adjoint_inplace: bad channel split");
  const Eigen::Index seg = v.size() / channels;
  for (int c = 0; c < channels; ++c) {
    double* p = v.data() + c * seg;
    for (int pass = 0; pass < r; ++pass) {
      double acc = 0.0;
      for (Eigen::Index i = seg; i-- > 0;) {
        acc += p[i];
        p[i] = acc;
      }
    }
  }
}

NoiseShapingMatrix build_noise_shaping(double cr, double delta, double eps, int m, int r) {
  if (delta <= 0.0) throw std::invalid_argument("build_noise_shaping: delta must be > 0");
  if (eps < 0.0) throw std::invalid_argument("build_noise_shaping: eps must be >= 0");
  if (cr <= 0.0) throw std::invalid_argument("build_noise_shaping: C_r must be > 0");
  if (m < 1) throw std::invalid_argument("build_noise_shaping: m must be >= 1");
  check_order(r);

  NoiseShapingMatrix nsm;
  nsm.cr = cr;
  nsm.delta = delta;
  nsm.eps = eps;
  nsm.dim = m;
  nsm.order = r;
  const MatrixXd dr = DifferenceOperator{r, m}.dense();
  if (eps == 0.0) {
    nsm.H = cr * dr;
  } else {
    nsm.H.resize(m, 2 * m);
    nsm.H.leftCols(m) = cr * dr;
    nsm.H.rightCols(m) = (eps / delta) * MatrixXd::Identity(m, m);
  }
  return nsm;
}

SvdFactors svd_orthogonal_factor(const NoiseShapingMatrix& nsm) {
  Eigen::BDCSVD<MatrixXd> svd(nsm.H, Eigen::ComputeThinU | Eigen::ComputeThinV);
  SvdFactors f{svd.matrixU(), svd.singularValues(), svd.matrixV()};

  // The SVD is unique only up to paired column signs; pick the representative
  // with a positive leading entry in each column of V.
  for (Eigen::Index c = 0; c < f.V.cols(); ++c) {
    const double tol = 1e-12 * f.V.col(c).norm();
    for (Eigen::Index i = 0; i < f.V.rows(); ++i) {
      const double x = f.V(i, c);
      if (std::abs(x) > tol) {
        if (x < 0.0) {
          f.V.col(c) = -f.V.col(c);
          f.U.col(c) = -f.U.col(c);
        }
        break;
      }
    }
  }

  const double scale = nsm.H.cwiseAbs().maxCoeff();
  const double resid = (f.U * f.S.asDiagonal() * f.V.transpose() - nsm.H).cwiseAbs().maxCoeff();
  if (!(resid <= 1e-8 * scale))
    throw computation_error("svd_orthogonal_factor: residual " + std::to_string(resid) +
                            " exceeds 1e-8 * " + std::to_string(scale));
  const double orth = (f.U.transpose() * f.U - MatrixXd::Identity(f.U.cols(), f.U.cols()))
                          .cwiseAbs()
                          .maxCoeff();
  if (!(orth <= 1e-10))
    throw computation_error("svd_orthogonal_factor: U orthogonality residual " +
                            std::to_string(orth));
  return f;
}

VectorXd singular_values(const NoiseShapingMatrix& nsm) {
  Eigen::BDCSVD<MatrixXd> svd(nsm.H);
  return svd.singularValues();
}

VectorXd dst_iii(const VectorXd& v, int n) {
  if (static_cast<int>(v.size()) != n)
    throw std::invalid_argument("dst_iii: dimension mismatch");
  if (n < 1) throw std::invalid_argument("dst_iii: empty input");
  const double scale = std::sqrt(2.0 / n);
  VectorXd out(n);
  for (int k = 1; k <= n; ++k) {
    double acc = 0.0;
    for (int l = 1; l <= n; ++l)
      acc += std::sin((2.0 * k - 1.0) * l * M_PI / (2.0 * n)) * v[l - 1];
    out[k - 1] = scale * acc;
  }
  return out;
}

MatrixXd closed_form_u(int m) {
  if (m < 1) throw std::invalid_argument("closed_form_u: m must be >= 1");
  MatrixXd u(m, m);
  const double scale = std::sqrt(2.0 / (m + 0.5));
  for (int k = 1; k <= m; ++k) {
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    for (int l = 1; l <= m; ++l)
      u(k - 1, l - 1) = scale * sign * std::sin((2.0 * k - 1.0) * l * M_PI / (2.0 * m + 1.0));
  }
  return u;
}

VectorXd fast_u_apply(const VectorXd& y, int r, double eps) {
  if (r != 1 || eps != 0.0)
    throw std::domain_error("fast_u_apply: only the r = 1, eps = 0 factor has a fast path");
  const int m = static_cast<int>(y.size());
  if (m < 1) throw std::invalid_argument("fast_u_apply: empty input");

  // Zero-interleave into length 2m+1: entry 2k holds y_k, odd entries zero.
  const int n = 2 * m + 1;
  VectorXd yt = VectorXd::Zero(n);
  for (int k = 1; k <= m; ++k) yt[2 * k - 1] = y[k - 1];

  const VectorXd s = dst_iii(yt, n);
  VectorXd out(m);
  const double root2 = std::sqrt(2.0);
  for (int j = 1; j <= m; ++j) out[j - 1] = ((j % 2 == 1) ? root2 : -root2) * s[j - 1];
  return out;
}

}  // namespace qcs
