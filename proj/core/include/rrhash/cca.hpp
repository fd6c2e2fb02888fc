#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace rrhash {

/// Fitted canonical correlation projections.
///
/// `a` and `b` act on features centred with `mean1` / `mean2`; feature
/// scaling used during fitting is folded into them. Columns are ordered by
/// descending canonical correlation and the largest-magnitude entry of each
/// `a` column is positive.
struct CcaModel {
    int dim1 = 0;
    int dim2 = 0;
    int components = 0;
    double ridge = 0.0;  // relative to the mean covariance diagonal
    int sample_count = 0;
    std::string config_digest;
    Eigen::VectorXd mean1;
    Eigen::VectorXd mean2;
    Eigen::MatrixXd a;  // dim1 x components
    Eigen::MatrixXd b;  // dim2 x components
    Eigen::VectorXd correlations;

    /// Regularized covariances the projections are orthonormal under:
    /// a^T S11 a = I and b^T S22 b = I.
    Eigen::MatrixXd s11;
    Eigen::MatrixXd s22;
};

struct CcaOptions {
    int components = 0;   // 0 means min(dim1, dim2)
    double ridge = 1e-3;  // multiplied by the mean diagonal of each covariance
    bool standardize = true;
};

/// Rows of `view1` / `view2` are paired samples. Throws ModelError for
/// fewer than two samples or when a regularized covariance is not
/// numerically positive definite (use a positive ridge).
CcaModel cca_fit(const Eigen::MatrixXd& view1, const Eigen::MatrixXd& view2, const CcaOptions& options);

CcaModel cca_fit(const std::vector<std::vector<double>>& view1, const std::vector<std::vector<double>>& view2,
                 const CcaOptions& options);

/// F = a^T (h1 - mean1) + b^T (h2 - mean2).
std::vector<double> cca_fuse(const CcaModel& model, const std::vector<double>& h1, const std::vector<double>& h2);

/// Sample covariance blocks (divisor M - 1) of centred rows.
Eigen::MatrixXd sample_covariance(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y);

}  // namespace rrhash
