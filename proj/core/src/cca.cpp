#include "rrhash/cca.hpp"

#include "rrhash/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rrhash {

namespace {

Eigen::MatrixXd to_matrix(const std::vector<std::vector<double>>& rows, const char* what) {
    if (rows.empty()) return {};
    const auto cols = rows.front().size();
    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw ShapeError(std::string(what) + ": ragged sample rows");
        for (std::size_t j = 0; j < cols; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
    return m;
}

Eigen::VectorXd column_scales(const Eigen::MatrixXd& centred, bool standardize) {
    Eigen::VectorXd s = Eigen::VectorXd::Ones(centred.cols());
    if (!standardize) return s;
    const double denom = static_cast<double>(centred.rows() - 1);
    for (Eigen::Index j = 0; j < centred.cols(); ++j) {
        const double sd = std::sqrt(centred.col(j).squaredNorm() / denom);
        if (sd > 0.0) s(j) = sd;
    }
    return s;
}

Eigen::MatrixXd regularize(const Eigen::MatrixXd& s, double ridge) {
    const double mean_diag = s.rows() > 0 ? s.diagonal().mean() : 0.0;
    const double shift = ridge * (mean_diag > 0.0 ? mean_diag : 1.0);
    Eigen::MatrixXd out = s;
    out.diagonal().array() += shift;
    return out;
}

Eigen::MatrixXd cholesky_factor(const Eigen::MatrixXd& s, const char* which) {
    Eigen::LLT<Eigen::MatrixXd> llt(s);
    const double scale = s.diagonal().cwiseAbs().maxCoeff();
    bool ok = llt.info() == Eigen::Success && scale > 0.0;
    Eigen::MatrixXd l;
    if (ok) {
        l = llt.matrixL();
        const double min_pivot = l.diagonal().cwiseAbs().minCoeff();
        ok = min_pivot * min_pivot > 1e-12 * scale;
    }
    if (!ok) {
        throw ModelError(std::string("covariance ") + which +
                         " is numerically rank deficient; fit with a positive ridge");
    }
    return l;
}

}  // namespace

Eigen::MatrixXd sample_covariance(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
    return x.transpose() * y / static_cast<double>(x.rows() - 1);
}

CcaModel cca_fit(const Eigen::MatrixXd& view1, const Eigen::MatrixXd& view2, const CcaOptions& options) {
    const Eigen::Index m = view1.rows();
    if (m != view2.rows()) throw ShapeError("CCA views have different sample counts");
    if (m < 2) throw ModelError("CCA needs at least two samples, got " + std::to_string(m));
    const Eigen::Index d1 = view1.cols();
    const Eigen::Index d2 = view2.cols();
    if (d1 < 1 || d2 < 1) throw ShapeError("CCA views must have at least one feature");
    const Eigen::Index max_components = std::min(d1, d2);
    const Eigen::Index e = options.components > 0 ? options.components : max_components;
    if (e > max_components) {
        throw ModelError("requested " + std::to_string(e) + " components but at most " + std::to_string(max_components) +
                         " exist");
    }
    if (!(options.ridge >= 0.0)) throw ModelError("ridge must be >= 0");

    CcaModel model;
    model.dim1 = static_cast<int>(d1);
    model.dim2 = static_cast<int>(d2);
    model.components = static_cast<int>(e);
    model.ridge = options.ridge;
    model.sample_count = static_cast<int>(m);
    model.mean1 = view1.colwise().mean().transpose();
    model.mean2 = view2.colwise().mean().transpose();

    const Eigen::MatrixXd c1 = view1.rowwise() - model.mean1.transpose();
    const Eigen::MatrixXd c2 = view2.rowwise() - model.mean2.transpose();
    const Eigen::VectorXd scale1 = column_scales(c1, options.standardize);
    const Eigen::VectorXd scale2 = column_scales(c2, options.standardize);
    const Eigen::MatrixXd z1 = c1 * scale1.cwiseInverse().asDiagonal();
    const Eigen::MatrixXd z2 = c2 * scale2.cwiseInverse().asDiagonal();

    const Eigen::MatrixXd s11 = regularize(sample_covariance(z1, z1), options.ridge);
    const Eigen::MatrixXd s22 = regularize(sample_covariance(z2, z2), options.ridge);
    const Eigen::MatrixXd s12 = sample_covariance(z1, z2);

    // With S11 = L1 L1^T and S22 = L2 L2^T, the singular vectors of
    // K = L1^-1 S12 L2^-T give a = L1^-T u and b = L2^-T v; the singular
    // values are the canonical correlations. This is the symmetric form of
    // S11^-1 S12 S22^-1 S21 a = lambda^2 a and stays stable as lambda -> 0.
    const Eigen::MatrixXd l1 = cholesky_factor(s11, "S11");
    const Eigen::MatrixXd l2 = cholesky_factor(s22, "S22");
    const Eigen::MatrixXd t = l1.triangularView<Eigen::Lower>().solve(s12);
    const Eigen::MatrixXd k = l2.triangularView<Eigen::Lower>().solve(t.transpose()).transpose();

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(k, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::MatrixXd u = svd.matrixU().leftCols(e);
    const Eigen::MatrixXd v = svd.matrixV().leftCols(e);
    model.correlations = svd.singularValues().head(e);

    Eigen::MatrixXd a = l1.transpose().triangularView<Eigen::Upper>().solve(u);
    Eigen::MatrixXd b = l2.transpose().triangularView<Eigen::Upper>().solve(v);
    a = scale1.cwiseInverse().asDiagonal() * a;
    b = scale2.cwiseInverse().asDiagonal() * b;

    for (Eigen::Index j = 0; j < e; ++j) {
        Eigen::Index at = 0;
        a.col(j).cwiseAbs().maxCoeff(&at);
        if (a(at, j) < 0.0) {
            a.col(j) = -a.col(j);
            b.col(j) = -b.col(j);
        }
    }
    model.a = std::move(a);
    model.b = std::move(b);
    model.s11 = scale1.asDiagonal() * s11 * scale1.asDiagonal();
    model.s22 = scale2.asDiagonal() * s22 * scale2.asDiagonal();
    return model;
}

CcaModel cca_fit(const std::vector<std::vector<double>>& view1, const std::vector<std::vector<double>>& view2,
                 const CcaOptions& options) {
    if (view1.size() != view2.size()) throw ShapeError("CCA views have different sample counts");
    if (view1.size() < 2) throw ModelError("CCA needs at least two samples, got " + std::to_string(view1.size()));
    return cca_fit(to_matrix(view1, "view 1"), to_matrix(view2, "view 2"), options);
}

std::vector<double> cca_fuse(const CcaModel& model, const std::vector<double>& h1, const std::vector<double>& h2) {
    if (static_cast<int>(h1.size()) != model.dim1 || static_cast<int>(h2.size()) != model.dim2) {
        throw ShapeError("feature lengths " + std::to_string(h1.size()) + "/" + std::to_string(h2.size()) +
                         " do not match model dimensions " + std::to_string(model.dim1) + "/" +
                         std::to_string(model.dim2));
    }
    const Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(h1.data(), model.dim1) - model.mean1;
    const Eigen::VectorXd y = Eigen::Map<const Eigen::VectorXd>(h2.data(), model.dim2) - model.mean2;
    const Eigen::VectorXd f = model.a.transpose() * x + model.b.transpose() * y;
    return {f.data(), f.data() + f.size()};
}

}  // namespace rrhash
