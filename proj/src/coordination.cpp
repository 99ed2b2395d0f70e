#include "gaitcoord/coordination.hpp"

#include "gaitcoord/error.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <vector>

namespace gaitcoord {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool column_usable(const Eigen::Matrix3Xd& traj, const SampleFlags& flagged,
                   Eigen::Index k) {
    if (k < static_cast<Eigen::Index>(flagged.size()) && flagged[k]) return false;
    return traj.col(k).allFinite();
}

} // namespace

CvpModel fit_cvp(const Eigen::Matrix3Xd& traj, const SampleFlags& flagged) {
    const Eigen::Index n = traj.cols();
    Eigen::Index m = 0;
    Vec3 mean = Vec3::Zero();
    for (Eigen::Index k = 0; k < n; ++k) {
        if (!column_usable(traj, flagged, k)) continue;
        mean += traj.col(k);
        ++m;
    }
    if (m < 4)
        throw DomainError("fit_cvp: need at least 4 usable samples");
    mean /= static_cast<double>(m);

    Mat3 cov = Mat3::Zero();
    for (Eigen::Index k = 0; k < n; ++k) {
        if (!column_usable(traj, flagged, k)) continue;
        const Vec3 d = traj.col(k) - mean;
        cov += d * d.transpose();
    }
    cov /= static_cast<double>(m - 1);

    if (cov.trace() <= 0.0)
        throw DomainError("fit_cvp: degenerate model (constant trajectory)");

    Eigen::SelfAdjointEigenSolver<Mat3> solver(cov);
    if (solver.info() != Eigen::Success)
        throw DomainError("fit_cvp: eigendecomposition failed");

    CvpModel model;
    model.mean = mean;
    model.sample_count = m;
    // Solver returns ascending order; store descending with clamped negatives
    // (tiny negative eigenvalues are roundoff).
    for (int i = 0; i < 3; ++i) {
        model.eigenvalues[i] = std::max(0.0, solver.eigenvalues()[2 - i]);
        model.axes.col(i) = solver.eigenvectors().col(2 - i);
    }
    // Deterministic sign: largest-magnitude component positive.
    for (int i = 0; i < 3; ++i) {
        int imax = 0;
        model.axes.col(i).cwiseAbs().maxCoeff(&imax);
        if (model.axes(imax, i) < 0.0) model.axes.col(i) = -model.axes.col(i);
    }
    model.planarity_index_pct = planarity_index(model.eigenvalues);
    return model;
}

double planarity_index(const Vec3& ev) {
    const double total = ev.sum();
    if (!(total > 0.0))
        throw DomainError("planarity_index: eigenvalue sum must be positive");
    return (ev[0] + ev[1]) / total * 100.0;
}

PcScores pc_scores(const Eigen::Matrix3Xd& traj, const CvpModel& model,
                   const SampleFlags& flagged) {
    PcScores out;
    out.scores.resize(3, traj.cols());
    out.max_out_of_plane = 0.0;
    for (Eigen::Index k = 0; k < traj.cols(); ++k) {
        if (!column_usable(traj, flagged, k)) {
            out.scores.col(k).setConstant(kNaN);
            continue;
        }
        out.scores.col(k) = model.axes.transpose() * (traj.col(k) - model.mean);
        out.max_out_of_plane =
            std::max(out.max_out_of_plane, std::abs(out.scores(2, k)));
    }
    return out;
}

PlaneConstraint plane_from_cvp(const CvpModel& model) {
    PlaneConstraint plane;
    plane.normal = model.axes.col(2);
    plane.offset = plane.normal.dot(model.mean);
    return plane;
}

LinearCouplingFit shank_foot_fit(const Eigen::VectorXd& shank,
                                 const Eigen::VectorXd& foot,
                                 Eigen::Index first, Eigen::Index last) {
    if (shank.size() != foot.size())
        throw DomainError("shank_foot_fit: series lengths differ");
    if (first < 0 || last >= shank.size() || last < first)
        throw DomainError("shank_foot_fit: window out of range");
    const Eigen::Index n = last - first + 1;
    if (n < 5)
        throw DomainError("shank_foot_fit: swing window shorter than 5 samples");

    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (Eigen::Index k = first; k <= last; ++k) {
        const double x = foot[k], y = shank[k];
        if (!std::isfinite(x) || !std::isfinite(y))
            throw DomainError("shank_foot_fit: non-finite sample in window");
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        syy += y * y;
    }
    const double nn = static_cast<double>(n);
    const double var_x = sxx - sx * sx / nn;
    const double var_y = syy - sy * sy / nn;
    const double cov_xy = sxy - sx * sy / nn;
    if (var_x <= 0.0)
        throw DomainError("shank_foot_fit: constant foot signal in window");

    LinearCouplingFit fit;
    fit.first = first;
    fit.last = last;
    fit.slope = cov_xy / var_x;
    fit.bias = (sy - fit.slope * sx) / nn;
    // R^2 of the regression; exactly collinear windows (var_y == residual 0)
    // give 1.
    fit.r2 = var_y > 0.0 ? (cov_xy * cov_xy) / (var_x * var_y) : 1.0;
    return fit;
}

Eigen::VectorXd predict_shank(const PlaneConstraint& plane,
                              const Eigen::VectorXd& thigh,
                              const Eigen::VectorXd& foot) {
    if (thigh.size() != foot.size())
        throw DomainError("predict_shank: series lengths differ");
    const double ns = plane.normal[1];
    if (std::abs(ns) <= 1e-6)
        throw DomainError("predict_shank: constraint degenerate "
                          "(plane nearly parallel to the shank axis)");
    Eigen::VectorXd shank(thigh.size());
    for (Eigen::Index k = 0; k < thigh.size(); ++k)
        shank[k] =
            (plane.offset - plane.normal[0] * thigh[k] - plane.normal[2] * foot[k]) / ns;
    return shank;
}

MeanSd mean_sd(const std::vector<double>& values) {
    MeanSd out;
    out.n = static_cast<int>(values.size());
    if (out.n == 0) return out;
    double sum = 0.0;
    for (double v : values) sum += v;
    out.mean = sum / out.n;
    if (out.n < 2) return out;
    double ss = 0.0;
    for (double v : values) ss += (v - out.mean) * (v - out.mean);
    out.sd = std::sqrt(ss / (out.n - 1));
    return out;
}

} // namespace gaitcoord
