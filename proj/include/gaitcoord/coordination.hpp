// gaitcoord coordination analysis: covariation plane, planarity index,
// PC scores, shank-foot coupling, plane-constrained shank prediction
#pragma once

#include "gaitcoord/types.hpp"

#include <Eigen/Core>

namespace gaitcoord {

/// PCA decomposition of a 3-signal trajectory. Unscaled (covariance of the
/// raw channels, divisor N-1) so scores keep the input units. Axis signs are
/// deterministic: the largest-magnitude component of each axis is positive.
struct CvpModel {
    Vec3 mean;
    Mat3 axes;        // columns u1, u2, u3
    Vec3 eigenvalues; // descending, >= 0
    double planarity_index_pct = 0.0;
    Eigen::Index sample_count = 0;
};

/// Fit the covariation-plane model. Columns of traj are samples; columns
/// flagged nonzero in `flagged` are excluded. Throws DomainError for fewer
/// than 4 usable samples or an all-constant trajectory.
CvpModel fit_cvp(const Eigen::Matrix3Xd& traj, const SampleFlags& flagged = {});

/// PI = (lambda1 + lambda2) / (lambda1 + lambda2 + lambda3) * 100.
/// Throws DomainError when the eigenvalue sum is not positive.
double planarity_index(const Vec3& eigenvalues_desc);

/// Projections of the centered trajectory onto the principal axes. Flagged
/// samples project to NaN and are ignored by max_out_of_plane.
struct PcScores {
    Eigen::Matrix3Xd scores; // rows s1, s2, s3
    double max_out_of_plane = 0.0;
};

PcScores pc_scores(const Eigen::Matrix3Xd& traj, const CvpModel& model,
                   const SampleFlags& flagged = {});

/// Plane n . x = d spanned by the first two principal axes: n = u3,
/// d = u3 . mean.
struct PlaneConstraint {
    Vec3 normal;
    double offset = 0.0;
};

PlaneConstraint plane_from_cvp(const CvpModel& model);

/// Least-squares line shank = slope * foot + bias over a sample window,
/// with the coefficient of determination of the fit.
struct LinearCouplingFit {
    double slope = 0.0;
    double bias = 0.0; // same units as the inputs
    double r2 = 0.0;
    Eigen::Index first = 0; // fitted sample range [first, last]
    Eigen::Index last = 0;
};

/// Fit the swing-phase shank-foot coupling over samples [first, last] of the
/// two series (shank regressed on foot; this orientation reproduces the
/// rigid-ankle slope/bias signature). Throws DomainError for windows shorter
/// than 5 samples or a constant foot signal.
LinearCouplingFit shank_foot_fit(const Eigen::VectorXd& shank,
                                 const Eigen::VectorXd& foot,
                                 Eigen::Index first, Eigen::Index last);

/// Solve the plane constraint for the shank channel given thigh and foot
/// profiles: shank(t) = (d - n_t * thigh(t) - n_f * foot(t)) / n_s.
/// Throws DomainError when |n_s| <= 1e-6 (plane unsolvable for the shank).
Eigen::VectorXd predict_shank(const PlaneConstraint& plane,
                              const Eigen::VectorXd& thigh,
                              const Eigen::VectorXd& foot);

/// Mean and sample standard deviation (N-1); sd is 0 for N < 2.
struct MeanSd {
    double mean = 0.0;
    double sd = 0.0;
    int n = 0;
};

MeanSd mean_sd(const std::vector<double>& values);

} // namespace gaitcoord
