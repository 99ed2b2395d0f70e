// gaitcoord reduced elevation-space Jacobian, ESM mapping, power invariance
#pragma once

#include "gaitcoord/types.hpp"

#include <Eigen/Core>

#include <span>

namespace gaitcoord {

using Jacobian3x12 = Eigen::Matrix<double, 3, kNumJointDof>;

/// Reduced elevation-space Jacobian at a posture q: rows are the thigh,
/// shank, foot elevation rates; columns follow the joint-vector order.
/// J(i,j) is the exact partial derivative of the sagittal elevation angle of
/// segment i with respect to q_j.
struct ReducedJacobian {
    Jacobian3x12 J;
    /// Set when a segment axis is gimbal-degenerate and the row is invalid.
    bool degenerate = false;
};

ReducedJacobian elevation_jacobian(const JointVec& q_rad, Side side);

/// Moore-Penrose pseudo-inverse via SVD. Singular values below
/// rtol * sigma_max are treated as zero; rank reports the count kept.
struct PinvResult {
    Eigen::MatrixXd pinv;
    int rank = 0;
};

PinvResult pseudo_inverse(const Eigen::MatrixXd& a, double rtol = 1e-10);

/// Elevation Space Moments over an aligned (q, tau) series. tau is the
/// 12-vector of joint moments with identically zero pelvis entries (enforced);
/// the moment solve uses the actuated hip/knee/ankle columns of the Jacobian,
/// whose transposed pseudo-inverse maps tau to M = (M_t, M_s, M_f).
/// Samples at rank-deficient or gimbal-degenerate postures are flagged and
/// NaN-filled.
struct EsmSeries {
    Eigen::Matrix3Xd moments; // rows thigh, shank, foot; Nm/kg
    SampleFlags flagged;

    Eigen::Index size() const { return moments.cols(); }
};

EsmSeries elevation_space_moments(const JointSeries& q_rad,
                                  const JointSeries& tau_nm_kg, Side side,
                                  double rank_rtol = 1e-10,
                                  const SampleFlags& input_flags = {});

/// Centered moving-average smoothing of the ESM channels (odd window;
/// window <= 1 is a no-op). Flagged samples neither contribute nor change.
EsmSeries smooth_esm(const EsmSeries& esm, int window);

/// Instantaneous-power comparison between joint space (tau . qdot over all
/// 12 dof) and elevation space (M . alpha_dot over thigh/shank/foot).
struct PowerReport {
    Eigen::VectorXd joint_power; // W/kg
    Eigen::VectorXd esm_power;   // W/kg
    double r2 = 0.0;
    double nrmse_pct = 0.0; // RMSE normalized by the range of joint_power
    /// True when joint_power has (numerically) zero range, leaving r2 and
    /// nrmse undefined; both are NaN in that case.
    bool degenerate = false;
};

PowerReport power_check(const JointSeries& qdot_rad_s,
                        const JointSeries& tau_nm_kg,
                        const Eigen::Matrix3Xd& esm_moments,
                        const Eigen::Matrix3Xd& alpha_rates,
                        const SampleFlags& flags = {});

} // namespace gaitcoord
