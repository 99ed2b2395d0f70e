// gaitcoord kinematics: segment frames, elevation angles, angular velocities
#pragma once

#include "gaitcoord/rotations.hpp"
#include "gaitcoord/types.hpp"

#include <Eigen/Core>

#include <vector>

namespace gaitcoord {

/// Compose the four segment orientation frames from one sample of anatomical
/// joint angles (radians). Throws DomainError on non-finite input.
SegmentFrames compose_segment_frames(const JointVec& q_rad, Side side);

/// Sagittal elevation angle of one frame: atan2(-R(0,1), R(1,1)), i.e. the
/// azimuth of the segment long axis projected onto the sagittal plane.
/// Range (-pi, pi].
double elevation_angle(const Mat3& r);

/// True when the segment long axis is within tol of the global z axis, where
/// the sagittal projection degenerates.
bool gimbal_degenerate(const Mat3& r, double tol = 1e-12);

/// Elevation angles of one frame set: (pelvis, thigh, shank, foot), radians,
/// each in (-pi, pi].
Eigen::Vector4d elevation_angles(const SegmentFrames& frames);

/// Unwrapped elevation-angle series over one trial or stride. Samples flagged
/// on input, non-finite, or gimbal-degenerate are NaN and flagged; they are
/// skipped by the unwrap and excluded from downstream statistics.
struct ElevationSeries {
    Eigen::VectorXd pelvis; // rad, unwrapped
    Eigen::VectorXd thigh;
    Eigen::VectorXd shank;
    Eigen::VectorXd foot;
    SampleFlags flagged;

    Eigen::Index size() const { return thigh.size(); }
    /// Rows (thigh, shank, foot) stacked as a 3xN trajectory.
    Eigen::Matrix3Xd sagittal_trajectory() const;
};

ElevationSeries elevation_series(const JointSeries& q_rad, Side side,
                                 const SampleFlags& input_flags = {});

/// Remove 2*pi jumps so consecutive finite samples differ by less than pi.
/// NaN samples are left in place and skipped as unwrap references.
Eigen::VectorXd unwrap_angles(const Eigen::VectorXd& wrapped);

/// Per-segment angular velocities extracted from the skew matrix
/// Omega = Rdot * R^T (central differences, one-sided endpoints; Omega
/// antisymmetrized before extraction). Rows are (alpha, beta, gamma) rates in
/// rad/s; beta/gamma signs follow the laterality component layout.
struct SegmentRates {
    Eigen::Matrix3Xd pelvis;
    Eigen::Matrix3Xd thigh;
    Eigen::Matrix3Xd shank;
    Eigen::Matrix3Xd foot;
    /// Worst max-norm of Omega + Omega^T seen before antisymmetrization.
    double max_asymmetry = 0.0;

    /// Sagittal alpha rates stacked as rows (thigh, shank, foot).
    Eigen::Matrix3Xd sagittal_rates() const;
};

SegmentRates segment_angular_velocities(const std::vector<SegmentFrames>& frames,
                                        double dt_s, Side side);

/// Eq.-10-style closed form for sagittal-only angle sets:
/// (alpha_p, alpha_t, alpha_s, alpha_f) =
/// (-phi_p, -phi_p+phi_h, -phi_p+phi_h-phi_k, -phi_p+phi_h-phi_k+phi_a+pi/2).
/// Throws DomainError when any frontal/transverse component is nonzero;
/// serves as the independent oracle for the 3D path.
Eigen::Vector4d planar_elevation_closed_form(const JointVec& q_rad);

/// Central-difference derivative of a multichannel series (one-sided,
/// first-order at the endpoints). Rows are channels.
Eigen::MatrixXd differentiate(const Eigen::MatrixXd& series, double dt_s);

} // namespace gaitcoord
