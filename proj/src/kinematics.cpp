#include "gaitcoord/kinematics.hpp"

#include "gaitcoord/error.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace gaitcoord {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Composes the chain once, storing each segment frame as it completes.
SegmentFrames compose_unchecked(const JointVec& q, Side side) {
    const auto& chain = segment_chain();
    SegmentFrames out;
    Mat3 r = Mat3::Identity();
    for (int k = 0; k < kNumJointDof; ++k) {
        r = r * rotation_about(chain[k].axis, chain[k].argument(q, side));
        if (k + 1 == kSegmentChainLength[0]) out.pelvis = r;
        if (k + 1 == kSegmentChainLength[1]) out.thigh = r;
        if (k + 1 == kSegmentChainLength[2]) out.shank = r;
        if (k + 1 == kSegmentChainLength[3]) out.foot = r;
    }
    return out;
}

} // namespace

SegmentFrames compose_segment_frames(const JointVec& q_rad, Side side) {
    if (!q_rad.allFinite())
        throw DomainError("compose_segment_frames: non-finite joint angle");
    return compose_unchecked(q_rad, side);
}

double elevation_angle(const Mat3& r) {
    return std::atan2(-r(0, 1), r(1, 1));
}

bool gimbal_degenerate(const Mat3& r, double tol) {
    return std::abs(r(0, 1)) < tol && std::abs(r(1, 1)) < tol;
}

Eigen::Vector4d elevation_angles(const SegmentFrames& f) {
    return {elevation_angle(f.pelvis), elevation_angle(f.thigh),
            elevation_angle(f.shank), elevation_angle(f.foot)};
}

Eigen::VectorXd unwrap_angles(const Eigen::VectorXd& wrapped) {
    Eigen::VectorXd out = wrapped;
    double offset = 0.0;
    double prev = kNaN;
    for (Eigen::Index k = 0; k < out.size(); ++k) {
        if (!std::isfinite(wrapped[k])) continue;
        if (std::isfinite(prev)) {
            double d = wrapped[k] + offset - prev;
            offset -= 2.0 * kPi * std::round(d / (2.0 * kPi));
        }
        out[k] = wrapped[k] + offset;
        prev = out[k];
    }
    return out;
}

Eigen::Matrix3Xd ElevationSeries::sagittal_trajectory() const {
    Eigen::Matrix3Xd traj(3, thigh.size());
    traj.row(0) = thigh.transpose();
    traj.row(1) = shank.transpose();
    traj.row(2) = foot.transpose();
    return traj;
}

ElevationSeries elevation_series(const JointSeries& q_rad, Side side,
                                 const SampleFlags& input_flags) {
    const Eigen::Index n = q_rad.cols();
    ElevationSeries out;
    out.pelvis.resize(n);
    out.thigh.resize(n);
    out.shank.resize(n);
    out.foot.resize(n);
    out.flagged.assign(static_cast<size_t>(n), 0);

    for (Eigen::Index k = 0; k < n; ++k) {
        const bool pre_flagged =
            k < static_cast<Eigen::Index>(input_flags.size()) && input_flags[k];
        if (pre_flagged || !q_rad.col(k).allFinite()) {
            if (!pre_flagged)
                throw DomainError("elevation_series: non-finite joint angle at sample " +
                                  std::to_string(k));
            out.pelvis[k] = out.thigh[k] = out.shank[k] = out.foot[k] = kNaN;
            out.flagged[k] = 1;
            continue;
        }
        const SegmentFrames f = compose_unchecked(q_rad.col(k), side);
        if (gimbal_degenerate(f.pelvis) || gimbal_degenerate(f.thigh) ||
            gimbal_degenerate(f.shank) || gimbal_degenerate(f.foot)) {
            out.pelvis[k] = out.thigh[k] = out.shank[k] = out.foot[k] = kNaN;
            out.flagged[k] = 1;
            continue;
        }
        const Eigen::Vector4d a = elevation_angles(f);
        out.pelvis[k] = a[0];
        out.thigh[k] = a[1];
        out.shank[k] = a[2];
        out.foot[k] = a[3];
    }

    out.pelvis = unwrap_angles(out.pelvis);
    out.thigh = unwrap_angles(out.thigh);
    out.shank = unwrap_angles(out.shank);
    out.foot = unwrap_angles(out.foot);
    return out;
}

Eigen::MatrixXd differentiate(const Eigen::MatrixXd& series, double dt_s) {
    if (dt_s <= 0.0) throw DomainError("differentiate: dt must be positive");
    const Eigen::Index n = series.cols();
    if (n < 3) throw DomainError("differentiate: need at least 3 samples");
    Eigen::MatrixXd d(series.rows(), n);
    d.col(0) = (series.col(1) - series.col(0)) / dt_s;
    for (Eigen::Index k = 1; k + 1 < n; ++k)
        d.col(k) = (series.col(k + 1) - series.col(k - 1)) / (2.0 * dt_s);
    d.col(n - 1) = (series.col(n - 1) - series.col(n - 2)) / dt_s;
    return d;
}

Eigen::Matrix3Xd SegmentRates::sagittal_rates() const {
    Eigen::Matrix3Xd out(3, thigh.cols());
    out.row(0) = thigh.row(0);
    out.row(1) = shank.row(0);
    out.row(2) = foot.row(0);
    return out;
}

namespace {

// Extracts (alpha_dot, beta_dot, gamma_dot) from an antisymmetrized Omega
// following the left/right component layouts.
Vec3 omega_components(const Mat3& omega, Side side) {
    const double alpha = omega(1, 0);
    if (side == Side::Right) return {alpha, omega(1, 2), omega(2, 0)};
    return {alpha, omega(2, 1), omega(0, 2)};
}

} // namespace

SegmentRates segment_angular_velocities(const std::vector<SegmentFrames>& frames,
                                        double dt_s, Side side) {
    if (dt_s <= 0.0)
        throw DomainError("segment_angular_velocities: dt must be positive");
    const Eigen::Index n = static_cast<Eigen::Index>(frames.size());
    if (n < 3)
        throw DomainError("segment_angular_velocities: need at least 3 samples");

    SegmentRates out;
    out.pelvis.resize(3, n);
    out.thigh.resize(3, n);
    out.shank.resize(3, n);
    out.foot.resize(3, n);

    auto rate_of = [&](auto member, Eigen::Index k) {
        Mat3 rdot;
        const Mat3& r = frames[k].*member;
        if (k == 0)
            rdot = (frames[1].*member - frames[0].*member) / dt_s;
        else if (k == n - 1)
            rdot = (frames[n - 1].*member - frames[n - 2].*member) / dt_s;
        else
            rdot = (frames[k + 1].*member - frames[k - 1].*member) / (2.0 * dt_s);
        Mat3 omega = rdot * r.transpose();
        const double asym = (omega + omega.transpose()).cwiseAbs().maxCoeff();
        if (asym > out.max_asymmetry) out.max_asymmetry = asym;
        omega = 0.5 * (omega - omega.transpose());
        return omega_components(omega, side);
    };

    for (Eigen::Index k = 0; k < n; ++k) {
        out.pelvis.col(k) = rate_of(&SegmentFrames::pelvis, k);
        out.thigh.col(k) = rate_of(&SegmentFrames::thigh, k);
        out.shank.col(k) = rate_of(&SegmentFrames::shank, k);
        out.foot.col(k) = rate_of(&SegmentFrames::foot, k);
    }
    return out;
}

Eigen::Vector4d planar_elevation_closed_form(const JointVec& q_rad) {
    for (int i : {kPelvisObliquity, kPelvisRotation, kHipAdduction, kHipRotation,
                  kKneeAdduction, kKneeRotation, kAnkleInversion, kAnkleRotation}) {
        if (q_rad[i] != 0.0)
            throw DomainError(
                "planar_elevation_closed_form: out-of-plane component at index " +
                std::to_string(i));
    }
    const double p = q_rad[kPelvisTilt];
    const double h = q_rad[kHipFlexion];
    const double k = q_rad[kKneeFlexion];
    const double a = q_rad[kAnkleDorsiflexion];
    return {-p, -p + h, -p + h - k, -p + h - k + a + kPi / 2.0};
}

} // namespace gaitcoord
