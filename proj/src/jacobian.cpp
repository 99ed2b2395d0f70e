#include "gaitcoord/jacobian.hpp"

#include "gaitcoord/error.hpp"
#include "gaitcoord/kinematics.hpp"
#include "gaitcoord/rotations.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <limits>
#include <string>

namespace gaitcoord {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Columns of the actuated (hip, knee, ankle) block of the Jacobian. Pelvis
// entries of tau are identically zero and the pelvis is not an actuated
// joint, so the moment solve runs on this block; with it, the sagittal-only
// reduction reproduces the combined-torque map exactly.
constexpr int kActuatedStart = kHipFlexion;
constexpr int kActuatedCount = 9;

} // namespace

ReducedJacobian elevation_jacobian(const JointVec& q_rad, Side side) {
    if (!q_rad.allFinite())
        throw DomainError("elevation_jacobian: non-finite joint angle");

    const auto& chain = segment_chain();

    // Left partial products: left[k] is the product of factors 0..k-1.
    std::array<Mat3, kNumJointDof + 1> left;
    left[0] = Mat3::Identity();
    for (int k = 0; k < kNumJointDof; ++k)
        left[k + 1] =
            left[k] * rotation_about(chain[k].axis, chain[k].argument(q_rad, side));

    ReducedJacobian out;
    out.J.setZero();

    // Rows: thigh (chain length 6), shank (9), foot (12).
    for (int row = 0; row < 3; ++row) {
        const int len = kSegmentChainLength[row + 1];
        const Vec3 u = left[len].col(1); // segment long axis, global frame
        const double den = u.x() * u.x() + u.y() * u.y();
        if (den < 1e-24) {
            out.degenerate = true;
            out.J.row(row).setConstant(kNaN);
            continue;
        }
        for (int k = 0; k < len; ++k) {
            // Partial angular velocity of unit rate in factor k, global frame.
            const Vec3 w = chain[k].sign(side) * (left[k] * axis_vector(chain[k].axis));
            // d(alpha)/dq = w_z - u_z * (w_x u_x + w_y u_y) / (u_x^2 + u_y^2),
            // the exact derivative of atan2(-u_x, u_y) under u_dot = w x u.
            out.J(row, chain[k].q_index) +=
                w.z() - u.z() * (w.x() * u.x() + w.y() * u.y()) / den;
        }
    }
    return out;
}

PinvResult pseudo_inverse(const Eigen::MatrixXd& a, double rtol) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& sv = svd.singularValues();
    PinvResult out;
    if (sv.size() == 0 || sv[0] <= 0.0) {
        out.pinv = Eigen::MatrixXd::Zero(a.cols(), a.rows());
        return out;
    }
    const double cutoff = rtol * sv[0];
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(sv.size());
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv[i] > cutoff) {
            inv[i] = 1.0 / sv[i];
            ++out.rank;
        }
    }
    out.pinv = svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
    return out;
}

EsmSeries elevation_space_moments(const JointSeries& q_rad,
                                  const JointSeries& tau_nm_kg, Side side,
                                  double rank_rtol,
                                  const SampleFlags& input_flags) {
    const Eigen::Index n = q_rad.cols();
    if (tau_nm_kg.cols() != n)
        throw DomainError("elevation_space_moments: q and tau grids differ");

    EsmSeries out;
    out.moments.resize(3, n);
    out.flagged.assign(static_cast<size_t>(n), 0);

    for (Eigen::Index k = 0; k < n; ++k) {
        const bool pre_flagged =
            k < static_cast<Eigen::Index>(input_flags.size()) && input_flags[k];
        if (pre_flagged || !q_rad.col(k).allFinite() ||
            !tau_nm_kg.col(k).allFinite()) {
            if (!pre_flagged)
                throw DomainError("elevation_space_moments: non-finite sample " +
                                  std::to_string(k));
            out.moments.col(k).setConstant(kNaN);
            out.flagged[k] = 1;
            continue;
        }
        if (tau_nm_kg.col(k).head<3>().cwiseAbs().maxCoeff() != 0.0)
            throw DomainError(
                "elevation_space_moments: pelvis moment entries must be zero "
                "(sample " + std::to_string(k) + ")");

        const ReducedJacobian jac = elevation_jacobian(q_rad.col(k), side);
        if (jac.degenerate) {
            out.moments.col(k).setConstant(kNaN);
            out.flagged[k] = 1;
            continue;
        }
        const Eigen::Matrix<double, 3, kActuatedCount> j_act =
            jac.J.block<3, kActuatedCount>(0, kActuatedStart);
        const PinvResult p = pseudo_inverse(j_act.transpose(), rank_rtol);
        if (p.rank < 3) {
            out.moments.col(k).setConstant(kNaN);
            out.flagged[k] = 1;
            continue;
        }
        out.moments.col(k) =
            p.pinv * tau_nm_kg.col(k).segment<kActuatedCount>(kActuatedStart);
    }
    return out;
}

EsmSeries smooth_esm(const EsmSeries& esm, int window) {
    if (window <= 1) return esm;
    if (window % 2 == 0)
        throw DomainError("smooth_esm: window must be odd");
    const Eigen::Index n = esm.size();
    const int half = window / 2;
    EsmSeries out = esm;
    for (Eigen::Index k = 0; k < n; ++k) {
        if (esm.flagged[k]) continue;
        Vec3 acc = Vec3::Zero();
        int count = 0;
        for (Eigen::Index j = std::max<Eigen::Index>(0, k - half);
             j <= std::min<Eigen::Index>(n - 1, k + half); ++j) {
            if (esm.flagged[j]) continue;
            acc += esm.moments.col(j);
            ++count;
        }
        if (count > 0) out.moments.col(k) = acc / count;
    }
    return out;
}

PowerReport power_check(const JointSeries& qdot_rad_s,
                        const JointSeries& tau_nm_kg,
                        const Eigen::Matrix3Xd& esm_moments,
                        const Eigen::Matrix3Xd& alpha_rates,
                        const SampleFlags& flags) {
    const Eigen::Index n = qdot_rad_s.cols();
    if (tau_nm_kg.cols() != n || esm_moments.cols() != n || alpha_rates.cols() != n)
        throw DomainError("power_check: series grids differ");

    PowerReport out;
    out.joint_power.resize(n);
    out.esm_power.resize(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        out.joint_power[k] = tau_nm_kg.col(k).dot(qdot_rad_s.col(k));
        out.esm_power[k] = esm_moments.col(k).dot(alpha_rates.col(k));
    }

    // Statistics over usable samples only.
    double pj_min = kNaN, pj_max = kNaN, sum = 0.0;
    Eigen::Index m = 0;
    auto usable = [&](Eigen::Index k) {
        if (k < static_cast<Eigen::Index>(flags.size()) && flags[k]) return false;
        return std::isfinite(out.joint_power[k]) && std::isfinite(out.esm_power[k]);
    };
    for (Eigen::Index k = 0; k < n; ++k) {
        if (!usable(k)) continue;
        const double pj = out.joint_power[k];
        pj_min = (m == 0) ? pj : std::min(pj_min, pj);
        pj_max = (m == 0) ? pj : std::max(pj_max, pj);
        sum += pj;
        ++m;
    }
    if (m < 2 || !(pj_max > pj_min)) {
        out.degenerate = true;
        out.r2 = kNaN;
        out.nrmse_pct = kNaN;
        return out;
    }
    const double mean = sum / static_cast<double>(m);
    double ss_res = 0.0, ss_tot = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) {
        if (!usable(k)) continue;
        const double r = out.joint_power[k] - out.esm_power[k];
        ss_res += r * r;
        const double c = out.joint_power[k] - mean;
        ss_tot += c * c;
    }
    out.r2 = 1.0 - ss_res / ss_tot;
    out.nrmse_pct =
        std::sqrt(ss_res / static_cast<double>(m)) / (pj_max - pj_min) * 100.0;
    return out;
}

} // namespace gaitcoord
