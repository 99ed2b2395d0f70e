// gaitcoord elementary rotations and the laterality-corrected joint chain
#pragma once

#include "gaitcoord/types.hpp"

#include <array>
#include <cmath>

namespace gaitcoord {

enum class Axis { X, Y, Z };

Mat3 rot_x(double angle_rad);
Mat3 rot_y(double angle_rad);
Mat3 rot_z(double angle_rad);
Mat3 rotation_about(Axis axis, double angle_rad);

/// Unit vector of a principal axis.
Vec3 axis_vector(Axis axis);

/// One elementary factor of the segment orientation chain. The factor
/// evaluates to R_axis(sign * q[q_index] + offset) with sign chosen by
/// laterality.
struct RotationFactor {
    Axis axis;
    int q_index;
    double sign_left;
    double sign_right;
    double offset_rad;

    double sign(Side side) const {
        return side == Side::Left ? sign_left : sign_right;
    }
    double argument(const JointVec& q, Side side) const {
        return sign(side) * q[q_index] + offset_rad;
    }
};

/// The full pelvis->thigh->shank->foot chain: 12 intrinsic factors in
/// composition order. Signs and the ankle factor order (dorsiflexion,
/// rotation, inversion) follow the laterality correction table; pelvis tilt
/// enters negated, knee flexion enters negated, and the ankle dorsiflexion
/// factor carries a +90 degree offset.
const std::array<RotationFactor, kNumJointDof>& segment_chain();

/// Number of leading chain factors composing each segment frame:
/// pelvis 3, thigh 6, shank 9, foot 12.
inline constexpr std::array<int, 4> kSegmentChainLength = {3, 6, 9, 12};

/// max-norm of R*R^T - I; 0 for a perfectly orthonormal matrix.
double orthonormality_error(const Mat3& r);

} // namespace gaitcoord
