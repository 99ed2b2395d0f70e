// gaitcoord core value types: joint-vector layout, laterality, segment frames
#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <vector>

namespace gaitcoord {

inline constexpr int kNumJointDof = 12;

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using JointVec = Eigen::Matrix<double, kNumJointDof, 1>;
using JointSeries = Eigen::Matrix<double, kNumJointDof, Eigen::Dynamic>;

/// Component order of the 12-dof joint vector. Flexion/adduction/rotation
/// grouping per joint; the ankle group is (dorsiflexion, inversion, rotation).
enum JointIndex : int {
    kPelvisTilt = 0,
    kPelvisObliquity,
    kPelvisRotation,
    kHipFlexion,
    kHipAdduction,
    kHipRotation,
    kKneeFlexion,
    kKneeAdduction,
    kKneeRotation,
    kAnkleDorsiflexion,
    kAnkleInversion,
    kAnkleRotation,
};

enum class Side { Left, Right };

std::string to_string(Side side);
Side side_from_string(const std::string& text);

/// Orientation of the four leg segment frames at one sample, as rotations
/// from the segment frame to the subject-fixed global frame.
struct SegmentFrames {
    Mat3 pelvis;
    Mat3 thigh;
    Mat3 shank;
    Mat3 foot;
};

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kDegPerRad = 180.0 / kPi;
inline constexpr double kRadPerDeg = kPi / 180.0;

inline double deg2rad(double deg) { return deg * kRadPerDeg; }
inline double rad2deg(double rad) { return rad * kDegPerRad; }

/// Per-sample exclusion flags carried through a pipeline (non-finite input,
/// gimbal-degenerate axis, rank-deficient posture).
using SampleFlags = std::vector<std::uint8_t>;

inline int flagged_count(const SampleFlags& flags) {
    int n = 0;
    for (auto f : flags) n += (f != 0);
    return n;
}

} // namespace gaitcoord
