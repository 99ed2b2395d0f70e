#include "gaitcoord/rotations.hpp"

#include "gaitcoord/error.hpp"

namespace gaitcoord {

std::string to_string(Side side) {
    return side == Side::Left ? "Left" : "Right";
}

Side side_from_string(const std::string& text) {
    if (text == "Left" || text == "left" || text == "L") return Side::Left;
    if (text == "Right" || text == "right" || text == "R") return Side::Right;
    throw InputError("unknown side: '" + text + "' (expected Left or Right)");
}

Mat3 rot_x(double a) {
    const double c = std::cos(a), s = std::sin(a);
    Mat3 r;
    r << 1, 0, 0,
         0, c, -s,
         0, s, c;
    return r;
}

Mat3 rot_y(double a) {
    const double c = std::cos(a), s = std::sin(a);
    Mat3 r;
    r << c, 0, s,
         0, 1, 0,
        -s, 0, c;
    return r;
}

Mat3 rot_z(double a) {
    const double c = std::cos(a), s = std::sin(a);
    Mat3 r;
    r << c, -s, 0,
         s, c, 0,
         0, 0, 1;
    return r;
}

Mat3 rotation_about(Axis axis, double a) {
    switch (axis) {
    case Axis::X: return rot_x(a);
    case Axis::Y: return rot_y(a);
    default: return rot_z(a);
    }
}

Vec3 axis_vector(Axis axis) {
    switch (axis) {
    case Axis::X: return Vec3::UnitX();
    case Axis::Y: return Vec3::UnitY();
    default: return Vec3::UnitZ();
    }
}

const std::array<RotationFactor, kNumJointDof>& segment_chain() {
    // Laterality sign-correction table. Note the ankle group order: the
    // x factor takes ankle *rotation* and the y factor ankle *inversion*,
    // unlike the hip/knee (x adduction, y rotation).
    static const std::array<RotationFactor, kNumJointDof> chain = {{
        {Axis::Z, kPelvisTilt, -1.0, -1.0, 0.0},
        {Axis::X, kPelvisObliquity, +1.0, -1.0, 0.0},
        {Axis::Y, kPelvisRotation, +1.0, +1.0, 0.0},
        {Axis::Z, kHipFlexion, +1.0, +1.0, 0.0},
        {Axis::X, kHipAdduction, -1.0, +1.0, 0.0},
        {Axis::Y, kHipRotation, -1.0, +1.0, 0.0},
        {Axis::Z, kKneeFlexion, -1.0, -1.0, 0.0},
        {Axis::X, kKneeAdduction, -1.0, +1.0, 0.0},
        {Axis::Y, kKneeRotation, -1.0, +1.0, 0.0},
        {Axis::Z, kAnkleDorsiflexion, +1.0, +1.0, kPi / 2.0},
        {Axis::X, kAnkleRotation, -1.0, +1.0, 0.0},
        {Axis::Y, kAnkleInversion, +1.0, -1.0, 0.0},
    }};
    return chain;
}

double orthonormality_error(const Mat3& r) {
    return (r * r.transpose() - Mat3::Identity()).cwiseAbs().maxCoeff();
}

} // namespace gaitcoord
