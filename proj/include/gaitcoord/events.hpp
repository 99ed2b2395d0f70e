// gaitcoord gait events: container, validation, kinematic fallback detection
#pragma once

#include "gaitcoord/types.hpp"

#include <Eigen/Core>

#include <vector>

namespace gaitcoord {

struct TrialRecord;

/// Heel-strike and toe-off raw sample indices for one leg, strictly
/// increasing and alternating in time.
struct GaitEvents {
    std::vector<Eigen::Index> heel_strikes;
    std::vector<Eigen::Index> toe_offs;

    bool empty() const { return heel_strikes.empty() && toe_offs.empty(); }
    /// Throws InputError on out-of-range, non-increasing, or non-alternating
    /// events.
    void validate(Eigen::Index n_samples) const;
};

struct DetectedEvents {
    GaitEvents events;
    /// Normalized autocorrelation at the detected period; 1 for a perfectly
    /// periodic signal.
    double confidence = 0.0;
};

/// Fallback event detection from foot elevation-angle extrema: heel strikes
/// at the periodic maxima, toe-offs at the minima. Throws DomainError when no
/// periodicity is found. File-supplied events always take precedence over
/// this heuristic.
DetectedEvents detect_events_from_kinematics(const TrialRecord& trial);

} // namespace gaitcoord
