#pragma once

#include <Eigen/Dense>

namespace ratelab {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kDegToRad = kPi / 180.0;
inline constexpr double kRadToDeg = 180.0 / kPi;

// Body angular rates in deg/s, ordered (roll, pitch, yaw). Rates stay in
// deg/s everywhere; conversion to rad/s happens only inside the dynamics
// integrator.
using Rates = Eigen::Vector3d;

// Normalized actuation for the four motors, each in [0, 1].
using Motors = Eigen::Vector4d;

// Motor thrust fraction -> body torque map, rows = motors, columns =
// (roll, pitch, yaw).
using MixingMatrix = Eigen::Matrix<double, 4, 3>;

inline constexpr int kStateSize = 13;

// Flattened agent observation.
using StateVec = Eigen::Matrix<double, kStateSize, 1>;

// Agent-facing state: tracking error, measured rates, per-control-step rate
// change (not divided by dt) and the previously applied motor command.
struct StateVector {
  Rates error = Rates::Zero();  // setpoint - measured
  Rates phi = Rates::Zero();    // measured body rates
  Rates dphi = Rates::Zero();   // phi_t - phi_{t-1}; zero at episode step 0
  Motors y_prev = Motors::Zero();
};

// Flattening order: [error, phi, dphi, y_prev].
inline StateVec flatten_state(const StateVector& s) {
  StateVec v;
  v << s.error, s.phi, s.dphi, s.y_prev;
  return v;
}

inline StateVector unflatten_state(const StateVec& v) {
  StateVector s;
  s.error = v.segment<3>(0);
  s.phi = v.segment<3>(3);
  s.dphi = v.segment<3>(6);
  s.y_prev = v.segment<4>(9);
  return s;
}

inline Motors clamp_motors(const Motors& y) {
  return y.cwiseMax(0.0).cwiseMin(1.0);
}

// Wrap an angle to (-pi, pi].
inline double wrap_angle(double a) {
  a = std::fmod(a + kPi, 2.0 * kPi);
  if (a <= 0.0) a += 2.0 * kPi;
  return a - kPi;
}

}  // namespace ratelab
