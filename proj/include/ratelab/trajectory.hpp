#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ratelab/types.hpp"

namespace ratelab {

// Raised on malformed trajectory files; the message carries the offending
// line number and a short reason.
struct TrajectoryFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One control step of a logged episode. `phi` is the true body rate,
// `phi_obs` the gyro-observed one (they differ by sensor noise); the gap
// analyses need the true state, tracking metrics use the observed one.
// `motor` is the lagged motor output after the step, logged so a playback
// run can be initialized to the exact mid-flight dynamics state.
struct TrajectoryRow {
  int step = 0;
  Rates setpoint = Rates::Zero();
  Rates phi = Rates::Zero();
  Rates phi_obs = Rates::Zero();
  Motors action = Motors::Zero();  // applied (clamped) command
  Motors motor = Motors::Zero();   // motor output after lag, end of step
  Eigen::VectorXd reward_components;
  double reward = 0.0;
  bool terminated_early = false;
};

// Time-indexed episode log. Plain-text serialization below is the contract
// for every file the CLI writes or reads.
struct Trajectory {
  double dt = 0.0;  // seconds per control step, > 0, constant
  std::vector<std::string> reward_labels;
  std::vector<TrajectoryRow> rows;

  int steps() const { return static_cast<int>(rows.size()); }
  double duration() const { return dt * static_cast<double>(rows.size()); }
};

// Line-oriented text format:
//   # ratelab-trajectory v1
//   # dt <seconds>
//   <header row naming all columns>
//   <one record per line, decimal text numbers>
// Numbers are written with 17 significant digits so that doubles round-trip
// bit-exactly. Reward component columns are named r_<label>.
void write_trajectory(std::ostream& out, const Trajectory& traj);
Trajectory read_trajectory(std::istream& in);

void save_trajectory(const std::string& path, const Trajectory& traj);
Trajectory load_trajectory(const std::string& path);

}  // namespace ratelab
