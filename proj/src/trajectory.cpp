#include "ratelab/trajectory.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace ratelab {

namespace {

constexpr const char* kMagicLine = "# ratelab-trajectory v1";

void append_number(std::string& line, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), " %.17g", v);
  line += buf;
}

double parse_number(const std::string& cell, int line_no, const std::string& column) {
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw TrajectoryFormatError("line " + std::to_string(line_no) + ": non-numeric cell '" +
                                cell + "' in column " + column);
  }
  return value;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

const std::vector<std::string> kFixedPrefix = {
    "step",     "sp_roll",  "sp_pitch", "sp_yaw", "phi_roll", "phi_pitch",
    "phi_yaw",  "obs_roll", "obs_pitch", "obs_yaw", "y0",      "y1",
    "y2",       "y3",       "m0",        "m1",      "m2",      "m3"};

}  // namespace

void write_trajectory(std::ostream& out, const Trajectory& traj) {
  if (!(traj.dt > 0.0)) {
    throw TrajectoryFormatError("trajectory dt must be > 0");
  }
  out << kMagicLine << "\n";
  {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", traj.dt);
    out << "# dt " << buf << "\n";
  }
  std::string header;
  for (const auto& name : kFixedPrefix) {
    if (!header.empty()) header += ' ';
    header += name;
  }
  for (const auto& label : traj.reward_labels) header += " r_" + label;
  header += " reward done";
  out << header << "\n";

  const int n_components = static_cast<int>(traj.reward_labels.size());
  for (const auto& row : traj.rows) {
    if (row.reward_components.size() != n_components) {
      throw TrajectoryFormatError("row " + std::to_string(row.step) +
                                  ": reward component count does not match labels");
    }
    std::string line = std::to_string(row.step);
    for (int i = 0; i < 3; ++i) append_number(line, row.setpoint[i]);
    for (int i = 0; i < 3; ++i) append_number(line, row.phi[i]);
    for (int i = 0; i < 3; ++i) append_number(line, row.phi_obs[i]);
    for (int i = 0; i < 4; ++i) append_number(line, row.action[i]);
    for (int i = 0; i < 4; ++i) append_number(line, row.motor[i]);
    for (int i = 0; i < n_components; ++i) append_number(line, row.reward_components[i]);
    append_number(line, row.reward);
    line += row.terminated_early ? " 1" : " 0";
    out << line << "\n";
  }
}

Trajectory read_trajectory(std::istream& in) {
  Trajectory traj;
  std::string line;
  int line_no = 0;

  if (!std::getline(in, line) || line != kMagicLine) {
    throw TrajectoryFormatError("line 1: missing '"+ std::string(kMagicLine) + "' magic line");
  }
  ++line_no;
  if (!std::getline(in, line)) {
    throw TrajectoryFormatError("line 2: missing '# dt' line");
  }
  ++line_no;
  {
    std::istringstream ss(line);
    std::string hash, key, value;
    if (!(ss >> hash >> key >> value) || hash != "#" || key != "dt") {
      throw TrajectoryFormatError("line 2: expected '# dt <seconds>', got '" + line + "'");
    }
    traj.dt = parse_number(value, line_no, "dt");
    if (!(traj.dt > 0.0)) {
      throw TrajectoryFormatError("line 2: dt must be > 0");
    }
  }
  if (!std::getline(in, line)) {
    throw TrajectoryFormatError("line 3: missing header row");
  }
  ++line_no;
  const auto columns = split_ws(line);
  if (columns.size() < kFixedPrefix.size() + 2) {
    throw TrajectoryFormatError("line 3: header names too few columns");
  }
  for (std::size_t i = 0; i < kFixedPrefix.size(); ++i) {
    if (columns[i] != kFixedPrefix[i]) {
      throw TrajectoryFormatError("line 3: header column " + std::to_string(i + 1) +
                                  " is '" + columns[i] + "', expected '" + kFixedPrefix[i] + "'");
    }
  }
  if (columns[columns.size() - 2] != "reward" || columns.back() != "done") {
    throw TrajectoryFormatError("line 3: header must end with 'reward done'");
  }
  for (std::size_t i = kFixedPrefix.size(); i + 2 < columns.size() + 0; ++i) {
    const auto& c = columns[i];
    if (c.rfind("r_", 0) != 0) {
      throw TrajectoryFormatError("line 3: reward component column '" + c +
                                  "' must be named r_<label>");
    }
    traj.reward_labels.push_back(c.substr(2));
  }
  const int n_components = static_cast<int>(traj.reward_labels.size());
  const std::size_t n_columns = columns.size();

  int expected_step = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto cells = split_ws(line);
    if (cells.size() != n_columns) {
      throw TrajectoryFormatError("line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(n_columns) + " cells, got " +
                                  std::to_string(cells.size()));
    }
    TrajectoryRow row;
    const double step_val = parse_number(cells[0], line_no, "step");
    row.step = static_cast<int>(step_val);
    if (static_cast<double>(row.step) != step_val || row.step != expected_step) {
      throw TrajectoryFormatError("line " + std::to_string(line_no) +
                                  ": non-contiguous step index " + cells[0] + ", expected " +
                                  std::to_string(expected_step));
    }
    ++expected_step;
    std::size_t c = 1;
    for (int i = 0; i < 3; ++i) row.setpoint[i] = parse_number(cells[c], line_no, columns[c]), ++c;
    for (int i = 0; i < 3; ++i) row.phi[i] = parse_number(cells[c], line_no, columns[c]), ++c;
    for (int i = 0; i < 3; ++i) row.phi_obs[i] = parse_number(cells[c], line_no, columns[c]), ++c;
    for (int i = 0; i < 4; ++i) row.action[i] = parse_number(cells[c], line_no, columns[c]), ++c;
    for (int i = 0; i < 4; ++i) row.motor[i] = parse_number(cells[c], line_no, columns[c]), ++c;
    row.reward_components.resize(n_components);
    for (int i = 0; i < n_components; ++i) {
      row.reward_components[i] = parse_number(cells[c], line_no, columns[c]), ++c;
    }
    row.reward = parse_number(cells[c], line_no, columns[c]);
    ++c;
    if (cells[c] == "0") {
      row.terminated_early = false;
    } else if (cells[c] == "1") {
      row.terminated_early = true;
    } else {
      throw TrajectoryFormatError("line " + std::to_string(line_no) +
                                  ": done flag must be 0 or 1, got '" + cells[c] + "'");
    }
    traj.rows.push_back(std::move(row));
  }
  return traj;
}

void save_trajectory(const std::string& path, const Trajectory& traj) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_trajectory(out, traj);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

Trajectory load_trajectory(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return read_trajectory(in);
}

}  // namespace ratelab
