#pragma once

#include <Eigen/Core>

#include "cable/core.hpp"

namespace cable {

struct ArmConfig {
  Eigen::Vector3d link_lengths_mm{80.0, 70.0, 70.0};
  Eigen::Vector3d joint_min_deg{-90.0, -90.0, -90.0};
  Eigen::Vector3d joint_max_deg{90.0, 90.0, 90.0};
  Point2 base_position_mm{0.0, 0.0};
};

struct CableConfig {
  double total_length_mm = 250.0;
  int node_count = 25;
  double stiffness = 1200.0;       // segment spring rate, force per mm of stretch
  double damping = 8.0;            // along-segment relative-velocity damping
  double ground_friction = 2.5;    // viscous drag rate, 1/s
  double node_mass = 1.0;
  double dt_s = 0.002;

  double segment_rest_length_mm() const { return total_length_mm / (node_count - 1); }
};

struct Workspace {
  double width_mm = 785.0;
  double height_mm = 515.0;
};

// The workspace rectangle is centered on the origin of the workspace frame;
// the arm base sits at ArmConfig::base_position_mm within it.
struct SimConfig {
  ArmConfig arm;
  CableConfig cable;
  Workspace workspace;
  double motion_time_s = 0.25;
  double settle_speed_mm_s = 1.0;
  double settle_timeout_s = 5.0;
};

// Node 0 coincides with the arm end-effector at joints_deg.
struct CableState {
  Eigen::Matrix2Xd node_positions_mm;
  Eigen::Matrix2Xd node_velocities_mm_s;
  JointVector joints_deg;
};

// Planar chain FK with cumulative angles. Throws LimitViolation when a joint
// is outside its configured interval.
Point2 forward_kinematics(const ArmConfig& arm, const JointVector& joints_deg);

// Closed-boundary point-in-rectangle test.
bool in_workspace(const Point2& point_mm, const Workspace& ws);

void check_joint_limits(const ArmConfig& arm, const JointVector& joints_deg);

// Settled rest state: cable laid out straight from the end-effector back
// along -x, all velocities zero.
CableState initial_state(const SimConfig& cfg, const JointVector& joints_deg = JointVector::Zero());

struct MotionTrace {
  CableState settled;
  CableState at_motion_end;      // snapshot the moment the arm reaches the target
  double peak_kinetic_energy = 0.0;
  double settled_kinetic_energy = 0.0;
  double settle_duration_s = 0.0;  // simulated time spent settling after motion
};

// Moves the arm from the current joints to `target_deg` at constant angular
// rate over motion_time_s, integrating the cable (semi-implicit Euler), then
// keeps stepping until every node is slower than settle_speed_mm_s or the
// settle timeout elapses. Throws InstabilityError on non-finite state.
CableState execute_motion(const CableState& state, const JointVector& target_deg,
                          const SimConfig& cfg);
MotionTrace execute_motion_traced(const CableState& state, const JointVector& target_deg,
                                  const SimConfig& cfg);

}  // namespace cable
