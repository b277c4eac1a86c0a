#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace cable {

using Point2 = Eigen::Vector2d;

// Three joint angles. Units (degrees vs normalized [0,1]) are part of each
// function contract; names carry a _deg or _norm suffix where it matters.
using JointVector = Eigen::Vector3d;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Joint command outside the configured per-joint box.
class LimitViolation : public Error {
 public:
  using Error::Error;
};

// Non-finite state encountered while integrating the cable.
class InstabilityError : public Error {
 public:
  using Error::Error;
};

// Malformed or truncated file content (PGM, dataset, checkpoint, CSV).
class FormatError : public Error {
 public:
  using Error::Error;
};

// Bad configuration value or unknown config key. CLI exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A pipeline stage failed (missing inputs, divergence, ...). CLI exit code 3.
class StageError : public Error {
 public:
  using Error::Error;
};

inline constexpr double kPi = 3.14159265358979323846;

inline double deg_to_rad(double deg) { return deg * (kPi / 180.0); }

}  // namespace cable
