#pragma once

#include <stdexcept>
#include <string>

namespace cooksched {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters or instance setup that cannot be used (missing points, bad speed, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Malformed data: non-permutations, length mismatches, negative times, bad positions.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Problem size outside what an operation supports.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// The instance lacks the data an operation needs (e.g. coordinates).
class UnsupportedInstanceError : public Error {
 public:
  using Error::Error;
};

class DegenerateHullError : public Error {
 public:
  using Error::Error;
};

/// Speed calibration could not hit the requested stove-dominance fraction.
class CalibrationError : public Error {
 public:
  CalibrationError(const std::string& what, double closest_fraction, double closest_speed)
      : Error(what), closest_fraction_(closest_fraction), closest_speed_(closest_speed) {}

  double closest_fraction() const noexcept { return closest_fraction_; }
  double closest_speed() const noexcept { return closest_speed_; }

 private:
  double closest_fraction_;
  double closest_speed_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace cooksched
