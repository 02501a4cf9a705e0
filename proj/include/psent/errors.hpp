#pragma once

#include <stdexcept>
#include <string>

namespace psent {

// Base class for every error raised by the library. name() is the stable
// identifier the CLI prints (e.g. "ZeroDetectionProbability").
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message) : Error("DomainError", message) {}
};

// The heralding event has probability zero (lambda = 0 or R = 0), so the
// conditional state does not exist.
class ZeroDetectionProbability : public Error {
 public:
  explicit ZeroDetectionProbability(const std::string& message)
      : Error("ZeroDetectionProbability", message) {}
};

class NonSymmetric : public Error {
 public:
  explicit NonSymmetric(const std::string& message) : Error("NonSymmetric", message) {}
};

class NoConvergence : public Error {
 public:
  explicit NoConvergence(const std::string& message) : Error("NoConvergence", message) {}
};

class NoSignChange : public Error {
 public:
  explicit NoSignChange(const std::string& message) : Error("NoSignChange", message) {}
};

}  // namespace psent
