#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jetapprox {

enum class ErrorKind {
  PoleEvaluation,
  ResidueObstruction,
  NoConvergence,
  AmbiguousWinding,
  CurveNotClosed,
  InvalidParams,
  NotDifferentiable,
  NotTabulated,
  PoleTooClose,
  DegenerateChord,
  IllConditioned,
  InsufficientSamples,
  NonTermination,
  Uncovered,
  GammaCheckFailed,
  Validation,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PoleEvaluation: return "PoleEvaluation";
    case ErrorKind::ResidueObstruction: return "ResidueObstruction";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::AmbiguousWinding: return "AmbiguousWinding";
    case ErrorKind::CurveNotClosed: return "CurveNotClosed";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::NotDifferentiable: return "NotDifferentiable";
    case ErrorKind::NotTabulated: return "NotTabulated";
    case ErrorKind::PoleTooClose: return "PoleTooClose";
    case ErrorKind::DegenerateChord: return "DegenerateChord";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::InsufficientSamples: return "InsufficientSamples";
    case ErrorKind::NonTermination: return "NonTermination";
    case ErrorKind::Uncovered: return "Uncovered";
    case ErrorKind::GammaCheckFailed: return "GammaCheckFailed";
    case ErrorKind::Validation: return "Validation";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace jetapprox
