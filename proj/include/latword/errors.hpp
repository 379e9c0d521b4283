#pragma once

#include <stdexcept>
#include <string>

namespace latword {

enum class errc {
  unknown_element,
  cycle_detected,
  degenerate_spectrum,
  order_violation,
  sum_mismatch,
  nonpositive_frequency,
  not_lattice,
  convention_unsupported,
  dimension_mismatch,
  dimension_cap,
  infinite_intersection,
  vanishing_survival,
  invalid_argument,
  resource_bound,
  horizon_cap,
  acceptance_too_low,
};

/// All library failures throw this; `code()` distinguishes validation
/// failures from resource exhaustion (the CLI maps them to exit codes).
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

  bool is_resource() const noexcept {
    return code_ == errc::resource_bound || code_ == errc::horizon_cap ||
           code_ == errc::acceptance_too_low;
  }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::unknown_element: return "UnknownElement";
    case errc::cycle_detected: return "CycleDetected";
    case errc::degenerate_spectrum: return "DegenerateSpectrum";
    case errc::order_violation: return "OrderViolation";
    case errc::sum_mismatch: return "SumMismatch";
    case errc::nonpositive_frequency: return "NonpositiveFrequency";
    case errc::not_lattice: return "NotLattice";
    case errc::convention_unsupported: return "ConventionUnsupported";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::dimension_cap: return "DimensionCap";
    case errc::infinite_intersection: return "InfiniteIntersection";
    case errc::vanishing_survival: return "VanishingSurvival";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::resource_bound: return "ResourceBound";
    case errc::horizon_cap: return "HorizonCap";
    case errc::acceptance_too_low: return "AcceptanceTooLow";
  }
  return "Error";
}

}  // namespace latword
