#ifndef HEINZLOG_REPORT_HPP
#define HEINZLOG_REPORT_HPP

#include <algorithm>
#include <cstdint>
#include <string>

namespace heinzlog {

// Relative slack below which an inequality instance counts as violated.
inline constexpr double kViolationTolerance = 1e-9;

/// One checked instance of an inequality lhs <= rhs.
struct InequalityReport {
  std::string theorem;
  int part = 1;  // 1-based index for checkers that emit several inequalities
  double s = 0.0;
  double t = 0.0;
  int dim = 0;
  std::uint64_t seed = 0;
  std::int64_t trial = 0;
  std::string norm;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double relative_slack = 0.0;
  bool holds = true;
  bool hypothesis_satisfied = true;

  friend bool operator==(const InequalityReport&, const InequalityReport&) = default;
};

/// Fills lhs/rhs and the derived slack fields.
inline void set_sides(InequalityReport& r, double lhs, double rhs) {
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.relative_slack = r.slack / std::max(rhs, 1e-300);
  r.holds = r.relative_slack >= -kViolationTolerance;
}

}  // namespace heinzlog

#endif  // HEINZLOG_REPORT_HPP
