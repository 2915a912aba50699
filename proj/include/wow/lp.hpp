#ifndef WOW_LP_HPP
#define WOW_LP_HPP

#include <vector>

namespace wow {

/// Outcome of a dense LP solve: min c.x s.t. A x = b, x >= 0.
struct LpResult {
  bool feasible = false;
  bool bounded = true;
  double objective = 0.0;
  std::vector<double> x;
  std::vector<double> duals;  // one multiplier per equality row
};

/// Two-phase primal simplex with Bland's rule (deterministic, anti-cycling).
/// Dense tableau; intended for small desk-scale instances
/// (a few dozen rows, a few thousand columns).
LpResult solve_lp_min(const std::vector<double>& c,
                      const std::vector<std::vector<double>>& a,
                      const std::vector<double>& b);

}  // namespace wow

#endif
