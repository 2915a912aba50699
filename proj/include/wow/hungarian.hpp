#ifndef WOW_HUNGARIAN_HPP
#define WOW_HUNGARIAN_HPP

#include <vector>

namespace wow {

/// Exact min-cost assignment on a square cost matrix (row-major, n x n).
/// O(n^3) potential method with deterministic row-scan tie-breaking.
/// Returns the column assigned to each row.
struct AssignmentResult {
  double cost = 0;
  std::vector<int> col_of_row;
};
AssignmentResult solve_assignment(const std::vector<std::vector<double>>& cost);

}  // namespace wow

#endif
