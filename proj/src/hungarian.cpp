#include "wow/hungarian.hpp"

#include <cmath>
#include <limits>

#include "wow/common.hpp"

namespace wow {

// Classic potentials formulation: rows are scanned in order, each augmenting
// via the shortest alternating path. Ties resolve to the smallest column
// index through the scan order.
AssignmentResult solve_assignment(const std::vector<std::vector<double>>& a) {
  const int n = static_cast<int>(a.size());
  require(n > 0, ErrorCode::invalid_input, "assignment: empty matrix");
  for (const auto& row : a)
    require(static_cast<int>(row.size()) == n, ErrorCode::invalid_input,
            "assignment: matrix must be square");

  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(static_cast<size_t>(n + 1), 0.0), v(static_cast<size_t>(n + 1), 0.0);
  std::vector<int> p(static_cast<size_t>(n + 1), 0), way(static_cast<size_t>(n + 1), 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(static_cast<size_t>(n + 1), inf);
    std::vector<char> used(static_cast<size_t>(n + 1), 0);
    do {
      used[static_cast<size_t>(j0)] = 1;
      int i0 = p[static_cast<size_t>(j0)], j1 = -1;
      double delta = inf;
      for (int j = 1; j <= n; ++j) {
        if (used[static_cast<size_t>(j)]) continue;
        double cur = a[static_cast<size_t>(i0 - 1)][static_cast<size_t>(j - 1)] - u[static_cast<size_t>(i0)] - v[static_cast<size_t>(j)];
        if (cur < minv[static_cast<size_t>(j)]) {
          minv[static_cast<size_t>(j)] = cur;
          way[static_cast<size_t>(j)] = j0;
        }
        if (minv[static_cast<size_t>(j)] < delta) {
          delta = minv[static_cast<size_t>(j)];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[static_cast<size_t>(j)]) {
          u[static_cast<size_t>(p[static_cast<size_t>(j)])] += delta;
          v[static_cast<size_t>(j)] -= delta;
        } else {
          minv[static_cast<size_t>(j)] -= delta;
        }
      }
      j0 = j1;
    } while (p[static_cast<size_t>(j0)] != 0);
    do {
      int j1 = way[static_cast<size_t>(j0)];
      p[static_cast<size_t>(j0)] = p[static_cast<size_t>(j1)];
      j0 = j1;
    } while (j0);
  }

  AssignmentResult res;
  res.col_of_row.assign(static_cast<size_t>(n), -1);
  for (int j = 1; j <= n; ++j)
    if (p[static_cast<size_t>(j)] > 0) res.col_of_row[static_cast<size_t>(p[static_cast<size_t>(j)] - 1)] = j - 1;
  double total = 0;
  for (int i = 0; i < n; ++i) total += a[static_cast<size_t>(i)][static_cast<size_t>(res.col_of_row[static_cast<size_t>(i)])];
  res.cost = total;
  return res;
}

}  // namespace wow
