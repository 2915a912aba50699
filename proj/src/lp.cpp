#include "wow/lp.hpp"

#include <cmath>
#include <cstddef>
#include <limits>

#include "wow/common.hpp"

namespace wow {

namespace {

constexpr double kEps = 1e-10;

// Tableau simplex over columns 0..n_total-1, rows carry basic variables.
// obj is the reduced-cost row; the objective value is recovered from the
// basis afterwards. Returns false when unbounded.
bool run_simplex(std::vector<std::vector<double>>& t, std::vector<double>& rhs,
                 std::vector<double>& obj, std::vector<int>& basis,
                 int n_total, long max_iter) {
  const int m = static_cast<int>(t.size());
  for (long iter = 0; iter < max_iter; ++iter) {
    // Bland: entering = smallest index with negative reduced cost.
    int enter = -1;
    for (int j = 0; j < n_total; ++j) {
      if (obj[static_cast<size_t>(j)] < -kEps) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return true;
    // Ratio test; ties broken by smallest basic variable index.
    int leave = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      double a = t[static_cast<size_t>(i)][static_cast<size_t>(enter)];
      if (a > kEps) {
        double r = rhs[static_cast<size_t>(i)] / a;
        if (r < best - kEps ||
            (r < best + kEps && (leave < 0 || basis[static_cast<size_t>(i)] <
                                                  basis[static_cast<size_t>(leave)]))) {
          best = r;
          leave = i;
        }
      }
    }
    if (leave < 0) return false;  // unbounded
    // Pivot on (leave, enter).
    double piv = t[static_cast<size_t>(leave)][static_cast<size_t>(enter)];
    for (int j = 0; j < n_total; ++j) t[static_cast<size_t>(leave)][static_cast<size_t>(j)] /= piv;
    rhs[static_cast<size_t>(leave)] /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave) continue;
      double f = t[static_cast<size_t>(i)][static_cast<size_t>(enter)];
      if (f == 0.0) continue;
      for (int j = 0; j < n_total; ++j)
        t[static_cast<size_t>(i)][static_cast<size_t>(j)] -= f * t[static_cast<size_t>(leave)][static_cast<size_t>(j)];
      rhs[static_cast<size_t>(i)] -= f * rhs[static_cast<size_t>(leave)];
      if (rhs[static_cast<size_t>(i)] < 0 && rhs[static_cast<size_t>(i)] > -1e-12) rhs[static_cast<size_t>(i)] = 0;
    }
    double f = obj[static_cast<size_t>(enter)];
    for (int j = 0; j < n_total; ++j)
      obj[static_cast<size_t>(j)] -= f * t[static_cast<size_t>(leave)][static_cast<size_t>(j)];
    basis[static_cast<size_t>(leave)] = enter;
  }
  throw Error(ErrorCode::solver_failure, "simplex iteration cap exceeded");
}

}  // namespace

LpResult solve_lp_min(const std::vector<double>& c,
                      const std::vector<std::vector<double>>& a,
                      const std::vector<double>& b) {
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(c.size());
  require(m > 0 && n > 0, ErrorCode::invalid_input, "lp: empty problem");
  for (const auto& row : a)
    require(static_cast<int>(row.size()) == n, ErrorCode::invalid_input,
            "lp: ragged constraint matrix");
  require(static_cast<int>(b.size()) == m, ErrorCode::invalid_input,
          "lp: rhs length mismatch");

  const int n_total = n + m;  // structural + artificial
  std::vector<std::vector<double>> t(static_cast<size_t>(m),
                                     std::vector<double>(static_cast<size_t>(n_total), 0.0));
  std::vector<double> rhs(static_cast<size_t>(m));
  std::vector<int> basis(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    double s = b[static_cast<size_t>(i)] < 0 ? -1.0 : 1.0;
    for (int j = 0; j < n; ++j) t[static_cast<size_t>(i)][static_cast<size_t>(j)] = s * a[static_cast<size_t>(i)][static_cast<size_t>(j)];
    rhs[static_cast<size_t>(i)] = s * b[static_cast<size_t>(i)];
    t[static_cast<size_t>(i)][static_cast<size_t>(n + i)] = 1.0;
    basis[static_cast<size_t>(i)] = n + i;
  }

  const long max_iter = 2000L * static_cast<long>(n_total + m) + 10000L;

  // Phase 1: minimize the sum of artificials.
  std::vector<double> obj1(static_cast<size_t>(n_total), 0.0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n_total; ++j) obj1[static_cast<size_t>(j)] -= t[static_cast<size_t>(i)][static_cast<size_t>(j)];
  for (int i = 0; i < m; ++i) obj1[static_cast<size_t>(n + i)] = 0.0;
  if (!run_simplex(t, rhs, obj1, basis, n_total, max_iter))
    throw Error(ErrorCode::solver_failure, "phase-1 unbounded");

  LpResult res;
  double infeasibility = 0.0;
  for (int i = 0; i < m; ++i)
    if (basis[static_cast<size_t>(i)] >= n) infeasibility += rhs[static_cast<size_t>(i)];
  if (infeasibility > 1e-7) {
    res.feasible = false;
    return res;
  }
  res.feasible = true;

  // Pivot any artificial still basic (at zero) out if a structural column is
  // available; otherwise the row is redundant and stays inert.
  for (int i = 0; i < m; ++i) {
    if (basis[static_cast<size_t>(i)] < n) continue;
    int enter = -1;
    for (int j = 0; j < n; ++j) {
      if (std::abs(t[static_cast<size_t>(i)][static_cast<size_t>(j)]) > 1e-8) {
        enter = j;
        break;
      }
    }
    if (enter < 0) continue;
    double piv = t[static_cast<size_t>(i)][static_cast<size_t>(enter)];
    for (int j = 0; j < n_total; ++j) t[static_cast<size_t>(i)][static_cast<size_t>(j)] /= piv;
    rhs[static_cast<size_t>(i)] /= piv;
    for (int k = 0; k < m; ++k) {
      if (k == i) continue;
      double f = t[static_cast<size_t>(k)][static_cast<size_t>(enter)];
      if (f == 0.0) continue;
      for (int j = 0; j < n_total; ++j) t[static_cast<size_t>(k)][static_cast<size_t>(j)] -= f * t[static_cast<size_t>(i)][static_cast<size_t>(j)];
      rhs[static_cast<size_t>(k)] -= f * rhs[static_cast<size_t>(i)];
    }
    basis[static_cast<size_t>(i)] = enter;
  }

  // Phase 2 on structural columns; artificial columns are frozen out by
  // giving them a prohibitive reduced cost.
  std::vector<double> obj2(static_cast<size_t>(n_total), 0.0);
  for (int j = 0; j < n; ++j) obj2[static_cast<size_t>(j)] = c[static_cast<size_t>(j)];
  for (int i = 0; i < m; ++i) {
    int bi = basis[static_cast<size_t>(i)];
    if (bi >= n) continue;
    double f = obj2[static_cast<size_t>(bi)];
    if (f == 0.0) continue;
    for (int j = 0; j < n_total; ++j) obj2[static_cast<size_t>(j)] -= f * t[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  for (int i = 0; i < m; ++i)
    if (basis[static_cast<size_t>(i)] >= n) obj2[static_cast<size_t>(basis[static_cast<size_t>(i)])] = 0.0;
  for (int j = n; j < n_total; ++j) {
    bool is_basic = false;
    for (int i = 0; i < m; ++i)
      if (basis[static_cast<size_t>(i)] == j) is_basic = true;
    if (!is_basic) obj2[static_cast<size_t>(j)] = 1e30;
  }
  if (!run_simplex(t, rhs, obj2, basis, n_total, max_iter)) {
    res.bounded = false;
    return res;
  }

  res.x.assign(static_cast<size_t>(n), 0.0);
  double val = 0.0;
  for (int i = 0; i < m; ++i) {
    if (basis[static_cast<size_t>(i)] < n) {
      res.x[static_cast<size_t>(basis[static_cast<size_t>(i)])] = rhs[static_cast<size_t>(i)];
      val += c[static_cast<size_t>(basis[static_cast<size_t>(i)])] * rhs[static_cast<size_t>(i)];
    }
  }
  res.objective = val;
  // Row multipliers read off the (frozen) artificial columns: y_i = c_B B^-1
  // applied to the i-th unit column, with the phase-1 sign restored.
  res.duals.assign(static_cast<size_t>(m), 0.0);
  for (int i = 0; i < m; ++i) {
    double y = 0.0;
    for (int k = 0; k < m; ++k) {
      int bk = basis[static_cast<size_t>(k)];
      if (bk < n) y += c[static_cast<size_t>(bk)] * t[static_cast<size_t>(k)][static_cast<size_t>(n + i)];
    }
    double s = b[static_cast<size_t>(i)] < 0 ? -1.0 : 1.0;
    res.duals[static_cast<size_t>(i)] = s * y;
  }
  return res;
}

}  // namespace wow
