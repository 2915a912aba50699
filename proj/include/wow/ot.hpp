#ifndef WOW_OT_HPP
#define WOW_OT_HPP

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "wow/measure.hpp"

namespace wow {

/// Result of an exact transport solve between two sets of marginal weights:
/// sparse plan plus one dual per row/column node (u[0] = 0 normalization).
struct TransportPlan {
  double cost = 0;
  std::vector<std::array<int, 2>> cells;  // (i,j) with positive mass, lex order
  std::vector<double> mass;
  std::vector<double> u, v;
  int iterations = 0;
};

/// Transportation simplex: min sum c(i,j) x_ij over the polytope with row
/// sums a and column sums b (both summing to one). North-west-corner start,
/// Bland entering rule, deterministic leaving ties; fully reproducible.
TransportPlan solve_transport(const std::vector<double>& a,
                              const std::vector<double>& b,
                              const std::function<double(int, int)>& cost);

/// Solution of the inner optimal transport between two discrete measures.
struct OtSolution {
  double cost = 0;               // optimal objective (w2^2 or <mu,nu>)
  Coupling plan;                 // attaining plan
  std::vector<double> dual_u;    // per atom of mu
  std::vector<double> dual_v;    // per atom of nu
};

/// w2^2(mu,nu) with optimal plan and Kantorovich duals
/// (u_i + v_j <= |x_i-y_j|^2, tight on the support).
OtSolution solve_w2(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

/// Maximal correlation pairing <mu,nu> = max int <x,y> dgamma, solved as a
/// minimization of -<x,y> through the same simplex; duals satisfy
/// u_i + v_j >= <x_i,y_j> with equality on the support.
OtSolution solve_mc(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

/// 1-D fast path: monotone (quantile) coupling via sorted mass splitting.
OtSolution solve_w2_1d(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

/// Duals of the w2^2 problem only.
std::pair<std::vector<double>, std::vector<double>> kantorovich_duals(
    const DiscreteMeasure& mu, const DiscreteMeasure& nu);

/// A coupling is deterministic when every first-marginal support point pairs
/// with exactly one second point; the extracted map is returned on success.
struct DeterminismCheck {
  bool deterministic = false;
  // aligned with first_marginal() canonical order when deterministic
  std::vector<Point> domain;
  std::vector<Point> image;
};
DeterminismCheck is_deterministic(const Coupling& gamma);

/// (i x b(.,gamma))#mu with b the conditional mean of the second coordinate.
Coupling barycentric_projection(const Coupling& gamma);

/// Witness for a failed cyclical-monotonicity check: the violating subset of
/// pair indices, the permutation, and the (negative) cycle sum.
struct CycleWitness {
  std::vector<int> subset;
  std::vector<int> sigma;
  double value = 0;
};

/// Exhaustive check of sum_n <y_n, x_n - x_sigma(n)> >= -tol over all
/// subsets of size <= max_cycle (max 6) and all permutations.
struct MonotonicityResult {
  bool monotone = true;
  std::optional<CycleWitness> witness;
};
MonotonicityResult check_cyclical_monotonicity(
    const std::vector<std::pair<Point, Point>>& pairs, int max_cycle,
    double tol = 1e-9);

// --- oracles (independent of the simplex path; used by tests and verify) ---

/// Exact minimum over all couplings of uniform empirical measures given by
/// brute-force enumeration of permutations; n <= 8.
double assignment_bruteforce(const std::vector<Point>& xs,
                             const std::vector<Point>& ys,
                             const std::function<double(const Point&, const Point&)>& cost);

/// Unfold a measure whose weights are integer multiples of 1/denom into a
/// list of denom points (repetitions per weight). Errors if weights are not
/// exact multiples within 1e-9.
std::vector<Point> unfold_uniform(const DiscreteMeasure& mu, int denom);

}  // namespace wow

#endif
