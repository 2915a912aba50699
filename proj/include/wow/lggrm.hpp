#ifndef WOW_LGGRM_HPP
#define WOW_LGGRM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wow/lagrangian.hpp"
#include "wow/nested.hpp"

namespace wow {

/// Sampler specification for laws of Gaussian-generated random measures.
/// The label space Q is discretized to `labels` grid points; paths are
/// evaluated on the grid and consumed as Lagrangian maps.
struct GaussianSpec {
  enum class Basis { brownian, bridge_sine, walsh, fbm };
  Basis basis = Basis::brownian;
  int dim = 1;            // ambient dimension d (coordinates independent)
  int truncation = 0;     // N, retained expansion terms (bridge_sine)
  int labels = 0;         // T; for walsh forced to 2^level
  std::uint64_t seed = 0;
  std::vector<double> lambdas;     // bridge_sine scales; empty -> 1/(pi n)
  int walsh_level = 0;             // m; labels = 2^m
  std::vector<double> walsh_scales;  // per level 0..m
  double hurst = 0.5;              // fbm only, H in (0,1)

  void validate() const;
  /// effective per-term scale sequence of the bridge_sine basis
  std::vector<double> bridge_lambdas() const;
  /// sum of squared retained scales (finite by construction; reported)
  double scale_energy() const;
};

/// One Gaussian path on the label grid, deterministic in (spec, seed).
LagrangianMap sample_path(const GaussianSpec& spec, std::uint64_t seed);

/// S occupation measures with weight 1/S each; atom s uses the derived
/// stream sub_seed(seed, s), so parallel sampling is schedule-independent.
RandomLaw sample_law(const GaussianSpec& spec, int samples, std::uint64_t seed,
                     int threads = 1);

/// Walsh function W_I(q) = prod_{i in I} q_i over q in {-1,1}^m; W_{} = 1.
/// I carries 1-based coordinate indices.
int walsh_function(const std::vector<int>& index_set, const std::vector<int>& q);

/// Enumerate the label grid of a Walsh spec: row j is the sign vector of
/// label j (bit i of j -> coordinate i+1).
std::vector<std::vector<int>> walsh_labels(int level);

/// Truncated variance of the increment Xi(q1) - Xi(q2) along the expansion
/// basis; for the scalar scales supported here alpha = beta = lambda.
struct VarianceTriple {
  double alpha_sq = 0, beta_sq = 0, lambda_sq = 0;
};
VarianceTriple variance_function(const GaussianSpec& spec, const Point& q1,
                                 const Point& q2);

/// Numeric verdict on a summability criterion. Heuristic, never a proof.
struct RegularityReport {
  std::string criterion;
  std::vector<double> partial_sums;
  double ratio_estimate = 0;
  std::string verdict;  // converges | diverges | inconclusive
  double estimate = 0;        // berman: MC estimate of the double integral
  double standard_error = 0;  // berman
  std::vector<double> probe;  // berman: near-diagonal shell means
  std::string note;
};

/// Ratio test on the series sum_n 1/(2^n A_n^d); margin 0.05. A tail that
/// fails to vanish is reported as divergent regardless of the ratio.
RegularityReport walsh_criterion(const std::vector<double>& level_alphas,
                                 int d);

/// Monte Carlo estimate of int 1/alpha^d(q1,q2) dP(x)P, diagonal excluded by
/// rejection; near-diagonal shell means act as the divergence heuristic.
RegularityReport berman_integral_estimate(const GaussianSpec& spec,
                                          int samples, std::uint64_t seed);

/// For each epsilon (decreasing): mass of the near-diagonal of pr^2, i.e.
/// sum_k W_k [ sum_{i != j} w_i w_j 1(|x_i - x_j| < eps) + sum_i w_i^2 ].
std::vector<std::pair<double, double>> atomless_diagnostic(
    const RandomLaw& m, const std::vector<double>& eps_list);

}  // namespace wow

#endif
