#ifndef WOW_NESTED_HPP
#define WOW_NESTED_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "wow/ot.hpp"

namespace wow {

/// Discrete law of random measures: a weighted finite collection of
/// discrete measures, all sharing one ambient dimension.
class RandomLaw {
 public:
  RandomLaw(std::vector<DiscreteMeasure> atoms, std::vector<double> weights);
  static RandomLaw dirac(DiscreteMeasure mu) {
    return RandomLaw({std::move(mu)}, {1.0});
  }

  int dim() const { return atoms_[0].dim(); }
  int size() const { return static_cast<int>(atoms_.size()); }
  const DiscreteMeasure& atom(int k) const { return atoms_[static_cast<size_t>(k)]; }
  double weight(int k) const { return weights_[static_cast<size_t>(k)]; }
  const std::vector<DiscreteMeasure>& atoms() const { return atoms_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<DiscreteMeasure> atoms_;
  std::vector<double> weights_;
};

/// Coupling between two laws: index pairs into the atom lists, plus copies
/// of the coupled laws themselves.
struct CouplingOfLaws {
  std::vector<std::array<int, 2>> pairs;
  std::vector<double> weights;
  RandomLaw first;
  RandomLaw second;

  void validate(double tol = 1e-9) const;
};

/// Law of random couplings: a weighted finite collection of couplings.
class RandomCouplingLaw {
 public:
  RandomCouplingLaw(std::vector<Coupling> atoms, std::vector<double> weights);

  int dim() const { return atoms_[0].dim(); }
  int size() const { return static_cast<int>(atoms_.size()); }
  const Coupling& atom(int j) const { return atoms_[static_cast<size_t>(j)]; }
  double weight(int j) const { return weights_[static_cast<size_t>(j)]; }
  const std::vector<Coupling>& atoms() const { return atoms_; }
  const std::vector<double>& weights() const { return weights_; }

  RandomLaw first_marginal_law() const;
  RandomLaw second_marginal_law() const;

 private:
  std::vector<Coupling> atoms_;
  std::vector<double> weights_;
};

/// A map (support point, measure atom) -> R^d on the unfolded support of a
/// law; values[k][i] is the image of the i-th support point of atom k.
class NonlocalField {
 public:
  explicit NonlocalField(std::vector<std::vector<Point>> values)
      : values_(std::move(values)) {}
  const Point& value(int atom, int support_index) const {
    return values_[static_cast<size_t>(atom)][static_cast<size_t>(support_index)];
  }
  const std::vector<std::vector<Point>>& values() const { return values_; }

 private:
  std::vector<std::vector<Point>> values_;
};

// --- operations -----------------------------------------------------------

/// M2^2(M) = sum_k W_k m2^2(mu_k)
double big_moment(const RandomLaw& m);

enum class PairwiseKind { w2sq, mc };

/// K x L matrix of inner costs; entries computed independently (parallel
/// when threads > 1, schedule-independent).
std::vector<std::vector<double>> pairwise_cost_matrix(const RandomLaw& m,
                                                      const RandomLaw& n,
                                                      PairwiseKind kind,
                                                      int threads = 1);

struct NestedSolution {
  double value = 0;  // W2^2(M,N) or [[M,N]]
  CouplingOfLaws coupling;
  std::vector<double> dual_u, dual_v;
};

/// Nested Wasserstein W2^2: outer OT over the w2sq pairwise matrix.
NestedSolution solve_W2(const RandomLaw& m, const RandomLaw& n, int threads = 1);

/// Nested maximal-correlation pairing [[M,N]]: outer max-OT over the mc
/// pairwise matrix; shares its optimizer set with solve_W2.
NestedSolution solve_MMC(const RandomLaw& m, const RandomLaw& n, int threads = 1);

/// Lift a coupling of laws to a random coupling law concentrated on inner
/// optimal plans (one solve_w2 per matched pair).
RandomCouplingLaw lift_to_random_coupling(const CouplingOfLaws& pi,
                                          int threads = 1);

/// (pi1#, pi2#)##P: the coupling of the marginal laws induced by P.
/// Marginal measures are deduplicated only when bit-equal.
CouplingOfLaws lower_random_coupling(const RandomCouplingLaw& p);

/// sum_j W_j int |x-y|^2 dgamma_j
double random_coupling_cost(const RandomCouplingLaw& p);

/// w2^2-cyclical monotonicity of the support of Pi (subsets up to
/// max_cycle <= 6, all permutations).
struct W2CycleWitness {
  std::vector<int> subset;
  std::vector<int> sigma;
  double gain = 0;  // sum w2^2(matched) - sum w2^2(permuted), positive = bad
};
struct W2MonotonicityResult {
  bool monotone = true;
  std::optional<W2CycleWitness> witness;
};
W2MonotonicityResult check_W2_cyclical_monotonicity(const CouplingOfLaws& pi,
                                                    int max_cycle,
                                                    double tol = 1e-9);

/// Total cyclical monotonicity of a plan collection: for every N-tuple of
/// plans (with repetition, N <= max_cycle <= 4) and every permutation, the
/// multi-marginal LP minimum of sum_n <y_n, x_n - x_sigma(n)> must be
/// >= -tol. Product supports are guarded to <= 5000 joint atoms.
struct TotalCycleWitness {
  std::vector<int> plan_indices;
  std::vector<int> sigma;
  double value = 0;
};
struct TotalMonotonicityResult {
  bool monotone = true;
  std::optional<TotalCycleWitness> witness;
};
TotalMonotonicityResult check_total_cyclical_monotonicity(
    const std::vector<Coupling>& plans, int max_cycle, double tol = 1e-9);

/// Unfolded measure: entries (x_{k,i}, atom k, W_k w_{k,i}).
struct UnfoldedEntry {
  Point point;
  int atom = 0;
  double weight = 0;
};
std::vector<UnfoldedEntry> unfold(const RandomLaw& m);

/// pr^k[M] = sum_j W_j mu_j^{(x) k} on R^{kd}; guarded to k <= 3 and a
/// bounded number of output atoms.
DiscreteMeasure k_projection(const RandomLaw& m, int k);

/// Monge extraction from a consistent optimal pair (Pi, P).
struct MongeSolution {
  std::vector<int> target_of_atom;          // l_k for each M-atom k
  std::vector<DiscreteMeasure> atom_images; // F(mu_k), aligned with M atoms
  NonlocalField field;                      // f(x, mu_k) per unfolded point
  double cost = 0;                          // strict Monge cost of the field
};
MongeSolution extract_monge(const CouplingOfLaws& pi,
                            const RandomCouplingLaw& p);

/// sum over unfolded entries of weight * |f(x,mu) - x|^2
double strict_monge_cost(const NonlocalField& f, const RandomLaw& m);

/// (pi_t^{1->2})##P: atom j becomes the displacement interpolation of
/// gamma_j at t.
RandomLaw interpolate_law(const RandomCouplingLaw& p, double t);

/// Geodesic identity report: residuals of
/// |W2(M_s,M_t) - (t-s) W2(M_0,M_1)| over all s < t in ts, plus a
/// dual-slackness diagnostic at the interior interpolation point closest
/// to 1/2 (outer duals of (M_0, M_t) must be tight on the matched support).
struct GeodesicReport {
  bool input_optimal = true;   // false -> diagnostic only
  double w2_total = 0;         // W2(M_0, M_1)
  struct Entry {
    double s = 0, t = 0, residual = 0;
  };
  std::vector<Entry> entries;
  double max_residual = 0;
  double intermediate_t = -1;           // -1 when ts has no interior point
  double intermediate_dual_gap = 0;     // |dual objective - [[M_0, M_t]]|
  double intermediate_support_gap = 0;  // slackness on the optimal support
};
GeodesicReport verify_geodesic(const RandomCouplingLaw& p,
                               const std::vector<double>& ts, int threads = 1);

/// Endpoint-recovery maps at an interior time: for each atom, the
/// interpolated support plus the two maps back to the endpoints.
struct InterpolationInverse {
  struct AtomMaps {
    DiscreteMeasure interpolant;
    std::vector<Point> to_first;   // f_{t,0} per interpolant support point
    std::vector<Point> to_second;  // f_{t,1}
  };
  double t = 0;
  std::vector<AtomMaps> atoms;
};
InterpolationInverse invert_interpolation(const RandomCouplingLaw& p, double t,
                                          double collision_tol = 1e-10);

/// Reassemble the coupling of one atom from its inversion maps.
Coupling reconstruct_from_inverse(const InterpolationInverse::AtomMaps& maps);

/// LP duals of the outer maximal-correlation problem:
/// u_k + v_l >= <mu_k, nu_l> everywhere, tight on the optimal support,
/// sum W u + sum V v = [[M,N]].
struct OuterDuals {
  std::vector<double> u, v;
  double objective = 0;      // sum W u + sum V v
  double max_violation = 0;  // max over (k,l) of <mu_k,nu_l> - u_k - v_l
  double support_gap = 0;    // max |u_k + v_l - <mu_k,nu_l>| on the support
};
OuterDuals outer_dual_potentials(const RandomLaw& m, const RandomLaw& n,
                                 int threads = 1);

/// Mixture alpha M + (1-alpha) N (atom lists concatenated).
RandomLaw mix_laws(const RandomLaw& m, const RandomLaw& n, double alpha);

/// Law equality up to atom reordering and bit-equal atom merging:
/// greedy matching of atoms under measures_equal with weight tolerance.
bool laws_equal(const RandomLaw& m, const RandomLaw& n, double tol);

}  // namespace wow

#endif
