#ifndef WOW_CONVEX_HPP
#define WOW_CONVEX_HPP

#include <optional>
#include <string>
#include <vector>

#include "wow/ot.hpp"

namespace wow {

/// A functional on discrete measures, restricted to a builtin menu so that
/// convexity is guaranteed by construction:
///   - potential energies V_f with f in {|x|^2/2, |x|, <c,x>}
///   - pairwise interaction energies W_g with g in {|x-y|^2/2, |x-y|}
///   - the maximal pairing k_nu = <., nu>
///   - a table of values over a fixed grid of measures
struct FunctionalSpec {
  enum class Kind {
    potential_quadratic,
    potential_norm,
    potential_linear,
    interaction_half_sq_dist,
    interaction_dist,
    max_pairing,
    grid_table
  };
  Kind kind = Kind::potential_quadratic;
  std::optional<Point> linear_c;             // potential_linear
  std::optional<DiscreteMeasure> nu;         // max_pairing
  std::vector<DiscreteMeasure> grid;         // grid_table
  std::vector<double> values;                // grid_table

  static FunctionalSpec quadratic() { return {}; }
  static FunctionalSpec norm();
  static FunctionalSpec linear(Point c);
  static FunctionalSpec half_sq_dist();
  static FunctionalSpec dist();
  static FunctionalSpec max_pairing(DiscreteMeasure nu);
  static FunctionalSpec table(std::vector<DiscreteMeasure> grid,
                              std::vector<double> values);
};

/// Evaluate the functional; grid tables require a bit-equal grid member.
double evaluate(const FunctionalSpec& phi, const DiscreteMeasure& mu);

/// Grid-restricted Kantorovich-Legendre-Fenchel conjugate:
/// max over grid mu of <nu,mu> - phi(mu). A lower bound of the full
/// conjugate; exact for grid tables (whose domain is the grid).
struct GridConjugate {
  double value = 0;
  int argmax = 0;  // smallest maximizing grid index
};
GridConjugate klf_conjugate_on_grid(const FunctionalSpec& phi,
                                    const std::vector<DiscreteMeasure>& grid,
                                    const DiscreteMeasure& nu);

/// Kantorovich-Fenchel chain for a coupling gamma in Gamma(mu,nu):
/// int <x,y> dgamma <= <mu,nu> <= phi(mu) + phi*(nu).
/// The right-hand comparison is exact only for grid tables; otherwise the
/// grid conjugate is a lower bound and the check is one-sided.
struct FenchelReport {
  double pairing_integral = 0;
  double mc = 0;
  double phi_mu = 0;
  double conjugate = 0;
  bool left_holds = false;
  bool right_exact = false;             // true iff phi is a grid table
  std::optional<bool> right_holds;      // set only when exact
};
FenchelReport check_fenchel(const FunctionalSpec& phi,
                            const std::vector<DiscreteMeasure>& grid,
                            const Coupling& gamma, double tol = 1e-9);

/// Certify gamma as a total-subdifferential element of a grid table:
/// int <x,y> dgamma = phi(mu) + phi*_grid(nu) and gamma optimal for
/// the pairing (checked through the decomposition identity).
struct SubgradientCertificate {
  bool certified = false;
  double equality_gap = 0;   // |pairing - (phi + conj)|
  double optimality_gap = 0; // |pairing - <mu,nu>|
};
SubgradientCertificate subgradient_certificate(const FunctionalSpec& phi,
                                               const Coupling& gamma,
                                               double tol = 1e-8);

/// phi(mu_t) <= (1-t) phi(mu_0) + t phi(mu_1) + tol along the displacement
/// interpolation of an arbitrary coupling (grid tables excluded).
bool check_total_convexity(const FunctionalSpec& phi, const Coupling& gamma,
                           const std::vector<double>& ts, double tol = 1e-8);

/// |k_nu(mu1) - k_nu(mu2)| <= m2(nu) w2(mu1,mu2) + tol
bool lipschitz_check_knu(const DiscreteMeasure& nu, const DiscreteMeasure& mu1,
                         const DiscreteMeasure& mu2, double tol = 1e-8);

/// Dilation rule at grid level: (a phi)*(nu) = a phi*(dilate(nu,1/a)),
/// both conjugates over the same grid. Exact to 1e-9 relative.
bool dilation_conjugacy_check(const FunctionalSpec& phi,
                              const std::vector<DiscreteMeasure>& grid,
                              double a, const DiscreteMeasure& nu,
                              double tol = 1e-9);

/// Moreau-Yosida value over the grid: min_nu w2^2(mu,nu)/(2 tau) + phi(nu);
/// ties resolve to the smallest grid index.
struct MoreauYosidaResult {
  double value = 0;
  int argmin = 0;
};
MoreauYosidaResult moreau_yosida_on_grid(const FunctionalSpec& phi,
                                         const std::vector<DiscreteMeasure>& grid,
                                         double tau, const DiscreteMeasure& mu);

/// Concave c-transform over the grid for c = w2^2/2:
/// min over grid mu of w2^2(mu,nu)/2 - U(mu).
double c_transform_on_grid(const FunctionalSpec& u_table,
                           const DiscreteMeasure& nu);

/// Approximate diagnostic for the quadratic-perturbation conjugacy rule
/// (a phi + (b/2) m2^2)* = a (phi*)_{b/a} o dilate_{1/a}: both sides are
/// grid-restricted (the conjugates as maxima over the grid, the
/// Moreau-Yosida envelope as a minimum over it), so only the discrepancy
/// is reported, nothing is asserted.
struct MoreauConjugacyDiagnostic {
  double lhs = 0;  // grid conjugate of a phi + (b/2) m2^2 at nu
  double rhs = 0;  // a * grid Moreau-Yosida of phi*_grid at dilate(nu, 1/a)
  double gap = 0;
};
MoreauConjugacyDiagnostic moreau_conjugacy_diagnostic(
    const FunctionalSpec& phi, const std::vector<DiscreteMeasure>& grid,
    double a, double b, const DiscreteMeasure& nu);

}  // namespace wow

#endif
