#include "wow/convex.hpp"

#include <cmath>
#include <limits>

namespace wow {

FunctionalSpec FunctionalSpec::norm() {
  FunctionalSpec s;
  s.kind = Kind::potential_norm;
  return s;
}

FunctionalSpec FunctionalSpec::linear(Point c) {
  FunctionalSpec s;
  s.kind = Kind::potential_linear;
  s.linear_c = std::move(c);
  return s;
}

FunctionalSpec FunctionalSpec::half_sq_dist() {
  FunctionalSpec s;
  s.kind = Kind::interaction_half_sq_dist;
  return s;
}

FunctionalSpec FunctionalSpec::dist() {
  FunctionalSpec s;
  s.kind = Kind::interaction_dist;
  return s;
}

FunctionalSpec FunctionalSpec::max_pairing(DiscreteMeasure nu) {
  FunctionalSpec s;
  s.kind = Kind::max_pairing;
  s.nu = std::move(nu);
  return s;
}

FunctionalSpec FunctionalSpec::table(std::vector<DiscreteMeasure> grid,
                                     std::vector<double> values) {
  require(!grid.empty() && grid.size() == values.size(),
          ErrorCode::invalid_input, "grid table: shape mismatch");
  for (double v : values)
    require(std::isfinite(v), ErrorCode::invalid_input,
            "grid table: non-finite value");
  FunctionalSpec s;
  s.kind = Kind::grid_table;
  s.grid = std::move(grid);
  s.values = std::move(values);
  return s;
}

double evaluate(const FunctionalSpec& phi, const DiscreteMeasure& mu) {
  switch (phi.kind) {
    case FunctionalSpec::Kind::potential_quadratic:
      return 0.5 * second_moment_sq(mu);
    case FunctionalSpec::Kind::potential_norm: {
      double s = 0;
      for (int i = 0; i < mu.size(); ++i)
        s += mu.weight(i) * std::sqrt(mu.point(i).norm_sq());
      return s;
    }
    case FunctionalSpec::Kind::potential_linear: {
      require(phi.linear_c.has_value(), ErrorCode::invalid_input,
              "linear potential without direction");
      double s = 0;
      for (int i = 0; i < mu.size(); ++i)
        s += mu.weight(i) * dot(*phi.linear_c, mu.point(i));
      return s;
    }
    case FunctionalSpec::Kind::interaction_half_sq_dist: {
      double s = 0;
      for (int i = 0; i < mu.size(); ++i)
        for (int j = 0; j < mu.size(); ++j)
          s += 0.5 * mu.weight(i) * mu.weight(j) *
               dist_sq(mu.point(i), mu.point(j));
      return s;
    }
    case FunctionalSpec::Kind::interaction_dist: {
      double s = 0;
      for (int i = 0; i < mu.size(); ++i)
        for (int j = 0; j < mu.size(); ++j)
          s += mu.weight(i) * mu.weight(j) *
               std::sqrt(dist_sq(mu.point(i), mu.point(j)));
      return s;
    }
    case FunctionalSpec::Kind::max_pairing:
      require(phi.nu.has_value(), ErrorCode::invalid_input,
              "pairing functional without reference measure");
      return solve_mc(mu, *phi.nu).cost;
    case FunctionalSpec::Kind::grid_table: {
      for (size_t g = 0; g < phi.grid.size(); ++g)
        if (phi.grid[g] == mu) return phi.values[g];
      throw Error(ErrorCode::grid_miss,
                  "measure is not a grid element of the table");
    }
  }
  throw Error(ErrorCode::invalid_input, "unknown functional kind");
}

GridConjugate klf_conjugate_on_grid(const FunctionalSpec& phi,
                                    const std::vector<DiscreteMeasure>& grid,
                                    const DiscreteMeasure& nu) {
  require(!grid.empty(), ErrorCode::invalid_input, "empty grid");
  GridConjugate best{-std::numeric_limits<double>::infinity(), 0};
  for (size_t g = 0; g < grid.size(); ++g) {
    double val = solve_mc(nu, grid[g]).cost - evaluate(phi, grid[g]);
    if (val > best.value) {
      best.value = val;
      best.argmax = static_cast<int>(g);
    }
  }
  return best;
}

FenchelReport check_fenchel(const FunctionalSpec& phi,
                            const std::vector<DiscreteMeasure>& grid,
                            const Coupling& gamma, double tol) {
  FenchelReport rep;
  DiscreteMeasure mu = gamma.first_marginal();
  DiscreteMeasure nu = gamma.second_marginal();
  rep.pairing_integral = gamma.pairing_integral();
  rep.mc = solve_mc(mu, nu).cost;
  rep.phi_mu = evaluate(phi, mu);
  const std::vector<DiscreteMeasure>& g =
      (phi.kind == FunctionalSpec::Kind::grid_table) ? phi.grid : grid;
  rep.conjugate = klf_conjugate_on_grid(phi, g, nu).value;
  rep.left_holds = rep.pairing_integral <= rep.mc + tol;
  rep.right_exact = (phi.kind == FunctionalSpec::Kind::grid_table);
  if (rep.right_exact)
    rep.right_holds = rep.mc <= rep.phi_mu + rep.conjugate + tol;
  return rep;
}

SubgradientCertificate subgradient_certificate(const FunctionalSpec& phi,
                                               const Coupling& gamma,
                                               double tol) {
  require(phi.kind == FunctionalSpec::Kind::grid_table,
          ErrorCode::invalid_input,
          "subgradient certificates require a grid table");
  DiscreteMeasure mu = gamma.first_marginal();
  DiscreteMeasure nu = gamma.second_marginal();
  double phi_mu = evaluate(phi, mu);  // grid_miss if off the grid
  double conj = klf_conjugate_on_grid(phi, phi.grid, nu).value;
  double pairing = gamma.pairing_integral();
  double mc = solve_mc(mu, nu).cost;
  SubgradientCertificate cert;
  cert.equality_gap = std::abs(pairing - (phi_mu + conj));
  cert.optimality_gap = std::abs(pairing - mc);
  double scale = 1.0 + std::abs(pairing);
  cert.certified =
      cert.equality_gap <= tol * scale && cert.optimality_gap <= tol * scale;
  return cert;
}

bool check_total_convexity(const FunctionalSpec& phi, const Coupling& gamma,
                           const std::vector<double>& ts, double tol) {
  require(phi.kind != FunctionalSpec::Kind::grid_table,
          ErrorCode::invalid_input,
          "grid tables cannot be evaluated at interpolants");
  double phi0 = evaluate(phi, gamma.first_marginal());
  double phi1 = evaluate(phi, gamma.second_marginal());
  for (double t : ts) {
    double lhs = evaluate(phi, displacement_interpolate(gamma, t));
    if (lhs > (1.0 - t) * phi0 + t * phi1 + tol) return false;
  }
  return true;
}

bool lipschitz_check_knu(const DiscreteMeasure& nu, const DiscreteMeasure& mu1,
                         const DiscreteMeasure& mu2, double tol) {
  double k1 = solve_mc(mu1, nu).cost;
  double k2 = solve_mc(mu2, nu).cost;
  double bound = second_moment(nu) * std::sqrt(solve_w2(mu1, mu2).cost);
  return std::abs(k1 - k2) <= bound + tol;
}

bool dilation_conjugacy_check(const FunctionalSpec& phi,
                              const std::vector<DiscreteMeasure>& grid,
                              double a, const DiscreteMeasure& nu,
                              double tol) {
  require(a > 0, ErrorCode::invalid_input, "dilation scale must be positive");
  // (a phi)*(nu) over the grid
  double lhs = -std::numeric_limits<double>::infinity();
  for (const DiscreteMeasure& mu : grid)
    lhs = std::max(lhs, solve_mc(nu, mu).cost - a * evaluate(phi, mu));
  // a phi*(dilate(nu, 1/a)) over the same grid
  DiscreteMeasure nus = dilate(nu, 1.0 / a);
  double rhs = a * klf_conjugate_on_grid(phi, grid, nus).value;
  return std::abs(lhs - rhs) <= tol * (1.0 + std::abs(lhs));
}

MoreauYosidaResult moreau_yosida_on_grid(const FunctionalSpec& phi,
                                         const std::vector<DiscreteMeasure>& grid,
                                         double tau, const DiscreteMeasure& mu) {
  require(tau > 0, ErrorCode::invalid_input, "tau must be positive");
  require(!grid.empty(), ErrorCode::invalid_input, "empty grid");
  MoreauYosidaResult best{std::numeric_limits<double>::infinity(), 0};
  for (size_t g = 0; g < grid.size(); ++g) {
    double val =
        solve_w2(mu, grid[g]).cost / (2.0 * tau) + evaluate(phi, grid[g]);
    if (val < best.value) {
      best.value = val;
      best.argmin = static_cast<int>(g);
    }
  }
  return best;
}

double c_transform_on_grid(const FunctionalSpec& u_table,
                           const DiscreteMeasure& nu) {
  require(u_table.kind == FunctionalSpec::Kind::grid_table,
          ErrorCode::invalid_input, "c-transform expects a grid table");
  double best = std::numeric_limits<double>::infinity();
  for (size_t g = 0; g < u_table.grid.size(); ++g)
    best = std::min(best, 0.5 * solve_w2(u_table.grid[g], nu).cost -
                              u_table.values[g]);
  return best;
}

MoreauConjugacyDiagnostic moreau_conjugacy_diagnostic(
    const FunctionalSpec& phi, const std::vector<DiscreteMeasure>& grid,
    double a, double b, const DiscreteMeasure& nu) {
  require(a > 0 && b > 0, ErrorCode::invalid_input,
          "scales must be positive");
  require(!grid.empty(), ErrorCode::invalid_input, "empty grid");
  MoreauConjugacyDiagnostic diag;
  // left side: conjugate of the perturbed functional over the grid
  diag.lhs = -std::numeric_limits<double>::infinity();
  for (const DiscreteMeasure& mu : grid)
    diag.lhs = std::max(diag.lhs,
                        solve_mc(nu, mu).cost - a * evaluate(phi, mu) -
                            0.5 * b * second_moment_sq(mu));
  // right side: tabulate phi*_grid, regularize it at step b/a, dilate
  std::vector<double> conj_values;
  conj_values.reserve(grid.size());
  for (const DiscreteMeasure& mu : grid)
    conj_values.push_back(klf_conjugate_on_grid(phi, grid, mu).value);
  FunctionalSpec conj_table = FunctionalSpec::table(grid, conj_values);
  diag.rhs =
      a * moreau_yosida_on_grid(conj_table, grid, b / a, dilate(nu, 1.0 / a))
              .value;
  diag.gap = diag.rhs - diag.lhs;
  return diag;
}

}  // namespace wow
