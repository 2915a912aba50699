#include <doctest.h>

#include <cmath>

#include "wow/convex.hpp"
#include "wow/rng.hpp"
#include "wow/verify.hpp"

using namespace wow;

namespace {

DiscreteMeasure scalar_measure(std::vector<double> xs, std::vector<double> w) {
  std::vector<Point> pts;
  for (double x : xs) pts.push_back(Point::scalar(x));
  return DiscreteMeasure(std::move(pts), std::move(w));
}

DiscreteMeasure dirac1(double x) {
  return DiscreteMeasure::dirac(Point::scalar(x));
}

}  // namespace

TEST_CASE("evaluate builtins") {
  DiscreteMeasure mu = scalar_measure({0.0, 2.0}, {0.5, 0.5});
  CHECK(evaluate(FunctionalSpec::quadratic(), mu) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(evaluate(FunctionalSpec::max_pairing(scalar_measure({3.0}, {1.0})),
                 dirac1(0.0)) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(evaluate(FunctionalSpec::half_sq_dist(), dirac1(5.0)) ==
        doctest::Approx(0.0).epsilon(1e-12));
  // |x-y|^2/2 and |x-y| interactions on a two-atom measure, by hand:
  // only the cross terms contribute, twice w_i w_j each
  DiscreteMeasure two = scalar_measure({0.0, 3.0}, {0.5, 0.5});
  CHECK(evaluate(FunctionalSpec::half_sq_dist(), two) ==
        doctest::Approx(2.0 * 0.25 * 4.5).epsilon(1e-12));
  FunctionalSpec dist_spec;
  dist_spec.kind = FunctionalSpec::Kind::interaction_dist;
  CHECK(evaluate(dist_spec, two) ==
        doctest::Approx(2.0 * 0.25 * 3.0).epsilon(1e-12));
  CHECK(evaluate(FunctionalSpec::norm(), DiscreteMeasure::dirac(
                                             Point(std::vector<double>{3.0, 4.0}))) ==
        doctest::Approx(5.0).epsilon(1e-12));
  CHECK(evaluate(FunctionalSpec::linear(Point::scalar(2.0)), mu) ==
        doctest::Approx(2.0).epsilon(1e-12));

  FunctionalSpec table = FunctionalSpec::table({mu}, {-0.75});
  CHECK(evaluate(table, mu) == -0.75);
  CHECK_THROWS_AS(evaluate(table, dirac1(0.0)), Error);
}

TEST_CASE("grid conjugate") {
  // phi = 0 on the singleton grid {d0}: conjugate is <nu, d0> = 0
  FunctionalSpec zero = FunctionalSpec::table({dirac1(0.0)}, {0.0});
  DiscreteMeasure nu = scalar_measure({1.0, 2.0}, {0.5, 0.5});
  CHECK(klf_conjugate_on_grid(zero, zero.grid, nu).value ==
        doctest::Approx(0.0).epsilon(1e-12));

  // phi = m2^2/2 with nu on the grid: the conjugate reaches m2^2(nu)/2 at nu
  std::vector<DiscreteMeasure> grid = {dirac1(0.0),
                                       scalar_measure({0.0, 1.0}, {0.5, 0.5}),
                                       nu};
  GridConjugate conj =
      klf_conjugate_on_grid(FunctionalSpec::quadratic(), grid, nu);
  CHECK(conj.value ==
        doctest::Approx(0.5 * second_moment_sq(nu)).epsilon(1e-9));
  CHECK(conj.argmax == 2);

  // k_sigma lower bound: each dilate contributes <nu, a sigma> - a m2^2(sigma)
  DiscreteMeasure sigma = scalar_measure({1.0, -1.0}, {0.5, 0.5});
  std::vector<DiscreteMeasure> dil_grid = {sigma, dilate(sigma, 2.0),
                                           dilate(sigma, 0.5)};
  FunctionalSpec ks = FunctionalSpec::max_pairing(sigma);
  double val = klf_conjugate_on_grid(ks, dil_grid, nu).value;
  for (double a : {1.0, 2.0, 0.5}) {
    double lower =
        solve_mc(nu, dilate(sigma, a)).cost - a * second_moment_sq(sigma);
    CHECK(val >= lower - 1e-9);
  }

  CHECK_THROWS_AS(
      klf_conjugate_on_grid(FunctionalSpec::quadratic(), {}, nu), Error);
}

TEST_CASE("fenchel chain") {
  // equality case: phi = m2^2/2, nu = mu, gamma the identity coupling
  DiscreteMeasure mu = scalar_measure({0.0, 1.0}, {0.5, 0.5});
  Coupling id = Coupling::identity(mu);
  std::vector<DiscreteMeasure> grid = {dirac1(0.0), mu,
                                       scalar_measure({-1.0, 2.0}, {0.5, 0.5})};
  FenchelReport eq = check_fenchel(FunctionalSpec::quadratic(), grid, id);
  CHECK(eq.left_holds);
  CHECK(eq.pairing_integral ==
        doctest::Approx(second_moment_sq(mu)).epsilon(1e-12));
  CHECK(eq.mc == doctest::Approx(second_moment_sq(mu)).epsilon(1e-9));
  CHECK(eq.phi_mu + eq.conjugate ==
        doctest::Approx(second_moment_sq(mu)).epsilon(1e-9));

  // the product coupling sits strictly below the pairing
  Coupling prod = Coupling::product(mu, mu);
  FenchelReport strict = check_fenchel(FunctionalSpec::quadratic(), grid, prod);
  CHECK(strict.left_holds);
  CHECK(strict.pairing_integral == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(strict.mc == doctest::Approx(0.5).epsilon(1e-9));

  // Dirac pair: every quantity equals <a, b>
  Coupling dd = Coupling::dirac(Point::scalar(2.0), Point::scalar(3.0));
  FunctionalSpec table = FunctionalSpec::table({dirac1(2.0)}, {0.0});
  FenchelReport dr = check_fenchel(table, {}, dd);
  CHECK(dr.pairing_integral == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(dr.mc == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(dr.right_exact);
  REQUIRE(dr.right_holds.has_value());
  CHECK(*dr.right_holds);
}

TEST_CASE("subgradient certificate") {
  DiscreteMeasure mu = scalar_measure({0.0, 1.0}, {0.5, 0.5});
  std::vector<DiscreteMeasure> grid = {dirac1(0.0), mu,
                                       scalar_measure({2.0, 3.0}, {0.5, 0.5})};
  std::vector<double> quad_values;
  for (const auto& g : grid) quad_values.push_back(0.5 * second_moment_sq(g));
  FunctionalSpec table = FunctionalSpec::table(grid, quad_values);

  // the identity coupling certifies the quadratic subdifferential
  SubgradientCertificate ok = subgradient_certificate(table, Coupling::identity(mu));
  CHECK(ok.certified);

  // the antimonotone self-coupling is rejected: not an optimal coupling
  Coupling anti({{Point::scalar(0.0), Point::scalar(1.0)},
                 {Point::scalar(1.0), Point::scalar(0.0)}},
                {0.5, 0.5});
  SubgradientCertificate bad = subgradient_certificate(table, anti);
  CHECK_FALSE(bad.certified);
  CHECK(bad.optimality_gap > 0.4);

  // phi = 0 on {mu}: any optimal self-coupling is certified
  FunctionalSpec zero = FunctionalSpec::table({mu}, {0.0});
  SubgradientCertificate z = subgradient_certificate(zero, Coupling::identity(mu));
  CHECK(z.certified);

  // off-grid first marginal: grid miss
  CHECK_THROWS_AS(
      subgradient_certificate(zero, Coupling::identity(dirac1(9.0))), Error);
}

TEST_CASE("total convexity checks") {
  DiscreteMeasure mu = scalar_measure({0.0, 1.0}, {0.5, 0.5});
  DiscreteMeasure nu = scalar_measure({-2.0, 2.0}, {0.25, 0.75});
  Coupling prod = Coupling::product(mu, nu);
  FunctionalSpec knu = FunctionalSpec::max_pairing(scalar_measure({1.0}, {1.0}));
  CHECK(check_total_convexity(knu, prod, {0.0, 0.25, 0.5, 0.75, 1.0}));
  CHECK(check_total_convexity(FunctionalSpec::quadratic(), prod,
                              {0.0, 0.5, 1.0}));
  // endpoints always meet with equality
  double phi0 = evaluate(FunctionalSpec::quadratic(), prod.first_marginal());
  double phit =
      evaluate(FunctionalSpec::quadratic(), displacement_interpolate(prod, 0.0));
  CHECK(phit == doctest::Approx(phi0).epsilon(1e-12));
  CHECK_THROWS_AS(check_total_convexity(FunctionalSpec::table({mu}, {0.0}),
                                        prod, {0.5}),
                  Error);
}

TEST_CASE("k_nu lipschitz bound") {
  DiscreteMeasure nu = dirac1(1.0);
  CHECK(lipschitz_check_knu(nu, dirac1(0.3), dirac1(0.3)));
  // Diracs make the bound tight: |a-b| <= 1 * |a-b|
  CHECK(lipschitz_check_knu(nu, dirac1(-0.7), dirac1(1.9)));
  for (int c = 0; c < 25; ++c) {
    DiscreteMeasure a = random_measure(sub_seed(21, static_cast<std::uint64_t>(c)), 2, 5);
    DiscreteMeasure b = random_measure(sub_seed(22, static_cast<std::uint64_t>(c)), 2, 5);
    DiscreteMeasure r = random_measure(sub_seed(23, static_cast<std::uint64_t>(c)), 2, 5);
    CHECK(lipschitz_check_knu(r, a, b));
  }
}

TEST_CASE("dilation conjugacy") {
  std::vector<DiscreteMeasure> grid = {dirac1(0.0),
                                       scalar_measure({0.0, 1.0}, {0.5, 0.5}),
                                       scalar_measure({-1.0, 1.0}, {0.5, 0.5})};
  std::vector<double> quad_values;
  for (const auto& g : grid) quad_values.push_back(0.5 * second_moment_sq(g));
  FunctionalSpec table = FunctionalSpec::table(grid, quad_values);
  DiscreteMeasure nu = scalar_measure({0.5, 2.0}, {0.5, 0.5});

  CHECK(dilation_conjugacy_check(table, grid, 1.0, nu));
  CHECK(dilation_conjugacy_check(table, grid, 2.0, nu));

  FunctionalSpec zero = FunctionalSpec::table(grid, {0.0, 0.0, 0.0});
  CHECK(dilation_conjugacy_check(zero, grid, 3.0, nu));
  // phi = 0: both sides reduce to max <nu, mu> over the grid
  double lhs = klf_conjugate_on_grid(zero, grid, nu).value;
  double rhs =
      3.0 * klf_conjugate_on_grid(zero, grid, dilate(nu, 1.0 / 3.0)).value;
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("moreau yosida on grid") {
  // anchored minimum at vanishing step
  std::vector<DiscreteMeasure> grid = {dirac1(0.0), dirac1(2.0)};
  FunctionalSpec table = FunctionalSpec::table(grid, {-1.0, 0.0});
  MoreauYosidaResult anchored =
      moreau_yosida_on_grid(table, grid, 1e-6, dirac1(0.0));
  CHECK(anchored.value == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(anchored.argmin == 0);

  // phi = 0: the value is the scaled squared distance to the grid
  FunctionalSpec zero = FunctionalSpec::table(grid, {0.0, 0.0});
  MoreauYosidaResult z = moreau_yosida_on_grid(zero, grid, 0.5, dirac1(0.5));
  CHECK(z.value == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(z.argmin == 0);

  // two-term comparison: min(0, 4/2 - 3) = -1 at the second grid point
  FunctionalSpec mix = FunctionalSpec::table(grid, {0.0, -3.0});
  MoreauYosidaResult m = moreau_yosida_on_grid(mix, grid, 1.0, dirac1(0.0));
  CHECK(m.value == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(m.argmin == 1);

  CHECK_THROWS_AS(moreau_yosida_on_grid(mix, grid, 0.0, dirac1(0.0)), Error);
}

TEST_CASE("moreau conjugacy diagnostic") {
  std::vector<DiscreteMeasure> grid = {dirac1(0.0),
                                       scalar_measure({0.0, 1.0}, {0.5, 0.5}),
                                       scalar_measure({-1.0, 2.0}, {0.5, 0.5}),
                                       scalar_measure({0.5, 1.5}, {0.5, 0.5})};
  std::vector<double> values;
  for (const auto& g : grid) values.push_back(0.5 * second_moment_sq(g));
  FunctionalSpec table = FunctionalSpec::table(grid, values);
  // nu on the grid: at vanishing perturbation the envelope collapses onto
  // the conjugate there and both sides agree up to the perturbation scale
  DiscreteMeasure nu = grid[3];
  MoreauConjugacyDiagnostic tiny =
      moreau_conjugacy_diagnostic(table, grid, 1.0, 1e-7, nu);
  CHECK(std::abs(tiny.gap) <= 1e-5);
  // generic scales: the diagnostic only reports, values stay finite
  MoreauConjugacyDiagnostic generic =
      moreau_conjugacy_diagnostic(table, grid, 2.0, 1.0, nu);
  CHECK(std::isfinite(generic.lhs));
  CHECK(std::isfinite(generic.rhs));
  CHECK(generic.gap == doctest::Approx(generic.rhs - generic.lhs));
  CHECK_THROWS_AS(moreau_conjugacy_diagnostic(table, grid, 0.0, 1.0, nu),
                  Error);
}

TEST_CASE("functional specs by name") {
  DiscreteMeasure mu = scalar_measure({0.0, 2.0}, {0.5, 0.5});
  CHECK(evaluate(functional_from_json(parse_json(R"({"kind": "quadratic"})")),
                 mu) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(evaluate(functional_from_json(
                     parse_json(R"({"kind": "linear", "c": [3.0]})")),
                 mu) == doctest::Approx(3.0).epsilon(1e-12));
  FunctionalSpec knu = functional_from_json(parse_json(
      R"({"kind": "max_pairing", "nu": {"points": [[1.0]], "weights": [1.0]}})"));
  CHECK(evaluate(knu, mu) == doctest::Approx(1.0).epsilon(1e-9));
  FunctionalSpec gt = functional_from_json(parse_json(
      R"({"kind": "grid_table",
          "grid": [{"points": [[0.0]], "weights": [1.0]}],
          "values": [-2.0]})"));
  CHECK(evaluate(gt, dirac1(0.0)) == -2.0);
  CHECK_THROWS_AS(functional_from_json(parse_json(R"({"kind": "mystery"})")),
                  Error);
}

TEST_CASE("c-transform relation") {
  // U = 0 over {d0}: U^c(nu) = w2^2(d0, nu)/2
  FunctionalSpec u0 = FunctionalSpec::table({dirac1(0.0)}, {0.0});
  DiscreteMeasure nu = scalar_measure({1.0, 3.0}, {0.5, 0.5});
  CHECK(c_transform_on_grid(u0, nu) ==
        doctest::Approx(0.5 * solve_w2(dirac1(0.0), nu).cost).epsilon(1e-12));

  // with U = m2^2/2 - phi the c-transform equals m2^2/2 - phi* exactly
  std::vector<DiscreteMeasure> grid;
  for (int g = 0; g < 4; ++g)
    grid.push_back(random_measure(sub_seed(31, static_cast<std::uint64_t>(g)), 2, 4));
  std::vector<double> phi_values, u_values;
  for (const auto& g : grid) {
    double quad = 0.5 * second_moment_sq(g);
    phi_values.push_back(quad);  // phi = m2^2/2 tabulated
    u_values.push_back(quad - phi_values.back());
  }
  FunctionalSpec phi = FunctionalSpec::table(grid, phi_values);
  FunctionalSpec u = FunctionalSpec::table(grid, u_values);
  DiscreteMeasure probe = random_measure(77, 2, 4);
  double lhs = c_transform_on_grid(u, probe);
  double rhs = 0.5 * second_moment_sq(probe) -
               klf_conjugate_on_grid(phi, grid, probe).value;
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
}
