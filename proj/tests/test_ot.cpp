#include <doctest.h>

#include <cmath>

#include "wow/ot.hpp"
#include "wow/rng.hpp"
#include "wow/verify.hpp"

using namespace wow;

namespace {

DiscreteMeasure scalar_measure(std::vector<double> xs, std::vector<double> w) {
  std::vector<Point> pts;
  for (double x : xs) pts.push_back(Point::scalar(x));
  return DiscreteMeasure(std::move(pts), std::move(w));
}

}  // namespace

TEST_CASE("solve_w2 basic instances") {
  OtSolution diracs = solve_w2(DiscreteMeasure::dirac(Point(std::vector<double>{0.0, 0.0})),
                               DiscreteMeasure::dirac(Point(std::vector<double>{3.0, 4.0})));
  CHECK(diracs.cost == doctest::Approx(25.0).epsilon(1e-12));

  DiscreteMeasure mu = scalar_measure({0.0, 1.0}, {0.5, 0.5});
  CHECK(solve_w2(mu, mu).cost == doctest::Approx(0.0).epsilon(1e-12));

  DiscreteMeasure nu = scalar_measure({2.0, 5.0}, {0.5, 0.5});
  OtSolution sol = solve_w2(mu, nu);
  // the two vertex couplings cost 10 and 13; the monotone one wins
  CHECK(sol.cost == doctest::Approx(10.0).epsilon(1e-12));
  REQUIRE(sol.plan.size() == 2);
  CHECK(sol.plan.pair(0).first[0] == 0.0);
  CHECK(sol.plan.pair(0).second[0] == 2.0);
  CHECK(sol.plan.pair(1).first[0] == 1.0);
  CHECK(sol.plan.pair(1).second[0] == 5.0);

  CHECK_THROWS_AS(solve_w2(mu, DiscreteMeasure::dirac(Point(std::vector<double>{0.0, 0.0}))),
                  Error);
}

TEST_CASE("solve_mc basic instances") {
  DiscreteMeasure two(
      {Point(std::vector<double>{1.0, 0.0}), Point(std::vector<double>{0.0, 1.0})}, {0.5, 0.5});
  CHECK(solve_mc(two, DiscreteMeasure::dirac(Point(std::vector<double>{2.0, 2.0}))).cost ==
        doctest::Approx(2.0).epsilon(1e-12));

  DiscreteMeasure mu = scalar_measure({0.0, 1.0}, {0.5, 0.5});
  CHECK(solve_mc(mu, mu).cost ==
        doctest::Approx(second_moment_sq(mu)).epsilon(1e-12));
  // enumerate both vertex couplings by hand: 0.5 vs 0
  CHECK(solve_mc(mu, mu).cost == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("1-D fast path") {
  DiscreteMeasure mu = scalar_measure({0.0, 1.0}, {0.5, 0.5});
  DiscreteMeasure nu = scalar_measure({2.0, 5.0}, {0.5, 0.5});
  CHECK(solve_w2_1d(mu, nu).cost == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(solve_w2_1d(DiscreteMeasure::dirac(Point::scalar(-1.5)),
                    DiscreteMeasure::dirac(Point::scalar(2.5)))
            .cost == doctest::Approx(16.0).epsilon(1e-12));
  DiscreteMeasure tri = scalar_measure({0.0, 1.0, 2.0},
                                       {1.0 / 3, 1.0 / 3, 1.0 / 3});
  CHECK(solve_w2_1d(tri, tri).cost == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_THROWS_AS(solve_w2_1d(DiscreteMeasure::dirac(Point(std::vector<double>{0.0, 0.0})),
                              DiscreteMeasure::dirac(Point(std::vector<double>{1.0, 1.0}))),
                  Error);

  // random agreement with the simplex, duals feasible and tight
  for (int c = 0; c < 40; ++c) {
    DiscreteMeasure a = random_measure(sub_seed(11, static_cast<std::uint64_t>(c)), 1, 9);
    DiscreteMeasure b = random_measure(sub_seed(13, static_cast<std::uint64_t>(c)), 1, 9);
    OtSolution fast = solve_w2_1d(a, b);
    OtSolution full = solve_w2(a, b);
    CHECK(std::abs(fast.cost - full.cost) <=
          1e-9 * (1.0 + std::abs(full.cost)));
    double dual_obj = 0;
    for (int i = 0; i < a.size(); ++i) dual_obj += a.weight(i) * fast.dual_u[static_cast<size_t>(i)];
    for (int j = 0; j < b.size(); ++j) dual_obj += b.weight(j) * fast.dual_v[static_cast<size_t>(j)];
    CHECK(std::abs(dual_obj - fast.cost) <= 1e-7 * (1.0 + std::abs(fast.cost)));
    for (int i = 0; i < a.size(); ++i)
      for (int j = 0; j < b.size(); ++j) {
        double slack = dist_sq(a.point(i), b.point(j)) -
                       fast.dual_u[static_cast<size_t>(i)] - fast.dual_v[static_cast<size_t>(j)];
        CHECK(slack >= -1e-8);
      }
  }
}

TEST_CASE("kantorovich duals") {
  auto [u0, v0] = kantorovich_duals(DiscreteMeasure::dirac(Point::scalar(0.0)),
                                    DiscreteMeasure::dirac(Point::scalar(0.0)));
  CHECK(u0[0] + v0[0] == doctest::Approx(0.0).epsilon(1e-12));
  auto [u1, v1] = kantorovich_duals(DiscreteMeasure::dirac(Point::scalar(0.0)),
                                    DiscreteMeasure::dirac(Point::scalar(1.0)));
  CHECK(u1[0] + v1[0] == doctest::Approx(1.0).epsilon(1e-12));

  DiscreteMeasure mu = scalar_measure({0.0, 1.0}, {0.5, 0.5});
  DiscreteMeasure nu = scalar_measure({2.0, 5.0}, {0.5, 0.5});
  OtSolution sol = solve_w2(mu, nu);
  double dual_obj = 0.5 * (sol.dual_u[0] + sol.dual_u[1] + sol.dual_v[0] +
                           sol.dual_v[1]);
  CHECK(std::abs(dual_obj - sol.cost) <= 1e-9);
  // feasibility everywhere, tight on the support
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(sol.dual_u[static_cast<size_t>(i)] + sol.dual_v[static_cast<size_t>(j)] <=
            dist_sq(mu.point(i), nu.point(j)) + 1e-9);
  for (int k = 0; k < sol.plan.size(); ++k) {
    double c = dist_sq(sol.plan.pair(k).first, sol.plan.pair(k).second);
    // locate indices (2-atom instance: values identify atoms)
    int i = sol.plan.pair(k).first[0] == 0.0 ? 0 : 1;
    int j = sol.plan.pair(k).second[0] == 2.0 ? 0 : 1;
    CHECK(std::abs(sol.dual_u[static_cast<size_t>(i)] + sol.dual_v[static_cast<size_t>(j)] - c) <=
          1e-9);
  }
}

TEST_CASE("deterministic couplings") {
  DiscreteMeasure mu = scalar_measure({0.0, 1.0}, {0.5, 0.5});
  Coupling graph = Coupling::from_map(
      mu, [](const Point& x) { return Point::scalar(2.0 * x[0] + 1.0); });
  DeterminismCheck det = is_deterministic(graph);
  CHECK(det.deterministic);
  REQUIRE(det.domain.size() == 2);
  CHECK(det.image[0][0] == 1.0);
  CHECK(det.image[1][0] == 3.0);

  Coupling prod = Coupling::product(mu, mu);
  CHECK_FALSE(is_deterministic(prod).deterministic);

  CHECK(is_deterministic(Coupling::dirac(Point::scalar(0.0),
                                         Point::scalar(0.0)))
            .deterministic);
}

TEST_CASE("barycentric projection") {
  // symmetric conditional collapses to the mean
  Coupling sym = Coupling::product(
      DiscreteMeasure::dirac(Point::scalar(0.0)),
      scalar_measure({-1.0, 1.0}, {0.5, 0.5}));
  Coupling proj = barycentric_projection(sym);
  REQUIRE(proj.size() == 1);
  CHECK(proj.pair(0).second[0] == doctest::Approx(0.0).epsilon(1e-15));

  // a deterministic coupling is its own projection
  DiscreteMeasure mu = scalar_measure({0.0, 1.0}, {0.5, 0.5});
  Coupling graph = Coupling::from_map(
      mu, [](const Point& x) { return Point::scalar(x[0] - 3.0); });
  Coupling graph_proj = barycentric_projection(graph);
  CHECK(graph_proj.transport_cost() ==
        doctest::Approx(graph.transport_cost()).epsilon(1e-12));

  // hand-computed conditional means:
  //   gamma = 1/2 d(0,1) + 1/4 d(1,0) + 1/4 d(1,4)
  //   b(0) = 1, b(1) = (0 + 4)/2 = 2
  //   int |b|^2 dmu = 1/2*1 + 1/2*4 = 2.5 <= int |y|^2 dgamma = 4.5
  Coupling g({{Point::scalar(0.0), Point::scalar(1.0)},
              {Point::scalar(1.0), Point::scalar(0.0)},
              {Point::scalar(1.0), Point::scalar(4.0)}},
             {0.5, 0.25, 0.25});
  Coupling b = barycentric_projection(g);
  REQUIRE(b.size() == 2);
  CHECK(b.pair(0).first[0] == 0.0);
  CHECK(b.pair(0).second[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(b.pair(1).first[0] == 1.0);
  CHECK(b.pair(1).second[0] == doctest::Approx(2.0).epsilon(1e-15));
  double b_moment = 0;
  for (int k = 0; k < b.size(); ++k)
    b_moment += b.weight(k) * b.pair(k).second.norm_sq();
  double y_moment = 0;
  for (int k = 0; k < g.size(); ++k)
    y_moment += g.weight(k) * g.pair(k).second.norm_sq();
  CHECK(b_moment == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(y_moment == doctest::Approx(4.5).epsilon(1e-12));
  CHECK(b_moment <= y_moment + 1e-12);
}

TEST_CASE("cyclical monotonicity checker") {
  DiscreteMeasure mu = scalar_measure({0.0, 1.0}, {0.5, 0.5});
  DiscreteMeasure nu = scalar_measure({2.0, 5.0}, {0.5, 0.5});
  OtSolution sol = solve_w2(mu, nu);
  CHECK(check_cyclical_monotonicity(sol.plan.pairs(), 5).monotone);

  // <3, 0-4> + <1, 4-0> = -12 + 4 = -8 < 0
  std::vector<std::pair<Point, Point>> bad = {
      {Point::scalar(0.0), Point::scalar(3.0)},
      {Point::scalar(4.0), Point::scalar(1.0)}};
  MonotonicityResult res = check_cyclical_monotonicity(bad, 2);
  CHECK_FALSE(res.monotone);
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->value == doctest::Approx(-8.0).epsilon(1e-12));

  std::vector<std::pair<Point, Point>> single = {
      {Point::scalar(0.0), Point::scalar(3.0)}};
  CHECK(check_cyclical_monotonicity(single, 6).monotone);

  CHECK_THROWS_AS(check_cyclical_monotonicity(bad, 7), Error);
}

TEST_CASE("mc duals") {
  // duals of the pairing maximization: u_i + v_j >= <x_i, y_j> everywhere,
  // equality on the support, objective equal to the pairing value
  for (int c = 0; c < 30; ++c) {
    DiscreteMeasure mu = random_measure(sub_seed(61, static_cast<std::uint64_t>(c)), 2, 7);
    DiscreteMeasure nu = random_measure(sub_seed(62, static_cast<std::uint64_t>(c)), 2, 7);
    OtSolution mc = solve_mc(mu, nu);
    for (int i = 0; i < mu.size(); ++i)
      for (int j = 0; j < nu.size(); ++j)
        CHECK(mc.dual_u[static_cast<size_t>(i)] + mc.dual_v[static_cast<size_t>(j)] >=
              dot(mu.point(i), nu.point(j)) - 1e-8);
    double dual_obj = 0;
    for (int i = 0; i < mu.size(); ++i) dual_obj += mu.weight(i) * mc.dual_u[static_cast<size_t>(i)];
    for (int j = 0; j < nu.size(); ++j) dual_obj += nu.weight(j) * mc.dual_v[static_cast<size_t>(j)];
    CHECK(std::abs(dual_obj - mc.cost) <= 1e-7 * (1.0 + std::abs(mc.cost)));
  }
}

TEST_CASE("solver determinism") {
  DiscreteMeasure mu = random_measure(42, 2, 9);
  DiscreteMeasure nu = random_measure(43, 2, 9);
  OtSolution a = solve_w2(mu, nu);
  OtSolution b = solve_w2(mu, nu);
  CHECK(a.cost == b.cost);
  CHECK(a.plan == b.plan);
  CHECK(a.dual_u == b.dual_u);
  // mc plan shares the optimizer set of w2 (decomposition argument)
  OtSolution mc = solve_mc(mu, nu);
  double plan_cost = mc.plan.transport_cost();
  CHECK(std::abs(plan_cost - a.cost) <= 1e-9 * (1.0 + a.cost));
}

TEST_CASE("birkhoff unfolding oracle") {
  DiscreteMeasure mu = scalar_measure({0.0, 1.0}, {0.25, 0.75});
  std::vector<Point> unfolded = unfold_uniform(mu, 4);
  REQUIRE(unfolded.size() == 4);
  CHECK(unfolded[0][0] == 0.0);
  CHECK(unfolded[1][0] == 1.0);
  CHECK(unfolded[3][0] == 1.0);
  CHECK_THROWS_AS(unfold_uniform(mu, 3), Error);

  // brute force on the unfolded pair agrees with the simplex
  DiscreteMeasure nu = scalar_measure({2.0, 5.0}, {0.5, 0.5});
  double brute = assignment_bruteforce(
      unfold_uniform(mu, 4), unfold_uniform(nu, 4),
      [](const Point& a, const Point& b) { return dist_sq(a, b); });
  CHECK(std::abs(brute - solve_w2(mu, nu).cost) <= 1e-12);
}
