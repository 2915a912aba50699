#include <doctest.h>

#include <cmath>

#include "wow/lagrangian.hpp"
#include "wow/ot.hpp"
#include "wow/rng.hpp"

using namespace wow;

namespace {

LagrangianMap scalar_map(std::vector<double> xs) {
  std::vector<Point> pts;
  for (double x : xs) pts.push_back(Point::scalar(x));
  return LagrangianMap(std::move(pts));
}

}  // namespace

TEST_CASE("law of a map") {
  CHECK(measures_equal(law(scalar_map({0.0, 0.0, 0.0})),
                       DiscreteMeasure::dirac(Point::scalar(0.0)), 0.0));
  DiscreteMeasure half = law(scalar_map({0.0, 1.0}));
  CHECK(half.size() == 2);
  CHECK(half.weight(0) == doctest::Approx(0.5).epsilon(1e-15));
  DiscreteMeasure merged = law(scalar_map({1.0, 1.0, 2.0}));
  REQUIRE(merged.size() == 2);
  CHECK(merged.weight(0) == doctest::Approx(2.0 / 3).epsilon(1e-15));
  CHECK(merged.weight(1) == doctest::Approx(1.0 / 3).epsilon(1e-15));
  // m2(law(X)) = ||X||
  LagrangianMap x = scalar_map({0.5, -1.5, 2.0, 2.0});
  double norm_sq = 0;
  for (int q = 0; q < x.labels(); ++q) norm_sq += x.value(q).norm_sq();
  norm_sq /= x.labels();
  CHECK(second_moment_sq(law(x)) == doctest::Approx(norm_sq).epsilon(1e-12));
}

TEST_CASE("pairing by permutation") {
  LagrangianMap x1 = scalar_map({0.0, 1.0});
  LagrangianMap x2 = scalar_map({2.0, 5.0});
  PermutationResult brute = pairing_by_permutation(x1, x2, PermMethod::brute);
  CHECK(brute.value == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(brute.perm == std::vector<int>{0, 1});
  PermutationResult assign =
      pairing_by_permutation(x1, x2, PermMethod::assignment);
  CHECK(assign.value == doctest::Approx(2.5).epsilon(1e-12));

  // constant second map: permutation-invariant value <mean(X1), c>
  LagrangianMap c = scalar_map({3.0, 3.0});
  CHECK(pairing_by_permutation(x1, c, PermMethod::brute).value ==
        doctest::Approx(1.5).epsilon(1e-12));

  // self-pairing at the identity equals the law's second moment
  LagrangianMap x = scalar_map({0.5, -1.0, 2.0});
  PermutationResult self = pairing_by_permutation(x, x, PermMethod::brute);
  CHECK(self.value ==
        doctest::Approx(second_moment_sq(law(x))).epsilon(1e-12));
  CHECK(self.value ==
        doctest::Approx(solve_mc(law(x), law(x)).cost).epsilon(1e-9));
}

TEST_CASE("w2 by permutation") {
  LagrangianMap x1 = scalar_map({0.0, 1.0});
  LagrangianMap x2 = scalar_map({2.0, 5.0});
  CHECK(w2_by_permutation(x1, x1, PermMethod::brute).value ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(w2_by_permutation(x1, x2, PermMethod::brute).value ==
        doctest::Approx(10.0).epsilon(1e-12));
  CHECK(w2_by_permutation(x1, x2, PermMethod::assignment).value ==
        doctest::Approx(10.0).epsilon(1e-12));

  // random d=2, n=5: brute, assignment and the LP agree
  Rng rng(99);
  for (int c = 0; c < 30; ++c) {
    std::vector<Point> a, b;
    for (int q = 0; q < 5; ++q) {
      a.push_back(Point(std::vector<double>{rng.uniform01(), rng.uniform01()}));
      b.push_back(Point(std::vector<double>{rng.uniform01(), rng.uniform01()}));
    }
    LagrangianMap xa(a), xb(b);
    double vb = w2_by_permutation(xa, xb, PermMethod::brute).value;
    double va = w2_by_permutation(xa, xb, PermMethod::assignment).value;
    double vl = solve_w2(law(xa), law(xb)).cost;
    CHECK(std::abs(vb - va) <= 1e-10);
    CHECK(std::abs(vb - vl) <= 1e-8);
    double pb = pairing_by_permutation(xa, xb, PermMethod::brute).value;
    double pa = pairing_by_permutation(xa, xb, PermMethod::assignment).value;
    double pl = solve_mc(law(xa), law(xb)).cost;
    CHECK(std::abs(pb - pa) <= 1e-10);
    CHECK(std::abs(pb - pl) <= 1e-8);
  }
}

TEST_CASE("guards") {
  LagrangianMap big(std::vector<Point>(9, Point::scalar(0.0)));
  CHECK_THROWS_AS(pairing_by_permutation(big, big, PermMethod::brute), Error);
  CHECK_THROWS_AS(
      w2_by_permutation(scalar_map({0.0}), scalar_map({0.0, 1.0}),
                        PermMethod::brute),
      Error);
}

TEST_CASE("lifted convexity") {
  LagrangianMap x0 = scalar_map({-1.0, 2.0, 0.5});
  LagrangianMap x1 = scalar_map({1.0, -2.0, -0.5});
  FunctionalSpec knu =
      FunctionalSpec::max_pairing(DiscreteMeasure::dirac(Point::scalar(1.5)));
  CHECK(lifted_convexity_check(knu, x0, x1, {0.0, 0.25, 0.5, 0.75, 1.0}));
  // quadratic potential with X0 = -X1: the midpoint law is a Dirac at zero
  CHECK(lifted_convexity_check(FunctionalSpec::quadratic(), x0, x1, {0.5}));
  CHECK(evaluate(FunctionalSpec::quadratic(), law(segment(x0, x1, 0.5))) ==
        doctest::Approx(0.0).epsilon(1e-12));

  // the segment law realizes the displacement interpolation exactly
  Coupling cp = coupling_of_maps(x0, x1);
  for (double t : {0.0, 0.3, 0.5, 0.9, 1.0})
    CHECK(measures_equal(law(segment(x0, x1, t)),
                         displacement_interpolate(cp, t), 1e-12));
}
