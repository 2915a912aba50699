#include <doctest.h>

#include <cmath>

#include "wow/lggrm.hpp"
#include "wow/reports.hpp"

using namespace wow;

TEST_CASE("walsh functions") {
  auto labels = walsh_labels(3);
  REQUIRE(labels.size() == 8);
  CHECK(walsh_function({}, labels[0]) == 1);
  std::vector<int> q_minus = {-1, 1, 1};
  CHECK(walsh_function({1}, q_minus) == -1);
  CHECK_THROWS_AS(walsh_function({4}, q_minus), Error);

  // orthonormality over all pairs of subsets at m = 3
  for (int ma = 0; ma < 8; ++ma) {
    for (int mb = 0; mb < 8; ++mb) {
      std::vector<int> ia, ib;
      for (int i = 0; i < 3; ++i) {
        if (ma & (1 << i)) ia.push_back(i + 1);
        if (mb & (1 << i)) ib.push_back(i + 1);
      }
      int acc = 0;
      for (const auto& q : labels)
        acc += walsh_function(ia, q) * walsh_function(ib, q);
      CHECK(acc == (ma == mb ? 8 : 0));
    }
  }
}

TEST_CASE("sampling determinism") {
  GaussianSpec spec;
  spec.basis = GaussianSpec::Basis::brownian;
  spec.dim = 2;
  spec.labels = 50;
  LagrangianMap a = sample_path(spec, 12345);
  LagrangianMap b = sample_path(spec, 12345);
  REQUIRE(a.labels() == b.labels());
  for (int q = 0; q < a.labels(); ++q) CHECK(a.value(q) == b.value(q));
  LagrangianMap c = sample_path(spec, 12346);
  bool differs = false;
  for (int q = 0; q < a.labels(); ++q)
    if (!(a.value(q) == c.value(q))) differs = true;
  CHECK(differs);

  // all-zero scales produce the zero map
  GaussianSpec flat;
  flat.basis = GaussianSpec::Basis::bridge_sine;
  flat.dim = 1;
  flat.truncation = 8;
  flat.labels = 32;
  flat.lambdas.assign(8, 0.0);
  LagrangianMap zero = sample_path(flat, 7);
  for (int q = 0; q < zero.labels(); ++q) CHECK(zero.value(q)[0] == 0.0);
}

TEST_CASE("sample_law structure") {
  GaussianSpec spec;
  spec.basis = GaussianSpec::Basis::brownian;
  spec.dim = 1;
  spec.labels = 16;
  RandomLaw single = sample_law(spec, 1, 3);
  CHECK(single.size() == 1);
  CHECK(single.weight(0) == 1.0);

  RandomLaw l1 = sample_law(spec, 4, 3);
  RandomLaw l2 = sample_law(spec, 4, 4);
  bool differs = false;
  for (int k = 0; k < 4 && !differs; ++k)
    differs = !(l1.atom(k) == l2.atom(k));
  CHECK(differs);
}

TEST_CASE("variance function") {
  GaussianSpec walsh;
  walsh.basis = GaussianSpec::Basis::walsh;
  walsh.dim = 1;
  walsh.walsh_level = 2;
  walsh.labels = 4;
  walsh.walsh_scales = {1.0, 1.0, 1.0};
  Point q1(std::vector<double>{1.0, 1.0});
  CHECK(variance_function(walsh, q1, q1).lambda_sq == 0.0);
  // flipping only the first coordinate touches the subsets containing 1:
  // {1} and {1,2}, each contributing (±2)^2 = 4
  Point q2(std::vector<double>{-1.0, 1.0});
  VarianceTriple v = variance_function(walsh, q1, q2);
  CHECK(v.lambda_sq == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(v.alpha_sq == v.beta_sq);

  GaussianSpec bs;
  bs.basis = GaussianSpec::Basis::bridge_sine;
  bs.dim = 1;
  bs.truncation = 32;
  bs.labels = 64;
  Point p1 = Point::scalar(1.5707963267948966);
  Point p2 = Point::scalar(1.6707963267948966);
  VarianceTriple v12 = variance_function(bs, p1, p2);
  VarianceTriple v21 = variance_function(bs, p2, p1);
  CHECK(v12.lambda_sq == v21.lambda_sq);
  CHECK(v12.lambda_sq > 0.0);

  GaussianSpec bm;
  bm.basis = GaussianSpec::Basis::brownian;
  bm.dim = 1;
  bm.labels = 8;
  CHECK_THROWS_AS(variance_function(bm, p1, p2), Error);
}

TEST_CASE("walsh criterion") {
  // A_n = 2^{-(n+1)/2}: summand 2^{(1-n)/2}, ratio 1/sqrt(2), convergent
  std::vector<double> geo;
  for (int n = 1; n <= 20; ++n) geo.push_back(std::pow(2.0, -0.5 * (n + 1)));
  RegularityReport r1 = walsh_criterion(geo, 1);
  CHECK(r1.verdict == "converges");
  CHECK(r1.ratio_estimate ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(r1.partial_sums.size() == 20);
  for (size_t i = 1; i < r1.partial_sums.size(); ++i)
    CHECK(r1.partial_sums[i] >= r1.partial_sums[i - 1]);

  // constant scales: summand 2^{-n}, geometric
  RegularityReport r2 = walsh_criterion(std::vector<double>(20, 1.0), 1);
  CHECK(r2.verdict == "converges");

  // A_n = 2^{-n} at d = 1: constant summand 1, divergent
  std::vector<double> slow;
  for (int n = 1; n <= 20; ++n) slow.push_back(std::pow(2.0, -n));
  RegularityReport r3 = walsh_criterion(slow, 1);
  CHECK(r3.verdict == "diverges");

  CHECK_THROWS_AS(walsh_criterion({1.0, 0.0}, 1), Error);
}

TEST_CASE("berman estimate") {
  GaussianSpec walsh;
  walsh.basis = GaussianSpec::Basis::walsh;
  walsh.dim = 1;
  walsh.walsh_level = 4;
  walsh.labels = 16;
  walsh.walsh_scales.assign(5, 1.0);
  RegularityReport rep = berman_integral_estimate(walsh, 2000, 11);
  CHECK(rep.verdict == "converges");
  // alpha^2 >= 4 off the diagonal, so the integrand stays below 1/2
  CHECK(rep.estimate <= 0.5 + 1e-12);
  CHECK(rep.standard_error >= 0.0);

  GaussianSpec bs;
  bs.basis = GaussianSpec::Basis::bridge_sine;
  bs.dim = 1;
  bs.truncation = 50;
  bs.labels = 128;
  RegularityReport rb = berman_integral_estimate(bs, 4000, 11);
  CHECK(rb.verdict == "converges");
  CHECK(std::isfinite(rb.estimate));
}

TEST_CASE("atomless diagnostic") {
  RandomLaw diracs({DiscreteMeasure::dirac(Point::scalar(0.0)),
                    DiscreteMeasure::dirac(Point::scalar(2.0))},
                   {0.5, 0.5});
  auto d = atomless_diagnostic(diracs, {10.0, 1.0, 0.001});
  for (auto& [eps, mass] : d) CHECK(mass == doctest::Approx(1.0));

  // epsilon above the diameter captures everything
  DiscreteMeasure spread(
      {Point::scalar(0.0), Point::scalar(1.0), Point::scalar(2.0)},
      {1.0 / 3, 1.0 / 3, 1.0 / 3});
  auto full = atomless_diagnostic(RandomLaw::dirac(spread), {5.0});
  CHECK(full[0].second == doctest::Approx(1.0).epsilon(1e-12));

  // uniform grid occupation: the exact-atom term is 1/T
  GaussianSpec spec;
  spec.basis = GaussianSpec::Basis::brownian;
  spec.dim = 1;
  spec.labels = 128;
  RandomLaw occ = sample_law(spec, 3, 5);
  auto tiny = atomless_diagnostic(occ, {1e-13});
  CHECK(tiny[0].second == doctest::Approx(1.0 / 128).epsilon(1e-9));

  CHECK_THROWS_AS(atomless_diagnostic(diracs, {1.0, 2.0}), Error);
  CHECK_THROWS_AS(atomless_diagnostic(diracs, {}), Error);
}

TEST_CASE("fbm sampling") {
  GaussianSpec spec;
  spec.basis = GaussianSpec::Basis::fbm;
  spec.dim = 2;
  spec.labels = 64;
  spec.hurst = 0.3;
  LagrangianMap x = sample_path(spec, 1);
  CHECK(x.labels() == 64);
  CHECK(x.dim() == 2);
  LagrangianMap y = sample_path(spec, 1);
  for (int q = 0; q < x.labels(); ++q) CHECK(x.value(q) == y.value(q));

  GaussianSpec bad = spec;
  bad.hurst = 1.5;
  CHECK_THROWS_AS(sample_path(bad, 1), Error);
}

TEST_CASE("lggrm reports") {
  // fBM flag on the divergent side of H d = 1
  GaussianSpec fbm;
  fbm.basis = GaussianSpec::Basis::fbm;
  fbm.dim = 2;
  fbm.labels = 32;
  fbm.hurst = 0.6;
  fbm.seed = 3;
  LggrmOutput out = lggrm_report(fbm, 2);
  CHECK(out.report["regularity"]["hurst_times_dim"].get<double>() ==
        doctest::Approx(1.2).epsilon(1e-12));
  CHECK(out.report["regularity"]["verdict"] == "diverges");

  GaussianSpec fbm_ok = fbm;
  fbm_ok.hurst = 0.4;
  CHECK(lggrm_report(fbm_ok, 2).report["regularity"]["verdict"] ==
        "converges");

  // geometric Walsh scales: per-level sums A_n = 2^{-(n+1)/2}, convergent
  GaussianSpec walsh;
  walsh.basis = GaussianSpec::Basis::walsh;
  walsh.dim = 1;
  walsh.walsh_level = 6;
  walsh.labels = 64;
  walsh.seed = 3;
  for (int lvl = 0; lvl <= 6; ++lvl)
    walsh.walsh_scales.push_back(std::pow(2.0, -lvl));
  LggrmOutput wout = lggrm_report(walsh, 2);
  CHECK(wout.report["regularity"]["verdict"] == "converges");
  CHECK(wout.law["atoms"].size() == 2);
}

TEST_CASE("spec validation") {
  GaussianSpec walsh;
  walsh.basis = GaussianSpec::Basis::walsh;
  walsh.dim = 1;
  walsh.walsh_level = 3;
  walsh.labels = 8;
  walsh.walsh_scales = {1.0, 1.0};  // needs level+1 entries
  CHECK_THROWS_AS(walsh.validate(), Error);

  GaussianSpec bs;
  bs.basis = GaussianSpec::Basis::bridge_sine;
  bs.dim = 1;
  bs.truncation = 64;
  bs.labels = 32;  // truncation must stay below the grid
  CHECK_THROWS_AS(bs.validate(), Error);
}
