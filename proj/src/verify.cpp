#include "wow/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "wow/hungarian.hpp"
#include "wow/lggrm.hpp"
#include "wow/lp.hpp"
#include "wow/rng.hpp"

namespace wow {

json SuiteResult::to_json_summary() const {
  return json{{"suite", suite},
              {"cases", cases},
              {"checks", checks},
              {"failures", failures},
              {"messages", messages},
              {"passed", passed()}};
}

namespace {

struct Ctx {
  SuiteResult res;
  void check(bool ok, const std::string& what) {
    ++res.checks;
    if (!ok) {
      ++res.failures;
      if (res.messages.size() < 8) res.messages.push_back(what);
    }
  }
};

double rel_err(double a, double b) {
  return std::abs(a - b) / (1.0 + std::max(std::abs(a), std::abs(b)));
}

// view a coupling as a measure on R^{2d} so plans compare exactly
DiscreteMeasure coupling_as_measure(const Coupling& g) {
  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(g.size()));
  for (int k = 0; k < g.size(); ++k) {
    std::vector<double> c = g.pair(k).first.coords();
    const auto& y = g.pair(k).second.coords();
    c.insert(c.end(), y.begin(), y.end());
    pts.push_back(Point(std::move(c)));
  }
  return DiscreteMeasure(std::move(pts), g.weights());
}

std::string fmt(double x) {
  std::ostringstream o;
  o.precision(12);
  o << x;
  return o.str();
}

}  // namespace

DiscreteMeasure random_measure(std::uint64_t seed, int dim, int max_atoms) {
  Rng rng(seed);
  int n = 1 + rng.below(max_atoms);
  std::vector<Point> pts;
  std::vector<double> w;
  double sum = 0;
  for (int i = 0; i < n; ++i) {
    std::vector<double> c(static_cast<size_t>(dim));
    for (double& x : c) x = 4.0 * rng.uniform01() - 2.0;
    pts.push_back(Point(std::move(c)));
    double wi = 0.05 + rng.uniform01();
    w.push_back(wi);
    sum += wi;
  }
  for (double& x : w) x /= sum;
  return DiscreteMeasure(std::move(pts), std::move(w));
}

DiscreteMeasure random_rational_measure(std::uint64_t seed, int dim, int denom,
                                        int max_atoms) {
  Rng rng(seed);
  int n = 1 + rng.below(std::min(max_atoms, denom));
  // split denom units over n atoms, each at least one unit
  std::vector<int> units(static_cast<size_t>(n), 1);
  for (int r = n; r < denom; ++r) units[static_cast<size_t>(rng.below(n))] += 1;
  std::vector<Point> pts;
  std::vector<double> w;
  for (int i = 0; i < n; ++i) {
    std::vector<double> c(static_cast<size_t>(dim));
    for (double& x : c) x = 4.0 * rng.uniform01() - 2.0;
    pts.push_back(Point(std::move(c)));
    w.push_back(static_cast<double>(units[static_cast<size_t>(i)]) / denom);
  }
  return DiscreteMeasure(std::move(pts), std::move(w));
}

DiscreteMeasure random_uniform_1d_measure(std::uint64_t seed, int atoms) {
  Rng rng(seed);
  std::vector<double> vals;
  while (static_cast<int>(vals.size()) < atoms) {
    double x = 6.0 * rng.uniform01() - 3.0;
    bool dup = false;
    for (double v : vals)
      if (std::abs(v - x) < 1e-6) dup = true;
    if (!dup) vals.push_back(x);
  }
  std::vector<Point> pts;
  for (double v : vals) pts.push_back(Point::scalar(v));
  std::vector<double> w(static_cast<size_t>(atoms), 1.0 / atoms);
  return DiscreteMeasure(std::move(pts), std::move(w));
}

RandomLaw random_law(std::uint64_t seed, int dim, int max_law_atoms,
                     int max_measure_atoms) {
  Rng rng(seed);
  int k = 1 + rng.below(max_law_atoms);
  std::vector<DiscreteMeasure> atoms;
  std::vector<double> w;
  double sum = 0;
  for (int i = 0; i < k; ++i) {
    atoms.push_back(
        random_measure(sub_seed(seed, 100 + static_cast<std::uint64_t>(i)), dim,
                       max_measure_atoms));
    double wi = 0.1 + rng.uniform01();
    w.push_back(wi);
    sum += wi;
  }
  for (double& x : w) x /= sum;
  return RandomLaw(std::move(atoms), std::move(w));
}

namespace {

// --- suites ----------------------------------------------------------------

SuiteResult suite_measures(const VerifyConfig& cfg) {
  Ctx ctx;
  ctx.res.suite = "measures";
  for (int c = 0; c < cfg.cases; ++c) {
    std::uint64_t s = sub_seed(cfg.seed, static_cast<std::uint64_t>(c));
    Rng rng(s);
    int d = 1 + rng.below(3);
    DiscreteMeasure mu = random_measure(sub_seed(s, 1), d, 8);
    double a = 0.25 + 2.0 * rng.uniform01();
    // m2^2(dilate) = a^2 m2^2
    double lhs = second_moment_sq(dilate(mu, a));
    double rhs = a * a * second_moment_sq(mu);
    ctx.check(rel_err(lhs, rhs) <= 1e-12,
              "dilation moment scaling off: " + fmt(lhs) + " vs " + fmt(rhs));
    // interpolation endpoints
    DiscreteMeasure nu = random_measure(sub_seed(s, 2), d, 8);
    Coupling prod = Coupling::product(mu, nu);
    ctx.check(measures_equal(displacement_interpolate(prod, 0.0),
                             prod.first_marginal(), 1e-12),
              "interpolation at t=0 is not the first marginal");
    ctx.check(measures_equal(displacement_interpolate(prod, 1.0),
                             prod.second_marginal(), 1e-12),
              "interpolation at t=1 is not the second marginal");
    // pushforward keeps mass one and cannot grow the support
    DiscreteMeasure img = pushforward(mu, [](const Point& x) {
      std::vector<double> c(x.coords());
      for (double& v : c) v = std::round(v);
      return Point(std::move(c));
    });
    double mass = 0;
    for (int i = 0; i < img.size(); ++i) mass += img.weight(i);
    ctx.check(std::abs(mass - 1.0) <= 1e-12, "pushforward mass leak");
    ctx.check(img.size() <= mu.size(), "pushforward grew the support");
  }
  ctx.res.cases = cfg.cases;
  return ctx.res;
}

SuiteResult suite_decomposition(const VerifyConfig& cfg) {
  Ctx ctx;
  ctx.res.suite = "decomposition";
  const double tol = cfg.tol > 0 ? cfg.tol : 1e-8;
  for (int c = 0; c < cfg.cases; ++c) {
    std::uint64_t s = sub_seed(cfg.seed, static_cast<std::uint64_t>(c));
    Rng rng(s);
    int d = 1 + rng.below(3);
    DiscreteMeasure mu = random_measure(sub_seed(s, 1), d, 12);
    DiscreteMeasure nu = random_measure(sub_seed(s, 2), d, 12);
    OtSolution w2 = solve_w2(mu, nu);
    OtSolution mc = solve_mc(mu, nu);
    double m2m = second_moment_sq(mu), m2n = second_moment_sq(nu);
    double scale = m2m + m2n;
    double residual = std::abs(w2.cost - (m2m + m2n - 2.0 * mc.cost));
    ctx.check(residual <= tol * (1.0 + scale),
              "decomposition residual " + fmt(residual));
    // Cauchy-Schwarz and self-pairing
    ctx.check(std::abs(mc.cost) <=
                  second_moment(mu) * second_moment(nu) + 1e-9,
              "pairing exceeds the Cauchy-Schwarz bound");
    double self = solve_mc(mu, mu).cost;
    ctx.check(rel_err(self, m2m) <= 1e-9,
              "self-pairing differs from the second moment");
    // plan feasibility and dual agreement
    ctx.check(measures_equal(w2.plan.first_marginal(), canonicalize(mu), 1e-9),
              "plan first marginal off");
    ctx.check(measures_equal(w2.plan.second_marginal(), canonicalize(nu), 1e-9),
              "plan second marginal off");
    double dual_obj = 0;
    for (int i = 0; i < mu.size(); ++i) dual_obj += mu.weight(i) * w2.dual_u[static_cast<size_t>(i)];
    for (int j = 0; j < nu.size(); ++j) dual_obj += nu.weight(j) * w2.dual_v[static_cast<size_t>(j)];
    ctx.check(rel_err(dual_obj, w2.cost) <= 1e-7,
              "primal/dual gap " + fmt(dual_obj - w2.cost));
    // barycentric projection never gains second moment over the plan
    Coupling bary = barycentric_projection(w2.plan);
    double b_moment = 0, y_moment = 0;
    for (int k = 0; k < bary.size(); ++k)
      b_moment += bary.weight(k) * bary.pair(k).second.norm_sq();
    for (int k = 0; k < w2.plan.size(); ++k)
      y_moment += w2.plan.weight(k) * w2.plan.pair(k).second.norm_sq();
    ctx.check(b_moment <= y_moment + 1e-9,
              "barycentric second moment exceeds the plan moment");
  }
  ctx.res.cases = cfg.cases;
  return ctx.res;
}

SuiteResult suite_oracle(const VerifyConfig& cfg) {
  Ctx ctx;
  ctx.res.suite = "oracle";
  for (int c = 0; c < cfg.cases; ++c) {
    std::uint64_t s = sub_seed(cfg.seed, static_cast<std::uint64_t>(c));
    Rng rng(s);
    int d = 1 + rng.below(3);
    int denom = 6 + rng.below(3);  // 6..8: brute stays exhaustive
    DiscreteMeasure mu = random_rational_measure(sub_seed(s, 1), d, denom, 7);
    DiscreteMeasure nu = random_rational_measure(sub_seed(s, 2), d, denom, 7);
    OtSolution w2 = solve_w2(mu, nu);
    // Birkhoff route: unfold to uniform atoms, enumerate permutations
    std::vector<Point> xs = unfold_uniform(mu, denom);
    std::vector<Point> ys = unfold_uniform(nu, denom);
    double brute = assignment_bruteforce(
        xs, ys, [](const Point& a, const Point& b) { return dist_sq(a, b); });
    ctx.check(rel_err(w2.cost, brute) <= 1e-9,
              "simplex vs permutation oracle: " + fmt(w2.cost) + " vs " +
                  fmt(brute));
    // Hungarian on the unfolded instance agrees as well
    std::vector<std::vector<double>> cm(xs.size(),
                                        std::vector<double>(ys.size()));
    for (size_t i = 0; i < xs.size(); ++i)
      for (size_t j = 0; j < ys.size(); ++j) cm[i][j] = dist_sq(xs[i], ys[j]);
    double hung = solve_assignment(cm).cost / static_cast<double>(denom);
    ctx.check(rel_err(w2.cost, hung) <= 1e-9, "simplex vs Hungarian");
    if (d == 1) {
      double fast = solve_w2_1d(mu, nu).cost;
      ctx.check(rel_err(w2.cost, fast) <= 1e-9,
                "1-D monotone path disagrees with the simplex");
    }
    // generic dense LP as a third route on small instances
    if (mu.size() * nu.size() <= 20) {
      const int n = mu.size(), m = nu.size();
      std::vector<double> obj(static_cast<size_t>(n * m));
      std::vector<std::vector<double>> a(static_cast<size_t>(n + m),
                                         std::vector<double>(static_cast<size_t>(n * m), 0.0));
      std::vector<double> b(static_cast<size_t>(n + m));
      for (int i = 0; i < n; ++i) b[static_cast<size_t>(i)] = mu.weight(i);
      for (int j = 0; j < m; ++j) b[static_cast<size_t>(n + j)] = nu.weight(j);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
          obj[static_cast<size_t>(i * m + j)] = dist_sq(mu.point(i), nu.point(j));
          a[static_cast<size_t>(i)][static_cast<size_t>(i * m + j)] = 1.0;
          a[static_cast<size_t>(n + j)][static_cast<size_t>(i * m + j)] = 1.0;
        }
      LpResult lp = solve_lp_min(obj, a, b);
      ctx.check(lp.feasible && rel_err(lp.objective, w2.cost) <= 1e-8,
                "simplex vs dense LP");
    }
  }
  ctx.res.cases = cfg.cases;
  return ctx.res;
}

SuiteResult suite_permutation(const VerifyConfig& cfg) {
  Ctx ctx;
  ctx.res.suite = "permutation";
  for (int c = 0; c < cfg.cases; ++c) {
    std::uint64_t s = sub_seed(cfg.seed, static_cast<std::uint64_t>(c));
    Rng rng(s);
    int d = 1 + rng.below(3);
    int n = 2 + rng.below(6);  // 2..7
    std::vector<Point> v1, v2;
    for (int q = 0; q < n; ++q) {
      std::vector<double> a(static_cast<size_t>(d)), b(static_cast<size_t>(d));
      for (double& x : a) x = 4.0 * rng.uniform01() - 2.0;
      for (double& x : b) x = 4.0 * rng.uniform01() - 2.0;
      v1.push_back(Point(std::move(a)));
      v2.push_back(Point(std::move(b)));
    }
    LagrangianMap x1(v1), x2(v2);
    PermutationResult pb = pairing_by_permutation(x1, x2, PermMethod::brute);
    PermutationResult pa =
        pairing_by_permutation(x1, x2, PermMethod::assignment);
    double lp_mc = solve_mc(law(x1), law(x2)).cost;
    ctx.check(std::abs(pb.value - pa.value) <= 1e-8,
              "pairing: brute vs Hungarian");
    ctx.check(std::abs(pb.value - lp_mc) <= 1e-8,
              "pairing: permutations vs LP: " + fmt(pb.value) + " vs " +
                  fmt(lp_mc));
    PermutationResult wb = w2_by_permutation(x1, x2, PermMethod::brute);
    PermutationResult wa = w2_by_permutation(x1, x2, PermMethod::assignment);
    double lp_w2 = solve_w2(law(x1), law(x2)).cost;
    ctx.check(std::abs(wb.value - wa.value) <= 1e-8, "w2: brute vs Hungarian");
    ctx.check(std::abs(wb.value - lp_w2) <= 1e-8, "w2: permutations vs LP");
    // Cauchy-Schwarz at the map level
    double n1 = 0, n2 = 0;
    for (int q = 0; q < n; ++q) {
      n1 += x1.value(q).norm_sq();
      n2 += x2.value(q).norm_sq();
    }
    ctx.check(pb.value <= std::sqrt(n1 / n) * std::sqrt(n2 / n) + 1e-9,
              "pairing exceeds the norm bound");
    // segment law equals the displacement interpolation of the coupling
    Coupling cp = coupling_of_maps(x1, x2);
    double t = rng.uniform01();
    ctx.check(measures_equal(law(segment(x1, x2, t)),
                             displacement_interpolate(cp, t), 1e-12),
              "segment law differs from displacement interpolation");
  }
  ctx.res.cases = cfg.cases;
  return ctx.res;
}

SuiteResult suite_monotonicity(const VerifyConfig& cfg) {
  Ctx ctx;
  ctx.res.suite = "monotonicity";
  for (int c = 0; c < cfg.cases; ++c) {
    std::uint64_t s = sub_seed(cfg.seed, static_cast<std::uint64_t>(c));
    Rng rng(s);
    int d = 1 + rng.below(3);
    DiscreteMeasure mu = random_measure(sub_seed(s, 1), d, 5);
    DiscreteMeasure nu = random_measure(sub_seed(s, 2), d, 5);
    OtSolution w2 = solve_w2(mu, nu);
    MonotonicityResult mono =
        check_cyclical_monotonicity(w2.plan.pairs(), 5, 1e-9);
    ctx.check(mono.monotone, "optimal plan support fails the verifier");
    // a swapped 2-cycle with a strict margin must fail with a witness
    if (w2.plan.size() >= 2) {
      int best_a = -1, best_b = -1;
      double best_gain = 0;
      for (int a = 0; a < w2.plan.size(); ++a)
        for (int b = a + 1; b < w2.plan.size(); ++b) {
          const auto& pa = w2.plan.pair(a);
          const auto& pb = w2.plan.pair(b);
          double gain = 0;
          for (int k = 0; k < d; ++k)
            gain += (pa.second[k] - pb.second[k]) * (pa.first[k] - pb.first[k]);
          if (gain > best_gain) {
            best_gain = gain;
            best_a = a;
            best_b = b;
          }
        }
      if (best_gain > 1e-6) {
        auto pairs = w2.plan.pairs();
        std::swap(pairs[static_cast<size_t>(best_a)].second,
                  pairs[static_cast<size_t>(best_b)].second);
        MonotonicityResult swapped =
            check_cyclical_monotonicity(pairs, 2, 1e-9);
        ctx.check(!swapped.monotone && swapped.witness.has_value(),
                  "swapped plan passed the verifier");
      }
    }
    // converse direction on uniform permutation plans (n <= 5): a support
    // passing the full-cycle check is optimal
    {
      int n = 2 + rng.below(4);
      DiscreteMeasure ua = random_uniform_1d_measure(sub_seed(s, 7), n);
      DiscreteMeasure ub = random_uniform_1d_measure(sub_seed(s, 8), n);
      std::vector<int> perm(static_cast<size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      for (int i = n - 1; i > 0; --i)
        std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(rng.below(i + 1))]);
      std::vector<std::pair<Point, Point>> pairs;
      double perm_cost = 0;
      for (int i = 0; i < n; ++i) {
        pairs.emplace_back(ua.point(i), ub.point(perm[static_cast<size_t>(i)]));
        perm_cost += dist_sq(ua.point(i), ub.point(perm[static_cast<size_t>(i)])) / n;
      }
      double best = solve_w2(ua, ub).cost;
      MonotonicityResult cm =
          check_cyclical_monotonicity(pairs, std::min(n, 5), 1e-9);
      if (cm.monotone)
        ctx.check(std::abs(perm_cost - best) <= 1e-9 * (1.0 + best),
                  "monotone support is not optimal");
      else
        ctx.check(perm_cost > best - 1e-12,
                  "optimal cost exceeded by a feasible plan");
    }
    // nested counterpart on a random pair of laws
    RandomLaw lm = random_law(sub_seed(s, 3), d, 4, 4);
    RandomLaw ln = random_law(sub_seed(s, 4), d, 4, 4);
    NestedSolution outer = solve_W2(lm, ln);
    W2MonotonicityResult wm =
        check_W2_cyclical_monotonicity(outer.coupling, 5, 1e-9);
    ctx.check(wm.monotone, "optimal law matching fails w2^2 monotonicity");
    // every atom plan of the lifted optimal coupling has a monotone support
    RandomCouplingLaw lifted = lift_to_random_coupling(outer.coupling);
    for (int j = 0; j < lifted.size(); ++j)
      ctx.check(check_cyclical_monotonicity(lifted.atom(j).pairs(),
                                            std::min(lifted.atom(j).size(), 4),
                                            1e-9)
                    .monotone,
                "an inner optimal plan fails cyclical monotonicity");
    if (outer.coupling.pairs.size() >= 2) {
      // swap two targets; fails whenever the swap strictly loses
      CouplingOfLaws bad = outer.coupling;
      std::swap(bad.pairs[0][1], bad.pairs[1][1]);
      double orig = solve_w2(lm.atom(outer.coupling.pairs[0][0]),
                             ln.atom(outer.coupling.pairs[0][1]))
                        .cost +
                    solve_w2(lm.atom(outer.coupling.pairs[1][0]),
                             ln.atom(outer.coupling.pairs[1][1]))
                        .cost;
      double swap_cost = solve_w2(lm.atom(bad.pairs[0][0]),
                                  ln.atom(bad.pairs[0][1]))
                             .cost +
                         solve_w2(lm.atom(bad.pairs[1][0]),
                                  ln.atom(bad.pairs[1][1]))
                             .cost;
      if (swap_cost > orig + 1e-6) {
        // rebalance weights so the swapped matching stays a coupling
        bool valid = true;
        try {
          bad.validate();
        } catch (const Error&) {
          valid = false;
        }
        if (valid) {
          W2MonotonicityResult bm =
              check_W2_cyclical_monotonicity(bad, 2, 1e-9);
          ctx.check(!bm.monotone && bm.witness.has_value(),
                    "swapped law matching passed the verifier");
        }
      }
    }
  }
  ctx.res.cases = cfg.cases;
  return ctx.res;
}

SuiteResult suite_total_monotonicity(const VerifyConfig& cfg) {
  Ctx ctx;
  ctx.res.suite = "total-monotonicity";
  for (int c = 0; c < cfg.cases; ++c) {
    std::uint64_t s = sub_seed(cfg.seed, static_cast<std::uint64_t>(c));
    Rng rng(s);
    int d = 1 + rng.below(2);
    // identity couplings: the subdifferential of m2^2/2
    std::vector<Coupling> plans;
    for (int k = 0; k < 3; ++k)
      plans.push_back(Coupling::identity(
          random_measure(sub_seed(s, static_cast<std::uint64_t>(k) + 1), d, 4)));
    TotalMonotonicityResult good =
        check_total_cyclical_monotonicity(plans, 3, 1e-9);
    ctx.check(good.monotone, "identity-coupling field failed the LP check");
    // the antimonotone field x -> -x fails already on 2-cycles
    DiscreteMeasure base = random_uniform_1d_measure(sub_seed(s, 9), 2);
    Coupling anti = Coupling::from_map(base, [](const Point& x) {
      return Point::scalar(-x[0]);
    });
    TotalMonotonicityResult bad =
        check_total_cyclical_monotonicity({anti}, 2, 1e-9);
    ctx.check(!bad.monotone && bad.witness.has_value(),
              "antimonotone field passed the LP check");
  }
  ctx.res.cases = cfg.cases;
  return ctx.res;
}

SuiteResult suite_nested_decomposition(const VerifyConfig& cfg) {
  Ctx ctx;
  ctx.res.suite = "nested-decomposition";
  const double tol = cfg.tol > 0 ? cfg.tol : 1e-7;
  for (int c = 0; c < cfg.cases; ++c) {
    std::uint64_t s = sub_seed(cfg.seed, static_cast<std::uint64_t>(c));
    Rng rng(s);
    int d = 1 + rng.below(3);
    RandomLaw m = random_law(sub_seed(s, 1), d, 6, 8);
    RandomLaw n = random_law(sub_seed(s, 2), d, 6, 8);
    NestedSolution w2 = solve_W2(m, n, cfg.threads);
    NestedSolution mmc = solve_MMC(m, n, cfg.threads);
    double bm = big_moment(m), bn = big_moment(n);
    double scale = bm + bn;
    double residual = std::abs(w2.value - (bm + bn - 2.0 * mmc.value));
    ctx.check(residual <= tol * (1.0 + scale),
              "nested decomposition residual " + fmt(residual));
    // the W2-optimal matching attains the nested pairing
    auto mc_mat = pairwise_cost_matrix(m, n, PairwiseKind::mc, cfg.threads);
    double attained = 0;
    for (size_t r = 0; r < w2.coupling.pairs.size(); ++r)
      attained += w2.coupling.weights[r] *
                  mc_mat[static_cast<size_t>(w2.coupling.pairs[r][0])]
                        [static_cast<size_t>(w2.coupling.pairs[r][1])];
    ctx.check(std::abs(attained - mmc.value) <= 1e-8 * (1.0 + scale),
              "W2-optimal matching misses the nested pairing");
    // lift/lower chain
    RandomCouplingLaw lifted = lift_to_random_coupling(w2.coupling);
    double agg = random_coupling_cost(lifted);
    ctx.check(rel_err(agg, w2.value) <= 1e-8,
              "lifted aggregate cost differs from W2^2");
    CouplingOfLaws lowered = lower_random_coupling(lifted);
    double mid = 0;
    for (size_t r = 0; r < lowered.pairs.size(); ++r)
      mid += lowered.weights[r] *
             solve_w2(lowered.first.atom(lowered.pairs[r][0]),
                      lowered.second.atom(lowered.pairs[r][1]))
                 .cost;
    ctx.check(w2.value <= mid + 1e-8 * (1.0 + scale) &&
                  mid <= agg + 1e-8 * (1.0 + scale),
              "lower/lift inequality chain broken");
    // mean-measure linearity of the 1-projection
    double alpha = rng.uniform01();
    DiscreteMeasure lhs = k_projection(mix_laws(m, n, alpha), 1);
    std::map<std::vector<double>, double> acc;
    DiscreteMeasure pm = k_projection(m, 1);
    DiscreteMeasure pn = k_projection(n, 1);
    for (int i = 0; i < pm.size(); ++i)
      acc[pm.point(i).coords()] += alpha * pm.weight(i);
    for (int i = 0; i < pn.size(); ++i)
      acc[pn.point(i).coords()] += (1.0 - alpha) * pn.weight(i);
    std::vector<Point> pts;
    std::vector<double> w;
    for (auto& kv : acc) {
      pts.push_back(Point(kv.first));
      w.push_back(kv.second);
    }
    ctx.check(measures_equal(lhs, DiscreteMeasure(std::move(pts), std::move(w)),
                             1e-12),
              "mean-measure linearity broken");
  }
  ctx.res.cases = cfg.cases;
  return ctx.res;
}

SuiteResult suite_duality(const VerifyConfig& cfg) {
  Ctx ctx;
  ctx.res.suite = "duality";
  for (int c = 0; c < cfg.cases; ++c) {
    std::uint64_t s = sub_seed(cfg.seed, static_cast<std::uint64_t>(c));
    Rng rng(s);
    int d = 1 + rng.below(3);
    RandomLaw m = random_law(sub_seed(s, 1), d, 5, 6);
    RandomLaw n = random_law(sub_seed(s, 2), d, 5, 6);
    OuterDuals duals = outer_dual_potentials(m, n, cfg.threads);
    NestedSolution mmc = solve_MMC(m, n, cfg.threads);
    ctx.check(duals.max_violation <= 1e-7,
              "outer dual feasibility violated by " + fmt(duals.max_violation));
    ctx.check(duals.support_gap <= 1e-7,
              "outer dual slackness " + fmt(duals.support_gap));
    ctx.check(rel_err(duals.objective, mmc.value) <= 1e-9,
              "outer duality gap " + fmt(duals.objective - mmc.value));
  }
  ctx.res.cases = cfg.cases;
  return ctx.res;
}

SuiteResult suite_monge(const VerifyConfig& cfg) {
  Ctx ctx;
  ctx.res.suite = "monge";
  for (int c = 0; c < cfg.cases; ++c) {
    std::uint64_t s = sub_seed(cfg.seed, static_cast<std::uint64_t>(c));
    Rng rng(s);
    int k = 2 + rng.below(3);
    int atoms = 2 + rng.below(4);
    // uniform outer weights with equal-size uniform 1-D atoms: optimal
    // matchings are permutations and inner plans are bijections
    std::vector<DiscreteMeasure> ma, na;
    for (int i = 0; i < k; ++i) {
      ma.push_back(random_uniform_1d_measure(
          sub_seed(s, 10 + static_cast<std::uint64_t>(i)), atoms));
      na.push_back(random_uniform_1d_measure(
          sub_seed(s, 50 + static_cast<std::uint64_t>(i)), atoms));
    }
    std::vector<double> w(static_cast<size_t>(k), 1.0 / k);
    RandomLaw m(ma, w), n(na, w);
    NestedSolution outer = solve_W2(m, n);
    RandomCouplingLaw lifted = lift_to_random_coupling(outer.coupling);
    try {
      MongeSolution monge = extract_monge(outer.coupling, lifted);
      ctx.check(rel_err(monge.cost, outer.value) <= 1e-8,
                "strict Monge cost differs from W2^2: " + fmt(monge.cost) +
                    " vs " + fmt(outer.value));
      ctx.check(rel_err(strict_monge_cost(monge.field, m), monge.cost) <= 1e-12,
                "field cost mismatch");
      RandomLaw image(monge.atom_images, m.weights());
      ctx.check(laws_equal(image, n, 1e-9), "F#M differs from N");
    } catch (const Error& e) {
      ctx.check(false, std::string("extraction failed: ") + e.what());
    }
  }
  ctx.res.cases = cfg.cases;
  return ctx.res;
}

SuiteResult suite_geodesic(const VerifyConfig& cfg) {
  Ctx ctx;
  ctx.res.suite = "geodesic";
  const double tol = cfg.tol > 0 ? cfg.tol : 1e-7;
  const std::vector<double> ts = {0.0, 0.25, 0.5, 0.75, 1.0};
  for (int c = 0; c < cfg.cases; ++c) {
    std::uint64_t s = sub_seed(cfg.seed, static_cast<std::uint64_t>(c));
    Rng rng(s);
    int d = 1 + rng.below(2);
    RandomLaw m = random_law(sub_seed(s, 1), d, 3, 4);
    RandomLaw n = random_law(sub_seed(s, 2), d, 3, 4);
    NestedSolution outer = solve_W2(m, n, cfg.threads);
    RandomCouplingLaw lifted = lift_to_random_coupling(outer.coupling);
    GeodesicReport rep = verify_geodesic(lifted, ts, cfg.threads);
    ctx.check(rep.input_optimal, "optimal input flagged as non-optimal");
    ctx.check(rep.max_residual <= tol,
              "geodesic residual " + fmt(rep.max_residual));
    ctx.check(rep.intermediate_t >= 0 &&
                  rep.intermediate_dual_gap <= 1e-7 &&
                  rep.intermediate_support_gap <= 1e-7,
              "intermediate-point duals not tight");
    // midpoint inversion reconstructs every inner plan exactly
    try {
      InterpolationInverse inv = invert_interpolation(lifted, 0.5);
      for (int j = 0; j < lifted.size(); ++j) {
        Coupling rec = reconstruct_from_inverse(inv.atoms[static_cast<size_t>(j)]);
        ctx.check(measures_equal(coupling_as_measure(rec),
                                 coupling_as_measure(lifted.atom(j)), 1e-12),
                  "midpoint inversion failed to reconstruct the plan");
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::collision) {
        // legitimate for coincident interpolants; not a failure
      } else {
        ctx.check(false, std::string("inversion failed: ") + e.what());
      }
    }
    // a deliberately swapped matching must show a positive midpoint residual
    if (outer.coupling.pairs.size() >= 2) {
      CouplingOfLaws bad = outer.coupling;
      std::swap(bad.pairs[0][1], bad.pairs[1][1]);
      bool valid = true;
      try {
        bad.validate();
      } catch (const Error&) {
        valid = false;
      }
      if (valid) {
        RandomCouplingLaw bad_lift = lift_to_random_coupling(bad);
        double bad_cost = random_coupling_cost(bad_lift);
        if (bad_cost > outer.value + 1e-6) {
          GeodesicReport bad_rep = verify_geodesic(bad_lift, {0.0, 0.5, 1.0},
                                                   cfg.threads);
          ctx.check(!bad_rep.input_optimal || bad_rep.max_residual > tol,
                    "suboptimal input produced a clean geodesic report");
        }
      }
    }
  }
  ctx.res.cases = cfg.cases;
  return ctx.res;
}

SuiteResult suite_convex_calculus(const VerifyConfig& cfg) {
  Ctx ctx;
  ctx.res.suite = "convex-calculus";
  const double tol = cfg.tol > 0 ? cfg.tol : 1e-9;
  for (int c = 0; c < cfg.cases; ++c) {
    std::uint64_t s = sub_seed(cfg.seed, static_cast<std::uint64_t>(c));
    Rng rng(s);
    int d = 1 + rng.below(2);
    int g = 3 + rng.below(3);
    std::vector<DiscreteMeasure> grid;
    std::vector<double> values;
    for (int i = 0; i < g; ++i) {
      grid.push_back(
          random_measure(sub_seed(s, 10 + static_cast<std::uint64_t>(i)), d, 4));
      values.push_back(2.0 * rng.uniform01() - 1.0);
    }
    FunctionalSpec table = FunctionalSpec::table(grid, values);
    DiscreteMeasure nu = random_measure(sub_seed(s, 99), d, 4);
    double a = 0.5 + 2.0 * rng.uniform01();
    ctx.check(dilation_conjugacy_check(table, grid, a, nu, tol),
              "dilation conjugacy identity failed");
    // c-transform relation: with U = m2^2/2 - phi, U^c = m2^2/2 - phi*
    std::vector<double> u_values;
    for (int i = 0; i < g; ++i)
      u_values.push_back(0.5 * second_moment_sq(grid[static_cast<size_t>(i)]) -
                         values[static_cast<size_t>(i)]);
    FunctionalSpec u_table = FunctionalSpec::table(grid, u_values);
    double lhs = c_transform_on_grid(u_table, nu);
    double rhs = 0.5 * second_moment_sq(nu) -
                 klf_conjugate_on_grid(table, grid, nu).value;
    ctx.check(std::abs(lhs - rhs) <= tol * (1.0 + std::abs(lhs)),
              "c-transform relation failed: " + fmt(lhs) + " vs " + fmt(rhs));
    // grid biconjugate never exceeds the function on the grid
    std::vector<double> conj_values;
    for (int i = 0; i < g; ++i)
      conj_values.push_back(
          klf_conjugate_on_grid(table, grid, grid[static_cast<size_t>(i)]).value);
    FunctionalSpec conj_table = FunctionalSpec::table(grid, conj_values);
    for (int i = 0; i < g; ++i) {
      double biconj =
          klf_conjugate_on_grid(conj_table, grid, grid[static_cast<size_t>(i)]).value;
      ctx.check(biconj <= values[static_cast<size_t>(i)] + tol,
                "grid biconjugate exceeds the table");
    }
    // grid-conjugate monotonicity under grid growth
    std::vector<DiscreteMeasure> subgrid(grid.begin(), grid.begin() + 2);
    FunctionalSpec table_sub = FunctionalSpec::table(
        subgrid, std::vector<double>(values.begin(), values.begin() + 2));
    double small = klf_conjugate_on_grid(table_sub, subgrid, nu).value;
    double large = klf_conjugate_on_grid(table, grid, nu).value;
    // same table values on the common part: enlarge only
    double large_same = -1e300;
    for (int i = 0; i < g; ++i)
      large_same = std::max(large_same, solve_mc(nu, grid[static_cast<size_t>(i)]).cost -
                                            values[static_cast<size_t>(i)]);
    ctx.check(small <= large_same + tol && std::abs(large - large_same) <= tol,
              "grid-conjugate monotonicity failed");
    // Moreau-Yosida at vanishing step returns the anchored value
    DiscreteMeasure mu0 = grid[0];
    MoreauYosidaResult my = moreau_yosida_on_grid(table, grid, 1e-6, mu0);
    double min_val = *std::min_element(values.begin(), values.end());
    if (values[0] <= min_val + 1e-12)
      ctx.check(std::abs(my.value - values[0]) <= 1e-6,
                "Moreau-Yosida at tiny tau misses the anchored minimum");
  }
  ctx.res.cases = cfg.cases;
  return ctx.res;
}

SuiteResult suite_knu(const VerifyConfig& cfg) {
  Ctx ctx;
  ctx.res.suite = "knu";
  const double tol = cfg.tol > 0 ? cfg.tol : 1e-8;
  for (int c = 0; c < cfg.cases; ++c) {
    std::uint64_t s = sub_seed(cfg.seed, static_cast<std::uint64_t>(c));
    Rng rng(s);
    int d = 1 + rng.below(3);
    DiscreteMeasure nu = random_measure(sub_seed(s, 1), d, 5);
    DiscreteMeasure mu1 = random_measure(sub_seed(s, 2), d, 5);
    DiscreteMeasure mu2 = random_measure(sub_seed(s, 3), d, 5);
    ctx.check(lipschitz_check_knu(nu, mu1, mu2, tol),
              "k_nu Lipschitz bound failed");
    Coupling gamma = Coupling::product(mu1, mu2);
    FunctionalSpec knu = FunctionalSpec::max_pairing(nu);
    ctx.check(check_total_convexity(knu, gamma, {0.25, 0.5, 0.75}, tol),
              "k_nu total convexity failed");
    // potential energy |x|^2/2 is totally convex as well
    ctx.check(check_total_convexity(FunctionalSpec::quadratic(), gamma,
                                    {0.25, 0.5, 0.75}, tol),
              "quadratic potential convexity failed");
  }
  ctx.res.cases = cfg.cases;
  return ctx.res;
}

SuiteResult suite_lggrm_stats(const VerifyConfig& cfg) {
  Ctx ctx;
  ctx.res.suite = "lggrm-stats";
  // Brownian occupation: E m2^2 = 1/2 within 3 standard errors; the
  // occupation-moment variance is known (1/3 in the continuum limit), so
  // the error bar does not self-normalize on the sample
  {
    GaussianSpec spec;
    spec.basis = GaussianSpec::Basis::brownian;
    spec.dim = 1;
    spec.labels = 10000;
    int samples = std::min(std::max(cfg.cases, 100), 1000);
    double sum = 0;
    for (int s = 0; s < samples; ++s) {
      LagrangianMap x =
          sample_path(spec, sub_seed(cfg.seed, static_cast<std::uint64_t>(s)));
      double m2 = 0;
      for (int q = 0; q < x.labels(); ++q) m2 += x.value(q).norm_sq();
      sum += m2 / x.labels();
    }
    double mean = sum / samples;
    double se = std::sqrt(1.0 / 3.0) / std::sqrt(static_cast<double>(samples));
    ctx.check(std::abs(mean - 0.5) <= 3.0 * se + 1e-3,
              "Brownian occupation moment " + fmt(mean) + " (se " + fmt(se) +
                  ")");
  }
  // Bridge sine: big moment matches the truncated eigen sum; per-path
  // moments are sums of independent chi-squares, so the variance is
  // 2 sum lambda^4 exactly
  {
    GaussianSpec spec;
    spec.basis = GaussianSpec::Basis::bridge_sine;
    spec.dim = 1;
    spec.truncation = 200;
    spec.labels = 500;
    int samples = std::min(std::max(cfg.cases, 100), 400);
    double sum = 0;
    for (int s = 0; s < samples; ++s) {
      LagrangianMap x = sample_path(
          spec, sub_seed(cfg.seed ^ 0xb1dULL, static_cast<std::uint64_t>(s)));
      double m2 = 0;
      for (int q = 0; q < x.labels(); ++q) m2 += x.value(q).norm_sq();
      sum += m2 / x.labels();
    }
    double mean = sum / samples;
    double var = 0;
    for (double l : spec.bridge_lambdas()) var += 2.0 * l * l * l * l;
    double se = std::sqrt(var) / std::sqrt(static_cast<double>(samples));
    double target = spec.scale_energy();
    ctx.check(std::abs(mean - target) <= 3.0 * se + 1e-4,
              "bridge-sine moment " + fmt(mean) + " vs " + fmt(target) +
                  " (se " + fmt(se) + ")");
  }
  // Walsh orthonormality for m <= 4, exhaustively
  for (int m = 1; m <= 4; ++m) {
    auto labels = walsh_labels(m);
    const int t = 1 << m;
    bool ok = true;
    for (int ma = 0; ma < t && ok; ++ma) {
      for (int mb = 0; mb < t && ok; ++mb) {
        std::vector<int> ia, ib;
        for (int i = 0; i < m; ++i) {
          if (ma & (1 << i)) ia.push_back(i + 1);
          if (mb & (1 << i)) ib.push_back(i + 1);
        }
        long acc = 0;
        for (int q = 0; q < t; ++q)
          acc += walsh_function(ia, labels[static_cast<size_t>(q)]) *
                 walsh_function(ib, labels[static_cast<size_t>(q)]);
        long expect = (ma == mb) ? t : 0;
        if (acc != expect) ok = false;
      }
    }
    ctx.check(ok, "Walsh orthonormality fails at level " + std::to_string(m));
  }
  // variance function symmetry + diagonal zero, against a long-double oracle
  {
    GaussianSpec spec;
    spec.basis = GaussianSpec::Basis::bridge_sine;
    spec.dim = 1;
    spec.truncation = 64;
    spec.labels = 128;
    Point q1 = Point::scalar(1.5707963267948966);
    Point q2 = Point::scalar(1.6707963267948966);
    VarianceTriple v12 = variance_function(spec, q1, q2);
    VarianceTriple v21 = variance_function(spec, q2, q1);
    ctx.check(v12.alpha_sq == v21.alpha_sq, "variance symmetry broken");
    VarianceTriple diag = variance_function(spec, q1, q1);
    ctx.check(diag.alpha_sq == 0.0, "variance not zero on the diagonal");
    long double acc = 0;
    std::vector<double> lam = spec.bridge_lambdas();
    for (int n = spec.truncation; n >= 1; --n) {
      long double diff =
          std::sqrt(2.0L) * (std::sin(static_cast<long double>(n) * 1.5707963267948966L) -
                             std::sin(static_cast<long double>(n) * 1.6707963267948966L));
      acc += static_cast<long double>(lam[static_cast<size_t>(n - 1)]) *
             static_cast<long double>(lam[static_cast<size_t>(n - 1)]) * diff * diff;
    }
    ctx.check(std::abs(v12.alpha_sq - static_cast<double>(acc)) <= 1e-10,
              "variance disagrees with the high-precision summation");
  }
  ctx.res.cases = 4;
  return ctx.res;
}

SuiteResult suite_regularity(const VerifyConfig& cfg) {
  Ctx ctx;
  ctx.res.suite = "regularity";
  (void)cfg;
  // geometric level scales: A_n = 2^{-(n+1)/2}, summand ratio 1/sqrt(2)
  {
    std::vector<double> a;
    for (int n = 1; n <= 24; ++n) a.push_back(std::pow(2.0, -0.5 * (n + 1)));
    RegularityReport rep = walsh_criterion(a, 1);
    ctx.check(rep.verdict == "converges",
              "geometric scales misclassified as " + rep.verdict);
    ctx.check(std::abs(rep.ratio_estimate - 1.0 / std::sqrt(2.0)) <= 1e-9,
              "ratio estimate " + fmt(rep.ratio_estimate));
  }
  // A_n = 2^{-n} with d = 1: constant summands, divergent
  {
    std::vector<double> a;
    for (int n = 1; n <= 24; ++n) a.push_back(std::pow(2.0, -n));
    RegularityReport rep = walsh_criterion(a, 1);
    ctx.check(rep.verdict == "diverges",
              "constant summands misclassified as " + rep.verdict);
  }
  // constant A_n: geometric, convergent
  {
    std::vector<double> a(24, 1.0);
    RegularityReport rep = walsh_criterion(a, 2);
    ctx.check(rep.verdict == "converges", "constant scales misclassified");
  }
  // fBM flag on both sides of H d = 1
  for (auto [h, d, good] : {std::tuple<double, int, bool>{0.4, 2, true},
                            {0.6, 2, false},
                            {0.3, 3, true},
                            {0.5, 1, true}}) {
    GaussianSpec spec;
    spec.basis = GaussianSpec::Basis::fbm;
    spec.dim = d;
    spec.labels = 16;
    spec.hurst = h;
    bool flag = h * d < 1.0;
    ctx.check(flag == good, "fBM flag arithmetic broken");
  }
  // Walsh with unit scales: bounded integrand, convergent Berman estimate
  {
    GaussianSpec spec;
    spec.basis = GaussianSpec::Basis::walsh;
    spec.dim = 1;
    spec.walsh_level = 5;
    spec.labels = 32;
    spec.walsh_scales.assign(6, 1.0);
    RegularityReport rep = berman_integral_estimate(spec, 4000, cfg.seed);
    ctx.check(rep.verdict == "converges",
              "bounded Walsh integrand misclassified as " + rep.verdict);
    ctx.check(rep.estimate <= 0.5 + 1e-9,
              "Walsh Berman estimate above the uniform bound");
  }
  // Bridge sine, d = 1: finite estimate, stable across sample doubling
  {
    GaussianSpec spec;
    spec.basis = GaussianSpec::Basis::bridge_sine;
    spec.dim = 1;
    spec.truncation = 100;
    spec.labels = 256;
    RegularityReport r1 = berman_integral_estimate(spec, 8000, cfg.seed);
    RegularityReport r2 = berman_integral_estimate(spec, 16000, cfg.seed);
    ctx.check(r1.verdict == "converges" && r2.verdict == "converges",
              "bridge-sine Berman estimate misclassified");
    ctx.check(std::abs(r1.estimate - r2.estimate) <=
                  5.0 * (r1.standard_error + r2.standard_error) + 0.05,
              "Berman estimate unstable across doubling");
  }
  // atomless diagnostic: Dirac atoms give diagonal mass one; occupation
  // measures of a Brownian grid give the 1/T self-weight term
  {
    RandomLaw diracs(
        {DiscreteMeasure::dirac(Point::scalar(0.0)),
         DiscreteMeasure::dirac(Point::scalar(1.0))},
        {0.5, 0.5});
    auto diag = atomless_diagnostic(diracs, {1.0, 0.1, 0.001});
    for (auto& [eps, mass] : diag)
      ctx.check(std::abs(mass - 1.0) <= 1e-12, "Dirac diagonal mass not 1");
    GaussianSpec spec;
    spec.basis = GaussianSpec::Basis::brownian;
    spec.dim = 1;
    spec.labels = 256;
    RandomLaw occ = sample_law(spec, 4, cfg.seed);
    auto d2 = atomless_diagnostic(occ, {1e-12});
    ctx.check(std::abs(d2[0].second - 1.0 / 256.0) <= 1e-9,
              "self-weight term differs from 1/T");
    // nonincreasing in shrinking epsilon
    auto d3 = atomless_diagnostic(occ, {0.5, 0.1, 0.01, 1e-6});
    for (size_t i = 1; i < d3.size(); ++i)
      ctx.check(d3[i].second <= d3[i - 1].second + 1e-15,
                "diagnostic not monotone in epsilon");
  }
  ctx.res.cases = 7;
  return ctx.res;
}

SuiteResult suite_sampling(const VerifyConfig& cfg) {
  Ctx ctx;
  ctx.res.suite = "sampling";
  // bit-identical repeats per basis
  std::vector<GaussianSpec> specs;
  {
    GaussianSpec s1;
    s1.basis = GaussianSpec::Basis::brownian;
    s1.dim = 2;
    s1.labels = 64;
    specs.push_back(s1);
    GaussianSpec s2;
    s2.basis = GaussianSpec::Basis::bridge_sine;
    s2.dim = 1;
    s2.truncation = 16;
    s2.labels = 64;
    specs.push_back(s2);
    GaussianSpec s3;
    s3.basis = GaussianSpec::Basis::walsh;
    s3.dim = 1;
    s3.walsh_level = 4;
    s3.labels = 16;
    s3.walsh_scales.assign(5, 0.5);
    specs.push_back(s3);
    GaussianSpec s4;
    s4.basis = GaussianSpec::Basis::fbm;
    s4.dim = 1;
    s4.labels = 32;
    s4.hurst = 0.3;
    specs.push_back(s4);
  }
  for (const auto& spec : specs) {
    LagrangianMap x1 = sample_path(spec, cfg.seed + 7);
    LagrangianMap x2 = sample_path(spec, cfg.seed + 7);
    bool same = x1.labels() == x2.labels();
    for (int q = 0; same && q < x1.labels(); ++q)
      same = x1.value(q) == x2.value(q);
    ctx.check(same, "repeat sampling is not bit-identical");
    LagrangianMap x3 = sample_path(spec, cfg.seed + 8);
    bool differs = false;
    for (int q = 0; q < x1.labels() && !differs; ++q)
      differs = !(x1.value(q) == x3.value(q));
    ctx.check(differs, "different seeds produced identical paths");
  }
  // law sampling: reproducible and sub-stream independent
  GaussianSpec spec;
  spec.basis = GaussianSpec::Basis::brownian;
  spec.dim = 1;
  spec.labels = 32;
  RandomLaw l1 = sample_law(spec, 5, cfg.seed);
  RandomLaw l2 = sample_law(spec, 5, cfg.seed);
  ctx.check(to_json(l1) == to_json(l2), "law sampling not reproducible");
  ctx.res.cases = static_cast<int>(specs.size()) + 1;
  return ctx.res;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"measures",       "decomposition", "oracle",
          "permutation",    "monotonicity",  "total-monotonicity",
          "nested-decomposition", "duality", "monge",
          "geodesic",       "convex-calculus", "knu",
          "lggrm-stats",    "regularity",    "sampling"};
}

SuiteResult run_suite(const std::string& name, const VerifyConfig& cfg) {
  if (cfg.cases == 0) {
    SuiteResult vacuous;
    vacuous.suite = name;
    return vacuous;
  }
  if (name == "measures") return suite_measures(cfg);
  if (name == "decomposition") return suite_decomposition(cfg);
  if (name == "oracle") return suite_oracle(cfg);
  if (name == "permutation") return suite_permutation(cfg);
  if (name == "monotonicity") return suite_monotonicity(cfg);
  if (name == "total-monotonicity") return suite_total_monotonicity(cfg);
  if (name == "nested-decomposition") return suite_nested_decomposition(cfg);
  if (name == "duality") return suite_duality(cfg);
  if (name == "monge") return suite_monge(cfg);
  if (name == "geodesic") return suite_geodesic(cfg);
  if (name == "convex-calculus") return suite_convex_calculus(cfg);
  if (name == "knu") return suite_knu(cfg);
  if (name == "lggrm-stats") return suite_lggrm_stats(cfg);
  if (name == "regularity") return suite_regularity(cfg);
  if (name == "sampling") return suite_sampling(cfg);
  throw Error(ErrorCode::invalid_input, "unknown suite: " + name);
}

}  // namespace wow
