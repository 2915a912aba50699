#include "wow/lggrm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

#include "wow/parallel.hpp"
#include "wow/rng.hpp"

namespace wow {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

void GaussianSpec::validate() const {
  require(dim >= 1 && dim <= kMaxDim, ErrorCode::invalid_input,
          "spec: dimension out of range");
  switch (basis) {
    case Basis::brownian:
      require(labels >= 1, ErrorCode::invalid_input, "spec: labels >= 1");
      break;
    case Basis::bridge_sine:
      require(labels >= 1, ErrorCode::invalid_input, "spec: labels >= 1");
      require(truncation >= 1, ErrorCode::invalid_input,
              "spec: truncation >= 1");
      require(truncation < labels, ErrorCode::invalid_input,
              "spec: truncation must stay below the grid size");
      if (!lambdas.empty())
        require(static_cast<int>(lambdas.size()) == truncation,
                ErrorCode::invalid_input, "spec: lambdas length != truncation");
      break;
    case Basis::walsh:
      require(walsh_level >= 1 && walsh_level <= 12, ErrorCode::size_guard,
              "spec: walsh level in [1,12]");
      require(static_cast<int>(walsh_scales.size()) == walsh_level + 1,
              ErrorCode::invalid_input,
              "spec: walsh needs one scale per level 0..m");
      break;
    case Basis::fbm:
      require(labels >= 1 && labels <= 2048, ErrorCode::size_guard,
              "spec: fbm labels in [1,2048]");
      require(hurst > 0.0 && hurst < 1.0, ErrorCode::invalid_input,
              "spec: hurst in (0,1)");
      break;
  }
}

std::vector<double> GaussianSpec::bridge_lambdas() const {
  std::vector<double> l = lambdas;
  if (l.empty()) {
    l.resize(static_cast<size_t>(truncation));
    for (int n = 1; n <= truncation; ++n)
      l[static_cast<size_t>(n - 1)] = 1.0 / (kPi * n);
  }
  return l;
}

double GaussianSpec::scale_energy() const {
  double s = 0;
  switch (basis) {
    case Basis::brownian:
      return 0.5;  // E m2^2 of the occupation measure, not an eigen sum
    case Basis::bridge_sine:
      for (double l : bridge_lambdas()) s += l * l;
      return s;
    case Basis::walsh: {
      // level n holds 2^{n-1} sets (level 0: the empty set)
      s = walsh_scales[0] * walsh_scales[0];
      for (int n = 1; n <= walsh_level; ++n)
        s += std::ldexp(1.0, n - 1) * walsh_scales[static_cast<size_t>(n)] *
             walsh_scales[static_cast<size_t>(n)];
      return s;
    }
    case Basis::fbm:
      return 0.0;
  }
  return s;
}

namespace {

std::vector<Point> brownian_path(const GaussianSpec& spec, Rng& rng) {
  const int t = spec.labels, d = spec.dim;
  const double sigma = std::sqrt(1.0 / t);
  std::vector<std::vector<double>> coords(static_cast<size_t>(t),
                                          std::vector<double>(static_cast<size_t>(d)));
  for (int c = 0; c < d; ++c) {
    double acc = 0;
    for (int j = 0; j < t; ++j) {
      acc += sigma * rng.normal();
      coords[static_cast<size_t>(j)][static_cast<size_t>(c)] = acc;
    }
  }
  std::vector<Point> out;
  out.reserve(static_cast<size_t>(t));
  for (auto& v : coords) out.push_back(Point(std::move(v)));
  return out;
}

std::vector<Point> bridge_sine_path(const GaussianSpec& spec, Rng& rng) {
  const int t = spec.labels, d = spec.dim, n_max = spec.truncation;
  std::vector<double> lam = spec.bridge_lambdas();
  // midpoint grid of (0, pi): exact discrete orthonormality for n < T
  std::vector<double> grid(static_cast<size_t>(t));
  for (int j = 0; j < t; ++j) grid[static_cast<size_t>(j)] = kPi * (j + 0.5) / t;
  std::vector<std::vector<double>> coords(static_cast<size_t>(t),
                                          std::vector<double>(static_cast<size_t>(d), 0.0));
  const double sqrt2 = std::sqrt(2.0);
  for (int c = 0; c < d; ++c) {
    for (int n = 1; n <= n_max; ++n) {
      double xi = lam[static_cast<size_t>(n - 1)] * rng.normal();
      for (int j = 0; j < t; ++j)
        coords[static_cast<size_t>(j)][static_cast<size_t>(c)] +=
            xi * sqrt2 * std::sin(n * grid[static_cast<size_t>(j)]);
    }
  }
  std::vector<Point> out;
  out.reserve(static_cast<size_t>(t));
  for (auto& v : coords) out.push_back(Point(std::move(v)));
  return out;
}

std::vector<Point> walsh_path(const GaussianSpec& spec, Rng& rng) {
  const int m = spec.walsh_level, d = spec.dim;
  const int t = 1 << m;
  std::vector<std::vector<int>> labels = walsh_labels(m);
  std::vector<std::vector<double>> coords(static_cast<size_t>(t),
                                          std::vector<double>(static_cast<size_t>(d), 0.0));
  // subsets of {1..m} in binary order; level(I) = max I, level({}) = 0
  for (int c = 0; c < d; ++c) {
    for (int mask = 0; mask < t; ++mask) {
      int level = 0;
      for (int i = 0; i < m; ++i)
        if (mask & (1 << i)) level = i + 1;
      double xi = spec.walsh_scales[static_cast<size_t>(level)] * rng.normal();
      for (int j = 0; j < t; ++j) {
        int w = 1;
        for (int i = 0; i < m; ++i)
          if (mask & (1 << i)) w *= labels[static_cast<size_t>(j)][static_cast<size_t>(i)];
        coords[static_cast<size_t>(j)][static_cast<size_t>(c)] += xi * w;
      }
    }
  }
  std::vector<Point> out;
  out.reserve(static_cast<size_t>(t));
  for (auto& v : coords) out.push_back(Point(std::move(v)));
  return out;
}

// lower-triangular Cholesky with one jittered retry
std::vector<std::vector<double>> cholesky(std::vector<std::vector<double>> a) {
  const int n = static_cast<int>(a.size());
  for (int attempt = 0; attempt < 2; ++attempt) {
    std::vector<std::vector<double>> l(static_cast<size_t>(n),
                                       std::vector<double>(static_cast<size_t>(n), 0.0));
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = 0; j <= i; ++j) {
        double s = a[static_cast<size_t>(i)][static_cast<size_t>(j)];
        for (int k = 0; k < j; ++k)
          s -= l[static_cast<size_t>(i)][static_cast<size_t>(k)] * l[static_cast<size_t>(j)][static_cast<size_t>(k)];
        if (i == j) {
          if (s <= 0) {
            ok = false;
            break;
          }
          l[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::sqrt(s);
        } else {
          l[static_cast<size_t>(i)][static_cast<size_t>(j)] = s / l[static_cast<size_t>(j)][static_cast<size_t>(j)];
        }
      }
    }
    if (ok) return l;
    if (attempt == 0) {
      for (int i = 0; i < n; ++i) a[static_cast<size_t>(i)][static_cast<size_t>(i)] += 1e-12;
    }
  }
  throw Error(ErrorCode::solver_failure,
              "covariance factorization failed (degenerate covariance)");
}

std::vector<Point> fbm_path(const GaussianSpec& spec, Rng& rng) {
  const int t = spec.labels, d = spec.dim;
  const double h2 = 2.0 * spec.hurst;
  std::vector<std::vector<double>> cov(static_cast<size_t>(t),
                                       std::vector<double>(static_cast<size_t>(t)));
  for (int i = 0; i < t; ++i) {
    double ti = static_cast<double>(i + 1) / t;
    for (int j = 0; j < t; ++j) {
      double tj = static_cast<double>(j + 1) / t;
      cov[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          0.5 * (std::pow(ti, h2) + std::pow(tj, h2) -
                 std::pow(std::abs(ti - tj), h2));
    }
  }
  std::vector<std::vector<double>> l = cholesky(std::move(cov));
  std::vector<std::vector<double>> coords(static_cast<size_t>(t),
                                          std::vector<double>(static_cast<size_t>(d)));
  std::vector<double> z(static_cast<size_t>(t));
  for (int c = 0; c < d; ++c) {
    for (int j = 0; j < t; ++j) z[static_cast<size_t>(j)] = rng.normal();
    for (int j = 0; j < t; ++j) {
      double s = 0;
      for (int k = 0; k <= j; ++k) s += l[static_cast<size_t>(j)][static_cast<size_t>(k)] * z[static_cast<size_t>(k)];
      coords[static_cast<size_t>(j)][static_cast<size_t>(c)] = s;
    }
  }
  std::vector<Point> out;
  out.reserve(static_cast<size_t>(t));
  for (auto& v : coords) out.push_back(Point(std::move(v)));
  return out;
}

}  // namespace

LagrangianMap sample_path(const GaussianSpec& spec, std::uint64_t seed) {
  spec.validate();
  Rng rng(splitmix64(seed));
  switch (spec.basis) {
    case GaussianSpec::Basis::brownian:
      return LagrangianMap(brownian_path(spec, rng));
    case GaussianSpec::Basis::bridge_sine:
      return LagrangianMap(bridge_sine_path(spec, rng));
    case GaussianSpec::Basis::walsh:
      return LagrangianMap(walsh_path(spec, rng));
    case GaussianSpec::Basis::fbm:
      return LagrangianMap(fbm_path(spec, rng));
  }
  throw Error(ErrorCode::invalid_input, "unknown basis");
}

RandomLaw sample_law(const GaussianSpec& spec, int samples,
                     std::uint64_t seed, int threads) {
  spec.validate();
  require(samples >= 1, ErrorCode::invalid_input, "samples >= 1 required");
  std::vector<std::optional<DiscreteMeasure>> slots(static_cast<size_t>(samples));
  parallel_for(samples, threads, [&](int s) {
    slots[static_cast<size_t>(s)] =
        law(sample_path(spec, sub_seed(seed, static_cast<std::uint64_t>(s))));
  });
  std::vector<DiscreteMeasure> atoms;
  atoms.reserve(static_cast<size_t>(samples));
  for (auto& slot : slots) atoms.push_back(std::move(*slot));
  std::vector<double> w(static_cast<size_t>(samples), 1.0 / samples);
  return RandomLaw(std::move(atoms), std::move(w));
}

int walsh_function(const std::vector<int>& index_set,
                   const std::vector<int>& q) {
  int w = 1;
  for (int i : index_set) {
    require(i >= 1 && i <= static_cast<int>(q.size()),
            ErrorCode::invalid_input, "walsh index out of range");
    int s = q[static_cast<size_t>(i - 1)];
    require(s == 1 || s == -1, ErrorCode::invalid_input,
            "walsh labels must be signs");
    w *= s;
  }
  return w;
}

std::vector<std::vector<int>> walsh_labels(int level) {
  require(level >= 1 && level <= 12, ErrorCode::size_guard,
          "walsh level in [1,12]");
  const int t = 1 << level;
  std::vector<std::vector<int>> out(static_cast<size_t>(t),
                                    std::vector<int>(static_cast<size_t>(level)));
  for (int j = 0; j < t; ++j)
    for (int i = 0; i < level; ++i)
      out[static_cast<size_t>(j)][static_cast<size_t>(i)] = (j & (1 << i)) ? 1 : -1;
  return out;
}

VarianceTriple variance_function(const GaussianSpec& spec, const Point& q1,
                                 const Point& q2) {
  spec.validate();
  VarianceTriple out;
  if (spec.basis == GaussianSpec::Basis::bridge_sine) {
    require(q1.dim() == 1 && q2.dim() == 1, ErrorCode::invalid_input,
            "bridge_sine labels are scalar");
    std::vector<double> lam = spec.bridge_lambdas();
    double s = 0;
    const double sqrt2 = std::sqrt(2.0);
    for (int n = 1; n <= spec.truncation; ++n) {
      double diff = sqrt2 * (std::sin(n * q1[0]) - std::sin(n * q2[0]));
      s += lam[static_cast<size_t>(n - 1)] * lam[static_cast<size_t>(n - 1)] * diff * diff;
    }
    out.alpha_sq = out.beta_sq = out.lambda_sq = s;
    return out;
  }
  if (spec.basis == GaussianSpec::Basis::walsh) {
    const int m = spec.walsh_level;
    require(q1.dim() == m && q2.dim() == m, ErrorCode::invalid_input,
            "walsh labels live in {-1,1}^m");
    std::vector<int> s1(static_cast<size_t>(m)), s2(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
      s1[static_cast<size_t>(i)] = q1[i] >= 0 ? 1 : -1;
      s2[static_cast<size_t>(i)] = q2[i] >= 0 ? 1 : -1;
    }
    double s = 0;
    for (int mask = 0; mask < (1 << m); ++mask) {
      int level = 0;
      int w1 = 1, w2 = 1;
      for (int i = 0; i < m; ++i) {
        if (mask & (1 << i)) {
          level = i + 1;
          w1 *= s1[static_cast<size_t>(i)];
          w2 *= s2[static_cast<size_t>(i)];
        }
      }
      double lam = spec.walsh_scales[static_cast<size_t>(level)];
      double diff = static_cast<double>(w1 - w2);
      s += lam * lam * diff * diff;
    }
    out.alpha_sq = out.beta_sq = out.lambda_sq = s;
    return out;
  }
  throw Error(ErrorCode::invalid_input,
              "variance_function needs an explicit basis (bridge_sine or walsh)");
}

RegularityReport walsh_criterion(const std::vector<double>& level_alphas,
                                 int d) {
  require(!level_alphas.empty(), ErrorCode::invalid_input, "no level scales");
  require(d >= 1, ErrorCode::invalid_input, "dimension must be >= 1");
  for (double a : level_alphas)
    require(a > 0, ErrorCode::invalid_input, "level scales must be positive");

  RegularityReport rep;
  rep.criterion = "walsh_level_sum";
  const int n_terms = static_cast<int>(level_alphas.size());
  std::vector<double> terms(static_cast<size_t>(n_terms));
  double acc = 0;
  for (int n = 1; n <= n_terms; ++n) {
    double t = 1.0 / (std::ldexp(1.0, n) * std::pow(level_alphas[static_cast<size_t>(n - 1)], d));
    terms[static_cast<size_t>(n - 1)] = t;
    acc += t;
    rep.partial_sums.push_back(acc);
  }
  // mean of the trailing term ratios
  int tail = std::min(5, n_terms - 1);
  if (tail <= 0) {
    rep.ratio_estimate = 1.0;
  } else {
    double r = 0;
    for (int k = n_terms - tail; k < n_terms; ++k)
      r += terms[static_cast<size_t>(k)] / terms[static_cast<size_t>(k - 1)];
    rep.ratio_estimate = r / tail;
  }
  const double margin = 0.05;
  if (rep.ratio_estimate < 1.0 - margin) {
    rep.verdict = "converges";
  } else if (rep.ratio_estimate > 1.0 + margin) {
    rep.verdict = "diverges";
  } else if (terms.back() > 1e-8) {
    // ratio near one with a non-vanishing tail: the terms fail the
    // necessary vanishing condition
    rep.verdict = "diverges";
  } else {
    rep.verdict = "inconclusive";
  }
  rep.note = "numeric diagnostic (finite truncation)";
  return rep;
}

namespace {

// labels of Q as points, plus the minimal usable pair distance
std::pair<std::vector<Point>, double> label_points(const GaussianSpec& spec) {
  if (spec.basis == GaussianSpec::Basis::bridge_sine) {
    std::vector<Point> pts;
    pts.reserve(static_cast<size_t>(spec.labels));
    for (int j = 0; j < spec.labels; ++j)
      pts.push_back(Point::scalar(kPi * (j + 0.5) / spec.labels));
    return {std::move(pts), kPi / spec.labels};
  }
  if (spec.basis == GaussianSpec::Basis::walsh) {
    std::vector<Point> pts;
    for (const auto& row : walsh_labels(spec.walsh_level)) {
      std::vector<double> c(row.begin(), row.end());
      pts.push_back(Point(std::move(c)));
    }
    return {std::move(pts), 2.0};
  }
  throw Error(ErrorCode::invalid_input,
              "berman estimate needs an explicit basis (bridge_sine or walsh)");
}

}  // namespace

RegularityReport berman_integral_estimate(const GaussianSpec& spec,
                                          int samples, std::uint64_t seed) {
  spec.validate();
  require(samples >= 16, ErrorCode::invalid_input, "too few samples");
  auto [pts, step] = label_points(spec);
  const int t = static_cast<int>(pts.size());
  Rng rng(splitmix64(seed ^ 0x5eedULL));

  RegularityReport rep;
  rep.criterion = "berman_integral";
  double sum = 0, sum_sq = 0;
  int kept = 0;
  // near-diagonal shells [h, 2h) for h = step, 2 step, 4 step
  std::vector<double> shell_sum(3, 0.0);
  std::vector<int> shell_count(3, 0);
  for (int s = 0; s < samples; ++s) {
    int i = rng.below(t), j = rng.below(t);
    double dist = std::sqrt(dist_sq(pts[static_cast<size_t>(i)], pts[static_cast<size_t>(j)]));
    if (dist < step * 0.999) continue;  // diagonal rejection
    VarianceTriple var = variance_function(spec, pts[static_cast<size_t>(i)], pts[static_cast<size_t>(j)]);
    require(var.alpha_sq > 0, ErrorCode::invalid_input,
            "degenerate basis: zero variance off the diagonal");
    double integrand = std::pow(var.alpha_sq, -0.5 * spec.dim);
    sum += integrand;
    sum_sq += integrand * integrand;
    ++kept;
    for (int k = 0; k < 3; ++k) {
      double h = step * std::ldexp(1.0, k);
      if (dist >= h && dist < 2.0 * h) {
        shell_sum[static_cast<size_t>(k)] += integrand;
        shell_count[static_cast<size_t>(k)] += 1;
      }
    }
  }
  require(kept > 0, ErrorCode::invalid_input, "all pairs rejected");
  rep.estimate = sum / kept;
  double var_est = std::max(0.0, sum_sq / kept - rep.estimate * rep.estimate);
  rep.standard_error = std::sqrt(var_est / kept);
  for (int k = 0; k < 3; ++k)
    rep.probe.push_back(shell_count[static_cast<size_t>(k)] > 0
                            ? shell_sum[static_cast<size_t>(k)] / shell_count[static_cast<size_t>(k)]
                            : 0.0);
  // slope of log(shell mean) against log(h): integrand ~ h^{-p} near the
  // diagonal of a one-dimensional label space diverges when p >= 1
  double p_hat = 0;
  if (rep.probe[0] > 0 && rep.probe[2] > 0)
    p_hat = std::log(rep.probe[0] / rep.probe[2]) / std::log(4.0);
  rep.ratio_estimate = p_hat;
  if (p_hat < 0.9)
    rep.verdict = "converges";
  else if (p_hat > 1.1)
    rep.verdict = "diverges";
  else
    rep.verdict = "inconclusive";
  rep.note = "numeric diagnostic (near-diagonal scaling probe)";
  return rep;
}

std::vector<std::pair<double, double>> atomless_diagnostic(
    const RandomLaw& m, const std::vector<double>& eps_list) {
  require(!eps_list.empty(), ErrorCode::invalid_input, "no epsilon values");
  for (size_t i = 0; i < eps_list.size(); ++i) {
    require(eps_list[i] > 0, ErrorCode::invalid_input,
            "epsilon must be positive");
    if (i > 0)
      require(eps_list[i] < eps_list[i - 1], ErrorCode::invalid_input,
              "epsilon list must decrease");
  }
  std::vector<std::pair<double, double>> out;
  for (double eps : eps_list) {
    double mass = 0;
    for (int k = 0; k < m.size(); ++k) {
      const DiscreteMeasure& mu = m.atom(k);
      double local = 0;
      for (int i = 0; i < mu.size(); ++i) {
        local += mu.weight(i) * mu.weight(i);  // exact-atom term
        for (int j = i + 1; j < mu.size(); ++j)
          if (dist_sq(mu.point(i), mu.point(j)) < eps * eps)
            local += 2.0 * mu.weight(i) * mu.weight(j);
      }
      mass += m.weight(k) * local;
    }
    out.emplace_back(eps, mass);
  }
  return out;
}

}  // namespace wow
