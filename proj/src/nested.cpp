#include "wow/nested.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "wow/lp.hpp"
#include "wow/parallel.hpp"

namespace wow {

namespace {

void validate_law_weights(std::vector<double>& w, const char* what) {
  require(!w.empty(), ErrorCode::invalid_input,
          std::string(what) + ": empty weight vector");
  double sum = 0;
  for (double x : w) {
    require(std::isfinite(x) && x > 0, ErrorCode::invalid_input,
            std::string(what) + ": weights must be positive");
    sum += x;
  }
  require(std::abs(sum - 1.0) <= 1e-9, ErrorCode::invalid_input,
          std::string(what) + ": weights sum deviates from 1 beyond 1e-9");
  if (std::abs(sum - 1.0) > 1e-12)
    for (double& x : w) x /= sum;
}

}  // namespace

RandomLaw::RandomLaw(std::vector<DiscreteMeasure> atoms,
                     std::vector<double> weights)
    : atoms_(std::move(atoms)), weights_(std::move(weights)) {
  require(!atoms_.empty(), ErrorCode::invalid_input, "law: no atoms");
  require(atoms_.size() == weights_.size(), ErrorCode::invalid_input,
          "law: atoms/weights length mismatch");
  int d = atoms_[0].dim();
  for (const auto& mu : atoms_)
    require(mu.dim() == d, ErrorCode::invalid_input, "law: mixed dimensions");
  validate_law_weights(weights_, "law");
}

void CouplingOfLaws::validate(double tol) const {
  require(!pairs.empty() && pairs.size() == weights.size(),
          ErrorCode::invalid_input, "coupling of laws: shape mismatch");
  std::vector<double> wm(static_cast<size_t>(first.size()), 0.0);
  std::vector<double> wn(static_cast<size_t>(second.size()), 0.0);
  for (size_t r = 0; r < pairs.size(); ++r) {
    int k = pairs[r][0], l = pairs[r][1];
    require(k >= 0 && k < first.size() && l >= 0 && l < second.size(),
            ErrorCode::invalid_input, "coupling of laws: index out of range");
    wm[static_cast<size_t>(k)] += weights[r];
    wn[static_cast<size_t>(l)] += weights[r];
  }
  for (int k = 0; k < first.size(); ++k)
    require(std::abs(wm[static_cast<size_t>(k)] - first.weight(k)) <= tol,
            ErrorCode::invalid_input, "coupling of laws: first marginal off");
  for (int l = 0; l < second.size(); ++l)
    require(std::abs(wn[static_cast<size_t>(l)] - second.weight(l)) <= tol,
            ErrorCode::invalid_input, "coupling of laws: second marginal off");
}

RandomCouplingLaw::RandomCouplingLaw(std::vector<Coupling> atoms,
                                     std::vector<double> weights)
    : atoms_(std::move(atoms)), weights_(std::move(weights)) {
  require(!atoms_.empty(), ErrorCode::invalid_input,
          "random coupling law: no atoms");
  require(atoms_.size() == weights_.size(), ErrorCode::invalid_input,
          "random coupling law: atoms/weights length mismatch");
  int d = atoms_[0].dim();
  for (const auto& g : atoms_)
    require(g.dim() == d, ErrorCode::invalid_input,
            "random coupling law: mixed dimensions");
  validate_law_weights(weights_, "random coupling law");
}

namespace {

RandomLaw marginal_law(const RandomCouplingLaw& p, bool first) {
  // bit-equal atoms are identified, nothing fuzzier
  std::vector<DiscreteMeasure> atoms;
  std::vector<double> weights;
  for (int j = 0; j < p.size(); ++j) {
    DiscreteMeasure mu =
        first ? p.atom(j).first_marginal() : p.atom(j).second_marginal();
    bool merged = false;
    for (size_t k = 0; k < atoms.size(); ++k) {
      if (atoms[k] == mu) {
        weights[k] += p.weight(j);
        merged = true;
        break;
      }
    }
    if (!merged) {
      atoms.push_back(std::move(mu));
      weights.push_back(p.weight(j));
    }
  }
  return RandomLaw(std::move(atoms), std::move(weights));
}

}  // namespace

RandomLaw RandomCouplingLaw::first_marginal_law() const {
  return marginal_law(*this, true);
}

RandomLaw RandomCouplingLaw::second_marginal_law() const {
  return marginal_law(*this, false);
}

double big_moment(const RandomLaw& m) {
  double s = 0;
  for (int k = 0; k < m.size(); ++k)
    s += m.weight(k) * second_moment_sq(m.atom(k));
  return s;
}

std::vector<std::vector<double>> pairwise_cost_matrix(const RandomLaw& m,
                                                      const RandomLaw& n,
                                                      PairwiseKind kind,
                                                      int threads) {
  require(m.dim() == n.dim(), ErrorCode::invalid_input,
          "laws of different dimension");
  const int K = m.size(), L = n.size();
  std::vector<std::vector<double>> mat(static_cast<size_t>(K),
                                       std::vector<double>(static_cast<size_t>(L), 0.0));
  parallel_for(K * L, threads, [&](int idx) {
    int k = idx / L, l = idx % L;
    mat[static_cast<size_t>(k)][static_cast<size_t>(l)] =
        (kind == PairwiseKind::w2sq) ? solve_w2(m.atom(k), n.atom(l)).cost
                                     : solve_mc(m.atom(k), n.atom(l)).cost;
  });
  return mat;
}

namespace {

NestedSolution outer_solve(const RandomLaw& m, const RandomLaw& n,
                           const std::vector<std::vector<double>>& mat,
                           bool maximize) {
  auto cost = [&](int k, int l) {
    double c = mat[static_cast<size_t>(k)][static_cast<size_t>(l)];
    return maximize ? -c : c;
  };
  TransportPlan tp = solve_transport(m.weights(), n.weights(), cost);
  NestedSolution sol{maximize ? -tp.cost : tp.cost,
                     CouplingOfLaws{tp.cells, tp.mass, m, n},
                     tp.u,
                     tp.v};
  if (maximize) {
    for (double& x : sol.dual_u) x = -x;
    for (double& x : sol.dual_v) x = -x;
  }
  return sol;
}

}  // namespace

NestedSolution solve_W2(const RandomLaw& m, const RandomLaw& n, int threads) {
  return outer_solve(m, n, pairwise_cost_matrix(m, n, PairwiseKind::w2sq, threads),
                     false);
}

NestedSolution solve_MMC(const RandomLaw& m, const RandomLaw& n, int threads) {
  return outer_solve(m, n, pairwise_cost_matrix(m, n, PairwiseKind::mc, threads),
                     true);
}

RandomCouplingLaw lift_to_random_coupling(const CouplingOfLaws& pi,
                                          int threads) {
  pi.validate();
  const int r = static_cast<int>(pi.pairs.size());
  std::vector<std::optional<Coupling>> plans(static_cast<size_t>(r));
  parallel_for(r, threads, [&](int idx) {
    int k = pi.pairs[static_cast<size_t>(idx)][0], l = pi.pairs[static_cast<size_t>(idx)][1];
    plans[static_cast<size_t>(idx)] = solve_w2(pi.first.atom(k), pi.second.atom(l)).plan;
  });
  std::vector<Coupling> atoms;
  atoms.reserve(static_cast<size_t>(r));
  for (auto& pl : plans) atoms.push_back(std::move(*pl));
  return RandomCouplingLaw(std::move(atoms), pi.weights);
}

CouplingOfLaws lower_random_coupling(const RandomCouplingLaw& p) {
  RandomLaw m = p.first_marginal_law();
  RandomLaw n = p.second_marginal_law();
  auto find_atom = [](const RandomLaw& law, const DiscreteMeasure& mu) {
    for (int k = 0; k < law.size(); ++k)
      if (law.atom(k) == mu) return k;
    throw Error(ErrorCode::solver_failure, "marginal atom lookup failed");
  };
  std::map<std::array<int, 2>, double> acc;
  for (int j = 0; j < p.size(); ++j) {
    int k = find_atom(m, p.atom(j).first_marginal());
    int l = find_atom(n, p.atom(j).second_marginal());
    acc[{k, l}] += p.weight(j);
  }
  CouplingOfLaws pi{{}, {}, std::move(m), std::move(n)};
  for (auto& [cell, w] : acc) {
    pi.pairs.push_back(cell);
    pi.weights.push_back(w);
  }
  return pi;
}

double random_coupling_cost(const RandomCouplingLaw& p) {
  double s = 0;
  for (int j = 0; j < p.size(); ++j)
    s += p.weight(j) * p.atom(j).transport_cost();
  return s;
}

namespace {

bool w2_cycles_subset(const std::vector<std::vector<double>>& w2mat,
                      std::vector<int>& subset, double tol,
                      std::optional<W2CycleWitness>& witness) {
  const int N = static_cast<int>(subset.size());
  std::vector<int> sigma(static_cast<size_t>(N));
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    bool ident = true;
    for (int k = 0; k < N; ++k)
      if (sigma[static_cast<size_t>(k)] != k) ident = false;
    if (ident) continue;
    double matched = 0, permuted = 0;
    for (int k = 0; k < N; ++k) {
      matched += w2mat[static_cast<size_t>(subset[static_cast<size_t>(k)])][static_cast<size_t>(subset[static_cast<size_t>(k)])];
      permuted += w2mat[static_cast<size_t>(subset[static_cast<size_t>(k)])][static_cast<size_t>(subset[static_cast<size_t>(sigma[static_cast<size_t>(k)])])];
    }
    if (matched > permuted + tol) {
      witness = W2CycleWitness{subset, sigma, matched - permuted};
      return false;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return true;
}

bool w2_enumerate(const std::vector<std::vector<double>>& w2mat, int count,
                  int target, int start, std::vector<int>& cur, double tol,
                  std::optional<W2CycleWitness>& witness) {
  if (static_cast<int>(cur.size()) == target)
    return w2_cycles_subset(w2mat, cur, tol, witness);
  for (int i = start; i < count; ++i) {
    cur.push_back(i);
    if (!w2_enumerate(w2mat, count, target, i + 1, cur, tol, witness))
      return false;
    cur.pop_back();
  }
  return true;
}

}  // namespace

W2MonotonicityResult check_W2_cyclical_monotonicity(const CouplingOfLaws& pi,
                                                    int max_cycle, double tol) {
  require(max_cycle >= 1 && max_cycle <= 6, ErrorCode::size_guard,
          "max_cycle must be in [1,6]");
  pi.validate();
  const int R = static_cast<int>(pi.pairs.size());
  // w2mat[r][s] = w2^2(mu of pair r, nu of pair s)
  std::vector<std::vector<double>> w2mat(static_cast<size_t>(R),
                                         std::vector<double>(static_cast<size_t>(R), 0.0));
  for (int r = 0; r < R; ++r)
    for (int s = 0; s < R; ++s)
      w2mat[static_cast<size_t>(r)][static_cast<size_t>(s)] =
          solve_w2(pi.first.atom(pi.pairs[static_cast<size_t>(r)][0]),
                   pi.second.atom(pi.pairs[static_cast<size_t>(s)][1]))
              .cost;
  W2MonotonicityResult res;
  for (int N = 2; N <= std::min(max_cycle, R); ++N) {
    std::vector<int> cur;
    if (!w2_enumerate(w2mat, R, N, 0, cur, tol, res.witness)) {
      res.monotone = false;
      return res;
    }
  }
  return res;
}

namespace {

// Minimum of sum_n <y_n, x_n - x_sigma(n)> over multi-couplings of the given
// plans, via a dense LP on the product support.
double multimarginal_cycle_min(const std::vector<const Coupling*>& plans,
                               const std::vector<int>& sigma) {
  const int N = static_cast<int>(plans.size());
  long joint = 1;
  for (const Coupling* g : plans) {
    joint *= g->size();
    require(joint <= 5000, ErrorCode::size_guard,
            "product support exceeds 5000 joint atoms");
  }
  const int vars = static_cast<int>(joint);

  // rows: one marginal constraint per (plan, support cell)
  int rows = 0;
  std::vector<int> row_base(static_cast<size_t>(N));
  for (int nn = 0; nn < N; ++nn) {
    row_base[static_cast<size_t>(nn)] = rows;
    rows += plans[static_cast<size_t>(nn)]->size();
  }
  std::vector<std::vector<double>> a(static_cast<size_t>(rows),
                                     std::vector<double>(static_cast<size_t>(vars), 0.0));
  std::vector<double> b(static_cast<size_t>(rows), 0.0);
  for (int nn = 0; nn < N; ++nn)
    for (int s = 0; s < plans[static_cast<size_t>(nn)]->size(); ++s)
      b[static_cast<size_t>(row_base[static_cast<size_t>(nn)] + s)] = plans[static_cast<size_t>(nn)]->weight(s);

  std::vector<double> c(static_cast<size_t>(vars), 0.0);
  std::vector<int> idx(static_cast<size_t>(N), 0);
  for (int v = 0; v < vars; ++v) {
    double obj = 0;
    for (int nn = 0; nn < N; ++nn) {
      const auto& pr_n = plans[static_cast<size_t>(nn)]->pair(idx[static_cast<size_t>(nn)]);
      const auto& pr_s = plans[static_cast<size_t>(sigma[static_cast<size_t>(nn)])]->pair(idx[static_cast<size_t>(sigma[static_cast<size_t>(nn)])]);
      for (int cdim = 0; cdim < pr_n.second.dim(); ++cdim)
        obj += pr_n.second[cdim] * (pr_n.first[cdim] - pr_s.first[cdim]);
      a[static_cast<size_t>(row_base[static_cast<size_t>(nn)] + idx[static_cast<size_t>(nn)])][static_cast<size_t>(v)] = 1.0;
    }
    c[static_cast<size_t>(v)] = obj;
    for (int nn = N - 1; nn >= 0; --nn) {
      if (++idx[static_cast<size_t>(nn)] < plans[static_cast<size_t>(nn)]->size()) break;
      idx[static_cast<size_t>(nn)] = 0;
    }
  }

  LpResult lp = solve_lp_min(c, a, b);
  require(lp.feasible && lp.bounded, ErrorCode::solver_failure,
          "multi-marginal LP failed");
  return lp.objective;
}

bool total_tuples(const std::vector<Coupling>& plans, int target, int start,
                  std::vector<int>& cur, double tol,
                  std::optional<TotalCycleWitness>& witness) {
  if (static_cast<int>(cur.size()) == target) {
    std::vector<const Coupling*> chosen;
    chosen.reserve(cur.size());
    for (int i : cur) chosen.push_back(&plans[static_cast<size_t>(i)]);
    const int N = target;
    std::vector<int> sigma(static_cast<size_t>(N));
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      bool ident = true;
      for (int k = 0; k < N; ++k)
        if (sigma[static_cast<size_t>(k)] != k) ident = false;
      if (ident) continue;
      double v = multimarginal_cycle_min(chosen, sigma);
      if (v < -tol) {
        witness = TotalCycleWitness{cur, sigma, v};
        return false;
      }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return true;
  }
  // tuples with repetition: the same plan may appear several times
  for (int i = start; i < static_cast<int>(plans.size()); ++i) {
    cur.push_back(i);
    if (!total_tuples(plans, target, i, cur, tol, witness)) return false;
    cur.pop_back();
  }
  return true;
}

}  // namespace

TotalMonotonicityResult check_total_cyclical_monotonicity(
    const std::vector<Coupling>& plans, int max_cycle, double tol) {
  require(max_cycle >= 1 && max_cycle <= 4, ErrorCode::size_guard,
          "max_cycle must be in [1,4]");
  require(!plans.empty(), ErrorCode::invalid_input, "no plans");
  for (const Coupling& g : plans)
    require(g.size() <= 6, ErrorCode::size_guard,
            "plan support too large for the exhaustive check");
  TotalMonotonicityResult res;
  for (int N = 2; N <= max_cycle; ++N) {
    std::vector<int> cur;
    if (!total_tuples(plans, N, 0, cur, tol, res.witness)) {
      res.monotone = false;
      return res;
    }
  }
  return res;
}

std::vector<UnfoldedEntry> unfold(const RandomLaw& m) {
  std::vector<UnfoldedEntry> out;
  for (int k = 0; k < m.size(); ++k)
    for (int i = 0; i < m.atom(k).size(); ++i)
      out.push_back({m.atom(k).point(i), k, m.weight(k) * m.atom(k).weight(i)});
  return out;
}

DiscreteMeasure k_projection(const RandomLaw& m, int k) {
  require(k >= 1 && k <= 3, ErrorCode::size_guard, "k must be in [1,3]");
  long total = 0;
  for (int j = 0; j < m.size(); ++j) {
    long nj = 1;
    for (int r = 0; r < k; ++r) nj *= m.atom(j).size();
    total += nj;
    require(total <= 200000, ErrorCode::size_guard,
            "k-projection would explode");
  }
  const int d = m.dim();
  std::vector<Point> pts;
  std::vector<double> w;
  for (int j = 0; j < m.size(); ++j) {
    const DiscreteMeasure& mu = m.atom(j);
    std::vector<int> idx(static_cast<size_t>(k), 0);
    while (true) {
      std::vector<double> coords;
      coords.reserve(static_cast<size_t>(k * d));
      double ww = m.weight(j);
      for (int r = 0; r < k; ++r) {
        const Point& p = mu.point(idx[static_cast<size_t>(r)]);
        for (int c = 0; c < d; ++c) coords.push_back(p[c]);
        ww *= mu.weight(idx[static_cast<size_t>(r)]);
      }
      pts.push_back(Point(std::move(coords)));
      w.push_back(ww);
      int r = k - 1;
      for (; r >= 0; --r) {
        if (++idx[static_cast<size_t>(r)] < mu.size()) break;
        idx[static_cast<size_t>(r)] = 0;
      }
      if (r < 0) break;
    }
  }
  // merge coincident tensor atoms across law atoms
  std::map<std::vector<double>, double> acc;
  for (size_t i = 0; i < pts.size(); ++i) acc[pts[i].coords()] += w[i];
  std::vector<Point> out_p;
  std::vector<double> out_w;
  for (auto& kv : acc) {
    out_p.push_back(Point(kv.first));
    out_w.push_back(kv.second);
  }
  return DiscreteMeasure(std::move(out_p), std::move(out_w));
}

MongeSolution extract_monge(const CouplingOfLaws& pi,
                            const RandomCouplingLaw& p) {
  pi.validate();
  require(p.size() == static_cast<int>(pi.pairs.size()),
          ErrorCode::invalid_input,
          "random coupling law inconsistent with the coupling of laws");
  for (int j = 0; j < p.size(); ++j) {
    require(std::abs(p.weight(j) - pi.weights[static_cast<size_t>(j)]) <= 1e-12,
            ErrorCode::invalid_input, "atom weights inconsistent");
    require(measures_equal(p.atom(j).first_marginal(),
                           pi.first.atom(pi.pairs[static_cast<size_t>(j)][0]), 1e-9) &&
                measures_equal(p.atom(j).second_marginal(),
                               pi.second.atom(pi.pairs[static_cast<size_t>(j)][1]), 1e-9),
            ErrorCode::invalid_input, "inner plan marginals inconsistent");
  }

  const RandomLaw& m = pi.first;
  // outer determinism: every M-atom index carries its mass to one N index
  std::vector<int> target(static_cast<size_t>(m.size()), -1);
  std::vector<int> plan_of_atom(static_cast<size_t>(m.size()), -1);
  for (size_t r = 0; r < pi.pairs.size(); ++r) {
    int k = pi.pairs[r][0], l = pi.pairs[r][1];
    if (target[static_cast<size_t>(k)] >= 0 && target[static_cast<size_t>(k)] != l)
      throw Error(ErrorCode::nondeterministic_outer,
                  "M-atom " + std::to_string(k) + " splits across N-atoms");
    if (plan_of_atom[static_cast<size_t>(k)] >= 0)
      throw Error(ErrorCode::nondeterministic_outer,
                  "M-atom " + std::to_string(k) + " appears in several pairs");
    target[static_cast<size_t>(k)] = l;
    plan_of_atom[static_cast<size_t>(k)] = static_cast<int>(r);
  }

  std::vector<std::vector<Point>> field_values(static_cast<size_t>(m.size()));
  std::vector<DiscreteMeasure> images;
  images.reserve(static_cast<size_t>(m.size()));
  for (int k = 0; k < m.size(); ++k) {
    const Coupling& plan = p.atom(plan_of_atom[static_cast<size_t>(k)]);
    DeterminismCheck det = is_deterministic(plan);
    if (!det.deterministic)
      throw Error(ErrorCode::nondeterministic_inner,
                  "inner plan of M-atom " + std::to_string(k) + " splits mass");
    const DiscreteMeasure& mu = m.atom(k);
    std::vector<Point>& vals = field_values[static_cast<size_t>(k)];
    vals.reserve(static_cast<size_t>(mu.size()));
    for (int i = 0; i < mu.size(); ++i) {
      const Point& x = mu.point(i);
      int found = -1;
      for (size_t q = 0; q < det.domain.size(); ++q)
        if (det.domain[q] == x) {
          found = static_cast<int>(q);
          break;
        }
      require(found >= 0, ErrorCode::invalid_input,
              "inner plan does not cover the support of M-atom " +
                  std::to_string(k));
      vals.push_back(det.image[static_cast<size_t>(found)]);
    }
    images.push_back(pi.second.atom(target[static_cast<size_t>(k)]));
  }

  NonlocalField field(std::move(field_values));
  double cost = strict_monge_cost(field, m);
  return MongeSolution{std::move(target), std::move(images), std::move(field),
                       cost};
}

double strict_monge_cost(const NonlocalField& f, const RandomLaw& m) {
  require(static_cast<int>(f.values().size()) == m.size(),
          ErrorCode::invalid_input, "field not defined on the unfolded support");
  double s = 0;
  for (int k = 0; k < m.size(); ++k) {
    const DiscreteMeasure& mu = m.atom(k);
    require(static_cast<int>(f.values()[static_cast<size_t>(k)].size()) == mu.size(),
            ErrorCode::invalid_input,
            "field misses support points of atom " + std::to_string(k));
    for (int i = 0; i < mu.size(); ++i)
      s += m.weight(k) * mu.weight(i) * dist_sq(f.value(k, i), mu.point(i));
  }
  return s;
}

RandomLaw interpolate_law(const RandomCouplingLaw& p, double t) {
  require(t >= 0.0 && t <= 1.0, ErrorCode::invalid_input,
          "interpolation parameter outside [0,1]");
  std::vector<DiscreteMeasure> atoms;
  atoms.reserve(static_cast<size_t>(p.size()));
  for (int j = 0; j < p.size(); ++j)
    atoms.push_back(displacement_interpolate(p.atom(j), t));
  return RandomLaw(std::move(atoms), p.weights());
}

GeodesicReport verify_geodesic(const RandomCouplingLaw& p,
                               const std::vector<double>& ts, int threads) {
  GeodesicReport rep;
  // optimality of the input, via the monotonicity verifiers plus a direct
  // cost comparison (cycles beyond the enumeration bound cannot hide there)
  CouplingOfLaws pi = lower_random_coupling(p);
  for (int j = 0; j < p.size() && rep.input_optimal; ++j) {
    double c = p.atom(j).transport_cost();
    double best = solve_w2(p.atom(j).first_marginal(),
                           p.atom(j).second_marginal())
                      .cost;
    if (c > best + 1e-9 * (1.0 + std::abs(best))) rep.input_optimal = false;
    if (p.atom(j).size() <= 6 &&
        !check_cyclical_monotonicity(p.atom(j).pairs(),
                                     std::min(p.atom(j).size(), 4))
             .monotone)
      rep.input_optimal = false;
  }
  if (pi.pairs.size() <= 8 &&
      !check_W2_cyclical_monotonicity(pi, std::min<int>(static_cast<int>(pi.pairs.size()), 4))
           .monotone)
    rep.input_optimal = false;
  NestedSolution outer = solve_W2(pi.first, pi.second, threads);
  if (random_coupling_cost(p) > outer.value + 1e-9 * (1.0 + outer.value))
    rep.input_optimal = false;

  std::vector<double> sorted_ts = ts;
  std::sort(sorted_ts.begin(), sorted_ts.end());
  std::vector<RandomLaw> laws;
  laws.reserve(sorted_ts.size());
  for (double t : sorted_ts) laws.push_back(interpolate_law(p, t));

  rep.w2_total = std::sqrt(random_coupling_cost(p));
  for (size_t a = 0; a < laws.size(); ++a) {
    for (size_t b = a + 1; b < laws.size(); ++b) {
      double w = std::sqrt(solve_W2(laws[a], laws[b], threads).value);
      double expect = (sorted_ts[b] - sorted_ts[a]) * rep.w2_total;
      double r = std::abs(w - expect) / (1.0 + rep.w2_total);
      rep.entries.push_back({sorted_ts[a], sorted_ts[b], r});
      rep.max_residual = std::max(rep.max_residual, r);
    }
  }

  // dual slackness between the left endpoint and the interior point closest
  // to the midpoint; a one-sided diagnostic for the intermediate potentials
  int mid = -1;
  for (size_t k = 0; k < sorted_ts.size(); ++k) {
    if (sorted_ts[k] <= 0.0 || sorted_ts[k] >= 1.0) continue;
    if (mid < 0 || std::abs(sorted_ts[k] - 0.5) <
                       std::abs(sorted_ts[static_cast<size_t>(mid)] - 0.5))
      mid = static_cast<int>(k);
  }
  if (mid >= 0) {
    rep.intermediate_t = sorted_ts[static_cast<size_t>(mid)];
    RandomLaw m0 = interpolate_law(p, 0.0);
    OuterDuals duals =
        outer_dual_potentials(m0, laws[static_cast<size_t>(mid)], threads);
    NestedSolution mmc =
        solve_MMC(m0, laws[static_cast<size_t>(mid)], threads);
    rep.intermediate_dual_gap = std::abs(duals.objective - mmc.value);
    rep.intermediate_support_gap = duals.support_gap;
  }
  return rep;
}

InterpolationInverse invert_interpolation(const RandomCouplingLaw& p, double t,
                                          double collision_tol) {
  require(t > 0.0 && t < 1.0, ErrorCode::invalid_input,
          "inversion requires t in (0,1)");
  InterpolationInverse inv;
  inv.t = t;
  for (int j = 0; j < p.size(); ++j) {
    const Coupling& g = p.atom(j);
    std::vector<Point> interp;
    interp.reserve(static_cast<size_t>(g.size()));
    for (int i = 0; i < g.size(); ++i)
      interp.push_back(affine(g.pair(i).first, g.pair(i).second, t));
    for (int a = 0; a < g.size(); ++a)
      for (int b = a + 1; b < g.size(); ++b)
        if (std::sqrt(dist_sq(interp[static_cast<size_t>(a)], interp[static_cast<size_t>(b)])) <
            collision_tol)
          throw Error(ErrorCode::collision,
                      "atom " + std::to_string(j) +
                          ": interpolated support points collide");
    // canonical order of the interpolant, maps aligned with it
    std::vector<int> idx(static_cast<size_t>(g.size()));
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      return lex_less(interp[static_cast<size_t>(a)], interp[static_cast<size_t>(b)]);
    });
    std::vector<Point> pts;
    std::vector<double> w;
    std::vector<Point> f0, f1;
    for (int i : idx) {
      pts.push_back(interp[static_cast<size_t>(i)]);
      w.push_back(g.weight(i));
      f0.push_back(g.pair(i).first);
      f1.push_back(g.pair(i).second);
    }
    inv.atoms.push_back({DiscreteMeasure(std::move(pts), std::move(w)),
                         std::move(f0), std::move(f1)});
  }
  return inv;
}

Coupling reconstruct_from_inverse(const InterpolationInverse::AtomMaps& maps) {
  std::vector<std::pair<Point, Point>> pairs;
  for (size_t i = 0; i < maps.to_first.size(); ++i)
    pairs.emplace_back(maps.to_first[i], maps.to_second[i]);
  return Coupling(std::move(pairs), maps.interpolant.weights());
}

OuterDuals outer_dual_potentials(const RandomLaw& m, const RandomLaw& n,
                                 int threads) {
  auto mat = pairwise_cost_matrix(m, n, PairwiseKind::mc, threads);
  NestedSolution sol = outer_solve(m, n, mat, true);
  OuterDuals duals;
  duals.u = sol.dual_u;
  duals.v = sol.dual_v;
  double obj = 0;
  for (int k = 0; k < m.size(); ++k) obj += m.weight(k) * duals.u[static_cast<size_t>(k)];
  for (int l = 0; l < n.size(); ++l) obj += n.weight(l) * duals.v[static_cast<size_t>(l)];
  duals.objective = obj;
  for (int k = 0; k < m.size(); ++k)
    for (int l = 0; l < n.size(); ++l)
      duals.max_violation =
          std::max(duals.max_violation, mat[static_cast<size_t>(k)][static_cast<size_t>(l)] -
                                            duals.u[static_cast<size_t>(k)] - duals.v[static_cast<size_t>(l)]);
  for (size_t r = 0; r < sol.coupling.pairs.size(); ++r) {
    int k = sol.coupling.pairs[r][0], l = sol.coupling.pairs[r][1];
    duals.support_gap =
        std::max(duals.support_gap,
                 std::abs(duals.u[static_cast<size_t>(k)] + duals.v[static_cast<size_t>(l)] -
                          mat[static_cast<size_t>(k)][static_cast<size_t>(l)]));
  }
  return duals;
}

RandomLaw mix_laws(const RandomLaw& m, const RandomLaw& n, double alpha) {
  require(alpha >= 0.0 && alpha <= 1.0, ErrorCode::invalid_input,
          "mixture weight outside [0,1]");
  require(m.dim() == n.dim(), ErrorCode::invalid_input,
          "laws of different dimension");
  std::vector<DiscreteMeasure> atoms;
  std::vector<double> w;
  for (int k = 0; k < m.size(); ++k) {
    atoms.push_back(m.atom(k));
    w.push_back(alpha * m.weight(k));
  }
  for (int l = 0; l < n.size(); ++l) {
    atoms.push_back(n.atom(l));
    w.push_back((1.0 - alpha) * n.weight(l));
  }
  return RandomLaw(std::move(atoms), std::move(w));
}

bool laws_equal(const RandomLaw& m, const RandomLaw& n, double tol) {
  if (m.dim() != n.dim()) return false;
  std::vector<char> used(static_cast<size_t>(n.size()), 0);
  std::vector<double> remaining(static_cast<size_t>(n.size()));
  for (int l = 0; l < n.size(); ++l) remaining[static_cast<size_t>(l)] = n.weight(l);
  // greedy: absorb each M atom's mass into equal N atoms
  for (int k = 0; k < m.size(); ++k) {
    double need = m.weight(k);
    for (int l = 0; l < n.size() && need > tol; ++l) {
      if (remaining[static_cast<size_t>(l)] <= tol) continue;
      if (!measures_equal(m.atom(k), n.atom(l), tol)) continue;
      double take = std::min(need, remaining[static_cast<size_t>(l)]);
      need -= take;
      remaining[static_cast<size_t>(l)] -= take;
    }
    if (need > tol) return false;
  }
  for (int l = 0; l < n.size(); ++l)
    if (remaining[static_cast<size_t>(l)] > tol) return false;
  return true;
}

}  // namespace wow
