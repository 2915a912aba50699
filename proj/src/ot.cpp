#include "wow/ot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

namespace wow {

namespace {

// Spanning-tree basis over n row nodes and m column nodes. Basic cells are
// edges; duals are propagated from row 0 with u[0] = 0.
struct Basis {
  int n, m;
  std::vector<std::array<int, 2>> cells;  // basic cells (i,j)
  std::vector<double> mass;               // masses aligned with cells

  std::vector<std::vector<int>> adj;  // node -> incident cell indices

  void rebuild_adj() {
    adj.assign(static_cast<size_t>(n + m), {});
    for (int e = 0; e < static_cast<int>(cells.size()); ++e) {
      adj[static_cast<size_t>(cells[static_cast<size_t>(e)][0])].push_back(e);
      adj[static_cast<size_t>(n + cells[static_cast<size_t>(e)][1])].push_back(e);
    }
  }

  void duals(const std::function<double(int, int)>& cost,
             std::vector<double>& u, std::vector<double>& v) const {
    u.assign(static_cast<size_t>(n), 0.0);
    v.assign(static_cast<size_t>(m), 0.0);
    std::vector<char> seen(static_cast<size_t>(n + m), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
      int node = stack.back();
      stack.pop_back();
      for (int e : adj[static_cast<size_t>(node)]) {
        int i = cells[static_cast<size_t>(e)][0];
        int j = n + cells[static_cast<size_t>(e)][1];
        int other = (node == i) ? j : i;
        if (seen[static_cast<size_t>(other)]) continue;
        seen[static_cast<size_t>(other)] = 1;
        if (other == j)
          v[static_cast<size_t>(other - n)] = cost(i, other - n) - u[static_cast<size_t>(i)];
        else
          u[static_cast<size_t>(other)] = cost(other, j - n) - v[static_cast<size_t>(j - n)];
        stack.push_back(other);
      }
    }
  }

  // Unique path from row i0 to column j0 (node n+j0) through the tree,
  // returned as the sequence of cell indices.
  std::vector<int> path(int i0, int j0) const {
    int src = i0, dst = n + j0;
    std::vector<int> prev_edge(static_cast<size_t>(n + m), -1);
    std::vector<int> prev_node(static_cast<size_t>(n + m), -1);
    std::vector<char> seen(static_cast<size_t>(n + m), 0);
    std::vector<int> stack = {src};
    seen[static_cast<size_t>(src)] = 1;
    while (!stack.empty()) {
      int node = stack.back();
      stack.pop_back();
      if (node == dst) break;
      for (int e : adj[static_cast<size_t>(node)]) {
        int i = cells[static_cast<size_t>(e)][0];
        int j = n + cells[static_cast<size_t>(e)][1];
        int other = (node == i) ? j : i;
        if (seen[static_cast<size_t>(other)]) continue;
        seen[static_cast<size_t>(other)] = 1;
        prev_edge[static_cast<size_t>(other)] = e;
        prev_node[static_cast<size_t>(other)] = node;
        stack.push_back(other);
      }
    }
    std::vector<int> edges;
    for (int node = dst; node != src; node = prev_node[static_cast<size_t>(node)]) {
      require(prev_edge[static_cast<size_t>(node)] >= 0, ErrorCode::solver_failure,
              "basis is not spanning");
      edges.push_back(prev_edge[static_cast<size_t>(node)]);
    }
    std::reverse(edges.begin(), edges.end());
    return edges;
  }
};

Basis northwest_corner(const std::vector<double>& a,
                       const std::vector<double>& b) {
  Basis basis;
  basis.n = static_cast<int>(a.size());
  basis.m = static_cast<int>(b.size());
  std::vector<double> ra = a, rb = b;
  int i = 0, j = 0;
  while (true) {
    double send = std::min(ra[static_cast<size_t>(i)], rb[static_cast<size_t>(j)]);
    basis.cells.push_back({i, j});
    basis.mass.push_back(send);
    ra[static_cast<size_t>(i)] -= send;
    rb[static_cast<size_t>(j)] -= send;
    if (i == basis.n - 1 && j == basis.m - 1) break;
    // On ties advance one side only, keeping n+m-1 basic cells (degenerate
    // zero-mass cells stay in the tree).
    if (i == basis.n - 1)
      ++j;
    else if (j == basis.m - 1)
      ++i;
    else if (ra[static_cast<size_t>(i)] <= rb[static_cast<size_t>(j)])
      ++i;
    else
      ++j;
  }
  basis.rebuild_adj();
  return basis;
}

}  // namespace

TransportPlan solve_transport(const std::vector<double>& a,
                              const std::vector<double>& b,
                              const std::function<double(int, int)>& cost) {
  const int n = static_cast<int>(a.size());
  const int m = static_cast<int>(b.size());
  require(n > 0 && m > 0, ErrorCode::invalid_input, "transport: empty marginal");
  double sa = std::accumulate(a.begin(), a.end(), 0.0);
  double sb = std::accumulate(b.begin(), b.end(), 0.0);
  require(std::abs(sa - sb) <= 1e-9, ErrorCode::invalid_input,
          "transport: marginal masses differ");

  // dense cost cache; the scan touches every cell once per pivot
  std::vector<double> cmat(static_cast<size_t>(n) * static_cast<size_t>(m));
  double cmax = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      double cij = cost(i, j);
      cmat[static_cast<size_t>(i) * static_cast<size_t>(m) + static_cast<size_t>(j)] = cij;
      cmax = std::max(cmax, std::abs(cij));
    }
  auto c = [&](int i, int j) {
    return cmat[static_cast<size_t>(i) * static_cast<size_t>(m) + static_cast<size_t>(j)];
  };
  const double pivot_tol = 1e-11 * (1.0 + cmax);

  Basis basis = northwest_corner(a, b);
  std::vector<double> u, v;
  const long max_iter = 1000L * (n + m) * (n + m) + 10000L;
  int iterations = 0;
  // Entering rule: steepest (Dantzig) with ordered ties, falling back to
  // Bland's rule while degenerate pivots stall. Both rules are
  // deterministic; Bland guarantees termination under degeneracy.
  int degenerate_streak = 0;

  for (long iter = 0;; ++iter) {
    require(iter < max_iter, ErrorCode::solver_failure,
            "transport simplex iteration cap exceeded");
    basis.duals(c, u, v);
    int ei = -1, ej = -1;
    if (degenerate_streak < 12) {
      double best = -pivot_tol;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
          double r = c(i, j) - u[static_cast<size_t>(i)] - v[static_cast<size_t>(j)];
          if (r < best) {
            best = r;
            ei = i;
            ej = j;
          }
        }
    } else {
      for (int i = 0; i < n && ei < 0; ++i)
        for (int j = 0; j < m; ++j) {
          if (c(i, j) - u[static_cast<size_t>(i)] - v[static_cast<size_t>(j)] < -pivot_tol) {
            ei = i;
            ej = j;
            break;
          }
        }
    }
    if (ei < 0) break;
    ++iterations;

    // Cycle = entering cell + tree path from row ei to column ej. Path edges
    // alternate orientation starting opposite to the entering cell.
    std::vector<int> edges = basis.path(ei, ej);
    // Walk the path assigning signs: the entering cell is +; edges along the
    // path alternate -,+,-,... from the row-ei end.
    double theta = std::numeric_limits<double>::infinity();
    int leave = -1;
    int node = ei;
    int sign = -1;
    std::vector<int> signs(edges.size());
    for (size_t k = 0; k < edges.size(); ++k) {
      signs[k] = sign;
      if (sign < 0) {
        double mval = basis.mass[static_cast<size_t>(edges[k])];
        if (mval < theta - 1e-15 ||
            (mval < theta + 1e-15 &&
             (leave < 0 ||
              basis.cells[static_cast<size_t>(edges[k])] < basis.cells[static_cast<size_t>(leave)]))) {
          theta = mval;
          leave = edges[k];
        }
      }
      int e = edges[k];
      int i = basis.cells[static_cast<size_t>(e)][0];
      int j = basis.n + basis.cells[static_cast<size_t>(e)][1];
      node = (node == i) ? j : i;
      sign = -sign;
    }
    require(leave >= 0, ErrorCode::solver_failure, "no leaving arc");

    for (size_t k = 0; k < edges.size(); ++k)
      basis.mass[static_cast<size_t>(edges[k])] += signs[k] * theta;
    basis.cells[static_cast<size_t>(leave)] = {ei, ej};
    basis.mass[static_cast<size_t>(leave)] = theta;
    basis.rebuild_adj();
    if (theta <= 1e-15)
      ++degenerate_streak;
    else
      degenerate_streak = 0;
  }

  TransportPlan plan;
  plan.iterations = iterations;
  plan.u = u;
  plan.v = v;
  std::vector<std::pair<std::array<int, 2>, double>> nz;
  for (size_t e = 0; e < basis.cells.size(); ++e)
    if (basis.mass[e] > 0) nz.emplace_back(basis.cells[e], basis.mass[e]);
  std::sort(nz.begin(), nz.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  double total = 0;
  for (auto& [cell, mval] : nz) {
    plan.cells.push_back(cell);
    plan.mass.push_back(mval);
    total += mval * c(cell[0], cell[1]);
  }
  plan.cost = total;
  return plan;
}

namespace {

OtSolution to_solution(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                       const TransportPlan& tp) {
  std::vector<std::pair<Point, Point>> pairs;
  std::vector<double> w;
  for (size_t k = 0; k < tp.cells.size(); ++k) {
    pairs.emplace_back(mu.point(tp.cells[k][0]), nu.point(tp.cells[k][1]));
    w.push_back(tp.mass[k]);
  }
  return OtSolution{tp.cost, Coupling(std::move(pairs), std::move(w)), tp.u,
                    tp.v};
}

void check_dims(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  require(mu.dim() == nu.dim(), ErrorCode::invalid_input,
          "measures of different dimension");
}

}  // namespace

OtSolution solve_w2(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  check_dims(mu, nu);
  auto cost = [&](int i, int j) { return dist_sq(mu.point(i), nu.point(j)); };
  return to_solution(mu, nu, solve_transport(mu.weights(), nu.weights(), cost));
}

OtSolution solve_mc(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  check_dims(mu, nu);
  auto cost = [&](int i, int j) { return -dot(mu.point(i), nu.point(j)); };
  TransportPlan tp = solve_transport(mu.weights(), nu.weights(), cost);
  OtSolution sol = to_solution(mu, nu, tp);
  sol.cost = -tp.cost;
  for (double& x : sol.dual_u) x = -x;
  for (double& x : sol.dual_v) x = -x;
  return sol;
}

OtSolution solve_w2_1d(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  require(mu.dim() == 1 && nu.dim() == 1, ErrorCode::invalid_input,
          "solve_w2_1d requires d = 1");
  const int n = mu.size(), m = nu.size();
  std::vector<int> pi(static_cast<size_t>(n)), pj(static_cast<size_t>(m));
  std::iota(pi.begin(), pi.end(), 0);
  std::iota(pj.begin(), pj.end(), 0);
  std::sort(pi.begin(), pi.end(),
            [&](int a, int b) { return mu.point(a)[0] < mu.point(b)[0]; });
  std::sort(pj.begin(), pj.end(),
            [&](int a, int b) { return nu.point(a)[0] < nu.point(b)[0]; });

  // Monotone mass splitting is the north-west corner rule on the sorted
  // supports; the staircase tree also carries the duals.
  struct Cell {
    int i, j;
    double m;
  };
  std::vector<Cell> chain;
  {
    int i = 0, j = 0;
    double ra = mu.weight(pi[0]), rb = nu.weight(pj[0]);
    while (true) {
      double send = std::min(ra, rb);
      chain.push_back({i, j, send});
      ra -= send;
      rb -= send;
      if (i == n - 1 && j == m - 1) break;
      bool advance_row;
      if (i == n - 1)
        advance_row = false;
      else if (j == m - 1)
        advance_row = true;
      else
        advance_row = (ra <= rb);
      if (advance_row) {
        ++i;
        ra = mu.weight(pi[static_cast<size_t>(i)]);
      } else {
        ++j;
        rb = nu.weight(pj[static_cast<size_t>(j)]);
      }
    }
  }

  auto cost = [&](int si, int sj) {
    double t = mu.point(pi[static_cast<size_t>(si)])[0] - nu.point(pj[static_cast<size_t>(sj)])[0];
    return t * t;
  };
  // duals along the staircase: u[0]=0, then alternate assignments
  std::vector<double> su(static_cast<size_t>(n), 0.0), sv(static_cast<size_t>(m), 0.0);
  std::vector<char> useen(static_cast<size_t>(n), 0), vseen(static_cast<size_t>(m), 0);
  useen[0] = 1;
  for (const Cell& c : chain) {
    if (useen[static_cast<size_t>(c.i)] && !vseen[static_cast<size_t>(c.j)]) {
      sv[static_cast<size_t>(c.j)] = cost(c.i, c.j) - su[static_cast<size_t>(c.i)];
      vseen[static_cast<size_t>(c.j)] = 1;
    } else if (!useen[static_cast<size_t>(c.i)] && vseen[static_cast<size_t>(c.j)]) {
      su[static_cast<size_t>(c.i)] = cost(c.i, c.j) - sv[static_cast<size_t>(c.j)];
      useen[static_cast<size_t>(c.i)] = 1;
    }
  }

  std::vector<std::pair<Point, Point>> pairs;
  std::vector<double> w;
  double total = 0;
  std::vector<std::pair<std::array<int, 2>, double>> nz;
  for (const Cell& c : chain)
    if (c.m > 0) nz.push_back({{pi[static_cast<size_t>(c.i)], pj[static_cast<size_t>(c.j)]}, c.m});
  std::sort(nz.begin(), nz.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [cell, mval] : nz) {
    pairs.emplace_back(mu.point(cell[0]), nu.point(cell[1]));
    w.push_back(mval);
    double t = mu.point(cell[0])[0] - nu.point(cell[1])[0];
    total += mval * t * t;
  }
  OtSolution sol{total, Coupling(std::move(pairs), std::move(w)), {}, {}};
  sol.dual_u.assign(static_cast<size_t>(n), 0.0);
  sol.dual_v.assign(static_cast<size_t>(m), 0.0);
  for (int i = 0; i < n; ++i) sol.dual_u[static_cast<size_t>(pi[static_cast<size_t>(i)])] = su[static_cast<size_t>(i)];
  for (int j = 0; j < m; ++j) sol.dual_v[static_cast<size_t>(pj[static_cast<size_t>(j)])] = sv[static_cast<size_t>(j)];
  return sol;
}

std::pair<std::vector<double>, std::vector<double>> kantorovich_duals(
    const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  OtSolution sol = solve_w2(mu, nu);
  return {sol.dual_u, sol.dual_v};
}

DeterminismCheck is_deterministic(const Coupling& gamma) {
  std::map<std::vector<double>, std::vector<int>> by_first;
  for (int k = 0; k < gamma.size(); ++k)
    by_first[gamma.pair(k).first.coords()].push_back(k);
  DeterminismCheck res;
  res.deterministic = true;
  for (auto& [xc, idxs] : by_first) {
    const Point& y0 = gamma.pair(idxs[0]).second;
    for (int k : idxs) {
      if (!(gamma.pair(k).second == y0)) {
        res.deterministic = false;
        return res;
      }
    }
    res.domain.push_back(Point(xc));
    res.image.push_back(y0);
  }
  return res;
}

Coupling barycentric_projection(const Coupling& gamma) {
  std::map<std::vector<double>, std::pair<std::vector<double>, double>> acc;
  int d = gamma.dim();
  for (int k = 0; k < gamma.size(); ++k) {
    auto& slot = acc[gamma.pair(k).first.coords()];
    if (slot.first.empty()) slot.first.assign(static_cast<size_t>(d), 0.0);
    for (int c = 0; c < d; ++c)
      slot.first[static_cast<size_t>(c)] += gamma.weight(k) * gamma.pair(k).second[c];
    slot.second += gamma.weight(k);
  }
  std::vector<std::pair<Point, Point>> pairs;
  std::vector<double> w;
  for (auto& [xc, slot] : acc) {
    std::vector<double> mean = slot.first;
    for (double& x : mean) x /= slot.second;
    pairs.emplace_back(Point(xc), Point(std::move(mean)));
    w.push_back(slot.second);
  }
  return Coupling(std::move(pairs), std::move(w));
}

namespace {

bool check_cycles_subset(const std::vector<std::pair<Point, Point>>& pairs,
                         std::vector<int>& subset, double tol,
                         std::optional<CycleWitness>& witness) {
  const int N = static_cast<int>(subset.size());
  std::vector<int> sigma(static_cast<size_t>(N));
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    bool ident = true;
    for (int k = 0; k < N; ++k)
      if (sigma[static_cast<size_t>(k)] != k) ident = false;
    if (ident) continue;
    double s = 0;
    for (int k = 0; k < N; ++k) {
      const Point& y = pairs[static_cast<size_t>(subset[static_cast<size_t>(k)])].second;
      const Point& x = pairs[static_cast<size_t>(subset[static_cast<size_t>(k)])].first;
      const Point& xs = pairs[static_cast<size_t>(subset[static_cast<size_t>(sigma[static_cast<size_t>(k)])])].first;
      for (int c = 0; c < y.dim(); ++c) s += y[c] * (x[c] - xs[c]);
    }
    if (s < -tol) {
      witness = CycleWitness{subset, sigma, s};
      return false;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return true;
}

bool enumerate_subsets(const std::vector<std::pair<Point, Point>>& pairs,
                       int target, int start, std::vector<int>& cur,
                       double tol, std::optional<CycleWitness>& witness) {
  if (static_cast<int>(cur.size()) == target)
    return check_cycles_subset(pairs, cur, tol, witness);
  for (int i = start; i < static_cast<int>(pairs.size()); ++i) {
    cur.push_back(i);
    if (!enumerate_subsets(pairs, target, i + 1, cur, tol, witness))
      return false;
    cur.pop_back();
  }
  return true;
}

}  // namespace

MonotonicityResult check_cyclical_monotonicity(
    const std::vector<std::pair<Point, Point>>& pairs, int max_cycle,
    double tol) {
  require(max_cycle >= 1 && max_cycle <= 6, ErrorCode::size_guard,
          "max_cycle must be in [1,6]");
  MonotonicityResult res;
  const int K = static_cast<int>(pairs.size());
  for (int N = 2; N <= std::min(max_cycle, K); ++N) {
    std::vector<int> cur;
    if (!enumerate_subsets(pairs, N, 0, cur, tol, res.witness)) {
      res.monotone = false;
      return res;
    }
  }
  return res;
}

double assignment_bruteforce(
    const std::vector<Point>& xs, const std::vector<Point>& ys,
    const std::function<double(const Point&, const Point&)>& cost) {
  require(xs.size() == ys.size(), ErrorCode::invalid_input,
          "bruteforce: size mismatch");
  require(xs.size() <= 8, ErrorCode::size_guard, "bruteforce limited to n <= 8");
  const int n = static_cast<int>(xs.size());
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double s = 0;
    for (int i = 0; i < n; ++i) s += cost(xs[static_cast<size_t>(i)], ys[static_cast<size_t>(perm[static_cast<size_t>(i)])]);
    best = std::min(best, s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best / n;
}

std::vector<Point> unfold_uniform(const DiscreteMeasure& mu, int denom) {
  require(denom >= 1, ErrorCode::invalid_input, "denominator must be >= 1");
  std::vector<Point> out;
  for (int i = 0; i < mu.size(); ++i) {
    double k = mu.weight(i) * denom;
    long ki = std::lround(k);
    require(std::abs(k - static_cast<double>(ki)) <= 1e-9 * denom && ki >= 1,
            ErrorCode::invalid_input,
            "weights are not exact multiples of 1/denom");
    for (long r = 0; r < ki; ++r) out.push_back(mu.point(i));
  }
  require(static_cast<int>(out.size()) == denom, ErrorCode::invalid_input,
          "unfolded atom count mismatch");
  return out;
}

}  // namespace wow
