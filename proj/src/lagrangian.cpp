#include "wow/lagrangian.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "wow/hungarian.hpp"

namespace wow {

LagrangianMap::LagrangianMap(std::vector<Point> values)
    : values_(std::move(values)) {
  require(!values_.empty(), ErrorCode::invalid_input,
          "lagrangian map: no labels");
  int d = values_[0].dim();
  for (const Point& p : values_)
    require(p.dim() == d, ErrorCode::invalid_input,
            "lagrangian map: mixed dimensions");
}

DiscreteMeasure law(const LagrangianMap& x) {
  const double w = 1.0 / x.labels();
  std::map<std::vector<double>, double> acc;
  for (int q = 0; q < x.labels(); ++q) acc[x.value(q).coords()] += w;
  std::vector<Point> pts;
  std::vector<double> ws;
  for (auto& kv : acc) {
    pts.push_back(Point(kv.first));
    ws.push_back(kv.second);
  }
  return DiscreteMeasure(std::move(pts), std::move(ws));
}

namespace {

PermutationResult best_permutation(const LagrangianMap& x1,
                                   const LagrangianMap& x2, PermMethod method,
                                   bool maximize_pairing) {
  require(x1.labels() == x2.labels(), ErrorCode::invalid_input,
          "label counts differ");
  require(x1.dim() == x2.dim(), ErrorCode::invalid_input,
          "dimensions differ");
  const int n = x1.labels();
  auto entry = [&](int q, int r) {
    return maximize_pairing ? -dot(x1.value(q), x2.value(r))
                            : dist_sq(x1.value(q), x2.value(r));
  };

  PermutationResult res;
  if (method == PermMethod::brute) {
    require(n <= 8, ErrorCode::size_guard, "brute force limited to n <= 8");
    std::vector<int> perm(static_cast<size_t>(n)), best(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    best = perm;
    double best_val = std::numeric_limits<double>::infinity();
    do {
      double s = 0;
      for (int q = 0; q < n; ++q) s += entry(q, perm[static_cast<size_t>(q)]);
      if (s < best_val) {
        best_val = s;
        best = perm;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    res.perm = best;
    res.value = best_val / n;
  } else {
    std::vector<std::vector<double>> cost(static_cast<size_t>(n),
                                          std::vector<double>(static_cast<size_t>(n)));
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r) cost[static_cast<size_t>(q)][static_cast<size_t>(r)] = entry(q, r);
    AssignmentResult a = solve_assignment(cost);
    res.perm = a.col_of_row;
    res.value = a.cost / n;
  }
  if (maximize_pairing) res.value = -res.value;
  return res;
}

}  // namespace

PermutationResult pairing_by_permutation(const LagrangianMap& x1,
                                         const LagrangianMap& x2,
                                         PermMethod method) {
  return best_permutation(x1, x2, method, true);
}

PermutationResult w2_by_permutation(const LagrangianMap& x1,
                                    const LagrangianMap& x2,
                                    PermMethod method) {
  return best_permutation(x1, x2, method, false);
}

Coupling coupling_of_maps(const LagrangianMap& x0, const LagrangianMap& x1) {
  require(x0.labels() == x1.labels(), ErrorCode::invalid_input,
          "label counts differ");
  const double w = 1.0 / x0.labels();
  std::map<std::pair<std::vector<double>, std::vector<double>>, double> acc;
  for (int q = 0; q < x0.labels(); ++q)
    acc[{x0.value(q).coords(), x1.value(q).coords()}] += w;
  std::vector<std::pair<Point, Point>> pairs;
  std::vector<double> ws;
  for (auto& kv : acc) {
    pairs.emplace_back(Point(kv.first.first), Point(kv.first.second));
    ws.push_back(kv.second);
  }
  return Coupling(std::move(pairs), std::move(ws));
}

LagrangianMap segment(const LagrangianMap& x0, const LagrangianMap& x1,
                      double t) {
  require(x0.labels() == x1.labels(), ErrorCode::invalid_input,
          "label counts differ");
  std::vector<Point> vals;
  vals.reserve(static_cast<size_t>(x0.labels()));
  for (int q = 0; q < x0.labels(); ++q)
    vals.push_back(affine(x0.value(q), x1.value(q), t));
  return LagrangianMap(std::move(vals));
}

bool lifted_convexity_check(const FunctionalSpec& phi, const LagrangianMap& x0,
                            const LagrangianMap& x1,
                            const std::vector<double>& ts, double tol) {
  double phi0 = evaluate(phi, law(x0));
  double phi1 = evaluate(phi, law(x1));
  for (double t : ts) {
    double lhs = evaluate(phi, law(segment(x0, x1, t)));
    if (lhs > (1.0 - t) * phi0 + t * phi1 + tol) return false;
  }
  return true;
}

}  // namespace wow
