#include "wow/measure.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace wow {

namespace {

void validate_weights(std::vector<double>& w, const char* what) {
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
  // renormalize only when needed; already-normalized inputs keep their bits
  if (std::abs(sum - 1.0) > 1e-12)
    for (double& x : w) x /= sum;
}

}  // namespace

DiscreteMeasure::DiscreteMeasure(std::vector<Point> points,
                                 std::vector<double> weights)
    : points_(std::move(points)), weights_(std::move(weights)) {
  require(!points_.empty(), ErrorCode::invalid_input, "measure: no atoms");
  require(points_.size() == weights_.size(), ErrorCode::invalid_input,
          "measure: points/weights length mismatch");
  int d = points_[0].dim();
  for (const Point& p : points_)
    require(p.dim() == d, ErrorCode::invalid_input,
            "measure: mixed dimensions");
  validate_weights(weights_, "measure");
}

Coupling::Coupling(std::vector<std::pair<Point, Point>> pairs,
                   std::vector<double> weights)
    : pairs_(std::move(pairs)), weights_(std::move(weights)) {
  require(!pairs_.empty(), ErrorCode::invalid_input, "coupling: no atoms");
  require(pairs_.size() == weights_.size(), ErrorCode::invalid_input,
          "coupling: pairs/weights length mismatch");
  int d = pairs_[0].first.dim();
  for (const auto& pq : pairs_)
    require(pq.first.dim() == d && pq.second.dim() == d,
            ErrorCode::invalid_input, "coupling: mixed dimensions");
  validate_weights(weights_, "coupling");
}

Coupling Coupling::from_map(const DiscreteMeasure& mu,
                            const std::function<Point(const Point&)>& f) {
  std::vector<std::pair<Point, Point>> pairs;
  pairs.reserve(static_cast<size_t>(mu.size()));
  for (int i = 0; i < mu.size(); ++i)
    pairs.emplace_back(mu.point(i), f(mu.point(i)));
  return Coupling(std::move(pairs), mu.weights());
}

Coupling Coupling::identity(const DiscreteMeasure& mu) {
  return from_map(mu, [](const Point& x) { return x; });
}

Coupling Coupling::product(const DiscreteMeasure& mu,
                           const DiscreteMeasure& nu) {
  std::vector<std::pair<Point, Point>> pairs;
  std::vector<double> w;
  for (int i = 0; i < mu.size(); ++i)
    for (int j = 0; j < nu.size(); ++j) {
      pairs.emplace_back(mu.point(i), nu.point(j));
      w.push_back(mu.weight(i) * nu.weight(j));
    }
  return Coupling(std::move(pairs), std::move(w));
}

namespace {

DiscreteMeasure merge_points(std::vector<Point> pts, std::vector<double> w) {
  std::map<std::vector<double>, double> acc;
  for (size_t i = 0; i < pts.size(); ++i) acc[pts[i].coords()] += w[i];
  std::vector<Point> out_p;
  std::vector<double> out_w;
  out_p.reserve(acc.size());
  for (auto& kv : acc) {
    out_p.push_back(Point(kv.first));
    out_w.push_back(kv.second);
  }
  return DiscreteMeasure(std::move(out_p), std::move(out_w));
}

}  // namespace

DiscreteMeasure Coupling::first_marginal() const {
  std::vector<Point> p;
  p.reserve(pairs_.size());
  for (const auto& pq : pairs_) p.push_back(pq.first);
  return merge_points(std::move(p), weights_);
}

DiscreteMeasure Coupling::second_marginal() const {
  std::vector<Point> p;
  p.reserve(pairs_.size());
  for (const auto& pq : pairs_) p.push_back(pq.second);
  return merge_points(std::move(p), weights_);
}

double Coupling::transport_cost() const {
  double s = 0;
  for (int i = 0; i < size(); ++i)
    s += weight(i) * dist_sq(pairs_[static_cast<size_t>(i)].first,
                             pairs_[static_cast<size_t>(i)].second);
  return s;
}

double Coupling::pairing_integral() const {
  double s = 0;
  for (int i = 0; i < size(); ++i)
    s += weight(i) * dot(pairs_[static_cast<size_t>(i)].first,
                         pairs_[static_cast<size_t>(i)].second);
  return s;
}

double second_moment_sq(const DiscreteMeasure& mu) {
  double s = 0;
  for (int i = 0; i < mu.size(); ++i) s += mu.weight(i) * mu.point(i).norm_sq();
  return s;
}

double second_moment(const DiscreteMeasure& mu) {
  return std::sqrt(second_moment_sq(mu));
}

DiscreteMeasure dilate(const DiscreteMeasure& mu, double a) {
  require(std::isfinite(a) && a > 0, ErrorCode::invalid_input,
          "dilate: scale must be positive");
  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(mu.size()));
  for (int i = 0; i < mu.size(); ++i) pts.push_back(scale(mu.point(i), a));
  return DiscreteMeasure(std::move(pts), mu.weights());
}

namespace {

// Merge support points within tol of an earlier representative (first-seen
// representative wins); tol = 0 degrades to bit-exact merging.
DiscreteMeasure merge_with_tol(std::vector<Point> pts, std::vector<double> w,
                               double tol) {
  if (tol <= 0.0) return merge_points(std::move(pts), std::move(w));
  std::vector<Point> reps;
  std::vector<double> rw;
  for (size_t i = 0; i < pts.size(); ++i) {
    bool merged = false;
    for (size_t k = 0; k < reps.size(); ++k) {
      if (std::sqrt(dist_sq(reps[k], pts[i])) <= tol) {
        rw[k] += w[i];
        merged = true;
        break;
      }
    }
    if (!merged) {
      reps.push_back(pts[i]);
      rw.push_back(w[i]);
    }
  }
  // canonical order
  std::vector<size_t> idx(reps.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [&](size_t a, size_t b) { return lex_less(reps[a], reps[b]); });
  std::vector<Point> out_p;
  std::vector<double> out_w;
  for (size_t i : idx) {
    out_p.push_back(reps[i]);
    out_w.push_back(rw[i]);
  }
  return DiscreteMeasure(std::move(out_p), std::move(out_w));
}

}  // namespace

DiscreteMeasure displacement_interpolate(const Coupling& gamma, double t,
                                         double merge_tol) {
  require(t >= 0.0 && t <= 1.0, ErrorCode::invalid_input,
          "interpolation parameter outside [0,1]");
  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(gamma.size()));
  for (int i = 0; i < gamma.size(); ++i)
    pts.push_back(affine(gamma.pair(i).first, gamma.pair(i).second, t));
  return merge_with_tol(std::move(pts), gamma.weights(), merge_tol);
}

DiscreteMeasure pushforward(const DiscreteMeasure& mu,
                            const std::function<Point(const Point&)>& f) {
  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(mu.size()));
  for (int i = 0; i < mu.size(); ++i) pts.push_back(f(mu.point(i)));
  return merge_with_tol(std::move(pts), mu.weights(), 0.0);
}

DiscreteMeasure canonicalize(const DiscreteMeasure& mu) {
  return merge_with_tol(mu.points(), mu.weights(), 0.0);
}

bool measures_equal(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                    double tol) {
  require(tol >= 0, ErrorCode::invalid_input, "tolerance must be >= 0");
  if (mu.dim() != nu.dim()) return false;
  DiscreteMeasure a = canonicalize(mu);
  DiscreteMeasure b = canonicalize(nu);
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i) {
    for (int k = 0; k < a.dim(); ++k)
      if (std::abs(a.point(i)[k] - b.point(i)[k]) > tol) return false;
    if (std::abs(a.weight(i) - b.weight(i)) > tol) return false;
  }
  return true;
}

}  // namespace wow
