#ifndef WOW_MEASURE_HPP
#define WOW_MEASURE_HPP

#include <cmath>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "wow/common.hpp"

namespace wow {

/// A point of R^d, d <= 16. Coordinates must be finite.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<double> coords) : c_(std::move(coords)) {
    require(!c_.empty() && static_cast<int>(c_.size()) <= kMaxDim,
            ErrorCode::invalid_input, "point dimension out of range");
    for (double x : c_)
      require(std::isfinite(x), ErrorCode::invalid_input,
              "non-finite coordinate");
  }
  static Point scalar(double x) { return Point(std::vector<double>{x}); }

  int dim() const { return static_cast<int>(c_.size()); }
  double operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  const std::vector<double>& coords() const { return c_; }

  bool operator==(const Point& o) const { return c_ == o.c_; }
  bool operator!=(const Point& o) const { return !(*this == o); }

  double norm_sq() const {
    double s = 0;
    for (double x : c_) s += x * x;
    return s;
  }

 private:
  std::vector<double> c_;
};

inline double dot(const Point& a, const Point& b) {
  require(a.dim() == b.dim(), ErrorCode::invalid_input, "dimension mismatch");
  double s = 0;
  for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

inline double dist_sq(const Point& a, const Point& b) {
  require(a.dim() == b.dim(), ErrorCode::invalid_input, "dimension mismatch");
  double s = 0;
  for (int i = 0; i < a.dim(); ++i) {
    double t = a[i] - b[i];
    s += t * t;
  }
  return s;
}

inline Point affine(const Point& a, const Point& b, double t) {
  std::vector<double> c(static_cast<size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i) c[static_cast<size_t>(i)] = (1.0 - t) * a[i] + t * b[i];
  return Point(std::move(c));
}

inline Point scale(const Point& a, double s) {
  std::vector<double> c(static_cast<size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i) c[static_cast<size_t>(i)] = s * a[i];
  return Point(std::move(c));
}

// Lexicographic order on coordinates; the canonical atom order everywhere.
inline bool lex_less(const Point& a, const Point& b) {
  return a.coords() < b.coords();
}

/// Finitely supported probability measure on R^d.
///
/// Weights are validated at construction: every weight positive and the sum
/// within 1e-9 of one (hard failure beyond that), then renormalized so the
/// stored sum is 1 within 1e-12. Immutable after construction.
class DiscreteMeasure {
 public:
  DiscreteMeasure(std::vector<Point> points, std::vector<double> weights);
  static DiscreteMeasure dirac(Point x) {
    return DiscreteMeasure({std::move(x)}, {1.0});
  }

  int dim() const { return points_[0].dim(); }
  int size() const { return static_cast<int>(points_.size()); }
  const Point& point(int i) const { return points_[static_cast<size_t>(i)]; }
  double weight(int i) const { return weights_[static_cast<size_t>(i)]; }
  const std::vector<Point>& points() const { return points_; }
  const std::vector<double>& weights() const { return weights_; }

  bool operator==(const DiscreteMeasure& o) const {
    return points_ == o.points_ && weights_ == o.weights_;
  }

 private:
  std::vector<Point> points_;
  std::vector<double> weights_;
};

/// Discrete coupling on R^d x R^d. Marginal extraction merges duplicate
/// points by summing weights.
class Coupling {
 public:
  Coupling(std::vector<std::pair<Point, Point>> pairs,
           std::vector<double> weights);
  static Coupling dirac(Point x, Point y) {
    return Coupling({{std::move(x), std::move(y)}}, {1.0});
  }
  /// (id x f)#mu for a pointwise map on the support of mu.
  static Coupling from_map(const DiscreteMeasure& mu,
                           const std::function<Point(const Point&)>& f);
  /// The identity coupling (i x i)#mu.
  static Coupling identity(const DiscreteMeasure& mu);
  /// The independent product mu (x) nu.
  static Coupling product(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

  int dim() const { return pairs_[0].first.dim(); }
  int size() const { return static_cast<int>(pairs_.size()); }
  const std::pair<Point, Point>& pair(int i) const {
    return pairs_[static_cast<size_t>(i)];
  }
  double weight(int i) const { return weights_[static_cast<size_t>(i)]; }
  const std::vector<std::pair<Point, Point>>& pairs() const { return pairs_; }
  const std::vector<double>& weights() const { return weights_; }

  DiscreteMeasure first_marginal() const;
  DiscreteMeasure second_marginal() const;

  /// int |x-y|^2 dgamma
  double transport_cost() const;
  /// int <x,y> dgamma
  double pairing_integral() const;

  bool operator==(const Coupling& o) const {
    return pairs_ == o.pairs_ && weights_ == o.weights_;
  }

 private:
  std::vector<std::pair<Point, Point>> pairs_;
  std::vector<double> weights_;
};

// --- operations -----------------------------------------------------------

/// m2^2(mu) = sum_i w_i |x_i|^2
double second_moment_sq(const DiscreteMeasure& mu);
/// m2(mu) = sqrt(m2^2)
double second_moment(const DiscreteMeasure& mu);

/// Push mu forward under x -> a x, a > 0.
DiscreteMeasure dilate(const DiscreteMeasure& mu, double a);

/// (pi_t^{1->2})#gamma: atoms (1-t)x + t y with gamma's weights.
/// Duplicates are merged bit-exactly, or within merge_tol when given.
DiscreteMeasure displacement_interpolate(const Coupling& gamma, double t,
                                         double merge_tol = 0.0);

/// f#mu, merging equal images.
DiscreteMeasure pushforward(const DiscreteMeasure& mu,
                            const std::function<Point(const Point&)>& f);

/// Merge bit-equal duplicate points and sort the support lexicographically.
DiscreteMeasure canonicalize(const DiscreteMeasure& mu);

/// Equality after canonicalization: supports pointwise within tol and
/// weights within tol.
bool measures_equal(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                    double tol);

}  // namespace wow

#endif
