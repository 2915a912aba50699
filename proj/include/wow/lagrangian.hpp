#ifndef WOW_LAGRANGIAN_HPP
#define WOW_LAGRANGIAN_HPP

#include <vector>

#include "wow/convex.hpp"
#include "wow/measure.hpp"

namespace wow {

/// A map on n uniform labels with values in R^d: the finite Lagrangian
/// representation of a uniform-weight measure.
class LagrangianMap {
 public:
  explicit LagrangianMap(std::vector<Point> values);

  int labels() const { return static_cast<int>(values_.size()); }
  int dim() const { return values_[0].dim(); }
  const Point& value(int q) const { return values_[static_cast<size_t>(q)]; }
  const std::vector<Point>& values() const { return values_; }

 private:
  std::vector<Point> values_;
};

/// iota(X) = X#P: the uniform measure (1/n) sum delta_{X(q)}, duplicates
/// merged.
DiscreteMeasure law(const LagrangianMap& x);

enum class PermMethod { brute, assignment };

struct PermutationResult {
  double value = 0;
  std::vector<int> perm;  // g, acting on the labels of the second map
};

/// max over permutations g of (1/n) sum <X1(q), X2(g(q))>; agrees with
/// <law(X1), law(X2)> by the Birkhoff structure of uniform couplings.
PermutationResult pairing_by_permutation(const LagrangianMap& x1,
                                         const LagrangianMap& x2,
                                         PermMethod method);

/// min over permutations g of (1/n) sum |X1(q) - X2(g(q))|^2; agrees with
/// w2^2(law(X1), law(X2)).
PermutationResult w2_by_permutation(const LagrangianMap& x1,
                                    const LagrangianMap& x2,
                                    PermMethod method);

/// Convexity of the lifted functional phi o iota along the segment
/// (1-t) X0 + t X1.
bool lifted_convexity_check(const FunctionalSpec& phi, const LagrangianMap& x0,
                            const LagrangianMap& x1,
                            const std::vector<double>& ts, double tol = 1e-8);

/// The coupling (X0, X1)#P on uniform labels (duplicate pairs merged).
Coupling coupling_of_maps(const LagrangianMap& x0, const LagrangianMap& x1);

/// Pointwise segment (1-t) X0 + t X1.
LagrangianMap segment(const LagrangianMap& x0, const LagrangianMap& x1,
                      double t);

}  // namespace wow

#endif
