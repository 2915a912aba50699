#ifndef WOW_REPORTS_HPP
#define WOW_REPORTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "wow/json_io.hpp"

namespace wow {

struct NestedOptions {
  std::vector<double> geodesic_ts;  // empty -> skip the geodesic block
  bool extract_monge = false;
  int threads = 1;
  double tol = 1e-9;  // verification tolerance embedded in the report
};

/// Full inner-OT payload: w2^2, maximal correlation, plan, duals and the
/// decomposition residual.
json ot_report(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
               double tol = 1e-9);

/// Full nested payload: W2^2, [[M,N]], coupling, lifted random coupling law,
/// outer duals, optional Monge extraction and geodesic residuals.
json nested_report(const RandomLaw& m, const RandomLaw& n,
                   const NestedOptions& opt);

/// Sample a law and build the basis-appropriate regularity report.
struct LggrmOutput {
  json law;
  json report;
};
LggrmOutput lggrm_report(const GaussianSpec& spec, int samples,
                         int threads = 1);

/// CSV helpers ("i,j,value" cells / "side,index,value" duals).
std::string matrix_csv(const std::vector<std::vector<double>>& mat);
std::string duals_csv(const std::vector<double>& u,
                      const std::vector<double>& v);

}  // namespace wow

#endif
