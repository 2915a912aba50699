#include "wow/reports.hpp"

#include <cmath>
#include <sstream>

namespace wow {

json ot_report(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
               double tol) {
  OtSolution w2 = solve_w2(mu, nu);
  OtSolution mc = solve_mc(mu, nu);
  double m2m = second_moment_sq(mu), m2n = second_moment_sq(nu);
  double residual = std::abs(w2.cost - (m2m + m2n - 2.0 * mc.cost));
  json j;
  j["dim"] = mu.dim();
  j["cost_w2sq"] = w2.cost;
  j["cost_mc"] = mc.cost;
  j["m2sq_mu"] = m2m;
  j["m2sq_nu"] = m2n;
  j["decomposition_residual"] = residual;
  j["plan"] = to_json(w2.plan);
  j["duals"] = json{{"u", w2.dual_u}, {"v", w2.dual_v}};
  j["tolerance"] = tol;
  return j;
}

json nested_report(const RandomLaw& m, const RandomLaw& n,
                   const NestedOptions& opt) {
  json j;
  j["dim"] = m.dim();
  j["atoms_m"] = m.size();
  j["atoms_n"] = n.size();

  NestedSolution w2 = solve_W2(m, n, opt.threads);
  NestedSolution mmc = solve_MMC(m, n, opt.threads);
  double bm = big_moment(m), bn = big_moment(n);
  j["W2_sq"] = w2.value;
  j["MMC"] = mmc.value;
  j["M2sq_m"] = bm;
  j["M2sq_n"] = bn;
  j["decomposition_residual"] = std::abs(w2.value - (bm + bn - 2.0 * mmc.value));

  json coupling;
  coupling["pairs"] = w2.coupling.pairs;
  coupling["weights"] = w2.coupling.weights;
  j["coupling"] = coupling;

  RandomCouplingLaw lifted = lift_to_random_coupling(w2.coupling, opt.threads);
  j["lifted"] = to_json(lifted);
  j["lifted_cost"] = random_coupling_cost(lifted);

  OuterDuals duals = outer_dual_potentials(m, n, opt.threads);
  j["outer_duals"] = json{{"u", duals.u},
                          {"v", duals.v},
                          {"objective", duals.objective},
                          {"max_violation", duals.max_violation},
                          {"support_gap", duals.support_gap}};

  json warnings = json::array();
  if (opt.extract_monge) {
    try {
      MongeSolution monge = extract_monge(w2.coupling, lifted);
      json field = json::array();
      for (int k = 0; k < m.size(); ++k) {
        json per_atom = json::array();
        for (int i = 0; i < m.atom(k).size(); ++i)
          per_atom.push_back(monge.field.value(k, i).coords());
        field.push_back(per_atom);
      }
      j["monge"] = json{{"target_of_atom", monge.target_of_atom},
                        {"field", field},
                        {"cost", monge.cost}};
    } catch (const Error& e) {
      if (e.code() == ErrorCode::nondeterministic_outer ||
          e.code() == ErrorCode::nondeterministic_inner) {
        warnings.push_back(json{
            {"kind", e.code() == ErrorCode::nondeterministic_outer
                         ? "NonDeterministicOuter"
                         : "NonDeterministicInner"},
            {"message", e.what()}});
        j["monge"] = nullptr;
      } else {
        throw;
      }
    }
  }

  if (!opt.geodesic_ts.empty()) {
    GeodesicReport rep = verify_geodesic(lifted, opt.geodesic_ts, opt.threads);
    json entries = json::array();
    for (const auto& e : rep.entries)
      entries.push_back(json{{"s", e.s}, {"t", e.t}, {"residual", e.residual}});
    json geo{{"W2", rep.w2_total},
             {"input_optimal", rep.input_optimal},
             {"entries", entries},
             {"max_residual", rep.max_residual}};
    if (rep.intermediate_t >= 0)
      geo["intermediate"] = json{{"t", rep.intermediate_t},
                                 {"dual_gap", rep.intermediate_dual_gap},
                                 {"support_gap", rep.intermediate_support_gap}};
    j["geodesic"] = geo;
  }

  j["warnings"] = warnings;
  j["tolerance"] = opt.tol;
  return j;
}

LggrmOutput lggrm_report(const GaussianSpec& spec, int samples,
                         int threads) {
  spec.validate();
  RandomLaw law = sample_law(spec, samples, spec.seed, threads);
  json report;
  report["spec"] = to_json(spec);
  report["samples"] = samples;
  report["big_moment"] = big_moment(law);
  report["scale_energy"] = spec.scale_energy();
  switch (spec.basis) {
    case GaussianSpec::Basis::walsh: {
      // per-level aggregate A_n^2 = 2^{n-1} scale_n^2 for n >= 1
      std::vector<double> a;
      for (int n = 1; n <= spec.walsh_level; ++n)
        a.push_back(std::sqrt(std::ldexp(1.0, n - 1)) *
                    spec.walsh_scales[static_cast<size_t>(n)]);
      report["regularity"] = to_json(walsh_criterion(a, spec.dim));
      break;
    }
    case GaussianSpec::Basis::bridge_sine: {
      report["regularity"] =
          to_json(berman_integral_estimate(spec, 20000, spec.seed));
      break;
    }
    case GaussianSpec::Basis::fbm: {
      RegularityReport rep;
      rep.criterion = "fbm_hurst_dimension";
      rep.ratio_estimate = spec.hurst * spec.dim;
      rep.verdict = spec.hurst * spec.dim < 1.0 ? "converges" : "diverges";
      rep.note = "flag H*d < 1";
      json rj = to_json(rep);
      rj["hurst_times_dim"] = spec.hurst * spec.dim;
      report["regularity"] = rj;
      break;
    }
    case GaussianSpec::Basis::brownian: {
      // occupation measures carry no exact atoms beyond the 1/T grid term
      auto diag = atomless_diagnostic(law, {0.1, 0.01, 0.001});
      json entries = json::array();
      for (auto& [eps, mass] : diag)
        entries.push_back(json{{"eps", eps}, {"mass", mass}});
      RegularityReport rep;
      rep.criterion = "atomless_diagnostic";
      rep.verdict = "converges";
      rep.note = "grid self-weight term 1/T";
      json rj = to_json(rep);
      rj["diagonal_mass"] = entries;
      report["regularity"] = rj;
      break;
    }
  }
  return LggrmOutput{to_json(law), std::move(report)};
}

std::string matrix_csv(const std::vector<std::vector<double>>& mat) {
  std::ostringstream out;
  out.precision(17);
  out << "i,j,value\n";
  for (size_t i = 0; i < mat.size(); ++i)
    for (size_t j = 0; j < mat[i].size(); ++j)
      out << i << "," << j << "," << mat[i][j] << "\n";
  return out.str();
}

std::string duals_csv(const std::vector<double>& u,
                      const std::vector<double>& v) {
  std::ostringstream out;
  out.precision(17);
  out << "side,index,value\n";
  for (size_t i = 0; i < u.size(); ++i) out << "u," << i << "," << u[i] << "\n";
  for (size_t j = 0; j < v.size(); ++j) out << "v," << j << "," << v[j] << "\n";
  return out.str();
}

}  // namespace wow
