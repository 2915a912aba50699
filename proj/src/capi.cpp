#include "wow.h"

#include <cstring>
#include <new>
#include <string>

#include "wow/reports.hpp"
#include "wow/verify.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

wow_status status_of(const wow::Error& e) {
  g_last_error = e.what();
  switch (e.code()) {
    case wow::ErrorCode::solver_failure:
      return WOW_ERR_SOLVER;
    default:
      return WOW_ERR_INPUT;
  }
}

template <typename Fn>
wow_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const wow::Error& e) {
    return status_of(e);
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return WOW_ERR_SOLVER;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return WOW_ERR_INPUT;
  }
}

const wow::DiscreteMeasure* unwrap(const wow_measure* mu) {
  return reinterpret_cast<const wow::DiscreteMeasure*>(mu);
}
const wow::RandomLaw* unwrap(const wow_law* m) {
  return reinterpret_cast<const wow::RandomLaw*>(m);
}

}  // namespace

extern "C" {

const char* wow_version(void) { return "0.1.0"; }

const char* wow_last_error(void) { return g_last_error.c_str(); }

void wow_string_free(char* s) { delete[] s; }

wow_status wow_measure_from_json(const char* text, wow_measure** out) {
  if (!text || !out) {
    g_last_error = "null argument";
    return WOW_ERR_INPUT;
  }
  return guarded([&]() {
    auto* mu = new wow::DiscreteMeasure(
        wow::measure_from_json(wow::parse_json(text)));
    *out = reinterpret_cast<wow_measure*>(mu);
    return WOW_OK;
  });
}

wow_status wow_measure_to_json(const wow_measure* mu, char** out) {
  if (!mu || !out) {
    g_last_error = "null argument";
    return WOW_ERR_INPUT;
  }
  return guarded([&]() {
    *out = dup_string(wow::to_json(*unwrap(mu)).dump());
    return WOW_OK;
  });
}

void wow_measure_free(wow_measure* mu) {
  delete reinterpret_cast<wow::DiscreteMeasure*>(mu);
}

int wow_measure_dim(const wow_measure* mu) {
  return mu ? unwrap(mu)->dim() : 0;
}

int wow_measure_size(const wow_measure* mu) {
  return mu ? unwrap(mu)->size() : 0;
}

wow_status wow_measure_second_moment(const wow_measure* mu, double* m2sq) {
  if (!mu || !m2sq) {
    g_last_error = "null argument";
    return WOW_ERR_INPUT;
  }
  *m2sq = wow::second_moment_sq(*unwrap(mu));
  return WOW_OK;
}

wow_status wow_law_from_json(const char* text, wow_law** out) {
  if (!text || !out) {
    g_last_error = "null argument";
    return WOW_ERR_INPUT;
  }
  return guarded([&]() {
    auto* m = new wow::RandomLaw(wow::law_from_json(wow::parse_json(text)));
    *out = reinterpret_cast<wow_law*>(m);
    return WOW_OK;
  });
}

wow_status wow_law_to_json(const wow_law* m, char** out) {
  if (!m || !out) {
    g_last_error = "null argument";
    return WOW_ERR_INPUT;
  }
  return guarded([&]() {
    *out = dup_string(wow::to_json(*unwrap(m)).dump());
    return WOW_OK;
  });
}

void wow_law_free(wow_law* m) { delete reinterpret_cast<wow::RandomLaw*>(m); }

int wow_law_dim(const wow_law* m) { return m ? unwrap(m)->dim() : 0; }

int wow_law_size(const wow_law* m) { return m ? unwrap(m)->size() : 0; }

wow_status wow_law_big_moment(const wow_law* m, double* m2sq) {
  if (!m || !m2sq) {
    g_last_error = "null argument";
    return WOW_ERR_INPUT;
  }
  *m2sq = wow::big_moment(*unwrap(m));
  return WOW_OK;
}

wow_status wow_ot_report(const wow_measure* mu, const wow_measure* nu,
                         double tol, char** report_json) {
  if (!mu || !nu || !report_json) {
    g_last_error = "null argument";
    return WOW_ERR_INPUT;
  }
  return guarded([&]() {
    *report_json = dup_string(
        wow::ot_report(*unwrap(mu), *unwrap(nu), tol > 0 ? tol : 1e-9)
            .dump());
    return WOW_OK;
  });
}

wow_status wow_nested_report(const wow_law* m, const wow_law* n,
                             const char* options_json, char** report_json) {
  if (!m || !n || !report_json) {
    g_last_error = "null argument";
    return WOW_ERR_INPUT;
  }
  return guarded([&]() {
    wow::NestedOptions opt;
    if (options_json && *options_json) {
      wow::json j = wow::parse_json(options_json);
      if (j.contains("geodesic_ts"))
        opt.geodesic_ts = j["geodesic_ts"].get<std::vector<double>>();
      if (j.contains("extract_monge"))
        opt.extract_monge = j["extract_monge"].get<bool>();
      if (j.contains("threads")) opt.threads = j["threads"].get<int>();
      if (j.contains("tol")) opt.tol = j["tol"].get<double>();
    }
    *report_json =
        dup_string(wow::nested_report(*unwrap(m), *unwrap(n), opt).dump());
    return WOW_OK;
  });
}

wow_status wow_ot_duals_csv(const wow_measure* mu, const wow_measure* nu,
                            char** csv) {
  if (!mu || !nu || !csv) {
    g_last_error = "null argument";
    return WOW_ERR_INPUT;
  }
  return guarded([&]() {
    auto [u, v] = wow::kantorovich_duals(*unwrap(mu), *unwrap(nu));
    *csv = dup_string(wow::duals_csv(u, v));
    return WOW_OK;
  });
}

wow_status wow_nested_duals_csv(const wow_law* m, const wow_law* n,
                                int threads, char** csv) {
  if (!m || !n || !csv) {
    g_last_error = "null argument";
    return WOW_ERR_INPUT;
  }
  return guarded([&]() {
    wow::OuterDuals duals =
        wow::outer_dual_potentials(*unwrap(m), *unwrap(n), threads);
    *csv = dup_string(wow::duals_csv(duals.u, duals.v));
    return WOW_OK;
  });
}

wow_status wow_grid_conjugate(const char* table_json, const wow_measure* nu,
                              char** out_json) {
  if (!table_json || !nu || !out_json) {
    g_last_error = "null argument";
    return WOW_ERR_INPUT;
  }
  return guarded([&]() {
    wow::FunctionalSpec table =
        wow::grid_table_from_json(wow::parse_json(table_json));
    wow::GridConjugate conj =
        wow::klf_conjugate_on_grid(table, table.grid, *unwrap(nu));
    *out_json = dup_string(
        wow::json{{"value", conj.value}, {"argmax", conj.argmax}}.dump());
    return WOW_OK;
  });
}

wow_status wow_grid_moreau_yosida(const char* table_json, double tau,
                                  const wow_measure* mu, char** out_json) {
  if (!table_json || !mu || !out_json) {
    g_last_error = "null argument";
    return WOW_ERR_INPUT;
  }
  return guarded([&]() {
    wow::FunctionalSpec table =
        wow::grid_table_from_json(wow::parse_json(table_json));
    wow::MoreauYosidaResult my =
        wow::moreau_yosida_on_grid(table, table.grid, tau, *unwrap(mu));
    *out_json = dup_string(
        wow::json{{"value", my.value}, {"argmin", my.argmin}}.dump());
    return WOW_OK;
  });
}

wow_status wow_functional_evaluate(const char* functional_json,
                                   const wow_measure* mu, double* value) {
  if (!functional_json || !mu || !value) {
    g_last_error = "null argument";
    return WOW_ERR_INPUT;
  }
  return guarded([&]() {
    wow::FunctionalSpec spec =
        wow::functional_from_json(wow::parse_json(functional_json));
    *value = wow::evaluate(spec, *unwrap(mu));
    return WOW_OK;
  });
}

wow_status wow_lagrangian_pairing(const char* x1_json, const char* x2_json,
                                  char** report_json) {
  if (!x1_json || !x2_json || !report_json) {
    g_last_error = "null argument";
    return WOW_ERR_INPUT;
  }
  return guarded([&]() {
    wow::LagrangianMap x1 =
        wow::lagrangian_from_json(wow::parse_json(x1_json));
    wow::LagrangianMap x2 =
        wow::lagrangian_from_json(wow::parse_json(x2_json));
    wow::PermutationResult pairing =
        wow::pairing_by_permutation(x1, x2, wow::PermMethod::assignment);
    wow::PermutationResult w2 =
        wow::w2_by_permutation(x1, x2, wow::PermMethod::assignment);
    wow::json j{{"law1", wow::to_json(wow::law(x1))},
                {"law2", wow::to_json(wow::law(x2))},
                {"pairing", pairing.value},
                {"pairing_perm", pairing.perm},
                {"w2sq", w2.value},
                {"w2_perm", w2.perm}};
    *report_json = dup_string(j.dump());
    return WOW_OK;
  });
}

wow_status wow_pairwise_matrix_csv(const wow_law* m, const wow_law* n,
                                   const char* kind, int threads, char** csv) {
  if (!m || !n || !kind || !csv) {
    g_last_error = "null argument";
    return WOW_ERR_INPUT;
  }
  return guarded([&]() {
    std::string k(kind);
    wow::PairwiseKind pk;
    if (k == "w2sq")
      pk = wow::PairwiseKind::w2sq;
    else if (k == "mc")
      pk = wow::PairwiseKind::mc;
    else
      throw wow::Error(wow::ErrorCode::invalid_input,
                       "kind must be w2sq or mc");
    *csv = dup_string(wow::matrix_csv(
        wow::pairwise_cost_matrix(*unwrap(m), *unwrap(n), pk, threads)));
    return WOW_OK;
  });
}

wow_status wow_lggrm_run(const char* spec_json, int samples, int threads,
                         char** law_json, char** report_json) {
  if (!spec_json || !law_json || !report_json) {
    g_last_error = "null argument";
    return WOW_ERR_INPUT;
  }
  return guarded([&]() {
    wow::GaussianSpec spec =
        wow::gaussian_spec_from_json(wow::parse_json(spec_json));
    wow::LggrmOutput out = wow::lggrm_report(spec, samples, threads);
    *law_json = dup_string(out.law.dump());
    *report_json = dup_string(out.report.dump());
    return WOW_OK;
  });
}

wow_status wow_verify_suite(const char* suite, uint64_t seed, int cases,
                            int threads, double tol, char** summary_json) {
  if (!suite || !summary_json) {
    g_last_error = "null argument";
    return WOW_ERR_INPUT;
  }
  wow_status status = WOW_OK;
  wow_status guard = guarded([&]() {
    wow::VerifyConfig cfg;
    cfg.seed = seed;
    cfg.cases = cases;
    cfg.threads = threads;
    cfg.tol = tol > 0 ? tol : 0;
    wow::SuiteResult res = wow::run_suite(suite, cfg);
    *summary_json = dup_string(res.to_json_summary().dump());
    if (!res.passed()) status = WOW_FAIL_PROPERTY;
    return WOW_OK;
  });
  return guard == WOW_OK ? status : guard;
}

wow_status wow_verify_suite_names(char** names) {
  if (!names) {
    g_last_error = "null argument";
    return WOW_ERR_INPUT;
  }
  std::string joined;
  for (const std::string& s : wow::suite_names()) {
    joined += s;
    joined += '\n';
  }
  *names = dup_string(joined);
  return WOW_OK;
}

}  // extern "C"
