// Exercises the shared-library surface the way an external consumer would:
// JSON in, JSON out, opaque handles, status codes.

#include <cstdio>
#include <cstring>
#include <string>

#include <json.hpp>

#include "wow.h"

namespace {

int g_failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      std::fprintf(stderr, "FAIL %s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++g_failures;                                                   \
    }                                                                 \
  } while (0)

std::string take(char* s) {
  std::string out = s ? s : "";
  wow_string_free(s);
  return out;
}

}  // namespace

int main() {
  EXPECT(std::strlen(wow_version()) > 0);

  // measure parse / accessors / round trip
  wow_measure* mu = nullptr;
  EXPECT(wow_measure_from_json(
             R"({"points": [[0.0], [1.0]], "weights": [0.5, 0.5]})", &mu) ==
         WOW_OK);
  EXPECT(wow_measure_dim(mu) == 1);
  EXPECT(wow_measure_size(mu) == 2);
  double m2 = -1;
  EXPECT(wow_measure_second_moment(mu, &m2) == WOW_OK);
  EXPECT(std::abs(m2 - 0.5) < 1e-12);
  char* round = nullptr;
  EXPECT(wow_measure_to_json(mu, &round) == WOW_OK);
  {
    auto j = nlohmann::json::parse(take(round));
    EXPECT(j["points"].size() == 2);
  }

  // malformed JSON and invalid data map onto WOW_ERR_INPUT
  wow_measure* bad = nullptr;
  EXPECT(wow_measure_from_json("{not json", &bad) == WOW_ERR_INPUT);
  EXPECT(std::strlen(wow_last_error()) > 0);
  EXPECT(wow_measure_from_json(
             R"({"points": [[0.0]], "weights": [0.7]})", &bad) ==
         WOW_ERR_INPUT);
  EXPECT(wow_measure_from_json(R"({"points": [], "weights": []})", &bad) ==
         WOW_ERR_INPUT);

  // transport report on the two-atom instance
  wow_measure* nu = nullptr;
  EXPECT(wow_measure_from_json(
             R"({"points": [[2.0], [5.0]], "weights": [0.5, 0.5]})", &nu) ==
         WOW_OK);
  char* report = nullptr;
  EXPECT(wow_ot_report(mu, nu, 0.0, &report) == WOW_OK);
  {
    auto j = nlohmann::json::parse(take(report));
    EXPECT(std::abs(j["cost_w2sq"].get<double>() - 10.0) < 1e-9);
    EXPECT(j["decomposition_residual"].get<double>() < 1e-9);
    EXPECT(j.contains("plan"));
    EXPECT(j["duals"]["u"].size() == 2);
  }

  // dimension mismatch is an input error
  wow_measure* mu2d = nullptr;
  EXPECT(wow_measure_from_json(
             R"({"points": [[0.0, 0.0]], "weights": [1.0]})", &mu2d) ==
         WOW_OK);
  char* broken = nullptr;
  EXPECT(wow_ot_report(mu, mu2d, 0.0, &broken) == WOW_ERR_INPUT);

  char* duals = nullptr;
  EXPECT(wow_ot_duals_csv(mu, nu, &duals) == WOW_OK);
  EXPECT(take(duals).rfind("side,index,value\n", 0) == 0);

  // laws and the nested report on the running 2x2 example
  const char* m_text =
      R"({"atoms": [{"points": [[0.0]], "weights": [1.0]},
                    {"points": [[4.0]], "weights": [1.0]}],
          "weights": [0.5, 0.5]})";
  const char* n_text =
      R"({"atoms": [{"points": [[1.0]], "weights": [1.0]},
                    {"points": [[3.0]], "weights": [1.0]}],
          "weights": [0.5, 0.5]})";
  wow_law* m = nullptr;
  wow_law* n = nullptr;
  EXPECT(wow_law_from_json(m_text, &m) == WOW_OK);
  EXPECT(wow_law_from_json(n_text, &n) == WOW_OK);
  EXPECT(wow_law_dim(m) == 1);
  EXPECT(wow_law_size(m) == 2);
  double big = -1;
  EXPECT(wow_law_big_moment(m, &big) == WOW_OK);
  EXPECT(std::abs(big - 8.0) < 1e-12);

  char* nested = nullptr;
  const char* options =
      R"({"geodesic_ts": [0.0, 0.5, 1.0], "extract_monge": true})";
  EXPECT(wow_nested_report(m, n, options, &nested) == WOW_OK);
  {
    auto j = nlohmann::json::parse(take(nested));
    EXPECT(std::abs(j["W2_sq"].get<double>() - 1.0) < 1e-9);
    EXPECT(std::abs(j["MMC"].get<double>() - 6.0) < 1e-9);
    EXPECT(j["decomposition_residual"].get<double>() < 1e-9);
    EXPECT(!j["monge"].is_null());
    EXPECT(std::abs(j["monge"]["cost"].get<double>() - 1.0) < 1e-9);
    EXPECT(j["geodesic"]["max_residual"].get<double>() < 1e-8);
    EXPECT(j["warnings"].empty());
  }

  // a splitting inner plan surfaces as a structured warning, status OK
  wow_law* m_point = nullptr;
  wow_law* n_split = nullptr;
  EXPECT(wow_law_from_json(
             R"({"atoms": [{"points": [[0.0]], "weights": [1.0]}],
                 "weights": [1.0]})",
             &m_point) == WOW_OK);
  EXPECT(wow_law_from_json(
             R"({"atoms": [{"points": [[-1.0], [1.0]],
                            "weights": [0.5, 0.5]}],
                 "weights": [1.0]})",
             &n_split) == WOW_OK);
  char* warn_report = nullptr;
  EXPECT(wow_nested_report(m_point, n_split, R"({"extract_monge": true})",
                           &warn_report) == WOW_OK);
  {
    auto j = nlohmann::json::parse(take(warn_report));
    EXPECT(j["monge"].is_null());
    EXPECT(j["warnings"].size() == 1);
    EXPECT(j["warnings"][0]["kind"] == "NonDeterministicInner");
  }
  wow_law_free(m_point);
  wow_law_free(n_split);

  char* csv = nullptr;
  EXPECT(wow_pairwise_matrix_csv(m, n, "w2sq", 1, &csv) == WOW_OK);
  {
    std::string text = take(csv);
    EXPECT(text.find("0,0,1\n") != std::string::npos);
    EXPECT(text.find("0,1,9\n") != std::string::npos);
  }
  EXPECT(wow_pairwise_matrix_csv(m, n, "bogus", 1, &csv) == WOW_ERR_INPUT);

  char* nested_duals = nullptr;
  EXPECT(wow_nested_duals_csv(m, n, 1, &nested_duals) == WOW_OK);
  EXPECT(take(nested_duals).rfind("side,index,value\n", 0) == 0);

  // grid-table surface: conjugate of phi = 0 over {d0} at nu is <nu, d0> = 0
  const char* table =
      R"({"grid": [{"points": [[0.0]], "weights": [1.0]}], "values": [0.0]})";
  char* conj = nullptr;
  EXPECT(wow_grid_conjugate(table, nu, &conj) == WOW_OK);
  {
    auto j = nlohmann::json::parse(take(conj));
    EXPECT(std::abs(j["value"].get<double>()) < 1e-12);
    EXPECT(j["argmax"].get<int>() == 0);
  }
  char* my = nullptr;
  EXPECT(wow_grid_moreau_yosida(table, 1.0, mu, &my) == WOW_OK);
  {
    auto j = nlohmann::json::parse(take(my));
    // w2^2(mu, d0)/2 + 0 = 0.25
    EXPECT(std::abs(j["value"].get<double>() - 0.25) < 1e-9);
  }
  EXPECT(wow_grid_conjugate("{bad", nu, &conj) == WOW_ERR_INPUT);

  // functionals by name through the C surface
  double fval = 0;
  EXPECT(wow_functional_evaluate(R"({"kind": "quadratic"})", mu, &fval) ==
         WOW_OK);
  EXPECT(std::abs(fval - 0.25) < 1e-12);
  EXPECT(wow_functional_evaluate(R"({"kind": "mystery"})", mu, &fval) ==
         WOW_ERR_INPUT);

  // Lagrangian surface: X1=(0,1), X2=(2,5)
  char* lagr = nullptr;
  EXPECT(wow_lagrangian_pairing(R"({"n": 2, "values": [[0.0], [1.0]]})",
                                R"({"n": 2, "values": [[2.0], [5.0]]})",
                                &lagr) == WOW_OK);
  {
    auto j = nlohmann::json::parse(take(lagr));
    EXPECT(std::abs(j["pairing"].get<double>() - 2.5) < 1e-9);
    EXPECT(std::abs(j["w2sq"].get<double>() - 10.0) < 1e-9);
  }

  // sampler: reproducible output for a fixed spec
  const char* spec =
      R"({"basis": "brownian", "dim": 1, "labels": 32, "seed": 9})";
  char *law1 = nullptr, *rep1 = nullptr, *law2 = nullptr, *rep2 = nullptr;
  EXPECT(wow_lggrm_run(spec, 4, 1, &law1, &rep1) == WOW_OK);
  EXPECT(wow_lggrm_run(spec, 4, 2, &law2, &rep2) == WOW_OK);
  EXPECT(take(law1) == take(law2));
  EXPECT(take(rep1) == take(rep2));
  char *law3 = nullptr, *rep3 = nullptr;
  EXPECT(wow_lggrm_run(R"({"basis": "warp"})", 4, 1, &law3, &rep3) ==
         WOW_ERR_INPUT);

  // verification suites through the C surface
  char* summary = nullptr;
  EXPECT(wow_verify_suite("measures", 1, 10, 1, 0.0, &summary) == WOW_OK);
  {
    auto j = nlohmann::json::parse(take(summary));
    EXPECT(j["passed"].get<bool>());
    EXPECT(j["checks"].get<int>() > 0);
  }
  EXPECT(wow_verify_suite("no-such-suite", 1, 10, 1, 0.0, &summary) ==
         WOW_ERR_INPUT);
  EXPECT(wow_verify_suite("decomposition", 1, 0, 1, 0.0, &summary) == WOW_OK);
  take(summary);  // vacuous pass still allocates a summary

  char* names = nullptr;
  EXPECT(wow_verify_suite_names(&names) == WOW_OK);
  EXPECT(take(names).find("decomposition") != std::string::npos);

  wow_measure_free(mu);
  wow_measure_free(nu);
  wow_measure_free(mu2d);
  wow_law_free(m);
  wow_law_free(n);
  wow_measure_free(nullptr);  // tolerated
  wow_law_free(nullptr);

  if (g_failures > 0) {
    std::fprintf(stderr, "%d C API checks failed\n", g_failures);
    return 1;
  }
  std::printf("C API surface: all checks passed\n");
  return 0;
}
