// Command-line front end for the wow shared library. All numerical work
// happens behind the C API; this binary only parses flags, moves bytes and
// maps statuses onto exit codes (0 ok, 1 property failure, 2 input error,
// 3 solver failure).

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wow.h"

namespace {

int fail(wow_status status) {
  std::cerr << "error: " << wow_last_error() << "\n";
  return static_cast<int>(status);
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out.good()) return false;
  out << text;
  return out.good();
}

int emit(const std::string& text, const std::string& out_path) {
  std::string payload = text;
  if (payload.empty() || payload.back() != '\n') payload += '\n';
  if (out_path.empty()) {
    std::cout << payload;
    return 0;
  }
  if (!write_file(out_path, payload)) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 2;
  }
  return 0;
}

std::string owned(char* s) {
  std::string out = s ? s : "";
  wow_string_free(s);
  return out;
}

uint64_t env_seed() {
  const char* env = std::getenv("WOW_SEED");
  if (!env) return 0;
  return std::strtoull(env, nullptr, 10);
}

struct MeasureHandle {
  wow_measure* ptr = nullptr;
  ~MeasureHandle() { wow_measure_free(ptr); }
};

struct LawHandle {
  wow_law* ptr = nullptr;
  ~LawHandle() { wow_law_free(ptr); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nested optimal transport for laws of random measures"};
  app.require_subcommand(1);
  app.fallthrough();

  uint64_t seed = env_seed();
  int threads = 1;
  double tol = 0.0;
  std::string out_path;
  app.add_option("--seed", seed, "seed for all randomized work");
  app.add_option("--threads", threads, "parallel inner-solve pool bound")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol", tol, "verification tolerance override")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--out", out_path, "write the main JSON output to a file");

  // ot <mu.json> <nu.json>
  auto* ot = app.add_subcommand("ot", "inner transport between two measures");
  std::string mu_path, nu_path, duals_csv_path;
  ot->add_option("mu", mu_path, "first measure file")->required();
  ot->add_option("nu", nu_path, "second measure file")->required();
  ot->add_option("--duals-csv", duals_csv_path, "write the duals as CSV");

  // nested <M.json> <N.json>
  auto* nested = app.add_subcommand("nested", "transport between two laws");
  std::string m_path, n_path, matrix_csv_path, matrix_kind = "w2sq";
  std::vector<double> geodesic_ts;
  bool extract_monge = false;
  nested->add_option("M", m_path, "first law file")->required();
  nested->add_option("N", n_path, "second law file")->required();
  nested->add_option("--geodesic-ts", geodesic_ts,
                     "interpolation times for the geodesic check")
      ->delimiter(',');
  nested->add_flag("--extract-monge", extract_monge,
                   "attempt strict Monge extraction");
  nested->add_option("--matrix-csv", matrix_csv_path,
                     "write the pairwise cost matrix as CSV");
  nested->add_option("--matrix-kind", matrix_kind, "w2sq or mc")
      ->check(CLI::IsMember({"w2sq", "mc"}));
  std::string nested_duals_csv_path;
  nested->add_option("--duals-csv", nested_duals_csv_path,
                     "write the outer dual potentials as CSV");

  // lggrm <spec.json> --samples S
  auto* lggrm = app.add_subcommand("lggrm", "sample a Gaussian-generated law");
  std::string spec_path, report_path;
  int samples = 16;
  lggrm->add_option("spec", spec_path, "sampler spec file")->required();
  lggrm->add_option("--samples", samples, "number of law atoms")
      ->check(CLI::PositiveNumber);
  lggrm->add_option("--report", report_path, "write the regularity report");

  // verify --suite name --cases n
  auto* verify = app.add_subcommand("verify", "run randomized property suites");
  std::string suite;
  int cases = 100;
  bool list_suites = false;
  verify->add_option("--suite", suite, "suite name (default: all)");
  verify->add_option("--cases", cases, "randomized cases per suite")
      ->check(CLI::NonNegativeNumber);
  verify->add_flag("--list", list_suites, "list suite names and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (ot->parsed()) {
    auto mu_text = read_file(mu_path);
    auto nu_text = read_file(nu_path);
    if (!mu_text || !nu_text) {
      std::cerr << "error: cannot read input files\n";
      return 2;
    }
    MeasureHandle mu, nu;
    wow_status s = wow_measure_from_json(mu_text->c_str(), &mu.ptr);
    if (s != WOW_OK) return fail(s);
    s = wow_measure_from_json(nu_text->c_str(), &nu.ptr);
    if (s != WOW_OK) return fail(s);
    char* report = nullptr;
    s = wow_ot_report(mu.ptr, nu.ptr, tol, &report);
    if (s != WOW_OK) return fail(s);
    if (!duals_csv_path.empty()) {
      char* csv = nullptr;
      s = wow_ot_duals_csv(mu.ptr, nu.ptr, &csv);
      if (s != WOW_OK) return fail(s);
      if (!write_file(duals_csv_path, owned(csv))) {
        std::cerr << "error: cannot write " << duals_csv_path << "\n";
        return 2;
      }
    }
    return emit(owned(report), out_path);
  }

  if (nested->parsed()) {
    auto m_text = read_file(m_path);
    auto n_text = read_file(n_path);
    if (!m_text || !n_text) {
      std::cerr << "error: cannot read input files\n";
      return 2;
    }
    LawHandle m, n;
    wow_status s = wow_law_from_json(m_text->c_str(), &m.ptr);
    if (s != WOW_OK) return fail(s);
    s = wow_law_from_json(n_text->c_str(), &n.ptr);
    if (s != WOW_OK) return fail(s);
    nlohmann::json options;
    options["threads"] = threads;
    if (tol > 0) options["tol"] = tol;
    if (!geodesic_ts.empty()) options["geodesic_ts"] = geodesic_ts;
    if (extract_monge) options["extract_monge"] = true;
    char* report = nullptr;
    s = wow_nested_report(m.ptr, n.ptr, options.dump().c_str(), &report);
    if (s != WOW_OK) return fail(s);
    if (!matrix_csv_path.empty()) {
      char* csv = nullptr;
      s = wow_pairwise_matrix_csv(m.ptr, n.ptr, matrix_kind.c_str(), threads,
                                  &csv);
      if (s != WOW_OK) return fail(s);
      if (!write_file(matrix_csv_path, owned(csv))) {
        std::cerr << "error: cannot write " << matrix_csv_path << "\n";
        return 2;
      }
    }
    if (!nested_duals_csv_path.empty()) {
      char* csv = nullptr;
      s = wow_nested_duals_csv(m.ptr, n.ptr, threads, &csv);
      if (s != WOW_OK) return fail(s);
      if (!write_file(nested_duals_csv_path, owned(csv))) {
        std::cerr << "error: cannot write " << nested_duals_csv_path << "\n";
        return 2;
      }
    }
    return emit(owned(report), out_path);
  }

  if (lggrm->parsed()) {
    auto spec_text = read_file(spec_path);
    if (!spec_text) {
      std::cerr << "error: cannot read " << spec_path << "\n";
      return 2;
    }
    nlohmann::json spec = nlohmann::json::parse(*spec_text, nullptr, false);
    if (spec.is_discarded()) {
      std::cerr << "error: malformed spec JSON\n";
      return 2;
    }
    if (app.count("--seed") > 0 || !spec.contains("seed")) spec["seed"] = seed;
    char* law = nullptr;
    char* report = nullptr;
    wow_status s =
        wow_lggrm_run(spec.dump().c_str(), samples, threads, &law, &report);
    if (s != WOW_OK) return fail(s);
    // law to --out (stdout otherwise), report to --report (stdout otherwise)
    std::string report_text = owned(report);
    int rc = emit(owned(law), out_path);
    if (rc != 0) return rc;
    if (report_path.empty()) {
      std::cout << report_text << "\n";
    } else if (!write_file(report_path, report_text + "\n")) {
      std::cerr << "error: cannot write " << report_path << "\n";
      return 2;
    }
    return 0;
  }

  if (verify->parsed()) {
    if (list_suites) {
      char* names = nullptr;
      wow_verify_suite_names(&names);
      std::cout << owned(names);
      return 0;
    }
    std::vector<std::string> todo;
    if (!suite.empty()) {
      todo.push_back(suite);
    } else {
      char* names = nullptr;
      wow_verify_suite_names(&names);
      std::istringstream in(owned(names));
      std::string line;
      while (std::getline(in, line))
        if (!line.empty()) todo.push_back(line);
    }
    bool any_fail = false;
    nlohmann::json summaries = nlohmann::json::array();
    for (const std::string& name : todo) {
      char* summary = nullptr;
      wow_status s =
          wow_verify_suite(name.c_str(), seed, cases, threads, tol, &summary);
      if (s == WOW_ERR_INPUT || s == WOW_ERR_SOLVER) return fail(s);
      nlohmann::json j = nlohmann::json::parse(owned(summary));
      summaries.push_back(j);
      std::cout << (s == WOW_OK ? "PASS " : "FAIL ") << name << " ("
                << j["checks"].get<int>() << " checks)";
      if (s != WOW_OK) {
        any_fail = true;
        std::cout << " failures=" << j["failures"].get<int>();
      }
      std::cout << "\n";
    }
    if (!out_path.empty()) {
      int rc = emit(summaries.dump(), out_path);
      if (rc != 0) return rc;
    }
    return any_fail ? 1 : 0;
  }

  return 2;
}
