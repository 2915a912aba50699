#ifndef WOW_COMMON_HPP
#define WOW_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wow {

enum class ErrorCode {
  invalid_input,           // bad values, dimension mismatch, violated precondition
  parse_error,             // malformed JSON / file
  solver_failure,          // LP did not terminate / factorization failed
  size_guard,              // instance exceeds a hard size guard
  grid_miss,               // GridTable evaluated off its grid
  nondeterministic_outer,  // law-level matching splits an atom
  nondeterministic_inner,  // an inner plan splits a support point
  collision                // interpolated support points collide
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Checking tolerances used by reports and verifiers. Values are the
// library-wide defaults; callers may override per run.
struct Tolerances {
  double marginal = 1e-9;        // coupling marginal feasibility (absolute)
  double optimality = 1e-7;      // primal/dual agreement (relative)
  double decomposition = 1e-8;   // w2^2 = m2^2+m2^2-2<.,.> residual
  double duality_gap = 1e-9;     // LP duality gap (relative)
  double monotonicity = 1e-9;    // cyclical monotonicity slack
  double geodesic = 1e-7;        // geodesic identity residual (relative)
  double monge = 1e-8;           // strict Monge cost identity (relative)
  double grid_identity = 1e-9;   // grid-level conjugacy identities
  double measure_eq = 1e-12;     // measure equality
  double collision = 1e-10;      // interpolant collision threshold
};

constexpr int kMaxDim = 16;

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) throw Error(code, what);
}

}  // namespace wow

#endif
