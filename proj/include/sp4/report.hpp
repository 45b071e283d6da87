#ifndef SP4_REPORT_HPP
#define SP4_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sp4/transfer.hpp"

#include "json.hpp"

// Machine-readable check reports and the suite runners behind the CLI.

namespace sp4::report {

inline constexpr const char* kVersion = "1.0.0";

struct CheckRecord {
  std::string id;     // stable check name, e.g. "qybe[3]"
  std::string tag;    // source equation tag, e.g. "fetpp-14"
  cplx point{0.0};    // evaluation point (0 when not applicable)
  double residual = 0.0;
  bool pass = false;
};

struct Tolerances {
  double identity = 1e-8;
  double eigen = 1e-8;
  double bae = 1e-10;
};

struct RunConfig {
  int n_sites = 2;
  std::optional<std::vector<cplx>> theta;  // absent: sampled from seed
  std::optional<boundary::BoundaryParams> bnd;
  bool open = false;                       // sample boundary params if none given
  Tolerances tol;
  double grid_radius = 3.0;
  int solver_starts = 64;
  int solver_max_iter = 200;
  std::optional<int> l2;
  std::optional<int> l1;                   // validated against 2 L2 + N + 1
  std::uint64_t seed = 20240601;
  std::string inject;                      // "" or "k-sign-flip" (test fixture)

  /// Throws std::invalid_argument with a schema message on bad fields.
  void validate() const;

  /// Materialize the chain spec (sampling any absent fields from the seed).
  transfer::ChainSpec make_spec() const;
};

RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const RunConfig& c);

struct Report {
  std::string command;
  RunConfig config;
  std::vector<CheckRecord> checks;
  nlohmann::json extra;  // command-specific payload (branches, states, ...)
  double wall_ms = 0.0;

  int failures() const;
  nlohmann::json to_json() const;  // deterministic modulo the timestamp field
};

// suite runners
std::vector<CheckRecord> suite_rmatrix(const RunConfig& c);
std::vector<CheckRecord> suite_fusion(const RunConfig& c);
std::vector<CheckRecord> suite_boundary(const RunConfig& c);
std::vector<CheckRecord> suite_identities(const RunConfig& c);
std::vector<CheckRecord> suite_special_values(const RunConfig& c);

Report run_verify(const std::string& target, const RunConfig& c);
Report run_spectrum(const RunConfig& c);
Report run_bae(const RunConfig& c);

}  // namespace sp4::report

#endif
