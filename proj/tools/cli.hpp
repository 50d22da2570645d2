#pragma once
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nwloc::cli {

enum class Command { mmatrix, kernel_scan, check, defect_j };

enum class OutputFormat { csv, json };

struct RunConfig {
  Command command = Command::mmatrix;
  std::string suite; // check only
  double theta = 0.0;
  double phi = 0.0;
  int j = 1;
  std::optional<std::vector<int>> helicities;
  std::string family = "cartesian-photon";
  double a = 1.0;
  std::vector<double> r_over_a{0.0, 1.0, 2.0, 5.0, 10.0};
  std::uint64_t seed = 0;
  std::string out; // empty: stdout
  OutputFormat format = OutputFormat::csv;
  bool oracle = false;
  std::optional<int> n_theta, n_phi, n_radial;
};

inline constexpr int exit_pass = 0;
inline constexpr int exit_residual = 1;
inline constexpr int exit_usage = 2;

class usage_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
  int code = exit_usage;
};

/// `args` excludes the program name. Throws usage_error; help requests
/// are reported as usage_error with code 0 and the help text as message.
RunConfig parse_args(const std::vector<std::string> &args);

/// Runs a parsed configuration, writing the table to `out` (or to
/// cfg.out) and a short summary to `err`. Returns the exit status.
int execute(const RunConfig &cfg, std::ostream &out, std::ostream &err);

/// parse_args + execute with every failure mapped to an exit status.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace nwloc::cli
