#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sdc::cli {

// Everything a run needs, in one serializable bag.  The JSON payloads embed
// this (minus output routing) so any emitted result can be re-run
// byte-identically with the `rerun` subcommand.
struct RunConfig {
  std::string subcommand;

  // problem selection
  std::string problem = "linear";
  std::optional<double> lambda;
  std::optional<double> eps;
  std::optional<double> value;
  std::optional<double> final_time;
  std::optional<std::vector<double>> y0;

  // scheme
  std::string scheme = "picard";
  std::optional<int> order;  // preset: M = order, corrections = order-1
  std::optional<int> corrections;
  double theta = 1.0;
  std::optional<std::string> provisional;
  std::optional<double> fixed_point_tol;

  // quadrature rule
  std::string family = "uniform";
  std::optional<int> num_nodes;
  std::optional<std::vector<double>> custom_nodes;

  // runs
  std::optional<long> steps;
  std::optional<std::string> meshes;  // "4:512" or "4,8,16"
  std::string metric = "abs";

  // quadrature subcommand extras
  bool table1 = false;
  bool wn = false;
  bool lebesgue = false;
  std::string m_range = "2:20";
  int table1_samples = 1000;

  // coeffs subcommand
  std::string base = "trapezoid";

  // stability grid
  std::optional<double> re_min, re_max, im_min, im_max;
  std::optional<int> nx, ny;
  double implicit_fraction = 1.0;

  // output routing (not serialized)
  std::string out_path;
  std::string format = "csv";
};

// Runs one parsed configuration, writing the payload to `out`.
void execute(const RunConfig& config, std::ostream& out);

// Full command-line entry point: parse, execute, map errors to exit codes
// (0 success, 1 solver failure, 2 configuration error).
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace sdc::cli
