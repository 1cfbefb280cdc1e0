#pragma once

// Run configuration (YAML) and the five subcommands behind the CLI.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "orbsmooth/approximation.hpp"
#include "orbsmooth/continuous.hpp"
#include "orbsmooth/errors.hpp"
#include "orbsmooth/group.hpp"
#include "orbsmooth/invariants.hpp"

namespace orbsmooth {

namespace exit_code {
inline constexpr int kSuccess = 0;
inline constexpr int kBudgetFailure = 1;
inline constexpr int kConfigError = 2;
}  // namespace exit_code

struct GroupSpec {
  std::string preset;  // empty when explicit generators are given
  std::size_t dimension = 0;
  std::vector<std::vector<Rational>> generators;  // row-major n x n matrices
  std::size_t order_cap = FiniteGroup::kDefaultOrderCap;
  int circle_nodes = 16;
  std::optional<int> hard_cap;
};

struct TargetSpec {
  std::string kind = "norm";
  std::size_t index = 0;
  Point point;
  std::string polynomial;
  std::string table;  // CSV path, resolved against the config directory
  double value = 0.0;
  std::vector<TargetSpec> components;  // non-empty: vector-valued target
};

struct RunConfig {
  GroupSpec group;
  TargetSpec target;
  double radius = 1.0;
  std::optional<double> delta;
  std::optional<double> epsilon;
  int shells = 3;
  double spacing = 0.25;
  std::size_t grid = 10000;  // verification points in the region ball
  int image_grid = 21;       // points per axis for sigma image samples
  std::size_t max_nodes = SmoothingOptions{}.max_nodes;  // per local interpolant
  std::uint64_t seed = 1;
  std::string out = "out";
  Point slice_point;
  std::filesystem::path base_dir;  // directory of the config file
};

/// Throws ConfigError / ParseError with the offending key.
RunConfig parse_run_config(const std::string& text, const std::filesystem::path& base_dir = ".");
RunConfig load_run_config(const std::filesystem::path& path);

/// YAML mapping with the keys of the `group:` section; used for group files.
GroupSpec parse_group_spec(const std::string& text);

Symmetry resolve_group(const GroupSpec& spec);
ContinuousFn resolve_target(const TargetSpec& spec, const Symmetry& group, const InvariantBasis& basis,
                            const std::filesystem::path& base_dir);
VectorFn resolve_vector_target(const RunConfig& config, const Symmetry& group, const InvariantBasis& basis);

struct CommandOptions {
  bool quiet = false;
  std::optional<std::filesystem::path> out;  // overrides config.out
  std::optional<std::filesystem::path> expr;
  std::size_t component = 0;
};

int cmd_basis(const RunConfig& config, const CommandOptions& options, std::ostream& log);
int cmd_slice(const RunConfig& config, const CommandOptions& options, std::ostream& log);
int cmd_approx(const RunConfig& config, const CommandOptions& options, std::ostream& log);
int cmd_verify(const RunConfig& config, const CommandOptions& options, std::ostream& log);
int cmd_export(const RunConfig& config, const CommandOptions& options, std::ostream& log);

/// Structured text for a report (YAML).
std::string report_yaml(const ApproxReport& report);
/// stage,piece,shell,budget,local_budget,local_error,change,mesh,nodes,refinements,verify_points
std::string stages_csv(const ApproxReport& report);

/// Maps an error to its exit code: 1 for budget failures, 2 otherwise.
int exit_code_for(const Error& error);

}  // namespace orbsmooth
