#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "toric/catalog.hpp"

namespace toric::cli {

enum class Command { Validate, Classes, Decompose, VerifyIdentity, Cohomology, Regions, Hk, Selftest };
enum class Format { Table, Json };

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParseError = 2,
  kRefused = 3,  // fan not smooth/complete, effective cone not pointed
  kBudget = 4,   // budget exceeded, multiplicities not stabilized
  kInternal = 5,
  kCheckFailed = 6,
};

inline constexpr const char* kSchema = "toric-frobenius/1";

struct RunConfig {
  Command command = Command::Validate;
  /// Exactly one of fan_path / catalog_name names the fan (not for selftest).
  std::optional<std::filesystem::path> fan_path;
  std::optional<std::string> catalog_name;
  std::optional<std::uint64_t> ell;
  /// Pic coordinates in the computed basis.
  std::optional<std::vector<std::int64_t>> pic_class;
  /// T-divisor coefficients, one per ray.
  std::optional<std::vector<std::int64_t>> divisor;
  std::optional<std::size_t> k;
  unsigned power = 1;
  std::int64_t bound = 12;
  Format format = Format::Table;
  unsigned threads = 1;
  std::uint64_t budget = 100'000'000;
  std::uint64_t max_ell = 64;
};

Command parse_command(const std::string& name);
std::string command_name(Command c);

/// Runs one command, writing the report to `out` and diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

struct SelftestOptions {
  /// Half-width of the class grid for the region and multiplicity checks.
  std::int64_t grid = 3;
  /// Half-width of the T-divisor sample for Serre duality.
  std::int64_t serre = 2;
  std::int64_t identity_bound = 12;
  unsigned threads = 1;
};

struct PropertyResult {
  std::string fan;
  std::string property;
  bool passed = false;
  std::string detail;
};

struct SelftestReport {
  std::vector<PropertyResult> results;
  bool passed() const;
};

/// Full invariant suite per fan. Throws std::invalid_argument("no fans") on
/// an empty catalog. A fan that cannot be processed at all is reported as a
/// failed "load" property.
SelftestReport selftest(const std::vector<CatalogEntry>& catalog, const SelftestOptions& options = {});

}  // namespace toric::cli
