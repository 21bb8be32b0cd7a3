#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gk/clifford.hpp"
#include "gk/presets.hpp"

namespace gk {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kReportSchema = "gkverify-report/1";

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class OutputFormat { Json, Text };

struct RunConfig {
  GroupSpec spec;
  std::string group_text;
  Preset preset = Preset::Canonical;
  std::optional<std::string> t10_plus;   // Cartan-coordinate literal, see parse_cartan_basis
  std::optional<std::string> t10_minus;
  std::vector<std::string> checks;       // empty means every registered check
  OutputFormat format = OutputFormat::Json;
  std::optional<std::string> cache_path;
  bool timing = false;
};

/// Reads a flat key=value file. '#' starts a comment line; blank lines are ignored.
std::map<std::string, std::string> read_config_file(const std::string& path);
/// Builds a validated config from key=value pairs (flags already merged in).
RunConfig config_from_keys(const std::map<std::string, std::string>& keys);
/// Full command-line parse; throws ConfigError. Returns nullopt after --help/--version.
std::optional<RunConfig> parse_config(int argc, const char* const* argv, std::string* help_text = nullptr);

enum class Status { Pass, Fail, Skipped };
std::string status_name(Status s);

struct CheckRecord {
  std::string name;
  std::string anchor;
  Status status = Status::Skipped;
  std::map<std::string, std::string> witness;
  double elapsed_ms = 0;
};

/// Everything a check needs; built once per run.
struct RunContext {
  std::shared_ptr<const LieAlgebra> g;
  GKPair pair;
  std::shared_ptr<Clifford> cl;
  Preset preset = Preset::Canonical;
  bool custom_pair = false;
};

/// Throws ConfigError when the structure choice is invalid.
RunContext make_context(const RunConfig& config);

struct CheckDef {
  std::string name;
  std::string anchor;
  std::function<void(const RunContext&, CheckRecord&)> run;
};
/// Sorted by name.
const std::vector<CheckDef>& check_registry();
CheckRecord run_check(const RunContext& ctx, const std::string& name);

struct Report {
  RunConfig config;
  std::vector<CheckRecord> records;  // sorted by name
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  bool ok() const { return failed == 0; }
};

Report run(const RunConfig& config);
Report run(const RunConfig& config, const RunContext& ctx);
std::string to_json(const Report& r);
std::string to_text(const Report& r);

/// Readable sum over basis monomials, "c*x.y + ..." with algebra labels.
std::string element_str(const LieAlgebra& g, const CliffordElement& u);
std::string vec_str(const Vec& v);

}  // namespace gk
