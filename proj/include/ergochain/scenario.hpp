// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ergochain/chain_model.hpp"
#include "ergochain/dynamics.hpp"
#include "ergochain/error.hpp"

namespace ergochain::scenario {

inline constexpr std::string_view kToolVersion = "1.0.0";

enum class Kind { TransportSweep, ThetaSweep, Disorder, WorkDist, BesselCompare };
enum class OutputFormat { Csv, Json };

std::optional<Kind> parse_kind(std::string_view name);
std::string_view kind_name(Kind kind);

/// Fully resolved run description. Lists are expanded; every range is non-empty.
struct ScenarioConfig {
  Kind kind = Kind::TransportSweep;

  std::vector<int> n;
  std::vector<double> alpha;
  std::vector<double> delta;
  double b = 1.0;
  double j = 1.0;
  std::uint64_t seed = 0;
  CouplingConvention convention = CouplingConvention::Printed;

  std::vector<double> theta;
  std::vector<double> q;
  std::vector<double> erg_in;
  bool matched = true;
  double phi = 0.0;

  std::optional<double> time_window;
  double time_step = 0.01;
  int realizations = 1000;
  int bins = 101;
  bool densities = true;
  int density_points = 401;
  int max_n = 256;

  OutputFormat format = OutputFormat::Csv;
  std::string output_dir = ".";

  ChainConfig chain(int n_value, double alpha_value, double delta_value) const;

  /// Canonical JSON text of everything that influences the data (output
  /// directory excluded). Keys are sorted.
  std::string canonical() const;
  /// 16 hex digits of FNV-1a 64 over canonical().
  std::string hash() const;
};

/// Config problem with a location prefix ("file:line: section.key: ...").
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(ErrorKind::InvalidConfiguration, what) {}
};

/// Parses INI-style text (or JSON when the text starts with '{') for the given
/// scenario. `origin` is used in diagnostics.
ScenarioConfig parse_config(std::string_view text, Kind kind, std::string_view origin = "<config>");
ScenarioConfig load_config(const std::filesystem::path& path, Kind kind);

using Cell = std::variant<std::monostate, long long, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  /// Appends a row given as (column, value) pairs; missing columns stay empty.
  void add(std::initializer_list<std::pair<std::string_view, Cell>> cells);
};

/// Locale-independent CSV, doubles with 17 significant digits, RFC 4180 quoting.
std::string to_csv(const Table& table);
/// {"scenario", "configHash", "columns", "rows": [{column: value}]}; empty cells omitted, NaN -> null.
std::string to_json(const Table& table, Kind kind, const std::string& config_hash);

/// Runs the scenario in memory. `threads` only changes wall time.
Table run(const ScenarioConfig& cfg, unsigned threads = 1);

Table run_transport_sweep(const ScenarioConfig& cfg, unsigned threads = 1);
Table run_theta_sweep(const ScenarioConfig& cfg, unsigned threads = 1);
Table run_disorder(const ScenarioConfig& cfg, unsigned threads = 1);
Table run_workdist(const ScenarioConfig& cfg, unsigned threads = 1);
Table run_bessel_compare(const ScenarioConfig& cfg, unsigned threads = 1);

/// Initial states in emission order, with their encoding labels.
struct LabelledState {
  std::string encoding;  // "coh" or "mix"
  InitialSiteState state;
};
std::vector<LabelledState> initial_states(const ScenarioConfig& cfg);

struct RunResult {
  std::size_t row_count = 0;
  std::string config_hash;
  std::filesystem::path data_file;
  std::filesystem::path manifest_file;
};

/// Runs and writes <dir>/<scenario>.<csv|json> plus <dir>/<scenario>.manifest.json.
RunResult run_to_files(const ScenarioConfig& cfg, unsigned threads = 1);

/// Manifest JSON text. Timestamp comes from SOURCE_DATE_EPOCH when set.
std::string manifest_json(const ScenarioConfig& cfg, std::size_t row_count, const std::string& data_file);

}  // namespace ergochain::scenario
