// SPDX-License-Identifier: Apache-2.0
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>

#include "ergochain/scenario.hpp"

namespace ergochain::scenario {

namespace {

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch && *epoch) {
    char* end = nullptr;
    const long long v = std::strtoll(epoch, &end, 10);
    if (end && *end == '\0' && v >= 0) now = static_cast<std::time_t>(v);
  }
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::Io, "cannot open '" + path.string() + "' for writing");
  out << text;
  out.close();
  if (!out) fail(ErrorKind::Io, "failed writing '" + path.string() + "'");
}

}  // namespace

std::string manifest_json(const ScenarioConfig& cfg, std::size_t row_count, const std::string& data_file) {
  using nlohmann::json;
  const json doc = {{"tool", "ergochain"},
                    {"toolVersion", std::string(kToolVersion)},
                    {"scenario", std::string(kind_name(cfg.kind))},
                    {"configHash", cfg.hash()},
                    {"seed", cfg.seed},
                    {"timestamp", utc_timestamp()},
                    {"rowCount", row_count},
                    {"dataFile", data_file},
                    {"format", cfg.format == OutputFormat::Csv ? "csv" : "json"},
                    {"config", json::parse(cfg.canonical())}};
  return doc.dump(1) + "\n";
}

RunResult run_to_files(const ScenarioConfig& cfg, unsigned threads) {
  const Table table = run(cfg, threads);
  const std::filesystem::path dir(cfg.output_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) fail(ErrorKind::Io, "cannot create output directory '" + dir.string() + "': " + ec.message());

  const std::string name(kind_name(cfg.kind));
  RunResult r;
  r.row_count = table.rows.size();
  r.config_hash = cfg.hash();
  const bool csv = cfg.format == OutputFormat::Csv;
  r.data_file = dir / (name + (csv ? ".csv" : ".json"));
  r.manifest_file = dir / (name + ".manifest.json");
  write_file(r.data_file, csv ? to_csv(table) : to_json(table, cfg.kind, r.config_hash));
  write_file(r.manifest_file, manifest_json(cfg, r.row_count, r.data_file.filename().string()));
  return r;
}

}  // namespace ergochain::scenario
